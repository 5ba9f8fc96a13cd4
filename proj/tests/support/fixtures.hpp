#pragma once

#include <boxnet/box_expr.hpp>
#include <boxnet/net.hpp>

#include <random>
#include <string>
#include <vector>

namespace fixtures {

using boxnet::MarkedNet;
using boxnet::PlaceDecl;
using boxnet::TaggedPlace;

// `inputs|outputs` with comma separated transition names, e.g. "a|c,e".
TaggedPlace tp(const std::string& spec);

// Choice between c,d and e,f after a||b, without exits; places p1..p10.
std::vector<TaggedPlace> n0_places();
MarkedNet n0();

// BOX((a||b);(c||d)) labelled q1..q8.
std::vector<TaggedPlace> n1_places();
MarkedNet n1();

// BOX((a||b)[](c||d)) labelled r1..r8.
std::vector<TaggedPlace> n2_places();
MarkedNet n2();

// Picks the labelled places by 1-based number.
std::vector<TaggedPlace> pick(const std::vector<TaggedPlace>& labelled, std::initializer_list<int> numbers);

// Regression expressions.
inline const char* kSeqOfChoice = "(a||b);((c||d)[](e||f))";
inline const char* kIteration = "[ (a||b) * (c||d);e * (f||g) ]";
std::vector<std::string> corpus();

// Random grammar-valid expression with between 1 and max_actions actions.
boxnet::BoxExpr random_expr(std::mt19937& rng, int max_actions);

// Random valid net over transitions t0..t(k-1) with at most max_places places.
MarkedNet random_net(std::mt19937& rng, int max_places, int transitions);

}  // namespace fixtures
