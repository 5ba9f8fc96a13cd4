#pragma once

// Reference implementations used only by tests. They work on plain std
// containers and share no code with the library beyond its value types.

#include <boxnet/box_expr.hpp>
#include <boxnet/cograph.hpp>
#include <boxnet/net.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using boxnet::TaggedPlace;
using boxnet::TaggedVertex;
using Word = std::vector<std::string>;
using PlaceSet = std::set<TaggedPlace>;

// Token game directly on tagged places.
struct ToyNet {
  std::vector<TaggedPlace> places;
  std::set<std::size_t> initial;

  std::set<std::string> transitions() const;
  std::set<std::size_t> pre(const std::string& t) const;
  std::set<std::size_t> post(const std::string& t) const;
};

ToyNet toy(const boxnet::MarkedNet& net);
ToyNet toy(const std::vector<TaggedPlace>& places);  // marked iff no inputs

struct ToyRG {
  std::vector<std::set<std::size_t>> nodes;
  std::vector<std::map<std::string, std::size_t>> succ;
  bool safe = true;
};

ToyRG toy_rg(const ToyNet& net, std::size_t cap = 100000);

// Backtracking search for a label-preserving bijection fixing the roots.
bool bijection_isomorphic(const ToyRG& a, const ToyRG& b);

// All firing sequences of length <= depth (including the empty one).
std::set<Word> toy_sequences(const ToyNet& net, std::size_t depth);

// Edge set of a cograph via lowest common ancestors in the cotree.
std::set<std::pair<TaggedVertex, TaggedVertex>> lca_edges(const boxnet::CographExpr& cg);

using Edge = std::pair<std::size_t, std::size_t>;

// Maximal cliques by subset enumeration (n <= 20).
std::vector<std::set<std::size_t>> subset_max_cliques(std::size_t n, const std::set<Edge>& edges);

// Smallest number of cliques covering `required` edges and every vertex in
// `vertices_needing_cover`; exhaustive over all cliques of the graph.
std::size_t exhaustive_min_cover(std::size_t n, const std::set<Edge>& edges, const std::set<Edge>& required,
                                 const std::set<std::size_t>& vertices_needing_cover);

// Entry/exit/internal places computed straight from the recursive rules.
struct Interface {
  PlaceSet entry, exit, internal;
};
Interface pi(const boxnet::BoxExpr& e);

// Literal in/out sequence definitions over tagged places.
struct Roles {
  std::set<std::string> ins, rem, read, adj;
};
Roles roles(const std::vector<TaggedPlace>& q);
bool in_sequence(const std::vector<TaggedPlace>& q, const Word& w, bool complete);
bool out_sequence(const std::vector<TaggedPlace>& q, const Word& w, bool complete);

// Membership of a projected word in the row selected by (ins, rem, marked),
// by search over segmentations.
bool projection_ok(const std::vector<TaggedPlace>& q, bool marked, const Word& projected);

Word project(const Word& w, const std::set<std::string>& alphabet);

}  // namespace oracle
