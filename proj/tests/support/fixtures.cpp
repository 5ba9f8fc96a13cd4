#include "fixtures.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fixtures {

namespace {

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

MarkedNet net_of(const std::vector<TaggedPlace>& places) {
  std::vector<PlaceDecl> decls;
  for (const auto& p : places) decls.push_back({p, p.inputs().empty()});
  return MarkedNet(decls);
}

}  // namespace

TaggedPlace tp(const std::string& spec) {
  auto bar = spec.find('|');
  return TaggedPlace(split_names(spec.substr(0, bar)), split_names(spec.substr(bar + 1)));
}

std::vector<TaggedPlace> n0_places() {
  return {tp("|a"),     tp("|b"),     tp("a|c,e"), tp("b|c,e"), tp("a|c,f"),
          tp("b|c,f"),  tp("a|d,e"),  tp("b|d,e"), tp("a|d,f"), tp("b|d,f")};
}

MarkedNet n0() { return net_of(n0_places()); }

std::vector<TaggedPlace> n1_places() {
  return {tp("|a"), tp("|b"), tp("b|c"), tp("a|c"), tp("b|d"), tp("a|d"), tp("c|"), tp("d|")};
}

MarkedNet n1() { return net_of(n1_places()); }

std::vector<TaggedPlace> n2_places() {
  return {tp("|a,c"), tp("|a,d"), tp("|b,c"), tp("|b,d"), tp("a,c|"), tp("a,d|"), tp("b,c|"), tp("b,d|")};
}

MarkedNet n2() { return net_of(n2_places()); }

std::vector<TaggedPlace> pick(const std::vector<TaggedPlace>& labelled, std::initializer_list<int> numbers) {
  std::vector<TaggedPlace> out;
  for (int n : numbers) out.push_back(labelled.at(static_cast<std::size_t>(n - 1)));
  return out;
}

std::vector<std::string> corpus() {
  return {
      "a",
      "a;b",
      "a[]b",
      "a||b",
      "(a||b);(c||d)",
      "(a||b)[](c||d)",
      kSeqOfChoice,
      kIteration,
      "[ a * b[]c * d ]",
      "[ (a[]b) * c;(d||e) * (f||g) ]",
      "(a1||b1)[](a2||b2)[](a3||b3)",
      "((a||b)[](c||d));e;(f||(g[]h))",
  };
}

namespace {

struct ExprGen {
  std::mt19937& rng;
  int next = 0;

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  boxnet::BoxExpr atom() { return boxnet::BoxExpr::action("x" + std::to_string(next++)); }

  // h selects the restricted body nonterminal.
  boxnet::BoxExpr build(int n, bool h) {
    if (n == 1) return atom();
    std::vector<int> ops{0, 1};  // seq, choice
    if (!h) ops.push_back(2);    // par
    if (n >= 3) ops.push_back(3);
    switch (ops[static_cast<std::size_t>(uniform(0, static_cast<int>(ops.size()) - 1))]) {
      case 0: {
        int k = uniform(1, n - 1);
        return boxnet::BoxExpr::seq(build(k, false), build(n - k, false));
      }
      case 1: {
        int k = uniform(1, n - 1);
        return boxnet::BoxExpr::choice(build(k, h), build(n - k, h));
      }
      case 2: {
        int k = uniform(1, n - 1);
        return boxnet::BoxExpr::par(build(k, false), build(n - k, false));
      }
      default: {
        int a = uniform(1, n - 2);
        int b = uniform(1, n - a - 1);
        int init = a, body = b, exit = n - a - b;
        return boxnet::BoxExpr::iter(build(init, false), build(body, true), build(exit, false));
      }
    }
  }
};

}  // namespace

boxnet::BoxExpr random_expr(std::mt19937& rng, int max_actions) {
  ExprGen gen{rng};
  return gen.build(gen.uniform(1, max_actions), false);
}

MarkedNet random_net(std::mt19937& rng, int max_places, int transitions) {
  auto coin = [&](int percent) { return std::uniform_int_distribution<int>(0, 99)(rng) < percent; };
  for (;;) {
    int count = std::uniform_int_distribution<int>(1, max_places)(rng);
    std::vector<std::set<std::string>> ins(static_cast<std::size_t>(count)), outs(ins.size());
    for (std::size_t p = 0; p < ins.size(); ++p) {
      for (int t = 0; t < transitions; ++t) {
        auto name = "t" + std::to_string(t);
        if (coin(30)) ins[p].insert(name);
        if (coin(30)) outs[p].insert(name);
      }
      if (ins[p].empty() && outs[p].empty()) outs[p].insert("t" + std::to_string(p % static_cast<std::size_t>(transitions)));
    }
    // Every transition that occurs needs a pre-place.
    std::set<std::string> used, consumed;
    for (std::size_t p = 0; p < ins.size(); ++p) {
      used.insert(ins[p].begin(), ins[p].end());
      used.insert(outs[p].begin(), outs[p].end());
      consumed.insert(outs[p].begin(), outs[p].end());
    }
    for (const auto& t : used)
      if (!consumed.count(t))
        outs[static_cast<std::size_t>(std::uniform_int_distribution<int>(0, count - 1)(rng))].insert(t);
    std::vector<PlaceDecl> decls;
    std::set<std::pair<std::set<std::string>, std::set<std::string>>> seen;
    bool duplicate = false;
    for (std::size_t p = 0; p < ins.size(); ++p) {
      if (!seen.insert({ins[p], outs[p]}).second) duplicate = true;
      decls.push_back({TaggedPlace({ins[p].begin(), ins[p].end()}, {outs[p].begin(), outs[p].end()}), coin(40)});
    }
    if (duplicate) continue;
    return MarkedNet(decls);
  }
}

}  // namespace fixtures
