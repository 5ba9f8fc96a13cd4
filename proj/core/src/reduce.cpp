#include "boxnet/reduce.hpp"

#include "boxnet/cograph.hpp"
#include "boxnet/error.hpp"
#include "boxnet/translate.hpp"

#include <algorithm>

namespace boxnet {

Solver parse_solver(std::string_view name) {
  if (name == "trivial") return Solver::Trivial;
  if (name == "greedy") return Solver::Greedy;
  if (name == "exact") return Solver::Exact;
  throw Error(ErrorKind::InvalidArgument, "unknown solver '" + std::string(name) + "'");
}

std::string_view to_string(Solver solver) {
  switch (solver) {
    case Solver::Trivial: return "trivial";
    case Solver::Greedy: return "greedy";
    case Solver::Exact: return "exact";
  }
  return "?";
}

NetStats stats(const MarkedNet& net) {
  return {net.place_count(), net.transition_count(), net.arc_count(), net.initial().count(), std::nullopt};
}

MarkedNet net_from_cover(const CliqueCover& cover, bool drop_sinks) {
  std::vector<PlaceDecl> decls;
  for (const auto& place : places_from_cover(cover)) {
    if (drop_sinks && place.outputs().empty()) continue;
    decls.push_back({place, place.inputs().empty()});
  }
  return MarkedNet(std::move(decls));
}

ReduceOutcome reduce(const BoxExpr& expr, const ReduceOptions& options) {
  auto cg = gamma(expr).connection_graph();
  auto graph = materialize(cg);
  if (options.opt1) graph = mark_precovered_in_edges(graph);
  CliqueCover cover;
  switch (options.solver) {
    case Solver::Trivial: cover = ecc_trivial(graph); break;
    case Solver::Greedy: cover = ecc_greedy(graph); break;
    case Solver::Exact: cover = ecc_exact(graph, options.branch_budget); break;
  }
  auto net = net_from_cover(cover, options.opt2);
  auto s = stats(net);
  return {std::move(net), std::move(cover), std::move(graph), s};
}

IsoResult verify(const BoxExpr& expr, const ReduceOutcome& outcome, std::size_t state_cap) {
  return rg_isomorphic(box_net(expr), outcome.net, state_cap);
}

BoxExpr burst_family(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "burst family needs n >= 1");
  auto burst = [](std::size_t i) {
    auto k = std::to_string(i);
    return BoxExpr::par(BoxExpr::action("a" + k), BoxExpr::action("b" + k));
  };
  auto e = burst(n);
  for (std::size_t i = n - 1; i >= 1; --i) e = BoxExpr::choice(burst(i), e);
  return e;
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::size_t burst_witness_width(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "burst family needs n >= 1");
  std::size_t m = 2;
  while (binomial(m - 1, m / 2 - 1) < n) ++m;
  return m;
}

CliqueCover burst_witness_cover(std::size_t n) {
  const auto m = burst_witness_width(n);
  const auto half = m / 2;
  // Lexicographic half-subsets of {1..m} that contain 1.
  std::vector<std::vector<bool>> subsets;
  std::vector<std::size_t> pick(half);
  pick[0] = 1;
  auto rec = [&](auto&& self, std::size_t pos, std::size_t next) -> void {
    if (subsets.size() == n) return;
    if (pos == half) {
      std::vector<bool> s(m + 1, false);
      for (auto j : pick) s[j] = true;
      subsets.push_back(std::move(s));
      return;
    }
    for (std::size_t j = next; j <= m; ++j) {
      pick[pos] = j;
      self(self, pos + 1, j + 1);
    }
  };
  rec(rec, 1, 2);

  CliqueCover cover;
  for (std::size_t j = 1; j <= m; ++j) {
    VertexSet clique;
    for (std::size_t i = 0; i < n; ++i)
      clique.push_back({(subsets[i][j] ? "a" : "b") + std::to_string(i + 1), Polarity::Out});
    std::sort(clique.begin(), clique.end());
    cover.cliques.push_back(std::move(clique));
  }
  for (const char* side : {"a", "b"}) {
    VertexSet clique;
    for (std::size_t i = 1; i <= n; ++i) clique.push_back({side + std::to_string(i), Polarity::In});
    std::sort(clique.begin(), clique.end());
    cover.cliques.push_back(std::move(clique));
  }
  std::sort(cover.cliques.begin(), cover.cliques.end());
  return cover;
}

}  // namespace boxnet
