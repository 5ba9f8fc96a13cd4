#pragma once

#include "boxnet/box_expr.hpp"
#include "boxnet/ecc.hpp"
#include "boxnet/net.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace boxnet {

enum class Solver { Trivial, Greedy, Exact };

/// "trivial", "greedy" or "exact"; throws Error(InvalidArgument).
Solver parse_solver(std::string_view name);
std::string_view to_string(Solver solver);

struct ReduceOptions {
  Solver solver = Solver::Greedy;
  /// Precover edges between two `in` vertices.
  bool opt1 = true;
  /// Drop places with an empty postset.
  bool opt2 = true;
  std::size_t state_cap = kDefaultStateCap;
  std::uint64_t clique_limit = 100'000;
  std::uint64_t branch_budget = kDefaultBranchBudget;
};

struct NetStats {
  std::size_t places = 0;
  std::size_t transitions = 0;
  std::size_t arcs = 0;
  std::size_t marked = 0;
  std::optional<std::size_t> rg_nodes;
};

NetStats stats(const MarkedNet& net);

struct ReduceOutcome {
  MarkedNet net;
  CliqueCover cover;
  /// The graph handed to the solver (after precovering, if enabled).
  ExplicitGraph graph;
  NetStats stats;
};

/// One place per clique; places with an empty preset are initially marked.
/// With `drop_sinks`, places with an empty postset are left out.
MarkedNet net_from_cover(const CliqueCover& cover, bool drop_sinks);

/// Connection graph, clique cover, net. Throws the validation error of
/// require_safe and the solver's budget errors.
ReduceOutcome reduce(const BoxExpr& expr, const ReduceOptions& options = {});

/// RG isomorphism between box_net(expr) and the reduced net.
IsoResult verify(const BoxExpr& expr, const ReduceOutcome& outcome, std::size_t state_cap = kDefaultStateCap);

/// (a1 || b1) [] ((a2 || b2) [] ... [] (an || bn))
BoxExpr burst_family(std::size_t n);

/// Smallest m with C(m-1, floor(m/2)-1) >= n: the number of entry places of
/// burst_witness_cover(n).
std::size_t burst_witness_width(std::size_t n);

/// Cover of the connection graph of burst_family(n) whose entry cliques come
/// from distinct floor(m/2)-subsets S1..Sn of {1..m} that all contain 1,
/// taken in lexicographic order: clique j holds ai^out for j in Si and bi^out
/// otherwise. The two exit cliques are {a1^in..an^in} and {b1^in..bn^in}.
CliqueCover burst_witness_cover(std::size_t n = 10);

}  // namespace boxnet
