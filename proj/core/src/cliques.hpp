#pragma once

#include "boxnet/net.hpp"

#include <functional>
#include <vector>

namespace boxnet::detail {

/// Bron–Kerbosch with pivoting over `adjacency` (symmetric, no self loops),
/// restricted to the vertices in `candidates`. Calls `visit` for every
/// maximal clique; stops early when `visit` returns false. Returns false iff
/// stopped early.
bool for_each_maximal_clique(const std::vector<IndexSet>& adjacency, const IndexSet& candidates,
                             const std::function<bool(const IndexSet&)>& visit);

}  // namespace boxnet::detail
