#include "cliques.hpp"

namespace boxnet::detail {

namespace {

bool expand(const std::vector<IndexSet>& adjacency, IndexSet& r, IndexSet p, IndexSet x,
            const std::function<bool(const IndexSet&)>& visit) {
  if (p.none() && x.none()) return visit(r);
  // Pivot on the vertex of P ∪ X with most neighbours in P.
  auto px = p | x;
  std::size_t pivot = px.find_first();
  std::size_t best = 0;
  for (auto u = px.find_first(); u != IndexSet::npos; u = px.find_next(u)) {
    auto c = (p & adjacency[u]).count();
    if (c > best || u == px.find_first()) {
      best = c;
      pivot = u;
    }
  }
  auto todo = p - adjacency[pivot];
  for (auto v = todo.find_first(); v != IndexSet::npos; v = todo.find_next(v)) {
    r.set(v);
    if (!expand(adjacency, r, p & adjacency[v], x & adjacency[v], visit)) return false;
    r.reset(v);
    p.reset(v);
    x.set(v);
  }
  return true;
}

}  // namespace

bool for_each_maximal_clique(const std::vector<IndexSet>& adjacency, const IndexSet& candidates,
                             const std::function<bool(const IndexSet&)>& visit) {
  IndexSet r(candidates.size());
  return expand(adjacency, r, candidates, IndexSet(candidates.size()), visit);
}

}  // namespace boxnet::detail
