#pragma once

#include "boxnet/cograph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace boxnet {

inline constexpr std::uint64_t kDefaultBranchBudget = 1'000'000;

/// Undirected graph over tagged vertices with a set of edges assumed to be
/// covered already.
class ExplicitGraph {
 public:
  ExplicitGraph() = default;
  /// Throws Error(InvalidGraph) on self loops, duplicate vertices, unknown
  /// endpoints, or precovered pairs that are not edges.
  ExplicitGraph(VertexSet vertices, const std::vector<std::pair<TaggedVertex, TaggedVertex>>& edges,
                const std::vector<std::pair<TaggedVertex, TaggedVertex>>& precovered = {});

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const;
  std::size_t precovered_count() const;
  const VertexSet& vertices() const noexcept { return vertices_; }
  const TaggedVertex& vertex(std::size_t i) const { return vertices_.at(i); }
  std::optional<std::size_t> find(const TaggedVertex& v) const;

  const IndexSet& neighbours(std::size_t v) const { return adjacency_.at(v); }
  const std::vector<IndexSet>& adjacency() const noexcept { return adjacency_; }
  bool has_edge(std::size_t u, std::size_t v) const { return adjacency_.at(u).test(v); }
  bool is_precovered(std::size_t u, std::size_t v) const { return precovered_.at(u).test(v); }
  /// Edges (u, v) with u < v, ordered.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Same graph with the given edges marked precovered.
  ExplicitGraph with_precovered(const std::vector<std::pair<std::size_t, std::size_t>>& edges) const;

  friend bool operator==(const ExplicitGraph&, const ExplicitGraph&) = default;

 private:
  friend ExplicitGraph materialize(const CographExpr& cg);
  VertexSet vertices_;
  std::vector<IndexSet> adjacency_;
  std::vector<IndexSet> precovered_;
};

/// Vertices of the cograph; an edge between two vertices iff their lowest
/// common ancestor is a join.
ExplicitGraph materialize(const CographExpr& cg);

/// Marks every edge between two `in` vertices as precovered.
ExplicitGraph mark_precovered_in_edges(const ExplicitGraph& g);

struct CliqueCover {
  /// Each clique sorted; the list sorted.
  std::vector<VertexSet> cliques;

  std::size_t size() const noexcept { return cliques.size(); }
};

// All solvers return cliques that are maximal in g (precovered edges count
// as edges) and cover every vertex and every edge that is not precovered.

/// One clique per uncovered edge, extended to a maximal clique by smallest
/// vertex first; duplicates merged.
CliqueCover ecc_trivial(const ExplicitGraph& g);

/// Seeds from the uncovered edge whose endpoints have the largest uncovered
/// degree and grows by the candidate covering most uncovered edges; ties go
/// to the smallest vertex.
CliqueCover ecc_greedy(const ExplicitGraph& g);

/// Minimum cover, by branch and bound over maximal cliques per connected
/// component. Throws Error(BudgetExceeded) after `budget` branch nodes or when
/// a component has more than `budget` maximal cliques.
CliqueCover ecc_exact(const ExplicitGraph& g, std::uint64_t budget = kDefaultBranchBudget);

/// Lists the ways `cover` fails to be a cover of g; empty when valid.
std::vector<std::string> validate_cover(const ExplicitGraph& g, const CliqueCover& cover);

/// One place per clique, sorted.
std::vector<TaggedPlace> places_from_cover(const CliqueCover& cover);

/// `v a in` lines, then `e a^in c^out` lines with a trailing ` pre` for
/// precovered edges.
std::string write_graph(const ExplicitGraph& g);
ExplicitGraph parse_graph(std::string_view text);
/// Precovered edges dotted.
std::string write_graph_dot(const ExplicitGraph& g);

/// {"vertices":[...],"edges":[{"u":..,"v":..,"precovered":bool}]}
std::string write_graph_json(const ExplicitGraph& g);

/// One clique per line, vertex names separated by blanks.
std::string write_clique_cover(const CliqueCover& cover);
std::string write_clique_cover_json(const CliqueCover& cover);

}  // namespace boxnet
