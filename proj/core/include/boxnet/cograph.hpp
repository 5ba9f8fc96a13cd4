#pragma once

#include "boxnet/box_expr.hpp"
#include "boxnet/net.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace boxnet {

enum class Polarity : std::uint8_t { In, Out };

struct TaggedVertex {
  std::string action;
  Polarity polarity = Polarity::In;

  /// `a^in` / `a^out`
  static TaggedVertex parse(std::string_view text);
  std::string name() const;

  friend auto operator<=>(const TaggedVertex&, const TaggedVertex&) = default;
};

using VertexSet = std::vector<TaggedVertex>;  // sorted, no duplicates

enum class CographKind { Vertex, Union, Join };

/// Cograph expression with n-ary, flattened union and join nodes. The empty
/// graph is a union without children. Builders drop empty operands and
/// collapse single-operand nodes.
class CographExpr {
 public:
  CographExpr();  // empty graph

  static CographExpr vertex(TaggedVertex v);
  static CographExpr unite(std::vector<CographExpr> parts);
  static CographExpr join(std::vector<CographExpr> parts);

  CographKind kind() const noexcept;
  bool empty() const noexcept;
  const TaggedVertex& vertex() const;
  const std::vector<CographExpr>& children() const noexcept;

  /// Sorted leaf vertices. Throws Error(InvalidGraph) on a repeated leaf.
  VertexSet vertices() const;
  std::size_t node_count() const;

 private:
  struct Node;
  explicit CographExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Text form: `+` for disjoint union, `*` for join, `0` for the empty graph.
std::string render(const CographExpr& cg);

struct GammaTriple {
  CographExpr entry;
  CographExpr exit;
  CographExpr internal;

  /// CG_E = entry ⊎ exit ⊎ internal
  CographExpr connection_graph() const;
};

/// Structural recursion mirroring interface_places with ⊎ for ∪ and join
/// for ⊗. Throws the validation error of require_safe.
GammaTriple gamma(const BoxExpr& expr);

/// Sum over unions and product over joins, saturating at UINT64_MAX.
std::uint64_t count_max_cliques(const CographExpr& cg);

/// Max cliques, each sorted, in a deterministic order. Throws
/// Error(CliqueCountExceeded) when count_max_cliques exceeds `limit`; the
/// count is taken before any enumeration.
std::vector<VertexSet> max_cliques(const CographExpr& cg, std::uint64_t limit = 100'000);

/// Tagged place with the in-vertices as inputs and out-vertices as outputs.
TaggedPlace place_of_clique(const VertexSet& clique);

}  // namespace boxnet
