#pragma once

#include "boxnet/box_expr.hpp"
#include "boxnet/net.hpp"

#include <vector>

namespace boxnet {

using PlaceSet = std::vector<TaggedPlace>;  // sorted, no duplicates

struct InterfaceTriple {
  PlaceSet entry;
  PlaceSet exit;
  PlaceSet internal;

  PlaceSet all() const;
};

/// Entry, exit and internal places by structural recursion. Throws the
/// validation error of require_safe for expressions outside the grammar.
InterfaceTriple interface_places(const BoxExpr& expr);

/// The standard net: all interface places, entry places initially marked.
MarkedNet box_net(const BoxExpr& expr);

struct DpTriple {
  std::vector<PlaceSet> entry;
  std::vector<PlaceSet> exit;
  std::vector<PlaceSet> internal;

  /// entry, then exit, then internal members.
  std::vector<PlaceSet> flatten() const;
};

/// The cover of box_net(expr) by distributed places, by structural recursion.
DpTriple dp_cover(const BoxExpr& expr);

}  // namespace boxnet
