#include "boxnet/translate.hpp"

#include "boxnet/dplace.hpp"

#include <algorithm>

namespace boxnet {

namespace {

PlaceSet unite(PlaceSet a, const PlaceSet& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

template <class T>
std::vector<T> concat(std::vector<T> a, const std::vector<T>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

InterfaceTriple pi(const BoxExpr& e) {
  switch (e.kind()) {
    case BoxKind::Action:
      return {{TaggedPlace({}, {e.name()})}, {TaggedPlace({e.name()}, {})}, {}};
    case BoxKind::Par: {
      auto l = pi(e.left()), r = pi(e.right());
      return {unite(l.entry, r.entry), unite(l.exit, r.exit), unite(l.internal, r.internal)};
    }
    case BoxKind::Seq: {
      auto l = pi(e.left()), r = pi(e.right());
      return {l.entry, r.exit, unite(unite(l.internal, r.internal), cross_product(l.exit, r.entry))};
    }
    case BoxKind::Choice: {
      auto l = pi(e.left()), r = pi(e.right());
      return {cross_product(l.entry, r.entry), cross_product(l.exit, r.exit), unite(l.internal, r.internal)};
    }
    case BoxKind::Iter: {
      auto i = pi(e.child(0)), b = pi(e.child(1)), x = pi(e.child(2));
      auto loop = cross_product(cross_product(i.exit, b.exit), cross_product(x.entry, b.entry));
      return {i.entry, x.exit, unite(unite(unite(i.internal, b.internal), x.internal), loop)};
    }
  }
  return {};
}

DpTriple delta(const BoxExpr& e) {
  switch (e.kind()) {
    case BoxKind::Action:
      return {{{TaggedPlace({}, {e.name()})}}, {{TaggedPlace({e.name()}, {})}}, {}};
    case BoxKind::Par: {
      auto l = delta(e.left()), r = delta(e.right());
      return {concat(l.entry, r.entry), concat(l.exit, r.exit), concat(l.internal, r.internal)};
    }
    case BoxKind::Seq: {
      auto l = delta(e.left()), r = delta(e.right());
      auto internal = concat(l.internal, r.internal);
      internal.push_back(cross_product(pi(e.left()).exit, pi(e.right()).entry));
      return {l.entry, r.exit, internal};
    }
    case BoxKind::Choice: {
      auto l = pi(e.left()), r = pi(e.right());
      return {{cross_product(l.entry, r.entry)},
              {cross_product(l.exit, r.exit)},
              concat(delta(e.left()).internal, delta(e.right()).internal)};
    }
    case BoxKind::Iter: {
      auto i = pi(e.child(0)), b = pi(e.child(1)), x = pi(e.child(2));
      auto di = delta(e.child(0)), db = delta(e.child(1)), dx = delta(e.child(2));
      auto internal = concat(concat(di.internal, db.internal), dx.internal);
      internal.push_back(cross_product(cross_product(i.exit, b.exit), cross_product(b.entry, x.entry)));
      return {di.entry, dx.exit, internal};
    }
  }
  return {};
}

}  // namespace

PlaceSet InterfaceTriple::all() const { return unite(unite(entry, exit), internal); }

std::vector<PlaceSet> DpTriple::flatten() const { return concat(concat(entry, exit), internal); }

InterfaceTriple interface_places(const BoxExpr& expr) {
  require_safe(expr);
  return pi(expr);
}

MarkedNet box_net(const BoxExpr& expr) {
  auto triple = interface_places(expr);
  std::vector<PlaceDecl> decls;
  for (const auto& p : triple.entry) decls.push_back({p, true});
  for (const auto* side : {&triple.exit, &triple.internal})
    for (const auto& p : *side) decls.push_back({p, false});
  return MarkedNet(std::move(decls));
}

DpTriple dp_cover(const BoxExpr& expr) {
  require_safe(expr);
  return delta(expr);
}

}  // namespace boxnet
