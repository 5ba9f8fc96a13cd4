#include "boxnet/cograph.hpp"

#include "boxnet/error.hpp"

#include <algorithm>
#include <limits>

namespace boxnet {

TaggedVertex TaggedVertex::parse(std::string_view text) {
  auto caret = text.rfind('^');
  if (caret == std::string_view::npos || caret == 0)
    throw Error(ErrorKind::InvalidGraph, "malformed vertex '" + std::string(text) + "'");
  auto pol = text.substr(caret + 1);
  if (pol != "in" && pol != "out")
    throw Error(ErrorKind::InvalidGraph, "unknown polarity in '" + std::string(text) + "'");
  return {std::string(text.substr(0, caret)), pol == "in" ? Polarity::In : Polarity::Out};
}

std::string TaggedVertex::name() const { return action + (polarity == Polarity::In ? "^in" : "^out"); }

struct CographExpr::Node {
  CographKind kind;
  TaggedVertex vertex;
  std::vector<CographExpr> children;
};

CographExpr::CographExpr() : node_(std::make_shared<const Node>(Node{CographKind::Union, {}, {}})) {}

CographExpr CographExpr::vertex(TaggedVertex v) {
  return CographExpr(std::make_shared<const Node>(Node{CographKind::Vertex, std::move(v), {}}));
}

namespace {

std::vector<CographExpr> flatten(std::vector<CographExpr> parts, CographKind kind) {
  std::vector<CographExpr> out;
  for (auto& p : parts) {
    if (p.empty()) continue;
    if (p.kind() == kind) {
      for (const auto& c : p.children()) out.push_back(c);
    } else {
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

CographExpr CographExpr::unite(std::vector<CographExpr> parts) {
  auto flat = flatten(std::move(parts), CographKind::Union);
  if (flat.size() == 1) return flat.front();
  return CographExpr(std::make_shared<const Node>(Node{CographKind::Union, {}, std::move(flat)}));
}

CographExpr CographExpr::join(std::vector<CographExpr> parts) {
  auto flat = flatten(std::move(parts), CographKind::Join);
  if (flat.empty()) return CographExpr();
  if (flat.size() == 1) return flat.front();
  return CographExpr(std::make_shared<const Node>(Node{CographKind::Join, {}, std::move(flat)}));
}

CographKind CographExpr::kind() const noexcept { return node_->kind; }

bool CographExpr::empty() const noexcept { return node_->kind == CographKind::Union && node_->children.empty(); }

const TaggedVertex& CographExpr::vertex() const {
  if (kind() != CographKind::Vertex) throw Error(ErrorKind::InvalidArgument, "not a vertex node");
  return node_->vertex;
}

const std::vector<CographExpr>& CographExpr::children() const noexcept { return node_->children; }

VertexSet CographExpr::vertices() const {
  VertexSet out;
  auto rec = [&](auto&& self, const CographExpr& e) -> void {
    if (e.kind() == CographKind::Vertex) {
      out.push_back(e.vertex());
      return;
    }
    for (const auto& c : e.children()) self(self, c);
  };
  rec(rec, *this);
  std::sort(out.begin(), out.end());
  auto dup = std::adjacent_find(out.begin(), out.end());
  if (dup != out.end()) throw Error(ErrorKind::InvalidGraph, "vertex " + dup->name() + " occurs twice");
  return out;
}

std::size_t CographExpr::node_count() const {
  std::size_t n = 1;
  for (const auto& c : children()) n += c.node_count();
  return n;
}

std::string render(const CographExpr& cg) {
  switch (cg.kind()) {
    case CographKind::Vertex:
      return cg.vertex().name();
    case CographKind::Union:
    case CographKind::Join: {
      if (cg.empty()) return "0";
      const char* op = cg.kind() == CographKind::Union ? " + " : " * ";
      std::string s;
      for (std::size_t i = 0; i < cg.children().size(); ++i) {
        const auto& c = cg.children()[i];
        if (i) s += op;
        bool wrap = c.kind() != CographKind::Vertex;
        s += wrap ? "(" + render(c) + ")" : render(c);
      }
      return s;
    }
  }
  return {};
}

CographExpr GammaTriple::connection_graph() const { return CographExpr::unite({entry, exit, internal}); }

namespace {

GammaTriple gamma_rec(const BoxExpr& e) {
  using G = CographExpr;
  switch (e.kind()) {
    case BoxKind::Action:
      return {G::vertex({e.name(), Polarity::Out}), G::vertex({e.name(), Polarity::In}), G()};
    case BoxKind::Par: {
      auto l = gamma_rec(e.left()), r = gamma_rec(e.right());
      return {G::unite({l.entry, r.entry}), G::unite({l.exit, r.exit}), G::unite({l.internal, r.internal})};
    }
    case BoxKind::Seq: {
      auto l = gamma_rec(e.left()), r = gamma_rec(e.right());
      return {l.entry, r.exit, G::unite({l.internal, r.internal, G::join({l.exit, r.entry})})};
    }
    case BoxKind::Choice: {
      auto l = gamma_rec(e.left()), r = gamma_rec(e.right());
      return {G::join({l.entry, r.entry}), G::join({l.exit, r.exit}), G::unite({l.internal, r.internal})};
    }
    case BoxKind::Iter: {
      auto i = gamma_rec(e.child(0)), b = gamma_rec(e.child(1)), x = gamma_rec(e.child(2));
      auto loop = G::join({G::join({i.exit, b.exit}), G::join({b.entry, x.entry})});
      return {i.entry, x.exit, G::unite({i.internal, b.internal, x.internal, loop})};
    }
  }
  return {};
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > std::numeric_limits<std::uint64_t>::max() / b ? std::numeric_limits<std::uint64_t>::max() : a * b;
}

std::vector<VertexSet> cliques_rec(const CographExpr& cg) {
  switch (cg.kind()) {
    case CographKind::Vertex:
      return {{cg.vertex()}};
    case CographKind::Union: {
      std::vector<VertexSet> out;
      for (const auto& c : cg.children()) {
        auto part = cliques_rec(c);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
    case CographKind::Join: {
      std::vector<VertexSet> out{{}};
      for (const auto& c : cg.children()) {
        auto part = cliques_rec(c);
        std::vector<VertexSet> next;
        next.reserve(out.size() * part.size());
        for (const auto& prefix : out)
          for (const auto& q : part) {
            auto merged = prefix;
            merged.insert(merged.end(), q.begin(), q.end());
            next.push_back(std::move(merged));
          }
        out = std::move(next);
      }
      return out;
    }
  }
  return {};
}

}  // namespace

GammaTriple gamma(const BoxExpr& expr) {
  require_safe(expr);
  return gamma_rec(expr);
}

std::uint64_t count_max_cliques(const CographExpr& cg) {
  switch (cg.kind()) {
    case CographKind::Vertex:
      return 1;
    case CographKind::Union: {
      std::uint64_t n = 0;
      for (const auto& c : cg.children()) n = saturating_add(n, count_max_cliques(c));
      return n;
    }
    case CographKind::Join: {
      std::uint64_t n = 1;
      for (const auto& c : cg.children()) n = saturating_mul(n, count_max_cliques(c));
      return n;
    }
  }
  return 0;
}

std::vector<VertexSet> max_cliques(const CographExpr& cg, std::uint64_t limit) {
  cg.vertices();  // rejects repeated leaves
  auto count = count_max_cliques(cg);
  if (count > limit)
    throw Error(ErrorKind::CliqueCountExceeded,
                "cograph has " + std::to_string(count) + " max-cliques, limit " + std::to_string(limit));
  auto out = cliques_rec(cg);
  for (auto& q : out) std::sort(q.begin(), q.end());
  std::sort(out.begin(), out.end());
  return out;
}

TaggedPlace place_of_clique(const VertexSet& clique) {
  std::vector<std::string> in, out;
  for (const auto& v : clique) (v.polarity == Polarity::In ? in : out).push_back(v.action);
  return TaggedPlace(std::move(in), std::move(out));
}

}  // namespace boxnet
