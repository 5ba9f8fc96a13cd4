#include "boxnet/ecc.hpp"

#include "boxnet/error.hpp"
#include "cliques.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace boxnet {

ExplicitGraph::ExplicitGraph(VertexSet vertices, const std::vector<std::pair<TaggedVertex, TaggedVertex>>& edges,
                             const std::vector<std::pair<TaggedVertex, TaggedVertex>>& precovered)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw Error(ErrorKind::InvalidGraph, "duplicate vertex");
  const auto n = vertices_.size();
  adjacency_.assign(n, IndexSet(n));
  precovered_.assign(n, IndexSet(n));
  auto index = [&](const TaggedVertex& v) {
    auto i = find(v);
    if (!i) throw Error(ErrorKind::InvalidGraph, "unknown vertex " + v.name());
    return *i;
  };
  for (const auto& [a, b] : edges) {
    auto u = index(a), v = index(b);
    if (u == v) throw Error(ErrorKind::InvalidGraph, "self loop at " + a.name());
    adjacency_[u].set(v);
    adjacency_[v].set(u);
  }
  for (const auto& [a, b] : precovered) {
    auto u = index(a), v = index(b);
    if (u == v || !adjacency_[u].test(v))
      throw Error(ErrorKind::InvalidGraph, "precovered pair " + a.name() + " " + b.name() + " is not an edge");
    precovered_[u].set(v);
    precovered_[v].set(u);
  }
}

std::size_t ExplicitGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& a : adjacency_) n += a.count();
  return n / 2;
}

std::size_t ExplicitGraph::precovered_count() const {
  std::size_t n = 0;
  for (const auto& a : precovered_) n += a.count();
  return n / 2;
}

std::optional<std::size_t> ExplicitGraph::find(const TaggedVertex& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> ExplicitGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < vertices_.size(); ++u)
    for (auto v = adjacency_[u].find_next(u); v != IndexSet::npos; v = adjacency_[u].find_next(v))
      out.emplace_back(u, v);
  return out;
}

ExplicitGraph ExplicitGraph::with_precovered(const std::vector<std::pair<std::size_t, std::size_t>>& edges) const {
  auto g = *this;
  for (auto [u, v] : edges) {
    if (u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v))
      throw Error(ErrorKind::InvalidGraph, "precovered pair is not an edge");
    g.precovered_[u].set(v);
    g.precovered_[v].set(u);
  }
  return g;
}

ExplicitGraph materialize(const CographExpr& cg) {
  ExplicitGraph g;
  g.vertices_ = cg.vertices();
  const auto n = g.vertices_.size();
  g.adjacency_.assign(n, IndexSet(n));
  g.precovered_.assign(n, IndexSet(n));
  auto rec = [&](auto&& self, const CographExpr& e) -> IndexSet {
    IndexSet leaves(n);
    if (e.kind() == CographKind::Vertex) {
      leaves.set(*g.find(e.vertex()));
      return leaves;
    }
    std::vector<IndexSet> parts;
    for (const auto& c : e.children()) parts.push_back(self(self, c));
    if (e.kind() == CographKind::Join)
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j)
          if (i != j)
            for (auto u : members(parts[i])) g.adjacency_[u] |= parts[j];
    for (const auto& p : parts) leaves |= p;
    return leaves;
  };
  rec(rec, cg);
  return g;
}

ExplicitGraph mark_precovered_in_edges(const ExplicitGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> in_edges;
  for (auto [u, v] : g.edges())
    if (g.vertex(u).polarity == Polarity::In && g.vertex(v).polarity == Polarity::In) in_edges.emplace_back(u, v);
  return g.with_precovered(in_edges);
}

namespace {

using Uncovered = std::vector<IndexSet>;

Uncovered uncovered_edges(const ExplicitGraph& g) {
  Uncovered u;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto row = g.neighbours(v);
    for (auto w : members(row))
      if (g.is_precovered(v, w)) row.reset(w);
    u.push_back(row);
  }
  return u;
}

void cover_clique(Uncovered& uncovered, const IndexSet& clique) {
  for (auto v : members(clique)) uncovered[v] -= clique;
}

// Grows `clique` within `candidates` until maximal, picking the candidate
// with most uncovered edges into the clique (smallest index on ties).
void grow(const ExplicitGraph& g, const Uncovered& uncovered, IndexSet& clique, IndexSet candidates, bool by_gain) {
  while (candidates.any()) {
    std::size_t best = candidates.find_first();
    if (by_gain) {
      std::size_t best_gain = (uncovered[best] & clique).count();
      for (auto w = candidates.find_next(best); w != IndexSet::npos; w = candidates.find_next(w)) {
        auto gain = (uncovered[w] & clique).count();
        if (gain > best_gain) {
          best = w;
          best_gain = gain;
        }
      }
    }
    clique.set(best);
    candidates &= g.neighbours(best);
  }
}

VertexSet to_vertices(const ExplicitGraph& g, const IndexSet& clique) {
  VertexSet out;
  for (auto v : members(clique)) out.push_back(g.vertex(v));
  return out;
}

CliqueCover finish(const ExplicitGraph& g, std::vector<IndexSet> cliques, const Uncovered& uncovered, bool by_gain) {
  IndexSet covered(g.vertex_count());
  for (const auto& c : cliques) covered |= c;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (covered.test(v)) continue;
    IndexSet clique(g.vertex_count());
    clique.set(v);
    grow(g, uncovered, clique, g.neighbours(v), by_gain);
    covered |= clique;
    cliques.push_back(clique);
  }
  CliqueCover cover;
  for (const auto& c : cliques) cover.cliques.push_back(to_vertices(g, c));
  std::sort(cover.cliques.begin(), cover.cliques.end());
  cover.cliques.erase(std::unique(cover.cliques.begin(), cover.cliques.end()), cover.cliques.end());
  return cover;
}

}  // namespace

CliqueCover ecc_trivial(const ExplicitGraph& g) {
  auto uncovered = uncovered_edges(g);
  std::vector<IndexSet> cliques;
  for (auto [u, v] : g.edges()) {
    if (g.is_precovered(u, v)) continue;
    IndexSet clique(g.vertex_count());
    clique.set(u);
    clique.set(v);
    grow(g, uncovered, clique, g.neighbours(u) & g.neighbours(v), false);
    cliques.push_back(clique);
  }
  return finish(g, std::move(cliques), uncovered, false);
}

CliqueCover ecc_greedy(const ExplicitGraph& g) {
  auto uncovered = uncovered_edges(g);
  std::vector<IndexSet> cliques;
  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> seed;
    std::size_t best = 0;
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
      for (auto v = uncovered[u].find_next(u); v != IndexSet::npos; v = uncovered[u].find_next(v)) {
        auto score = uncovered[u].count() + uncovered[v].count();
        if (!seed || score > best) {
          seed = {u, v};
          best = score;
        }
      }
    if (!seed) break;
    IndexSet clique(g.vertex_count());
    clique.set(seed->first);
    clique.set(seed->second);
    grow(g, uncovered, clique, g.neighbours(seed->first) & g.neighbours(seed->second), true);
    cover_clique(uncovered, clique);
    cliques.push_back(clique);
  }
  return finish(g, std::move(cliques), uncovered, true);
}

namespace {

class SetCover {
 public:
  SetCover(std::vector<IndexSet> sets, std::size_t universe, std::uint64_t& nodes, std::uint64_t budget)
      : sets_(std::move(sets)), universe_(universe), nodes_(nodes), budget_(budget) {
    covering_.assign(universe, {});
    for (std::size_t s = 0; s < sets_.size(); ++s)
      for (auto e : members(sets_[s])) covering_[e].push_back(s);
  }

  std::vector<std::size_t> solve() {
    best_ = greedy();
    std::vector<std::size_t> chosen;
    search(IndexSet(universe_), chosen);
    return best_;
  }

 private:
  std::vector<std::size_t> greedy() const {
    IndexSet covered(universe_);
    std::vector<std::size_t> out;
    while (covered.count() < universe_) {
      std::size_t pick = 0, gain = 0;
      for (std::size_t s = 0; s < sets_.size(); ++s) {
        auto g = (sets_[s] - covered).count();
        if (g > gain) {
          gain = g;
          pick = s;
        }
      }
      covered |= sets_[pick];
      out.push_back(pick);
    }
    return out;
  }

  void search(const IndexSet& covered, std::vector<std::size_t>& chosen) {
    if (++nodes_ > budget_)
      throw Error(ErrorKind::BudgetExceeded, "exact cover search exceeded " + std::to_string(budget_) + " nodes");
    const auto remaining = universe_ - covered.count();
    if (remaining == 0) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    std::size_t widest = 0;
    for (const auto& s : sets_) widest = std::max(widest, (s - covered).count());
    if (chosen.size() + (remaining + widest - 1) / widest >= best_.size()) return;

    std::size_t element = 0, fewest = SIZE_MAX;
    for (std::size_t e = 0; e < universe_; ++e) {
      if (covered.test(e)) continue;
      if (covering_[e].size() < fewest) {
        fewest = covering_[e].size();
        element = e;
      }
    }
    auto options = covering_[element];
    std::stable_sort(options.begin(), options.end(), [&](std::size_t a, std::size_t b) {
      return (sets_[a] - covered).count() > (sets_[b] - covered).count();
    });
    for (auto s : options) {
      chosen.push_back(s);
      search(covered | sets_[s], chosen);
      chosen.pop_back();
    }
  }

  std::vector<IndexSet> sets_;
  std::size_t universe_;
  std::vector<std::vector<std::size_t>> covering_;
  std::vector<std::size_t> best_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
};

}  // namespace

CliqueCover ecc_exact(const ExplicitGraph& g, std::uint64_t budget) {
  const auto n = g.vertex_count();
  auto uncovered = uncovered_edges(g);

  // Connected components of the full graph.
  std::vector<std::size_t> component(n, SIZE_MAX);
  std::vector<IndexSet> components;
  for (std::size_t s = 0; s < n; ++s) {
    if (component[s] != SIZE_MAX) continue;
    IndexSet comp(n);
    std::vector<std::size_t> stack{s};
    component[s] = components.size();
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      comp.set(v);
      for (auto w : members(g.neighbours(v)))
        if (component[w] == SIZE_MAX) {
          component[w] = components.size();
          stack.push_back(w);
        }
    }
    components.push_back(comp);
  }

  std::uint64_t nodes = 0;
  std::vector<IndexSet> chosen;
  for (const auto& comp : components) {
    // Elements: uncovered edges inside the component, and vertices without any
    // uncovered edge (they still need some clique).
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_id;
    std::map<std::size_t, std::size_t> vertex_id;
    std::size_t universe = 0;
    for (auto u : members(comp)) {
      for (auto v = uncovered[u].find_next(u); v != IndexSet::npos; v = uncovered[u].find_next(v))
        edge_id[{u, v}] = universe++;
      if (uncovered[u].none()) vertex_id[u] = universe++;
    }

    std::vector<IndexSet> cliques;
    detail::for_each_maximal_clique(g.adjacency(), comp, [&](const IndexSet& c) {
      if (cliques.size() >= budget)
        throw Error(ErrorKind::BudgetExceeded, "component has more than " + std::to_string(budget) + " maximal cliques");
      cliques.push_back(c);
      return true;
    });
    std::sort(cliques.begin(), cliques.end(), [](const IndexSet& a, const IndexSet& b) { return members(a) < members(b); });

    std::vector<IndexSet> covers;
    for (const auto& c : cliques) {
      IndexSet elems(universe);
      for (auto u : members(c)) {
        if (auto it = vertex_id.find(u); it != vertex_id.end()) elems.set(it->second);
        for (auto v : members(uncovered[u] & c))
          if (u < v) elems.set(edge_id.at({u, v}));
      }
      covers.push_back(elems);
    }
    // Drop cliques whose elements are a subset of another clique's.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < covers.size(); ++i) {
      bool dominated = covers[i].none();
      for (std::size_t j = 0; j < covers.size() && !dominated; ++j) {
        if (i == j || !covers[i].is_subset_of(covers[j])) continue;
        dominated = covers[i] != covers[j] || j < i;
      }
      if (!dominated) keep.push_back(i);
    }
    std::vector<IndexSet> sets;
    for (auto i : keep) sets.push_back(covers[i]);
    SetCover solver(std::move(sets), universe, nodes, budget);
    for (auto s : solver.solve()) chosen.push_back(cliques[keep[s]]);
  }

  CliqueCover cover;
  for (const auto& c : chosen) cover.cliques.push_back(to_vertices(g, c));
  std::sort(cover.cliques.begin(), cover.cliques.end());
  return cover;
}

std::vector<std::string> validate_cover(const ExplicitGraph& g, const CliqueCover& cover) {
  std::vector<std::string> problems;
  const auto n = g.vertex_count();
  IndexSet seen(n);
  std::vector<IndexSet> covered(n, IndexSet(n));
  for (const auto& clique : cover.cliques) {
    if (clique.empty()) {
      problems.push_back("empty clique");
      continue;
    }
    IndexSet c(n);
    bool known = true;
    for (const auto& v : clique) {
      if (auto i = g.find(v)) {
        c.set(*i);
      } else {
        problems.push_back("unknown vertex " + v.name());
        known = false;
      }
    }
    if (!known) continue;
    for (auto u : members(c)) {
      auto others = c;
      others.reset(u);
      if (!others.is_subset_of(g.neighbours(u))) {
        problems.push_back("clique containing " + g.vertex(u).name() + " is not complete");
        break;
      }
    }
    for (auto u : members(c)) covered[u] |= c;
    seen |= c;
  }
  for (auto [u, v] : g.edges())
    if (!g.is_precovered(u, v) && !covered[u].test(v))
      problems.push_back("edge " + g.vertex(u).name() + " " + g.vertex(v).name() + " is not covered");
  for (std::size_t v = 0; v < n; ++v)
    if (!seen.test(v)) problems.push_back("vertex " + g.vertex(v).name() + " is in no clique");
  return problems;
}

std::vector<TaggedPlace> places_from_cover(const CliqueCover& cover) {
  std::vector<TaggedPlace> out;
  for (const auto& c : cover.cliques) out.push_back(place_of_clique(c));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string write_graph(const ExplicitGraph& g) {
  std::string s;
  for (const auto& v : g.vertices()) s += "v " + v.action + (v.polarity == Polarity::In ? " in\n" : " out\n");
  for (auto [u, v] : g.edges()) {
    s += "e " + g.vertex(u).name() + " " + g.vertex(v).name();
    if (g.is_precovered(u, v)) s += " pre";
    s += '\n';
  }
  return s;
}

ExplicitGraph parse_graph(std::string_view text) {
  VertexSet vertices;
  std::vector<std::pair<TaggedVertex, TaggedVertex>> edges, pre;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    auto line_offset = offset;
    offset += line.size() + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::vector<std::string> w;
    for (std::string x; words >> x;) w.push_back(x);
    if (w.empty()) continue;
    try {
      if (w[0] == "v" && w.size() == 3 && (w[2] == "in" || w[2] == "out")) {
        vertices.push_back({w[1], w[2] == "in" ? Polarity::In : Polarity::Out});
      } else if (w[0] == "e" && (w.size() == 3 || (w.size() == 4 && w[3] == "pre"))) {
        auto e = std::make_pair(TaggedVertex::parse(w[1]), TaggedVertex::parse(w[2]));
        edges.push_back(e);
        if (w.size() == 4) pre.push_back(e);
      } else {
        throw ParseError(line_offset, "expected 'v NAME in|out' or 'e U V [pre]'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line_offset, e.what());
    }
  }
  return ExplicitGraph(std::move(vertices), edges, pre);
}

std::string write_graph_dot(const ExplicitGraph& g) {
  std::ostringstream s;
  s << "graph cg {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) s << "  v" << v << " [label=\"" << g.vertex(v).name() << "\"];\n";
  for (auto [u, v] : g.edges()) {
    s << "  v" << u << " -- v" << v;
    if (g.is_precovered(u, v)) s << " [style=dotted]";
    s << ";\n";
  }
  s << "}\n";
  return s.str();
}

std::string write_clique_cover(const CliqueCover& cover) {
  std::string s;
  for (const auto& c : cover.cliques) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += c[i].name();
    }
    s += '\n';
  }
  return s;
}

std::string write_graph_json(const ExplicitGraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : g.vertices()) j["vertices"].push_back(v.name());
  j["edges"] = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges())
    j["edges"].push_back({{"u", g.vertex(u).name()}, {"v", g.vertex(v).name()}, {"precovered", g.is_precovered(u, v)}});
  return j.dump(2) + "\n";
}

std::string write_clique_cover_json(const CliqueCover& cover) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& c : cover.cliques) {
    auto names = nlohmann::ordered_json::array();
    for (const auto& v : c) names.push_back(v.name());
    j.push_back(names);
  }
  return nlohmann::ordered_json{{"cliques", j}}.dump(2) + "\n";
}

}  // namespace boxnet
