// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fail.

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <boxnet/dplace.hpp>
#include <boxnet/error.hpp>
#include <boxnet/reduce.hpp>
#include <boxnet/translate.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace boxnet;
using fixtures::pick;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

MarkedNet kept_net(const std::vector<TaggedPlace>& kept) {
  std::vector<PlaceDecl> decls;
  for (const auto& p : kept) decls.push_back({p, p.inputs().empty()});
  return MarkedNet(decls);
}

std::set<oracle::Word> difference(const std::set<oracle::Word>& a, const std::set<oracle::Word>& b) {
  std::set<oracle::Word> out;
  for (const auto& w : a)
    if (!b.count(w)) out.insert(w);
  return out;
}

void seq_of_choice(Outcome& o) {
  auto start = std::chrono::steady_clock::now();
  auto e = parse_box(fixtures::kSeqOfChoice);
  auto standard = box_net(e);
  o.note << "standard places " << standard.place_count();
  o.require(standard.place_count() == 18, "standard net has 18 places");
  for (auto solver : {Solver::Exact, Solver::Greedy}) {
    ReduceOptions opts;
    opts.solver = solver;
    auto out = reduce(e, opts);
    auto iso = verify(e, out);
    o.note << ", " << to_string(solver) << " " << out.net.place_count();
    o.require(out.net.place_count() <= (solver == Solver::Exact ? 6u : 8u), std::string(to_string(solver)) + " size");
    o.require(iso.isomorphic, std::string(to_string(solver)) + " isomorphic");
  }
  auto t = seconds_since(start);
  o.note << ", " << t << " s";
  o.require(t < 1.0, "runtime");
}

void bursts(Outcome& o) {
  auto start = std::chrono::steady_clock::now();
  ReduceOptions exact;
  exact.solver = Solver::Exact;
  auto three = reduce(burst_family(3), exact);
  auto std3 = box_net(burst_family(3));
  o.note << "n=3 entry " << std3.initial().count() << " -> " << three.net.initial().count();
  o.require(std3.initial().count() == 8 && three.net.initial().count() == 4, "n=3 entry places 8 -> 4");
  o.require(verify(burst_family(3), three).isomorphic, "n=3 isomorphic");

  auto std10 = box_net(burst_family(10));
  auto witness = net_from_cover(burst_witness_cover(10), true);
  auto iso = rg_isomorphic(std10, witness);
  o.note << ", n=10 entry " << std10.initial().count() << " -> " << witness.initial().count() << ", rg " << iso.states;
  o.require(std10.initial().count() == 1024 && witness.initial().count() == 6, "n=10 entry places 1024 -> 6");
  o.require(iso.isomorphic && iso.states == 22, "n=10 isomorphic with 22 states");
  auto t = seconds_since(start);
  o.note << ", " << t << " s";
  o.require(t < 5.0, "runtime");
}

void iteration(Outcome& o) {
  auto start = std::chrono::steady_clock::now();
  auto e = parse_box(fixtures::kIteration);
  auto cg = gamma(e).connection_graph();
  auto cliques = max_cliques(cg).size();
  ReduceOptions opts;
  opts.solver = Solver::Exact;
  auto out = reduce(e, opts);
  // Some minimum cover uses only maximal cliques, so search subsets of those.
  auto g = mark_precovered_in_edges(materialize(cg));
  std::set<oracle::Edge> all;
  for (auto ed : g.edges()) all.insert(ed);
  auto maximal = oracle::subset_max_cliques(g.vertex_count(), all);
  auto covers = [&](unsigned pick) {
    for (auto [u, v] : all) {
      if (g.is_precovered(u, v)) continue;
      bool hit = false;
      for (std::size_t i = 0; i < maximal.size() && !hit; ++i)
        hit = (pick >> i & 1) && maximal[i].count(u) && maximal[i].count(v);
      if (!hit) return false;
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      bool hit = false;
      for (std::size_t i = 0; i < maximal.size() && !hit; ++i) hit = (pick >> i & 1) && maximal[i].count(v);
      if (!hit) return false;
    }
    return true;
  };
  std::size_t minimum = maximal.size() + 1;
  for (unsigned pick = 0; pick < (1u << maximal.size()); ++pick)
    if (static_cast<std::size_t>(__builtin_popcount(pick)) < minimum && covers(pick))
      minimum = static_cast<std::size_t>(__builtin_popcount(pick));
  o.note << "max-cliques " << cliques << ", exact cover " << out.cover.size() << " (subset search " << minimum
         << "), places " << out.net.place_count();
  o.require(cliques == 14, "14 max-cliques");
  o.require(out.cover.size() == 10 && minimum == 10, "minimum cover of 10");
  o.require(out.net.place_count() == 8, "8 places after sink removal");
  o.require(verify(e, out).isomorphic, "isomorphic");
  auto t = seconds_since(start);
  o.note << ", " << t << " s";
  o.require(t < 10.0, "runtime");
}

void negative_controls(Outcome& o) {
  auto n1 = fixtures::n1_places();
  auto r1 = check_reduction(fixtures::n1(), std::vector<std::vector<TaggedPlace>>{pick(n1, {3, 4, 5, 6})},
                            pick(n1, {1, 2, 3, 6, 7, 8}));
  bool bd = !r1.offending.empty() && r1.offending.front().detail.find("(b,d)") != std::string::npos;
  o.note << "N1: " << (r1.offending.empty() ? "no offence" : r1.offending.front().detail);
  o.require(!r1.valid() && !r1.enables_preserved && bd, "N1 enables (b,d)");
  auto d1 = difference(oracle::toy_sequences(oracle::toy(kept_net(pick(n1, {1, 2, 3, 6, 7, 8}))), 4),
                       oracle::toy_sequences(oracle::toy(fixtures::n1()), 4));
  o.require(d1.count({"a", "d", "b", "c"}) == 1, "N1 witness adbc");

  auto n2 = fixtures::n2_places();
  auto r2 = check_reduction(fixtures::n2(),
                            std::vector<std::vector<TaggedPlace>>{pick(n2, {1, 2, 3, 4}), pick(n2, {5, 6, 7, 8})},
                            pick(n2, {1, 4, 5, 6, 7, 8}));
  bool ad = !r2.offending.empty() && r2.offending.front().detail.find("(a,d)") != std::string::npos;
  o.note << "; N2: " << (r2.offending.empty() ? "no offence" : r2.offending.front().detail);
  o.require(!r2.valid() && !r2.disables_preserved && ad, "N2 disables (a,d)");
  auto d2 = difference(oracle::toy_sequences(oracle::toy(kept_net(pick(n2, {1, 4, 5, 6, 7, 8}))), 4),
                       oracle::toy_sequences(oracle::toy(fixtures::n2()), 4));
  o.require(d2.count({"a", "d"}) == 1, "N2 witness ad");
}

std::vector<BoxExpr> sweep_exprs() {
  std::mt19937 rng(20261016);
  std::vector<BoxExpr> out;
  for (int i = 0; i < 200; ++i) out.push_back(fixtures::random_expr(rng, 7));
  return out;
}

void soundness(Outcome& o) {
  auto start = std::chrono::steady_clock::now();
  int failures = 0;
  std::string first;
  auto fail = [&](const BoxExpr& e, const std::string& why) {
    if (failures++ == 0) first = render(e) + ": " + why;
  };
  for (const auto& e : sweep_exprs()) {
    auto net = box_net(e);
    if (!is_safe(net)) fail(e, "unsafe");
    IndexSet seen = net.no_places();
    bool partition = true;
    for (const auto& m : dp_cover(e).flatten()) {
      auto q = net.places_of(m);
      if (q.intersects(seen) || !is_distributed_place_static(net, q)) partition = false;
      seen |= q;
    }
    if (!partition || seen != net.all_places()) fail(e, "DP cover");
    std::vector<TaggedPlace> from_cliques;
    for (const auto& c : max_cliques(gamma(e).connection_graph())) from_cliques.push_back(place_of_clique(c));
    std::sort(from_cliques.begin(), from_cliques.end());
    if (from_cliques != net.places()) fail(e, "max-clique places");
    for (auto solver : {Solver::Trivial, Solver::Greedy})
      for (bool opt1 : {false, true})
        for (bool opt2 : {false, true}) {
          ReduceOptions opts;
          opts.solver = solver;
          opts.opt1 = opt1;
          opts.opt2 = opt2;
          if (!verify(e, reduce(e, opts)).isomorphic) fail(e, "not isomorphic");
        }
  }
  auto t = seconds_since(start);
  o.note << "200 expressions, " << failures << " failures" << (first.empty() ? "" : " (" + first + ")") << ", " << t
         << " s";
  o.require(failures == 0, "zero failures");
  o.require(t < 60.0, "runtime");
}

void oracle_equivalence(Outcome& o) {
  int checked = 0, disagreements = 0;
  auto compare = [&](const MarkedNet& net, unsigned mask) {
    IndexSet q = net.no_places();
    for (std::size_t p = 0; p < net.place_count(); ++p)
      if (mask >> p & 1) q.set(p);
    ++checked;
    if (bool(is_distributed_place_static(net, q)) != bool(is_distributed_place_dynamic(net, q))) ++disagreements;
  };
  auto n0 = fixtures::n0();
  for (unsigned mask = 1; mask < (1u << n0.place_count()); ++mask)
    if (__builtin_popcount(mask) <= 4) compare(n0, mask);
  std::mt19937 rng(6);
  for (int i = 0; i < 50; ++i) {
    auto net = fixtures::random_net(rng, 6, 4);
    for (unsigned mask = 1; mask < (1u << net.place_count()); ++mask) compare(net, mask);
  }
  o.note << checked << " place sets, " << disagreements << " disagreements";
  o.require(disagreements == 0, "zero disagreements");
}

void projection(Outcome& o) {
  auto net = fixtures::n0();
  auto n0 = fixtures::n0_places();
  std::vector<std::vector<TaggedPlace>> cover{pick(n0, {1, 2}), pick(n0, {3, 4, 5, 6, 7, 8, 9, 10})};
  auto runs = oracle::toy_sequences(oracle::toy(net), 8);
  int failures = 0;
  for (const auto& member : cover) {
    DistPlace q(net, member);
    auto adj = oracle::roles(member).adj;
    bool marked = member.front().inputs().empty();
    for (const auto& run : runs)
      if (!projection_in_class(q, run) || !oracle::projection_ok(member, marked, oracle::project(run, adj)))
        ++failures;
  }
  o.note << runs.size() << " runs x " << cover.size() << " members, " << failures << " failures";
  o.require(failures == 0, "zero failures");
}

void quadratic_bound(Outcome& o) {
  std::vector<BoxExpr> exprs;
  for (const auto& text : fixtures::corpus()) exprs.push_back(parse_box(text));
  for (auto& e : sweep_exprs()) exprs.push_back(e);
  int violations = 0;
  std::size_t worst = 0;
  for (const auto& e : exprs) {
    auto n = e.actions().size();
    auto places = reduce(e).net.place_count();
    if (places > n * (2 * n - 1)) ++violations;
    worst = std::max(worst, places);
  }
  o.note << exprs.size() << " expressions, " << violations << " over the bound, largest reduced net " << worst;
  o.require(violations == 0, "bound holds");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"sequence-of-choice reproduction", seq_of_choice},
      {"burst family", bursts},
      {"iteration example", iteration},
      {"negative controls", negative_controls},
      {"soundness sweep", soundness},
      {"static/dynamic oracle equivalence", oracle_equivalence},
      {"projection property", projection},
      {"quadratic bound", quadratic_bound},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << " [exception: " << e.what() << "]";
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.note.str()
              << std::endl;
  }
  return all ? 0 : 1;
}
