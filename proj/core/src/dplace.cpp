#include "boxnet/dplace.hpp"

#include "boxnet/error.hpp"
#include "cliques.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace boxnet {

namespace {

void require_places(const MarkedNet& net, const IndexSet& places) {
  if (places.size() != net.place_count()) throw Error(ErrorKind::InvalidArgument, "place set has the wrong universe");
  if (places.none()) throw Error(ErrorKind::EmptySet, "empty place set");
}

std::vector<std::size_t> indices_of(const MarkedNet& net, const FiringSequence& sequence) {
  std::vector<std::size_t> out;
  out.reserve(sequence.size());
  for (const auto& name : sequence) out.push_back(net.transition_index(name));
  return out;
}

std::string pair_name(const MarkedNet& net, const TransitionPair& pair) {
  return "(" + net.transition(pair.first) + "," + net.transition(pair.second) + ")";
}

// enables/disables that also accept an empty Q.
std::set<TransitionPair> enables_or_empty(const MarkedNet& net, const IndexSet& places) {
  return places.none() ? std::set<TransitionPair>{} : enables_set(net, places);
}

std::set<TransitionPair> disables_or_empty(const MarkedNet& net, const IndexSet& places) {
  return places.none() ? std::set<TransitionPair>{} : disables_set(net, places);
}

std::optional<std::string> check_roles_and_enables(const MarkedNet& net, const IndexSet& places,
                                                   const RoleSets& roles) {
  auto adj = adjacent(net, places);
  auto stray = adj - (roles.ins | roles.rem | roles.read);
  if (stray.any())
    return "transition " + net.transition(stray.find_first()) + " is adjacent but neither ins, rem nor read";
  for (auto t : members(roles.ins)) {
    auto produced = eff_post(net, t) & places;
    for (auto u : members(roles.rem))
      if (!produced.intersects(net.pre(u))) return pair_name(net, {t, u}) + " is not in enables";
  }
  return std::nullopt;
}

// Maximal subsets of `side` whose members have pairwise disjoint `touch(t) ∩ Q`
// must jointly touch all of Q.
std::optional<std::string> check_maximal_subsets(const MarkedNet& net, const IndexSet& places,
                                                 const IndexSet& side,
                                                 const std::function<IndexSet(std::size_t)>& touch,
                                                 const char* what, std::size_t budget) {
  if (side.none()) return std::nullopt;
  const auto nt = net.transition_count();
  std::vector<IndexSet> touched(nt, IndexSet(net.place_count()));
  for (auto t : members(side)) touched[t] = touch(t) & places;
  std::vector<IndexSet> compatible(nt, IndexSet(nt));
  for (auto t : members(side))
    for (auto u : members(side))
      if (t != u && !touched[t].intersects(touched[u])) compatible[t].set(u);

  std::size_t seen = 0;
  std::optional<std::string> failure;
  detail::for_each_maximal_clique(compatible, side, [&](const IndexSet& subset) {
    if (++seen > budget)
      throw Error(ErrorKind::EnumerationBudgetExceeded,
                  "more than " + std::to_string(budget) + " maximal " + what + " subsets");
    IndexSet covered(net.place_count());
    for (auto t : members(subset)) covered |= touched[t];
    if (!places.is_subset_of(covered)) {
      failure = std::string("maximal ") + what + " subset " + net.format_transitions(subset) + " does not cover Q";
      return false;
    }
    return true;
  });
  return failure;
}

// Explores the sequence automaton whose state is the part of Q filled (or
// emptied) so far, and reports a state from which no completion exists.
std::optional<std::string> check_completions(const MarkedNet& net, const IndexSet& places, const IndexSet& first,
                                             const IndexSet& alphabet,
                                             const std::function<std::optional<IndexSet>(const IndexSet&, std::size_t)>& step,
                                             const char* what, std::size_t budget) {
  std::map<IndexSet, std::size_t> index;
  std::vector<IndexSet> states;
  std::vector<std::vector<std::size_t>> preds;
  std::deque<std::size_t> queue;
  auto add = [&](IndexSet s, std::optional<std::size_t> from) {
    auto [it, inserted] = index.emplace(s, states.size());
    if (inserted) {
      if (states.size() >= budget)
        throw Error(ErrorKind::EnumerationBudgetExceeded,
                    std::string("more than ") + std::to_string(budget) + " " + what + " states");
      states.push_back(std::move(s));
      preds.emplace_back();
      queue.push_back(it->second);
    }
    if (from) preds[it->second].push_back(*from);
  };
  for (auto t : members(first)) add(*step(IndexSet(net.place_count()), t), std::nullopt);
  while (!queue.empty()) {
    auto n = queue.front();
    queue.pop_front();
    for (auto t : members(alphabet))
      if (auto next = step(states[n], t)) add(std::move(*next), n);
  }
  std::vector<bool> good(states.size(), false);
  for (std::size_t n = 0; n < states.size(); ++n)
    if (states[n] == places) {
      good[n] = true;
      queue.push_back(n);
    }
  while (!queue.empty()) {
    auto n = queue.front();
    queue.pop_front();
    for (auto p : preds[n])
      if (!good[p]) {
        good[p] = true;
        queue.push_back(p);
      }
  }
  for (std::size_t n = 0; n < states.size(); ++n)
    if (!good[n])
      return std::string("an ") + what + " reaching " + net.format_places(states[n]) + " cannot be completed";
  return std::nullopt;
}

}  // namespace

bool classify_sequence(const MarkedNet& net, const IndexSet& places, std::span<const std::size_t> sequence,
                       SeqClass kind) {
  require_places(net, places);
  if (sequence.empty()) throw Error(ErrorKind::EmptySet, "empty sequence");
  auto roles = role_sets(net, places);
  const bool in = kind == SeqClass::InSeq || kind == SeqClass::CompleteInSeq;
  const auto& opener = in ? roles.ins : roles.rem;
  const auto alphabet = opener | roles.read;
  if (!opener.test(sequence[0])) return false;
  IndexSet acc = net.no_places();  // post of the prefix (in) or effective pre (out)
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    auto t = sequence[i];
    if (t >= net.transition_count()) throw Error(ErrorKind::UnknownElement, "unknown transition index");
    if (!alphabet.test(t)) return false;
    auto q_pre = net.pre(t) & places;
    if (i > 0) {
      if (in) {
        if (!q_pre.is_subset_of(acc)) return false;
        if ((eff_post(net, t) & places).intersects(acc)) return false;
      } else if (q_pre.intersects(acc)) {
        return false;
      }
    }
    acc |= in ? net.post(t) : eff_pre(net, t);
  }
  if (kind == SeqClass::CompleteInSeq || kind == SeqClass::CompleteOutSeq) return places.is_subset_of(acc);
  return true;
}

bool classify_sequence(const MarkedNet& net, const IndexSet& places, const FiringSequence& sequence,
                       SeqClass kind) {
  auto idx = indices_of(net, sequence);
  return classify_sequence(net, places, idx, kind);
}

DpVerdict is_distributed_place_static(const MarkedNet& net, const IndexSet& places, std::size_t budget) {
  require_places(net, places);
  auto roles = role_sets(net, places);
  if (auto r = check_roles_and_enables(net, places, roles)) return {false, *r};
  if (auto r = check_maximal_subsets(net, places, roles.ins, [&](std::size_t t) { return net.post(t); }, "ins",
                                     budget))
    return {false, *r};
  if (auto r = check_maximal_subsets(net, places, roles.rem, [&](std::size_t t) { return net.pre(t); }, "rem",
                                     budget))
    return {false, *r};
  return {true, {}};
}

DpVerdict is_distributed_place_dynamic(const MarkedNet& net, const IndexSet& places, std::size_t budget) {
  require_places(net, places);
  auto roles = role_sets(net, places);
  if (auto r = check_roles_and_enables(net, places, roles)) return {false, *r};

  auto in_step = [&](const IndexSet& filled, std::size_t t) -> std::optional<IndexSet> {
    if (filled.any()) {
      if (!(net.pre(t) & places).is_subset_of(filled)) return std::nullopt;
      if ((eff_post(net, t) & places).intersects(filled)) return std::nullopt;
    }
    return filled | (net.post(t) & places);
  };
  auto out_step = [&](const IndexSet& emptied, std::size_t t) -> std::optional<IndexSet> {
    if (emptied.any() && (net.pre(t) & places).intersects(emptied)) return std::nullopt;
    return emptied | (eff_pre(net, t) & places);
  };
  if (auto r = check_completions(net, places, roles.ins, roles.ins | roles.read, in_step, "in-sequence", budget))
    return {false, *r};
  if (auto r = check_completions(net, places, roles.rem, roles.rem | roles.read, out_step, "out-sequence", budget))
    return {false, *r};
  return {true, {}};
}

bool is_pure(const MarkedNet& net, const IndexSet& places) {
  require_places(net, places);
  return !preset_of(net, places).intersects(postset_of(net, places));
}

DistPlace::DistPlace(const MarkedNet& host, IndexSet members) : host_(&host), members_(std::move(members)) {
  require_places(host, members_);
  auto verdict = is_distributed_place_static(host, members_);
  if (!verdict)
    throw Error(ErrorKind::NotDistributed,
                host.format_places(members_) + " is not a distributed place: " + verdict.reason);
}

DistPlace::DistPlace(const MarkedNet& host, std::span<const TaggedPlace> members)
    : DistPlace(host, host.places_of(members)) {}

std::vector<TaggedPlace> DistPlace::places() const {
  std::vector<TaggedPlace> out;
  for (auto p : boxnet::members(members_)) out.push_back(host_->place(p));
  return out;
}

DistPlace dp_union(const DistPlace& first, const DistPlace& second) {
  if (&first.host() != &second.host()) throw Error(ErrorKind::InvalidArgument, "distributed places of different nets");
  const auto& net = first.host();
  if (adjacent(net, first.members()).intersects(adjacent(net, second.members())))
    throw Error(ErrorKind::NotSeparated, "distributed places share adjacent transitions");
  auto r1 = first.roles();
  auto r2 = second.roles();
  const bool no_ins = r1.ins.none() && r2.ins.none();
  const bool all_ins = r1.ins.any() && r2.ins.any();
  const bool no_rem = r1.rem.none() && r2.rem.none();
  const bool all_rem = r1.rem.any() && r2.rem.any();
  if (!((no_ins && no_rem) || (no_ins && all_rem) || (all_ins && no_rem)))
    throw Error(ErrorKind::UnionNotDistributed, "ins/rem emptiness pattern does not admit a union");
  try {
    return DistPlace(net, first.members() | second.members());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotDistributed) throw Error(ErrorKind::UnionNotDistributed, e.what());
    throw;
  }
}

TaggedPlace merge_tags(const TaggedPlace& first, const TaggedPlace& second) {
  auto in = first.inputs();
  in.insert(in.end(), second.inputs().begin(), second.inputs().end());
  auto out = first.outputs();
  out.insert(out.end(), second.outputs().begin(), second.outputs().end());
  return TaggedPlace(std::move(in), std::move(out));
}

std::vector<TaggedPlace> cross_product(std::span<const TaggedPlace> first, std::span<const TaggedPlace> second) {
  if (first.empty() || second.empty()) throw Error(ErrorKind::EmptySet, "cross-product of an empty set");
  std::vector<TaggedPlace> out;
  out.reserve(first.size() * second.size());
  for (const auto& p : first)
    for (const auto& q : second) out.push_back(merge_tags(p, q));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string_view to_string(ProjectionRow row) {
  switch (row) {
    case ProjectionRow::AlternateFromEmpty: return "pref((complinseq coutseq)+)";
    case ProjectionRow::AlternateFromFull: return "pref(read* (coutseq complinseq)+)";
    case ProjectionRow::FillOnce: return "pref(complinseq)";
    case ProjectionRow::DrainOnce: return "pref(read* coutseq)";
    case ProjectionRow::Idle: return "{lambda}";
    case ProjectionRow::ReadOnly: return "read*";
  }
  return "?";
}

ProjectionRow projection_row(const DistPlace& place) {
  const auto& net = place.host();
  const auto& q = place.members();
  const auto marked = q & net.initial();
  const bool empty = marked.none();
  const bool full = marked == q;
  if (!empty && !full) throw Error(ErrorKind::InitialMarkingStraddle, net.format_places(q) + " is partly marked");
  auto roles = place.roles();
  const bool ins = roles.ins.any();
  const bool rem = roles.rem.any();
  if (ins && rem) return empty ? ProjectionRow::AlternateFromEmpty : ProjectionRow::AlternateFromFull;
  if (empty) return ins ? ProjectionRow::FillOnce : ProjectionRow::Idle;
  return rem ? ProjectionRow::DrainOnce : ProjectionRow::ReadOnly;
}

bool projection_in_class(const DistPlace& place, std::span<const std::size_t> sequence) {
  const auto& net = place.host();
  const auto& q = place.members();
  const auto row = projection_row(place);
  const auto roles = place.roles();
  const auto adj = adjacent(net, q);

  enum class Phase { Reads, In, Out };
  Phase phase = Phase::In;
  if (row == ProjectionRow::AlternateFromFull || row == ProjectionRow::DrainOnce ||
      row == ProjectionRow::ReadOnly)
    phase = Phase::Reads;
  const bool cyclic = row == ProjectionRow::AlternateFromEmpty || row == ProjectionRow::AlternateFromFull;

  IndexSet acc = net.no_places();  // filled (In) or emptied (Out) part of Q
  bool started = false;
  auto in_step = [&](std::size_t t) {
    if (!started) {
      if (!roles.ins.test(t)) return false;
      acc = net.post(t) & q;
      started = true;
      return true;
    }
    if (!(roles.ins | roles.read).test(t)) return false;
    if (!(net.pre(t) & q).is_subset_of(acc)) return false;
    if ((eff_post(net, t) & q).intersects(acc)) return false;
    acc |= net.post(t) & q;
    return true;
  };
  auto out_step = [&](std::size_t t) {
    if (!started) {
      if (!roles.rem.test(t)) return false;
      acc = eff_pre(net, t) & q;
      started = true;
      return true;
    }
    if (!(roles.rem | roles.read).test(t)) return false;
    if ((net.pre(t) & q).intersects(acc)) return false;
    acc |= eff_pre(net, t) & q;
    return true;
  };

  for (auto t : sequence) {
    if (t >= net.transition_count()) throw Error(ErrorKind::UnknownElement, "unknown transition index");
    if (!adj.test(t)) continue;
    switch (row) {
      case ProjectionRow::Idle:
        return false;
      case ProjectionRow::ReadOnly:
        if (!roles.read.test(t)) return false;
        continue;
      default:
        break;
    }
    if (phase == Phase::Reads) {
      if (roles.read.test(t)) continue;
      phase = Phase::Out;
      started = false;
      if (!out_step(t)) return false;
      continue;
    }
    if (phase == Phase::In) {
      if (in_step(t)) continue;
      if (cyclic && started && acc == q && roles.rem.test(t)) {
        phase = Phase::Out;
        started = false;
        if (out_step(t)) continue;
      }
      return false;
    }
    if (out_step(t)) continue;
    if (cyclic && acc == q && roles.ins.test(t)) {
      phase = Phase::In;
      started = false;
      if (in_step(t)) continue;
    }
    return false;
  }
  return true;
}

bool projection_in_class(const DistPlace& place, const FiringSequence& sequence) {
  auto idx = indices_of(place.host(), sequence);
  return projection_in_class(place, idx);
}

std::string_view to_string(Check check) {
  switch (check) {
    case Check::Holds: return "holds";
    case Check::Fails: return "fails";
    case Check::NotVerified: return "not verified";
  }
  return "?";
}

ReductionReport check_reduction(const MarkedNet& net, const std::vector<IndexSet>& cover, const IndexSet& kept,
                                std::size_t state_cap) {
  if (kept.size() != net.place_count()) throw Error(ErrorKind::InvalidArgument, "kept set has the wrong universe");
  std::vector<IndexSet> members_list;
  IndexSet covered = net.no_places();
  for (const auto& m : cover) {
    if (m.size() != net.place_count()) throw Error(ErrorKind::InvalidArgument, "cover member has the wrong universe");
    if (m.none()) throw Error(ErrorKind::CoverInvalid, "empty cover member");
    auto verdict = is_distributed_place_static(net, m);
    if (!verdict)
      throw Error(ErrorKind::CoverInvalid, net.format_places(m) + " is not a distributed place: " + verdict.reason);
    auto marked = m & net.initial();
    if (marked.any() && marked != m) throw Error(ErrorKind::CoverInvalid, net.format_places(m) + " is partly marked");
    members_list.push_back(m);
    covered |= m;
  }
  for (auto p : members(net.all_places() - covered)) {
    IndexSet single = net.no_places();
    single.set(p);
    members_list.push_back(single);
  }

  auto describe = [&](const std::set<TransitionPair>& want, const std::set<TransitionPair>& got) {
    std::string missing, extra;
    for (const auto& pr : want)
      if (!got.contains(pr)) missing += (missing.empty() ? "" : " ") + pair_name(net, pr);
    for (const auto& pr : got)
      if (!want.contains(pr)) extra += (extra.empty() ? "" : " ") + pair_name(net, pr);
    std::string s;
    if (!missing.empty()) s += "missing " + missing;
    if (!extra.empty()) s += std::string(s.empty() ? "" : "; ") + "extra " + extra;
    return s;
  };

  ReductionReport report;
  for (const auto& m : members_list) {
    auto reduced = m & kept;
    std::vector<TaggedPlace> member_places;
    for (auto p : members(m)) member_places.push_back(net.place(p));
    auto adj = adjacent(net, m);
    auto adj_reduced = adjacent(net, reduced);
    if (adj != adj_reduced) {
      report.pre_post_preserved = false;
      report.offending.push_back(
          {member_places, "adjacent transitions lost: " + net.format_transitions(adj - adj_reduced)});
    }
    auto en = enables_set(net, m);
    auto en_reduced = enables_or_empty(net, reduced);
    if (en != en_reduced) {
      report.enables_preserved = false;
      report.offending.push_back({member_places, "enables " + describe(en, en_reduced)});
    }
    auto dis = disables_set(net, m);
    auto dis_reduced = disables_or_empty(net, reduced);
    if (dis != dis_reduced) {
      report.disables_preserved = false;
      report.offending.push_back({member_places, "disables " + describe(dis, dis_reduced)});
    }
  }
  std::stable_sort(report.offending.begin(), report.offending.end(),
                   [](const auto& l, const auto& r) { return l.member < r.member; });

  try {
    auto rg = reach_graph(net, state_cap);
    report.net_safe = Check::Holds;
    for (const auto& arc : rg.arcs)
      if (eff_post(net, arc.transition).intersects(rg.nodes[arc.from])) report.net_safe = Check::Fails;

    std::vector<std::vector<std::size_t>> preds(rg.nodes.size());
    for (const auto& arc : rg.arcs) preds[arc.to].push_back(arc.from);
    report.side_condition = Check::Holds;
    for (const auto& m : members_list) {
      std::vector<bool> ok(rg.nodes.size(), false);
      std::deque<std::size_t> queue;
      for (std::size_t n = 0; n < rg.nodes.size(); ++n) {
        auto inside = rg.nodes[n] & m;
        if (inside.none() || inside == m) {
          ok[n] = true;
          queue.push_back(n);
        }
      }
      while (!queue.empty()) {
        auto n = queue.front();
        queue.pop_front();
        for (auto p : preds[n])
          if (!ok[p]) {
            ok[p] = true;
            queue.push_back(p);
          }
      }
      if (std::find(ok.begin(), ok.end(), false) != ok.end()) report.side_condition = Check::Fails;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::StateCapExceeded) throw;
  }
  return report;
}

ReductionReport check_reduction(const MarkedNet& net, const std::vector<std::vector<TaggedPlace>>& cover,
                                std::span<const TaggedPlace> kept, std::size_t state_cap) {
  std::vector<IndexSet> sets;
  sets.reserve(cover.size());
  for (const auto& m : cover) sets.push_back(net.places_of(m));
  return check_reduction(net, sets, net.places_of(kept), state_cap);
}

}  // namespace boxnet
