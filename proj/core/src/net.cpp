#include "boxnet/net.hpp"

#include "boxnet/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace boxnet {

namespace {

void sort_unique(std::vector<std::string>& names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
}

bool contains_sorted(const std::vector<std::string>& names, std::string_view name) {
  return std::binary_search(names.begin(), names.end(), name,
                            [](auto const& l, auto const& r) { return std::string_view(l) < std::string_view(r); });
}

}  // namespace

std::vector<std::size_t> members(const IndexSet& set) {
  std::vector<std::size_t> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != IndexSet::npos; i = set.find_next(i)) out.push_back(i);
  return out;
}

IndexSet make_set(std::size_t universe, std::span<const std::size_t> indices) {
  IndexSet set(universe);
  for (auto i : indices) set.set(i);
  return set;
}

TaggedPlace::TaggedPlace(std::vector<std::string> inputs, std::vector<std::string> outputs)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)) {
  sort_unique(inputs_);
  sort_unique(outputs_);
  if (inputs_.empty() && outputs_.empty()) throw Error(ErrorKind::InvalidPlace, "place without tags");
  for (const auto* side : {&inputs_, &outputs_})
    for (const auto& name : *side)
      if (name.empty()) throw Error(ErrorKind::InvalidPlace, "empty transition name in place");
}

TaggedPlace TaggedPlace::parse(std::string_view display) {
  std::vector<std::string> in, out;
  std::size_t start = 0;
  while (start <= display.size()) {
    auto dot = display.find('.', start);
    if (dot == std::string_view::npos) dot = display.size();
    auto tag = display.substr(start, dot - start);
    auto caret = tag.rfind('^');
    if (caret == std::string_view::npos || caret == 0)
      throw Error(ErrorKind::InvalidPlace, "malformed tag '" + std::string(tag) + "'");
    auto name = std::string(tag.substr(0, caret));
    auto polarity = tag.substr(caret + 1);
    if (polarity == "in") {
      in.push_back(std::move(name));
    } else if (polarity == "out") {
      out.push_back(std::move(name));
    } else {
      throw Error(ErrorKind::InvalidPlace, "unknown polarity in '" + std::string(tag) + "'");
    }
    start = dot + 1;
  }
  return TaggedPlace(std::move(in), std::move(out));
}

bool TaggedPlace::has_input(std::string_view transition) const { return contains_sorted(inputs_, transition); }

bool TaggedPlace::has_output(std::string_view transition) const { return contains_sorted(outputs_, transition); }

std::string TaggedPlace::display_name() const {
  // Merge the two sorted lists; on equal names `in` precedes `out`.
  std::string s;
  std::size_t i = 0, o = 0;
  auto emit = [&s](const std::string& name, const char* polarity) {
    if (!s.empty()) s += '.';
    s += name;
    s += polarity;
  };
  while (i < inputs_.size() || o < outputs_.size()) {
    if (o == outputs_.size() || (i < inputs_.size() && inputs_[i] <= outputs_[o])) {
      emit(inputs_[i++], "^in");
    } else {
      emit(outputs_[o++], "^out");
    }
  }
  return s;
}

NetReport validate_net(std::span<const PlaceDecl> places) {
  NetReport report;
  std::map<TaggedPlace, int> seen;
  std::set<std::string> all, with_pre;
  for (const auto& decl : places) {
    if (decl.place.inputs().empty() && decl.place.outputs().empty())
      report.violations.push_back("place with no tags");
    if (++seen[decl.place] == 2)
      report.violations.push_back("duplicate place " + decl.place.display_name());
    for (const auto& t : decl.place.inputs()) all.insert(t);
    for (const auto& t : decl.place.outputs()) {
      all.insert(t);
      with_pre.insert(t);
    }
  }
  for (const auto& t : all)
    if (!with_pre.contains(t)) report.violations.push_back("transition " + t + " has no pre-place");
  return report;
}

MarkedNet::MarkedNet(std::vector<PlaceDecl> decls) {
  auto report = validate_net(decls);
  if (!report.ok()) {
    std::string message = "invalid net:";
    for (const auto& v : report.violations) message += " " + v + ";";
    throw Error(ErrorKind::InvalidNet, message);
  }
  std::sort(decls.begin(), decls.end(), [](const PlaceDecl& l, const PlaceDecl& r) { return l.place < r.place; });
  for (const auto& decl : decls) {
    places_.push_back(decl.place);
    for (const auto& t : decl.place.inputs()) transitions_.push_back(t);
    for (const auto& t : decl.place.outputs()) transitions_.push_back(t);
  }
  sort_unique(transitions_);

  const auto np = places_.size();
  const auto nt = transitions_.size();
  pre_.assign(nt, IndexSet(np));
  post_.assign(nt, IndexSet(np));
  inputs_.assign(np, IndexSet(nt));
  outputs_.assign(np, IndexSet(nt));
  initial_ = IndexSet(np);
  for (std::size_t p = 0; p < np; ++p) {
    if (decls[p].marked) initial_.set(p);
    for (const auto& name : places_[p].inputs()) {
      auto t = *find_transition(name);
      inputs_[p].set(t);
      post_[t].set(p);
    }
    for (const auto& name : places_[p].outputs()) {
      auto t = *find_transition(name);
      outputs_[p].set(t);
      pre_[t].set(p);
    }
  }
}

std::optional<std::size_t> MarkedNet::find_place(const TaggedPlace& place) const {
  auto it = std::lower_bound(places_.begin(), places_.end(), place);
  if (it == places_.end() || *it != place) return std::nullopt;
  return static_cast<std::size_t>(it - places_.begin());
}

std::optional<std::size_t> MarkedNet::find_transition(std::string_view name) const {
  auto it = std::lower_bound(transitions_.begin(), transitions_.end(), name,
                             [](const std::string& l, std::string_view r) { return std::string_view(l) < r; });
  if (it == transitions_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - transitions_.begin());
}

std::size_t MarkedNet::place_index(const TaggedPlace& place) const {
  if (auto p = find_place(place)) return *p;
  throw Error(ErrorKind::UnknownElement, "unknown place " + place.display_name());
}

std::size_t MarkedNet::place_index(std::string_view display_name) const {
  return place_index(TaggedPlace::parse(display_name));
}

std::size_t MarkedNet::transition_index(std::string_view name) const {
  if (auto t = find_transition(name)) return *t;
  throw Error(ErrorKind::UnknownElement, "unknown transition " + std::string(name));
}

IndexSet MarkedNet::all_places() const {
  IndexSet s(place_count());
  s.set();
  return s;
}

IndexSet MarkedNet::places_of(std::span<const TaggedPlace> places) const {
  IndexSet s(place_count());
  for (const auto& p : places) s.set(place_index(p));
  return s;
}

IndexSet MarkedNet::transitions_of(std::span<const std::string> names) const {
  IndexSet s(transition_count());
  for (const auto& n : names) s.set(transition_index(n));
  return s;
}

std::vector<PlaceDecl> MarkedNet::decls() const {
  std::vector<PlaceDecl> out;
  out.reserve(places_.size());
  for (std::size_t p = 0; p < places_.size(); ++p) out.push_back({places_[p], initial_.test(p)});
  return out;
}

MarkedNet MarkedNet::restrict_to(const IndexSet& kept) const {
  if (kept.size() != place_count()) throw Error(ErrorKind::InvalidArgument, "kept set has the wrong universe");
  std::vector<PlaceDecl> out;
  for (auto p : members(kept)) out.push_back({places_[p], initial_.test(p)});
  return MarkedNet(std::move(out));
}

std::size_t MarkedNet::arc_count() const {
  std::size_t n = 0;
  for (const auto& p : places_) n += p.inputs().size() + p.outputs().size();
  return n;
}

std::string MarkedNet::format_places(const IndexSet& places) const {
  std::string s = "{";
  for (auto p : members(places)) {
    if (s.size() > 1) s += ", ";
    s += places_[p].display_name();
  }
  return s + "}";
}

std::string MarkedNet::format_transitions(const IndexSet& transitions) const {
  std::string s = "{";
  for (auto t : members(transitions)) {
    if (s.size() > 1) s += ", ";
    s += transitions_[t];
  }
  return s + "}";
}

IndexSet preset(const MarkedNet& net, const TaggedPlace& place) { return net.inputs(net.place_index(place)); }
IndexSet postset(const MarkedNet& net, const TaggedPlace& place) { return net.outputs(net.place_index(place)); }
IndexSet preset(const MarkedNet& net, std::string_view transition) { return net.pre(net.transition_index(transition)); }
IndexSet postset(const MarkedNet& net, std::string_view transition) {
  return net.post(net.transition_index(transition));
}

IndexSet eff_pre(const MarkedNet& net, std::size_t t) { return net.pre(t) - net.post(t); }
IndexSet eff_post(const MarkedNet& net, std::size_t t) { return net.post(t) - net.pre(t); }

IndexSet preset_of(const MarkedNet& net, const IndexSet& places) {
  IndexSet s = net.no_transitions();
  for (auto p : members(places)) s |= net.inputs(p);
  return s;
}

IndexSet postset_of(const MarkedNet& net, const IndexSet& places) {
  IndexSet s = net.no_transitions();
  for (auto p : members(places)) s |= net.outputs(p);
  return s;
}

IndexSet adjacent(const MarkedNet& net, const IndexSet& places) {
  return preset_of(net, places) | postset_of(net, places);
}

IndexSet preset_of_transitions(const MarkedNet& net, const IndexSet& transitions) {
  IndexSet s = net.no_places();
  for (auto t : members(transitions)) s |= net.pre(t);
  return s;
}

IndexSet postset_of_transitions(const MarkedNet& net, const IndexSet& transitions) {
  IndexSet s = net.no_places();
  for (auto t : members(transitions)) s |= net.post(t);
  return s;
}

RoleSets role_sets(const MarkedNet& net, const IndexSet& places) {
  if (places.none()) throw Error(ErrorKind::EmptySet, "role sets of an empty place set");
  auto pre = preset_of(net, places);
  auto post = postset_of(net, places);
  RoleSets r{pre - post, post - pre, net.no_transitions()};
  for (auto t : members(pre | post))
    if ((net.pre(t) & places) == (net.post(t) & places)) r.read.set(t);
  return r;
}

std::set<TransitionPair> enables_set(const MarkedNet& net, const IndexSet& places) {
  if (places.none()) throw Error(ErrorKind::EmptySet, "enables of an empty place set");
  std::set<TransitionPair> out;
  for (std::size_t t = 0; t < net.transition_count(); ++t) {
    auto produced = eff_post(net, t) & places;
    if (produced.none()) continue;
    for (std::size_t u = 0; u < net.transition_count(); ++u)
      if (produced.intersects(net.pre(u))) out.emplace(t, u);
  }
  return out;
}

std::set<TransitionPair> disables_set(const MarkedNet& net, const IndexSet& places) {
  if (places.none()) throw Error(ErrorKind::EmptySet, "disables of an empty place set");
  std::set<TransitionPair> out;
  for (std::size_t t = 0; t < net.transition_count(); ++t) {
    auto consumed = eff_pre(net, t) & places;
    if (consumed.none()) continue;
    for (std::size_t u = 0; u < net.transition_count(); ++u)
      if (consumed.intersects(net.pre(u))) out.emplace(t, u);
  }
  return out;
}

bool is_fireable(const MarkedNet& net, const Marking& marking, std::size_t t) {
  return net.pre(t).is_subset_of(marking);
}

Marking fire(const MarkedNet& net, const Marking& marking, std::size_t t) {
  if (marking.size() != net.place_count()) throw Error(ErrorKind::InvalidArgument, "marking has the wrong universe");
  if (t >= net.transition_count()) throw Error(ErrorKind::UnknownElement, "unknown transition index");
  if (!is_fireable(net, marking, t)) throw Error(ErrorKind::NotFireable, net.transition(t) + " is not fireable");
  return (marking - net.pre(t)) | net.post(t);
}

std::optional<std::size_t> ReachGraph::find(const Marking& marking) const {
  auto it = index.find(marking);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

ReachGraph reach_graph(const MarkedNet& net, std::size_t state_cap) {
  ReachGraph rg;
  auto add = [&](const Marking& m) -> std::size_t {
    auto [it, inserted] = rg.index.emplace(m, rg.nodes.size());
    if (inserted) {
      if (rg.nodes.size() >= state_cap)
        throw Error(ErrorKind::StateCapExceeded,
                    "reachability graph exceeds " + std::to_string(state_cap) + " states");
      rg.nodes.push_back(m);
      rg.successors.emplace_back();
    }
    return it->second;
  };
  add(net.initial());
  for (std::size_t n = 0; n < rg.nodes.size(); ++n) {
    for (std::size_t t = 0; t < net.transition_count(); ++t) {
      if (!is_fireable(net, rg.nodes[n], t)) continue;
      auto next = (rg.nodes[n] - net.pre(t)) | net.post(t);
      auto to = add(next);
      rg.arcs.push_back({n, t, to});
      rg.successors[n].emplace_back(t, to);
    }
  }
  return rg;
}

bool is_safe(const MarkedNet& net, std::size_t state_cap) {
  auto rg = reach_graph(net, state_cap);
  for (const auto& arc : rg.arcs)
    if (eff_post(net, arc.transition).intersects(rg.nodes[arc.from])) return false;
  return true;
}

IsoResult rg_isomorphic(const MarkedNet& first, const MarkedNet& second, std::size_t state_cap) {
  if (first.transitions() != second.transitions())
    throw Error(ErrorKind::TransitionSetMismatch, "nets have different transition sets");

  struct Pair {
    Marking m1, m2;
    std::size_t parent;
    std::size_t via;
  };
  std::vector<Pair> pairs;
  std::unordered_map<Marking, std::size_t> left, right;
  auto path_to = [&](std::size_t node) {
    std::vector<std::size_t> seq;
    while (node != 0) {
      seq.push_back(pairs[node].via);
      node = pairs[node].parent;
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
  };

  IsoResult result;
  pairs.push_back({first.initial(), second.initial(), 0, 0});
  left.emplace(first.initial(), 0);
  right.emplace(second.initial(), 0);
  for (std::size_t n = 0; n < pairs.size(); ++n) {
    for (std::size_t t = 0; t < first.transition_count(); ++t) {
      const bool f1 = is_fireable(first, pairs[n].m1, t);
      const bool f2 = is_fireable(second, pairs[n].m2, t);
      if (f1 != f2) {
        auto seq = path_to(n);
        seq.push_back(t);
        result.witness = sequence_names(first, seq);
        result.reason = join(result.witness) + " is fireable only in the " + (f1 ? "first" : "second") + " net";
        result.states = pairs.size();
        return result;
      }
      if (!f1) continue;
      auto n1 = (pairs[n].m1 - first.pre(t)) | first.post(t);
      auto n2 = (pairs[n].m2 - second.pre(t)) | second.post(t);
      auto l = left.find(n1);
      auto r = right.find(n2);
      if (l == left.end() && r == right.end()) {
        if (pairs.size() >= state_cap)
          throw Error(ErrorKind::StateCapExceeded,
                      "reachability graph exceeds " + std::to_string(state_cap) + " states");
        left.emplace(n1, pairs.size());
        right.emplace(n2, pairs.size());
        pairs.push_back({std::move(n1), std::move(n2), n, t});
        continue;
      }
      if (l != left.end() && r != right.end() && l->second == r->second) continue;
      auto seq = path_to(n);
      seq.push_back(t);
      result.witness = sequence_names(first, seq);
      result.reason = "after " + join(result.witness) + " a marking of one net corresponds to two of the other";
      result.states = pairs.size();
      return result;
    }
  }
  result.isomorphic = true;
  result.states = pairs.size();
  return result;
}

std::vector<FiringSequence> firing_sequences(const MarkedNet& net, std::size_t depth) {
  std::vector<FiringSequence> out;
  std::vector<std::size_t> stack;
  auto rec = [&](auto&& self, const Marking& m) -> void {
    out.push_back(sequence_names(net, stack));
    if (stack.size() == depth) return;
    for (std::size_t t = 0; t < net.transition_count(); ++t) {
      if (!is_fireable(net, m, t)) continue;
      stack.push_back(t);
      self(self, (m - net.pre(t)) | net.post(t));
      stack.pop_back();
    }
  };
  rec(rec, net.initial());
  return out;
}

FiringSequence sequence_names(const MarkedNet& net, std::span<const std::size_t> sequence) {
  FiringSequence names;
  names.reserve(sequence.size());
  for (auto t : sequence) names.push_back(net.transition(t));
  return names;
}

std::string join(const FiringSequence& sequence, std::string_view separator) {
  std::string s;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (i) s += separator;
    s += sequence[i];
  }
  return s;
}

}  // namespace boxnet
