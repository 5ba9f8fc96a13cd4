#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace boxnet {

/// Bit set over the places or the transitions of one net, indexed by the
/// net's canonical (sorted) order.
using IndexSet = boost::dynamic_bitset<>;

/// A set of places; any subset of a net's places is a marking.
using Marking = IndexSet;

using FiringSequence = std::vector<std::string>;

inline constexpr std::size_t kDefaultStateCap = 200'000;
inline constexpr std::size_t kDefaultSequenceDepth = 12;

std::vector<std::size_t> members(const IndexSet& set);
IndexSet make_set(std::size_t universe, std::span<const std::size_t> indices);

/// A place identified by its input transitions (tagged `^in`) and output
/// transitions (tagged `^out`). Two places with the same tags are the same
/// place; arcs of a net are implied by the tags of its places.
class TaggedPlace {
 public:
  TaggedPlace(std::vector<std::string> inputs, std::vector<std::string> outputs);

  /// Parses a display name such as `a^in.c^out.e^out`.
  static TaggedPlace parse(std::string_view display);

  const std::vector<std::string>& inputs() const noexcept { return inputs_; }
  const std::vector<std::string>& outputs() const noexcept { return outputs_; }

  bool has_input(std::string_view transition) const;
  bool has_output(std::string_view transition) const;

  /// Tags ordered by (action, polarity) and joined with '.'.
  std::string display_name() const;

  friend auto operator<=>(const TaggedPlace&, const TaggedPlace&) = default;

 private:
  std::vector<std::string> inputs_;
  std::vector<std::string> outputs_;
};

struct PlaceDecl {
  TaggedPlace place;
  bool marked = false;
};

struct NetReport {
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Structural assumptions on marked nets: no duplicate place identities and
/// every transition has at least one pre-place. Empty places cannot be
/// constructed in the first place.
NetReport validate_net(std::span<const PlaceDecl> places);

class MarkedNet {
 public:
  /// Throws Error(InvalidNet) listing every violation found by validate_net.
  explicit MarkedNet(std::vector<PlaceDecl> places);

  std::size_t place_count() const noexcept { return places_.size(); }
  std::size_t transition_count() const noexcept { return transitions_.size(); }

  const TaggedPlace& place(std::size_t p) const { return places_.at(p); }
  const std::vector<TaggedPlace>& places() const noexcept { return places_; }
  const std::string& transition(std::size_t t) const { return transitions_.at(t); }
  const std::vector<std::string>& transitions() const noexcept { return transitions_; }

  std::optional<std::size_t> find_place(const TaggedPlace& place) const;
  std::optional<std::size_t> find_transition(std::string_view name) const;

  /// Lookup that throws Error(UnknownElement).
  std::size_t place_index(const TaggedPlace& place) const;
  std::size_t place_index(std::string_view display_name) const;
  std::size_t transition_index(std::string_view name) const;

  /// Places of •t and t•.
  const IndexSet& pre(std::size_t t) const { return pre_.at(t); }
  const IndexSet& post(std::size_t t) const { return post_.at(t); }
  /// Transitions of •p and p•.
  const IndexSet& inputs(std::size_t p) const { return inputs_.at(p); }
  const IndexSet& outputs(std::size_t p) const { return outputs_.at(p); }

  const Marking& initial() const noexcept { return initial_; }

  IndexSet no_places() const { return IndexSet(place_count()); }
  IndexSet no_transitions() const { return IndexSet(transition_count()); }
  IndexSet all_places() const;
  IndexSet places_of(std::span<const TaggedPlace> places) const;
  IndexSet transitions_of(std::span<const std::string> names) const;

  std::vector<PlaceDecl> decls() const;

  /// The net with the same transitions whose places are `kept`, arcs and
  /// initial marking restricted accordingly.
  MarkedNet restrict_to(const IndexSet& kept) const;

  std::size_t arc_count() const;

  std::string format_places(const IndexSet& places) const;
  std::string format_transitions(const IndexSet& transitions) const;

 private:
  std::vector<TaggedPlace> places_;
  std::vector<std::string> transitions_;
  std::vector<IndexSet> pre_;
  std::vector<IndexSet> post_;
  std::vector<IndexSet> inputs_;
  std::vector<IndexSet> outputs_;
  Marking initial_;
};

// Pre- and postsets. Lookups by name throw Error(UnknownElement).
IndexSet preset(const MarkedNet& net, const TaggedPlace& place);
IndexSet postset(const MarkedNet& net, const TaggedPlace& place);
IndexSet preset(const MarkedNet& net, std::string_view transition);
IndexSet postset(const MarkedNet& net, std::string_view transition);
/// ◦t = •t \ t•
IndexSet eff_pre(const MarkedNet& net, std::size_t t);
/// t◦ = t• \ •t
IndexSet eff_post(const MarkedNet& net, std::size_t t);

/// •Q, Q• and their union for a set of places.
IndexSet preset_of(const MarkedNet& net, const IndexSet& places);
IndexSet postset_of(const MarkedNet& net, const IndexSet& places);
IndexSet adjacent(const MarkedNet& net, const IndexSet& places);
/// •U, U• for a set of transitions.
IndexSet preset_of_transitions(const MarkedNet& net, const IndexSet& transitions);
IndexSet postset_of_transitions(const MarkedNet& net, const IndexSet& transitions);

struct RoleSets {
  IndexSet ins;   ///< insert into Q, remove nothing from it
  IndexSet rem;   ///< remove from Q, insert nothing into it
  IndexSet read;  ///< •t ∩ Q = t• ∩ Q
};

/// Throws Error(EmptySet) for an empty Q.
RoleSets role_sets(const MarkedNet& net, const IndexSet& places);

using TransitionPair = std::pair<std::size_t, std::size_t>;

/// {(t,u) | Q ∩ t◦ ∩ •u ≠ ∅}
std::set<TransitionPair> enables_set(const MarkedNet& net, const IndexSet& places);
/// {(t,u) | Q ∩ ◦t ∩ •u ≠ ∅}
std::set<TransitionPair> disables_set(const MarkedNet& net, const IndexSet& places);

bool is_fireable(const MarkedNet& net, const Marking& marking, std::size_t t);
/// (M \ •t) ∪ t•; throws Error(NotFireable).
Marking fire(const MarkedNet& net, const Marking& marking, std::size_t t);

struct ReachGraph {
  struct Arc {
    std::size_t from;
    std::size_t transition;
    std::size_t to;
  };

  std::vector<Marking> nodes;
  std::vector<Arc> arcs;
  /// Per node, (transition, target) sorted by transition.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> successors;
  std::size_t initial = 0;

  std::optional<std::size_t> find(const Marking& marking) const;

  std::unordered_map<Marking, std::size_t> index;
};

/// Breadth-first closure of fire from the initial marking. Node 0 is the
/// initial marking; nodes are numbered in discovery order. Throws
/// Error(StateCapExceeded) once more than `state_cap` markings are found.
ReachGraph reach_graph(const MarkedNet& net, std::size_t state_cap = kDefaultStateCap);

bool is_safe(const MarkedNet& net, std::size_t state_cap = kDefaultStateCap);

struct IsoResult {
  bool isomorphic = false;
  std::size_t states = 0;
  /// Shortest firing sequence exposing the difference, when not isomorphic.
  FiringSequence witness;
  std::string reason;
};

/// Decides RG isomorphism with the identity on transition labels. Both nets
/// must have the same transition names (Error(TransitionSetMismatch)).
IsoResult rg_isomorphic(const MarkedNet& first, const MarkedNet& second,
                        std::size_t state_cap = kDefaultStateCap);

/// Every firing sequence of length ≤ depth, including the empty one, in
/// lexicographic order of transition indices.
std::vector<FiringSequence> firing_sequences(const MarkedNet& net,
                                             std::size_t depth = kDefaultSequenceDepth);

/// Returns the net's name for each transition of the sequence.
FiringSequence sequence_names(const MarkedNet& net, std::span<const std::size_t> sequence);

std::string join(const FiringSequence& sequence, std::string_view separator = "");

}  // namespace boxnet
