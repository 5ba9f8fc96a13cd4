#pragma once

#include "boxnet/net.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace boxnet {

inline constexpr std::size_t kDefaultMaximalSetBudget = 4096;
inline constexpr std::size_t kDefaultSequenceStateBudget = 1'000'000;

enum class SeqClass { InSeq, CompleteInSeq, OutSeq, CompleteOutSeq };

/// Literal membership test of σ in inseq/complinseq/outseq/coutseq of Q.
/// Throws Error(EmptySet) for an empty Q or an empty σ.
bool classify_sequence(const MarkedNet& net, const IndexSet& places, std::span<const std::size_t> sequence,
                       SeqClass kind);
bool classify_sequence(const MarkedNet& net, const IndexSet& places, const FiringSequence& sequence,
                       SeqClass kind);

struct DpVerdict {
  bool distributed = false;
  /// Empty when distributed, otherwise the first failing condition.
  std::string reason;

  explicit operator bool() const noexcept { return distributed; }
};

/// Characterisation through role sets, enables, and maximal compatible
/// subsets of ins (pairwise post-disjoint inside Q) and rem (pairwise
/// pre-disjoint inside Q). Throws Error(EnumerationBudgetExceeded) once more
/// than `budget` maximal subsets are found on one side.
DpVerdict is_distributed_place_static(const MarkedNet& net, const IndexSet& places,
                                      std::size_t budget = kDefaultMaximalSetBudget);

/// Brute-force check of the definition: explores every in-/out-sequence
/// (sequences are tracked by the part of Q they have filled or emptied) and
/// looks for a completion of each. Throws Error(EnumerationBudgetExceeded)
/// when the explored states exceed `budget`.
DpVerdict is_distributed_place_dynamic(const MarkedNet& net, const IndexSet& places,
                                       std::size_t budget = kDefaultSequenceStateBudget);

bool is_pure(const MarkedNet& net, const IndexSet& places);

/// A set of places of `host` that passed the static check. Holds a pointer
/// to the host, which must outlive it.
class DistPlace {
 public:
  /// Throws Error(EmptySet) or Error(NotDistributed).
  DistPlace(const MarkedNet& host, IndexSet members);
  DistPlace(const MarkedNet& host, std::span<const TaggedPlace> members);

  const MarkedNet& host() const noexcept { return *host_; }
  const IndexSet& members() const noexcept { return members_; }
  RoleSets roles() const { return role_sets(*host_, members_); }
  std::vector<TaggedPlace> places() const;

  friend bool operator==(const DistPlace& l, const DistPlace& r) {
    return l.host_ == r.host_ && l.members_ == r.members_;
  }

 private:
  const MarkedNet* host_;
  IndexSet members_;
};

/// Q ⊕ Q'. Throws Error(NotSeparated) when the adjacent transitions overlap
/// and Error(UnionNotDistributed) when the ins/rem emptiness pattern is not
/// one of the three admissible ones.
DistPlace dp_union(const DistPlace& first, const DistPlace& second);

/// Tag-wise union of two places.
TaggedPlace merge_tags(const TaggedPlace& first, const TaggedPlace& second);

/// Q ⊗ R, sorted and without duplicates. Throws Error(EmptySet).
std::vector<TaggedPlace> cross_product(std::span<const TaggedPlace> first, std::span<const TaggedPlace> second);

/// The six behaviours a distributed place can have, selected by the
/// emptiness of ins and rem and by the initial marking.
enum class ProjectionRow {
  AlternateFromEmpty,  ///< pref((complinseq ∘ coutseq)+)
  AlternateFromFull,   ///< pref(read* ∘ (coutseq ∘ complinseq)+)
  FillOnce,            ///< pref(complinseq)
  DrainOnce,           ///< pref(read* ∘ coutseq)
  Idle,                ///< {λ}
  ReadOnly,            ///< read*
};

std::string_view to_string(ProjectionRow row);

/// Throws Error(InitialMarkingStraddle) when Q is partly marked.
ProjectionRow projection_row(const DistPlace& place);

/// Whether σ restricted to adj(Q) lies in the language of Q's row.
bool projection_in_class(const DistPlace& place, std::span<const std::size_t> sequence);
bool projection_in_class(const DistPlace& place, const FiringSequence& sequence);

enum class Check { Holds, Fails, NotVerified };

std::string_view to_string(Check check);

struct ReductionReport {
  struct Offence {
    std::vector<TaggedPlace> member;
    std::string detail;
  };

  bool pre_post_preserved = true;
  bool enables_preserved = true;
  bool disables_preserved = true;
  /// Sorted by member.
  std::vector<Offence> offending;
  /// Safeness of the original net.
  Check net_safe = Check::NotVerified;
  /// Every reachable marking can reach one where each member is empty or full.
  Check side_condition = Check::NotVerified;

  bool valid() const noexcept { return pre_post_preserved && enables_preserved && disables_preserved; }
};

/// Local validity of keeping only `kept`. Places not in any cover member are
/// added as singletons. Throws Error(CoverInvalid) when a member is empty,
/// fails the static check, or is partly marked.
ReductionReport check_reduction(const MarkedNet& net, const std::vector<IndexSet>& cover, const IndexSet& kept,
                                std::size_t state_cap = kDefaultStateCap);
ReductionReport check_reduction(const MarkedNet& net, const std::vector<std::vector<TaggedPlace>>& cover,
                                std::span<const TaggedPlace> kept, std::size_t state_cap = kDefaultStateCap);

}  // namespace boxnet
