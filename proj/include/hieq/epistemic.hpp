#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hieq/event.hpp"
#include "hieq/lex.hpp"

namespace hieq {

/// True iff `E` is cautiously believed under `belief` at level `m`
/// (1-based): every level l <= m puts mass exactly 1 on E, and every
/// elementary cylinder that meets E gets positive mass from some level
/// l <= m. Throws EmptyEvent and LevelOutOfRange.
bool cautiously_believed_at_level(const Lps& belief, const JointEvent& E,
                                  std::size_t m);

/// Least level at which `E` is cautiously believed, or nullopt. Throws
/// EmptyEvent.
std::optional<std::size_t> cautiously_believes(const Lps& belief,
                                               const JointEvent& E);

/// The operator B_i^c: all pairs (s_i, t_i) whose type cautiously
/// believes E. Membership never depends on the strategy coordinate. The
/// empty event maps to the empty event, extending the definition so the
/// iteration below is total.
Event cautious_belief_operator(const TypeStructure& ts, PlayerIx player,
                               const JointEvent& E);

/// Iteration record. levels[m][i] is player i's event at step m;
/// levels[0] is the full state space, and the last stored level repeats
/// its predecessor, so stabilized_at + 2 levels are kept.
struct RcbrTrace {
  std::vector<std::vector<Event>> levels;
  std::size_t stabilized_at = 0;

  const std::vector<Event>& fixpoint() const { return levels[stabilized_at]; }
};

/// Cautious rationality and iterated cautious belief in it: level 1 is
/// the set of cautiously rational pairs, and each further level
/// intersects with cautious belief in the opponents' previous level.
/// Stops at the first repeated level, which on a finite structure is the
/// limit of the whole sequence.
RcbrTrace rcbr_iterate(const TypeStructure& ts);

/// Same iteration from a caller-supplied level 1. `base` holds one event
/// per player, in player order.
RcbrTrace iterate_assumption(const TypeStructure& ts,
                             std::span<const Event> base);

}  // namespace hieq
