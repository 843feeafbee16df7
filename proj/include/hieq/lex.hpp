#pragma once

#include <cstdint>
#include <vector>

#include "hieq/structure.hpp"

namespace hieq {

/// One expected payoff per LPS level, in level order.
using PayoffVector = std::vector<Rational>;

enum class LexOrder { less, equal, greater };

/// Lexicographic three-way comparison of equal-length payoff vectors:
/// equal iff entrywise equal, otherwise decided at the first differing
/// index. Throws LengthMismatch on unequal lengths.
LexOrder lex_compare(const PayoffVector& x, const PayoffVector& y);

/// Expected payoff of strategy `s` of `player` against each level of a
/// first-order LPS over S_{-i} (ground: the co-strategy space of
/// `player` in `game`). Throws UnknownStrategy.
PayoffVector lex_expected_payoffs(const Game& game, PlayerIx player,
                                  std::uint32_t s, const Lps& firstorder,
                                  const CoSpace& cs);

/// True iff `s` is a lexicographic best reply to the strategy marginal of
/// `belief` (an LPS over the player's co-space).
bool optimal_under(const TypeStructure& ts, PlayerIx player, std::uint32_t s,
                   const Lps& belief);

/// All strategies optimal under the belief, in declaration order. Never
/// empty: the lexicographic order is total on the finite strategy set.
std::vector<std::uint32_t> best_replies(const TypeStructure& ts,
                                        PlayerIx player, const Lps& belief);

/// True iff the type's first-order marginal is a full-support LPS over
/// S_{-i}. Throws UnknownType.
bool is_cautious(const TypeStructure& ts, PlayerIx player, std::uint32_t type);

}  // namespace hieq
