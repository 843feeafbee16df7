#include "hieq/lex.hpp"

#include <string>

#include "hieq/error.hpp"

namespace hieq {

LexOrder lex_compare(const PayoffVector& x, const PayoffVector& y) {
  if (x.size() != y.size())
    raise(errc::length_mismatch,
          "comparing payoff vectors of lengths " + std::to_string(x.size()) +
              " and " + std::to_string(y.size()));
  for (std::size_t l = 0; l < x.size(); ++l) {
    if (x[l] == y[l]) continue;
    return x[l] < y[l] ? LexOrder::less : LexOrder::greater;
  }
  return LexOrder::equal;
}

PayoffVector lex_expected_payoffs(const Game& game, PlayerIx player,
                                  std::uint32_t s, const Lps& firstorder,
                                  const CoSpace& cs) {
  if (s >= game.strategy_count(player))
    raise(errc::unknown_strategy,
          "player '" + game.player_name(player) + "' has no strategy index " +
              std::to_string(s));
  PayoffVector out;
  out.reserve(firstorder.length());
  for (const auto& level : firstorder.levels()) {
    Rational expected(0);
    for (const auto& [co_strategy, mass] : level.entries())
      expected +=
          mass * game.payoff(player, cs.game_profile_rank(game, s, co_strategy));
    out.push_back(expected);
  }
  return out;
}

bool optimal_under(const TypeStructure& ts, PlayerIx player, std::uint32_t s,
                   const Lps& belief) {
  const CoSpace& cs = ts.cospace(player);
  Lps firstorder = marginal_lps(belief, cs);
  PayoffVector own =
      lex_expected_payoffs(ts.game(), player, s, firstorder, cs);
  for (std::uint32_t alt = 0; alt < ts.game().strategy_count(player); ++alt) {
    if (alt == s) continue;
    PayoffVector other =
        lex_expected_payoffs(ts.game(), player, alt, firstorder, cs);
    if (lex_compare(own, other) == LexOrder::less) return false;
  }
  return true;
}

std::vector<std::uint32_t> best_replies(const TypeStructure& ts,
                                        PlayerIx player, const Lps& belief) {
  const CoSpace& cs = ts.cospace(player);
  Lps firstorder = marginal_lps(belief, cs);
  const std::uint32_t n = ts.game().strategy_count(player);
  std::vector<PayoffVector> payoffs;
  payoffs.reserve(n);
  for (std::uint32_t s = 0; s < n; ++s)
    payoffs.push_back(lex_expected_payoffs(ts.game(), player, s, firstorder, cs));
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < n; ++s) {
    bool best = true;
    for (std::uint32_t alt = 0; alt < n; ++alt) {
      if (lex_compare(payoffs[s], payoffs[alt]) == LexOrder::less) {
        best = false;
        break;
      }
    }
    if (best) out.push_back(s);
  }
  return out;
}

bool is_cautious(const TypeStructure& ts, PlayerIx player,
                 std::uint32_t type) {
  if (type >= ts.type_count(player))
    raise(errc::unknown_type,
          "player '" + ts.game().player_name(player) + "' has no type index " +
              std::to_string(type));
  return marginal_lps(ts.belief(player, type), ts.cospace(player))
      .full_support();
}

}  // namespace hieq
