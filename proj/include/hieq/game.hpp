#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hieq/rational.hpp"

namespace hieq {

using PlayerIx = std::size_t;

/// A finite normal-form game: an ordered list of players, a nonempty
/// ordered strategy set per player, and one exact-rational payoff per
/// player per strategy profile.
///
/// Strategy profiles are enumerated in mixed radix with the last player
/// least significant; every table and event downstream iterates in this
/// order, which makes all outputs deterministic.
class Game {
 public:
  static Game create(std::vector<std::string> players,
                     std::vector<std::vector<std::string>> strategies,
                     std::vector<std::vector<Rational>> payoffs);

  std::size_t num_players() const { return players_.size(); }
  const std::vector<std::string>& players() const { return players_; }
  const std::string& player_name(PlayerIx i) const { return players_[i]; }
  std::optional<PlayerIx> player_index(std::string_view name) const;

  std::uint32_t strategy_count(PlayerIx i) const {
    return static_cast<std::uint32_t>(strategies_[i].size());
  }
  const std::vector<std::string>& strategy_names(PlayerIx i) const {
    return strategies_[i];
  }
  std::optional<std::uint32_t> strategy_index(PlayerIx i,
                                              std::string_view name) const;

  std::size_t profile_count() const { return profile_count_; }
  std::size_t profile_rank(std::span<const std::uint32_t> profile) const;
  std::vector<std::uint32_t> profile_unrank(std::size_t rank) const;

  const Rational& payoff(PlayerIx who, std::size_t profile_rank) const {
    return payoffs_[who][profile_rank];
  }
  const std::vector<Rational>& payoff_table(PlayerIx who) const {
    return payoffs_[who];
  }

  bool operator==(const Game&) const = default;

 private:
  std::vector<std::string> players_;
  std::vector<std::vector<std::string>> strategies_;
  std::vector<std::vector<Rational>> payoffs_;
  std::size_t profile_count_ = 0;
};

}  // namespace hieq
