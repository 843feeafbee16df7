#include "hieq/game.hpp"

#include <algorithm>
#include <unordered_set>

#include "hieq/error.hpp"

namespace hieq {

Game Game::create(std::vector<std::string> players,
                  std::vector<std::vector<std::string>> strategies,
                  std::vector<std::vector<Rational>> payoffs) {
  if (players.size() < 2)
    raise(errc::too_few_players,
          "a game needs at least two players, got " +
              std::to_string(players.size()));
  {
    std::unordered_set<std::string> seen;
    for (const auto& p : players)
      if (!seen.insert(p).second)
        raise(errc::dangling_reference, "duplicate player name '" + p + "'");
  }
  if (strategies.size() != players.size() || payoffs.size() != players.size())
    raise(errc::dangling_reference,
          "strategies and payoffs must cover every player exactly once");

  std::size_t profile_count = 1;
  for (std::size_t i = 0; i < players.size(); ++i) {
    if (strategies[i].empty())
      raise(errc::empty_strategy_set,
            "player '" + players[i] + "' has no strategies");
    std::unordered_set<std::string> seen;
    for (const auto& s : strategies[i])
      if (!seen.insert(s).second)
        raise(errc::dangling_reference, "duplicate strategy '" + s +
                                            "' for player '" + players[i] +
                                            "'");
    profile_count *= strategies[i].size();
  }
  for (std::size_t i = 0; i < players.size(); ++i) {
    if (payoffs[i].size() != profile_count)
      raise(errc::dangling_reference,
            "payoff table for player '" + players[i] + "' has " +
                std::to_string(payoffs[i].size()) + " entries, expected " +
                std::to_string(profile_count));
  }

  Game g;
  g.players_ = std::move(players);
  g.strategies_ = std::move(strategies);
  g.payoffs_ = std::move(payoffs);
  g.profile_count_ = profile_count;
  return g;
}

std::optional<PlayerIx> Game::player_index(std::string_view name) const {
  for (std::size_t i = 0; i < players_.size(); ++i)
    if (players_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::uint32_t> Game::strategy_index(
    PlayerIx i, std::string_view name) const {
  const auto& names = strategies_[i];
  for (std::size_t k = 0; k < names.size(); ++k)
    if (names[k] == name) return static_cast<std::uint32_t>(k);
  return std::nullopt;
}

std::size_t Game::profile_rank(std::span<const std::uint32_t> profile) const {
  std::size_t rank = 0;
  for (std::size_t i = 0; i < players_.size(); ++i)
    rank = rank * strategies_[i].size() + profile[i];
  return rank;
}

std::vector<std::uint32_t> Game::profile_unrank(std::size_t rank) const {
  std::vector<std::uint32_t> profile(players_.size());
  for (std::size_t i = players_.size(); i-- > 0;) {
    profile[i] = static_cast<std::uint32_t>(rank % strategies_[i].size());
    rank /= strategies_[i].size();
  }
  return profile;
}

}  // namespace hieq
