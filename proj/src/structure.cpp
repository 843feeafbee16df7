#include "hieq/structure.hpp"

#include <stdexcept>
#include <unordered_set>

#include "hieq/error.hpp"

namespace hieq {

CoSpace::CoSpace(PlayerIx player, std::vector<PlayerIx> opponents,
                 std::vector<std::uint32_t> strat_counts,
                 std::vector<std::uint32_t> type_counts)
    : player_(player),
      opponents_(std::move(opponents)),
      strat_counts_(std::move(strat_counts)),
      type_counts_(std::move(type_counts)) {
  size_ = 1;
  strategy_size_ = 1;
  for (std::size_t k = 0; k < opponents_.size(); ++k) {
    size_ *= static_cast<std::size_t>(strat_counts_[k]) * type_counts_[k];
    strategy_size_ *= strat_counts_[k];
  }
}

std::size_t CoSpace::rank(std::span<const std::uint32_t> strats,
                          std::span<const std::uint32_t> types) const {
  std::size_t r = 0;
  for (std::size_t k = 0; k < opponents_.size(); ++k) {
    std::size_t pair = std::size_t{strats[k]} * type_counts_[k] + types[k];
    r = r * (std::size_t{strat_counts_[k]} * type_counts_[k]) + pair;
  }
  return r;
}

void CoSpace::unrank(std::size_t rank, std::span<std::uint32_t> strats,
                     std::span<std::uint32_t> types) const {
  for (std::size_t k = opponents_.size(); k-- > 0;) {
    std::size_t pairs = std::size_t{strat_counts_[k]} * type_counts_[k];
    std::size_t pair = rank % pairs;
    rank /= pairs;
    strats[k] = static_cast<std::uint32_t>(pair / type_counts_[k]);
    types[k] = static_cast<std::uint32_t>(pair % type_counts_[k]);
  }
}

std::size_t CoSpace::strategy_of(std::size_t rank) const {
  std::size_t r = 0;
  std::size_t radix = 1;
  for (std::size_t k = opponents_.size(); k-- > 0;) {
    std::size_t pairs = std::size_t{strat_counts_[k]} * type_counts_[k];
    std::size_t pair = rank % pairs;
    rank /= pairs;
    r += (pair / type_counts_[k]) * radix;
    radix *= strat_counts_[k];
  }
  return r;
}

std::size_t CoSpace::strategy_rank(
    std::span<const std::uint32_t> strats) const {
  std::size_t r = 0;
  for (std::size_t k = 0; k < opponents_.size(); ++k)
    r = r * strat_counts_[k] + strats[k];
  return r;
}

void CoSpace::strategy_unrank(std::size_t rank,
                              std::span<std::uint32_t> strats) const {
  for (std::size_t k = opponents_.size(); k-- > 0;) {
    strats[k] = static_cast<std::uint32_t>(rank % strat_counts_[k]);
    rank /= strat_counts_[k];
  }
}

std::vector<std::uint32_t> CoSpace::strategy_projection_map() const {
  std::vector<std::uint32_t> map(size_);
  std::vector<std::uint32_t> strats(opponents_.size());
  std::vector<std::uint32_t> types(opponents_.size());
  for (std::size_t r = 0; r < size_; ++r) {
    unrank(r, strats, types);
    map[r] = static_cast<std::uint32_t>(strategy_rank(strats));
  }
  return map;
}

std::size_t CoSpace::game_profile_rank(const Game& game,
                                       std::uint32_t own_strategy,
                                       std::size_t co_strategy_rank) const {
  std::vector<std::uint32_t> strats(opponents_.size());
  strategy_unrank(co_strategy_rank, strats);
  std::vector<std::uint32_t> profile(game.num_players());
  profile[player_] = own_strategy;
  for (std::size_t k = 0; k < opponents_.size(); ++k)
    profile[opponents_[k]] = strats[k];
  return game.profile_rank(profile);
}

TypeStructure TypeStructure::create(
    std::shared_ptr<const Game> game,
    std::vector<std::vector<std::string>> type_names,
    std::vector<std::vector<Lps>> beliefs) {
  const std::size_t n = game->num_players();
  if (type_names.size() != n || beliefs.size() != n)
    raise(errc::dangling_reference,
          "types and beliefs must cover every player exactly once");
  for (PlayerIx i = 0; i < n; ++i) {
    std::unordered_set<std::string> seen;
    for (const auto& t : type_names[i])
      if (!seen.insert(t).second)
        raise(errc::dangling_reference,
              "duplicate type '" + t + "' for player '" +
                  game->player_name(i) + "'");
    if (beliefs[i].size() != type_names[i].size())
      raise(errc::dangling_reference,
            "player '" + game->player_name(i) + "' has " +
                std::to_string(type_names[i].size()) + " types but " +
                std::to_string(beliefs[i].size()) + " beliefs");
  }

  TypeStructure ts;
  ts.game_ = std::move(game);
  ts.type_names_ = std::move(type_names);
  ts.beliefs_ = std::move(beliefs);
  ts.cospaces_.reserve(n);
  for (PlayerIx i = 0; i < n; ++i) {
    std::vector<PlayerIx> opponents;
    std::vector<std::uint32_t> strat_counts;
    std::vector<std::uint32_t> type_counts;
    for (PlayerIx j = 0; j < n; ++j) {
      if (j == i) continue;
      opponents.push_back(j);
      strat_counts.push_back(ts.game_->strategy_count(j));
      type_counts.push_back(static_cast<std::uint32_t>(
          ts.type_names_[j].size()));
    }
    ts.cospaces_.emplace_back(i, std::move(opponents), std::move(strat_counts),
                              std::move(type_counts));
  }
  for (PlayerIx i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < ts.beliefs_[i].size(); ++t) {
      if (ts.beliefs_[i][t].ground_size() != ts.cospaces_[i].size())
        raise(errc::dangling_reference,
              "belief of type '" + ts.type_names_[i][t] + "' of player '" +
                  ts.game_->player_name(i) + "' has ground size " +
                  std::to_string(ts.beliefs_[i][t].ground_size()) +
                  ", expected " + std::to_string(ts.cospaces_[i].size()));
    }
  }
  return ts;
}

std::optional<std::uint32_t> TypeStructure::type_index(
    PlayerIx i, std::string_view name) const {
  const auto& names = type_names_[i];
  for (std::size_t k = 0; k < names.size(); ++k)
    if (names[k] == name) return static_cast<std::uint32_t>(k);
  return std::nullopt;
}

const Lps& TypeStructure::belief(PlayerIx i, std::uint32_t type) const {
  if (type >= beliefs_[i].size())
    raise(errc::unknown_type,
          "player '" + game_->player_name(i) + "' has no type index " +
              std::to_string(type));
  return beliefs_[i][type];
}

bool TypeStructure::operator==(const TypeStructure& other) const {
  return *game_ == *other.game_ && type_names_ == other.type_names_ &&
         beliefs_ == other.beliefs_;
}

void require_same_game(const TypeStructure& a, const TypeStructure& b) {
  if (!(a.game() == b.game()))
    raise(errc::mismatched_games,
          "structures are not associated with the same game");
}

Lps marginal_lps(const Lps& belief, const CoSpace& cs) {
  if (belief.ground_size() != cs.size())
    throw std::logic_error("belief ground does not match the co-space");
  return belief.pushforward(cs.strategy_space_size(),
                            cs.strategy_projection_map());
}

}  // namespace hieq
