#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hieq/game.hpp"
#include "hieq/measure.hpp"

namespace hieq {

/// Enumeration of one player's view of the opponents: the ground set
/// S_{-i} x T_{-i} of strategy-type profiles, plus the matching
/// strategy-only ground S_{-i}. Ranks are mixed radix over opponents in
/// player order, last opponent least significant; within one opponent a
/// pair (s, t) ranks as s * type_count + t.
class CoSpace {
 public:
  CoSpace() = default;
  CoSpace(PlayerIx player, std::vector<PlayerIx> opponents,
          std::vector<std::uint32_t> strat_counts,
          std::vector<std::uint32_t> type_counts);

  PlayerIx player() const { return player_; }
  const std::vector<PlayerIx>& opponents() const { return opponents_; }
  std::size_t arity() const { return opponents_.size(); }

  std::size_t size() const { return size_; }
  std::size_t strategy_space_size() const { return strategy_size_; }

  std::size_t rank(std::span<const std::uint32_t> strats,
                   std::span<const std::uint32_t> types) const;
  void unrank(std::size_t rank, std::span<std::uint32_t> strats,
              std::span<std::uint32_t> types) const;

  /// Rank in S_{-i} of the strategy part of a ground element.
  std::size_t strategy_of(std::size_t rank) const;

  std::size_t strategy_rank(std::span<const std::uint32_t> strats) const;
  void strategy_unrank(std::size_t rank, std::span<std::uint32_t> strats) const;

  /// Projection map usable with Measure::pushforward, ground -> S_{-i}.
  std::vector<std::uint32_t> strategy_projection_map() const;

  /// Full game profile rank obtained by inserting the player's own
  /// strategy into a co-strategy profile.
  std::size_t game_profile_rank(const Game& game, std::uint32_t own_strategy,
                                std::size_t co_strategy_rank) const;

  std::uint32_t strat_count(std::size_t k) const { return strat_counts_[k]; }
  std::uint32_t type_count(std::size_t k) const { return type_counts_[k]; }

  bool operator==(const CoSpace&) const = default;

 private:
  PlayerIx player_ = 0;
  std::vector<PlayerIx> opponents_;
  std::vector<std::uint32_t> strat_counts_;
  std::vector<std::uint32_t> type_counts_;
  std::size_t size_ = 1;
  std::size_t strategy_size_ = 1;
};

/// A finite lexicographic type structure over a game: per-player type
/// sets and, for every type, one belief LPS over the opponents'
/// strategy-type profiles. Immutable once created; create() validates
/// every invariant, so all downstream operations can assume them.
class TypeStructure {
 public:
  static TypeStructure create(std::shared_ptr<const Game> game,
                              std::vector<std::vector<std::string>> type_names,
                              std::vector<std::vector<Lps>> beliefs);

  const Game& game() const { return *game_; }
  const std::shared_ptr<const Game>& game_ptr() const { return game_; }

  std::uint32_t type_count(PlayerIx i) const {
    return static_cast<std::uint32_t>(type_names_[i].size());
  }
  const std::vector<std::string>& type_names(PlayerIx i) const {
    return type_names_[i];
  }
  const std::string& type_name(PlayerIx i, std::uint32_t t) const {
    return type_names_[i][t];
  }
  std::optional<std::uint32_t> type_index(PlayerIx i,
                                          std::string_view name) const;

  const Lps& belief(PlayerIx i, std::uint32_t type) const;

  const CoSpace& cospace(PlayerIx i) const { return cospaces_[i]; }

  /// |S_i x T_i| for one player.
  std::size_t pair_count(PlayerIx i) const {
    return game_->strategy_count(i) * type_names_[i].size();
  }

  /// Value equality, including the underlying game.
  bool operator==(const TypeStructure& other) const;

 private:
  std::shared_ptr<const Game> game_;
  std::vector<std::vector<std::string>> type_names_;
  std::vector<std::vector<Lps>> beliefs_;
  std::vector<CoSpace> cospaces_;
};

/// Throws MismatchedGames unless both structures are over equal games.
void require_same_game(const TypeStructure& a, const TypeStructure& b);

/// First-order marginal: pushes every level of a belief over
/// S_{-i} x T_{-i} forward onto the strategy coordinates S_{-i}.
/// Preserves LPS length.
Lps marginal_lps(const Lps& belief, const CoSpace& cs);

}  // namespace hieq
