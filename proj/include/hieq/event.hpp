#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hieq/structure.hpp"

namespace hieq {

/// Subset of one player's strategy-type pairs S_i x T_i. A pair (s, t)
/// ranks as s * type_count + t; iteration in rank order is the
/// declaration order used by every report.
class Event {
 public:
  Event() = default;
  Event(PlayerIx player, std::uint32_t strat_count, std::uint32_t type_count,
        bool full = false);

  static Event full(const TypeStructure& ts, PlayerIx i);
  static Event empty(const TypeStructure& ts, PlayerIx i);

  PlayerIx player() const { return player_; }
  std::uint32_t strat_count() const { return strat_count_; }
  std::uint32_t type_count() const { return type_count_; }
  std::size_t universe_size() const { return bits_.size(); }

  bool contains(std::uint32_t s, std::uint32_t t) const {
    return bits_[rank(s, t)];
  }
  bool contains_rank(std::size_t r) const { return bits_[r]; }
  void insert(std::uint32_t s, std::uint32_t t) { bits_[rank(s, t)] = true; }
  void erase(std::uint32_t s, std::uint32_t t) { bits_[rank(s, t)] = false; }

  std::size_t size() const;
  bool is_empty() const { return size() == 0; }

  Event intersect(const Event& other) const;
  bool subset_of(const Event& other) const;

  /// Members as (strategy, type) pairs in rank order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs() const;

  /// Sorted strategy indices appearing in the event.
  std::vector<std::uint32_t> strategy_projection() const;

  std::size_t rank(std::uint32_t s, std::uint32_t t) const {
    return std::size_t{s} * type_count_ + t;
  }

  bool operator==(const Event&) const = default;

 private:
  PlayerIx player_ = 0;
  std::uint32_t strat_count_ = 0;
  std::uint32_t type_count_ = 0;
  std::vector<bool> bits_;
};

/// Subset of one player's co-space S_{-i} x T_{-i}; the ground events of
/// the belief operator live here.
class JointEvent {
 public:
  JointEvent() = default;
  JointEvent(CoSpace cospace, bool full = false);

  static JointEvent full(const TypeStructure& ts, PlayerIx i);
  static JointEvent empty(const TypeStructure& ts, PlayerIx i);

  const CoSpace& cospace() const { return cospace_; }
  std::size_t universe_size() const { return bits_.size(); }

  bool contains(std::size_t rank) const { return bits_[rank]; }
  void insert(std::size_t rank) { bits_[rank] = true; }
  void erase(std::size_t rank) { bits_[rank] = false; }

  const std::vector<bool>& bits() const { return bits_; }

  std::size_t size() const;
  bool is_empty() const { return size() == 0; }

  /// Sorted co-strategy-profile ranks appearing in the event.
  std::vector<std::size_t> strategy_projection() const;

  bool operator==(const JointEvent&) const = default;

 private:
  CoSpace cospace_;
  std::vector<bool> bits_;
};

/// Cartesian product of per-opponent events, reordered into the
/// co-space of `player`. `parts` must hold one event per opponent of
/// `player`, in player order.
JointEvent product_event(const TypeStructure& ts, PlayerIx player,
                         std::span<const Event> parts);

/// Sorted strategy indices appearing in an event.
std::vector<std::uint32_t> strategy_projection(const Event& e);

}  // namespace hieq
