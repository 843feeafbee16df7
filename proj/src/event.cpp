#include "hieq/event.hpp"

#include <algorithm>
#include <stdexcept>

namespace hieq {

Event::Event(PlayerIx player, std::uint32_t strat_count,
             std::uint32_t type_count, bool full)
    : player_(player),
      strat_count_(strat_count),
      type_count_(type_count),
      bits_(std::size_t{strat_count} * type_count, full) {}

Event Event::full(const TypeStructure& ts, PlayerIx i) {
  return Event(i, ts.game().strategy_count(i), ts.type_count(i), true);
}

Event Event::empty(const TypeStructure& ts, PlayerIx i) {
  return Event(i, ts.game().strategy_count(i), ts.type_count(i), false);
}

std::size_t Event::size() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

Event Event::intersect(const Event& other) const {
  if (other.bits_.size() != bits_.size() || other.player_ != player_)
    throw std::logic_error("intersecting events of different players");
  Event out = *this;
  for (std::size_t r = 0; r < bits_.size(); ++r)
    out.bits_[r] = bits_[r] && other.bits_[r];
  return out;
}

bool Event::subset_of(const Event& other) const {
  if (other.bits_.size() != bits_.size() || other.player_ != player_)
    throw std::logic_error("comparing events of different players");
  for (std::size_t r = 0; r < bits_.size(); ++r)
    if (bits_[r] && !other.bits_[r]) return false;
  return true;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Event::pairs() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::size_t r = 0; r < bits_.size(); ++r)
    if (bits_[r])
      out.emplace_back(static_cast<std::uint32_t>(r / type_count_),
                       static_cast<std::uint32_t>(r % type_count_));
  return out;
}

std::vector<std::uint32_t> Event::strategy_projection() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < strat_count_; ++s) {
    for (std::uint32_t t = 0; t < type_count_; ++t) {
      if (bits_[rank(s, t)]) {
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

JointEvent::JointEvent(CoSpace cospace, bool full)
    : cospace_(std::move(cospace)), bits_(cospace_.size(), full) {}

JointEvent JointEvent::full(const TypeStructure& ts, PlayerIx i) {
  return JointEvent(ts.cospace(i), true);
}

JointEvent JointEvent::empty(const TypeStructure& ts, PlayerIx i) {
  return JointEvent(ts.cospace(i), false);
}

std::size_t JointEvent::size() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<std::size_t> JointEvent::strategy_projection() const {
  std::vector<bool> seen(cospace_.strategy_space_size(), false);
  for (std::size_t r = 0; r < bits_.size(); ++r)
    if (bits_[r]) seen[cospace_.strategy_of(r)] = true;
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < seen.size(); ++s)
    if (seen[s]) out.push_back(s);
  return out;
}

JointEvent product_event(const TypeStructure& ts, PlayerIx player,
                         std::span<const Event> parts) {
  const CoSpace& cs = ts.cospace(player);
  if (parts.size() != cs.arity())
    throw std::logic_error("product_event needs one part per opponent");
  for (std::size_t k = 0; k < parts.size(); ++k)
    if (parts[k].player() != cs.opponents()[k])
      throw std::logic_error("product_event parts out of player order");

  JointEvent out(cs, false);
  std::vector<std::uint32_t> strats(cs.arity());
  std::vector<std::uint32_t> types(cs.arity());
  for (std::size_t r = 0; r < cs.size(); ++r) {
    cs.unrank(r, strats, types);
    bool in = true;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (!parts[k].contains(strats[k], types[k])) {
        in = false;
        break;
      }
    }
    if (in) out.insert(r);
  }
  return out;
}

std::vector<std::uint32_t> strategy_projection(const Event& e) {
  return e.strategy_projection();
}

}  // namespace hieq
