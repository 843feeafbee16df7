#include "hieq/measure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "hieq/error.hpp"

namespace hieq {

Measure Measure::from_entries(std::size_t ground_size,
                              std::vector<Entry> entries) {
  std::map<std::uint32_t, Rational> acc;
  for (const auto& [index, mass] : entries) {
    if (index >= ground_size)
      raise(errc::dangling_reference,
            "measure entry index " + std::to_string(index) +
                " outside ground of size " + std::to_string(ground_size));
    if (mass.is_negative())
      raise(errc::non_probability, "negative mass " + mass.str());
    acc[index] += mass;
  }
  Measure m;
  m.ground_size_ = ground_size;
  Rational total(0);
  for (const auto& [index, mass] : acc) {
    total += mass;
    if (!mass.is_zero()) m.entries_.emplace_back(index, mass);
  }
  if (!(total == Rational(1)))
    raise(errc::non_probability,
          "masses sum to " + total.str() + ", expected 1/1");
  return m;
}

Measure Measure::point_mass(std::size_t ground_size, std::uint32_t at) {
  return from_entries(ground_size, {{at, Rational(1)}});
}

Rational Measure::at(std::uint32_t index) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const Entry& e, std::uint32_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return Rational(0);
}

Rational Measure::mass_on(const std::vector<bool>& member) const {
  Rational total(0);
  for (const auto& [index, mass] : entries_)
    if (member[index]) total += mass;
  return total;
}

Measure Measure::pushforward(std::size_t new_ground,
                             const std::vector<std::uint32_t>& map) const {
  std::map<std::uint32_t, Rational> acc;
  for (const auto& [index, mass] : entries_) acc[map[index]] += mass;
  Measure m;
  m.ground_size_ = new_ground;
  for (const auto& [index, mass] : acc) {
    if (index >= new_ground)
      throw std::logic_error("pushforward image outside new ground");
    m.entries_.emplace_back(index, mass);
  }
  return m;
}

std::vector<bool> Measure::support() const {
  std::vector<bool> in(ground_size_, false);
  for (const auto& [index, mass] : entries_) in[index] = true;
  return in;
}

Lps Lps::of(std::vector<Measure> levels) {
  if (levels.empty()) raise(errc::empty_lps, "an LPS needs at least one level");
  for (const auto& level : levels)
    if (level.ground_size() != levels.front().ground_size())
      throw std::logic_error("LPS levels over different ground sets");
  Lps lps;
  lps.levels_ = std::move(levels);
  return lps;
}

Lps Lps::pushforward(std::size_t new_ground,
                     const std::vector<std::uint32_t>& map) const {
  std::vector<Measure> levels;
  levels.reserve(levels_.size());
  for (const auto& level : levels_)
    levels.push_back(level.pushforward(new_ground, map));
  return Lps::of(std::move(levels));
}

std::vector<bool> Lps::support() const {
  std::vector<bool> in(ground_size(), false);
  for (const auto& level : levels_)
    for (const auto& [index, mass] : level.entries()) in[index] = true;
  return in;
}

bool Lps::full_support() const {
  auto in = support();
  return std::all_of(in.begin(), in.end(), [](bool b) { return b; });
}

}  // namespace hieq
