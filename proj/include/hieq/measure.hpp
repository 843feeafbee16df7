#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hieq/rational.hpp"

namespace hieq {

/// Probability measure with finite support over the ground set
/// {0, ..., ground_size-1}. Stored sparsely: entries are sorted by index
/// and never carry zero mass, so operator== is exact value equality.
class Measure {
 public:
  using Entry = std::pair<std::uint32_t, Rational>;

  /// Validates: indices in range, masses nonnegative, total mass exactly 1.
  /// Zero-mass entries are accepted and dropped.
  static Measure from_entries(std::size_t ground_size,
                              std::vector<Entry> entries);

  static Measure point_mass(std::size_t ground_size, std::uint32_t at);

  std::size_t ground_size() const { return ground_size_; }
  const std::vector<Entry>& entries() const { return entries_; }

  /// Mass of a single ground element (zero if unsupported).
  Rational at(std::uint32_t index) const;

  /// Mass of the subset flagged in `member` (size == ground_size).
  Rational mass_on(const std::vector<bool>& member) const;

  /// Image measure under `map` (size == ground_size, values < new_ground).
  Measure pushforward(std::size_t new_ground,
                      const std::vector<std::uint32_t>& map) const;

  /// Membership bitmap of the support.
  std::vector<bool> support() const;

  bool operator==(const Measure&) const = default;

 private:
  std::size_t ground_size_ = 0;
  std::vector<Entry> entries_;
};

/// Lexicographic probability system: a nonempty ordered list of measures
/// over one common ground set. Earlier levels take priority.
class Lps {
 public:
  static Lps of(std::vector<Measure> levels);

  std::size_t length() const { return levels_.size(); }
  std::size_t ground_size() const { return levels_.front().ground_size(); }
  const Measure& level(std::size_t l) const { return levels_[l]; }
  const std::vector<Measure>& levels() const { return levels_; }

  Lps pushforward(std::size_t new_ground,
                  const std::vector<std::uint32_t>& map) const;

  /// Union of the level supports.
  std::vector<bool> support() const;

  /// True when the union of supports covers the whole ground set.
  bool full_support() const;

  bool operator==(const Lps&) const = default;

 private:
  std::vector<Measure> levels_;
};

}  // namespace hieq
