#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hieq/structure.hpp"

namespace hieq {

/// A type drawn from one of (up to) two structures under comparison.
struct TaggedType {
  std::uint8_t origin = 0;  // 0 = first structure, 1 = second
  PlayerIx player = 0;
  std::uint32_t type = 0;

  bool operator==(const TaggedType&) const = default;
};

/// Per-player partition of tagged types by equality of belief
/// hierarchies up to a given depth. The carrier for player i lists the
/// first structure's types followed by the second's; labels are assigned
/// in order of first appearance along the carrier, so partitions with
/// the same grouping compare equal.
class HierarchyPartition {
 public:
  std::size_t depth() const { return depth_; }

  std::size_t carrier_size(PlayerIx i) const { return labels_[i].size(); }
  std::uint32_t first_count(PlayerIx i) const { return first_counts_[i]; }

  std::size_t carrier_index(std::uint8_t origin, PlayerIx player,
                            std::uint32_t type) const {
    return origin == 0 ? type : first_counts_[player] + type;
  }
  std::uint32_t label(std::uint8_t origin, PlayerIx player,
                      std::uint32_t type) const {
    return labels_[player][carrier_index(origin, player, type)];
  }
  bool same_class(const TaggedType& a, const TaggedType& b) const {
    return a.player == b.player &&
           label(a.origin, a.player, a.type) == label(b.origin, b.player, b.type);
  }

  std::size_t class_count(PlayerIx i) const;

  /// Classes of one player in label order; members in carrier order.
  std::vector<std::vector<TaggedType>> classes(PlayerIx i) const;

  /// Same grouping at possibly different depths.
  bool same_grouping(const HierarchyPartition& other) const {
    return labels_ == other.labels_;
  }

  bool operator==(const HierarchyPartition&) const = default;

 private:
  friend class PartitionBuilder;
  std::size_t depth_ = 0;
  std::vector<std::vector<std::uint32_t>> labels_;
  std::vector<std::uint32_t> first_counts_;
};

/// Partition of the types of one or two structures (over one game) by
/// equality of hierarchies of orders 1..depth. Throws MismatchedGames.
HierarchyPartition refine(const TypeStructure& a, std::size_t depth);
HierarchyPartition refine(const TypeStructure& a, const TypeStructure& b,
                          std::size_t depth);

/// Refines until the partition stops changing; returns the stable
/// partition and the least depth m* with partition(m*) = partition(m*+1).
/// Beyond m* every depth yields the same grouping, so the result decides
/// hierarchy equality at every order.
std::pair<HierarchyPartition, std::size_t> stable_partition(
    const TypeStructure& a);
std::pair<HierarchyPartition, std::size_t> stable_partition(
    const TypeStructure& a, const TypeStructure& b);

struct HierarchyTerm;

/// Ground element of an order-k belief: a bare co-strategy profile at
/// k = 1; deeper, the order-(k-1) element paired with the opponents'
/// depth-(k-1) terms.
struct TermPoint {
  std::uint32_t co_strategy = 0;
  std::vector<TermPoint> base;                  // empty at depth 1
  std::vector<HierarchyTerm> opponent_terms;    // empty at depth 1
};

/// The literal nested representation of a type's hierarchy up to a small
/// depth: orders[k-1] is the order-k belief, an LPS whose measures list
/// (ground element, mass) entries sorted by ground element.
struct HierarchyTerm {
  using Entry = std::pair<TermPoint, Rational>;
  using TermMeasure = std::vector<Entry>;
  using TermLps = std::vector<TermMeasure>;

  std::vector<TermLps> orders;
};

int compare(const TermPoint& a, const TermPoint& b);
int compare(const HierarchyTerm& a, const HierarchyTerm& b);
bool operator==(const TermPoint& a, const TermPoint& b);
bool operator==(const HierarchyTerm& a, const HierarchyTerm& b);

/// Terms blow up quickly with depth and exist for cross-checking the
/// partition route, so the depth is capped.
inline constexpr std::size_t kMaxTermDepth = 3;

/// Builds the explicit hierarchy of one type to the given depth
/// (1 <= depth <= kMaxTermDepth, else DepthTooLarge).
HierarchyTerm explicit_hierarchy(const TypeStructure& ts, PlayerIx player,
                                 std::uint32_t type, std::size_t depth);

/// Marginalizes an order-(k+1) LPS onto its order-k ground by dropping
/// the newest opponent terms from every ground element.
HierarchyTerm::TermLps marginalize_onto_base(const HierarchyTerm::TermLps& lps);

/// Per-player total map between the type sets of two structures.
struct Morphism {
  std::vector<std::vector<std::uint32_t>> maps;  // maps[i][t] = image type

  bool operator==(const Morphism&) const = default;
};

/// A hierarchy-preserving map from `from` into `to`, if one exists: each
/// type is sent to the first type of `to` (in declaration order) with the
/// same hierarchy. Throws MismatchedGames.
std::optional<Morphism> find_morphism(const TypeStructure& from,
                                      const TypeStructure& to);

/// True iff phi preserves hierarchies at every order.
bool is_hierarchy_morphism(const TypeStructure& from, const TypeStructure& to,
                           const Morphism& phi);

struct Equivalence {
  bool equivalent = false;
  std::optional<Morphism> forward;   // first -> second
  std::optional<Morphism> backward;  // second -> first
};

/// Hierarchy-equivalence: morphisms exist in both directions; returns
/// both witnesses on success.
Equivalence hierarchy_equivalent(const TypeStructure& a,
                                 const TypeStructure& b);

}  // namespace hieq
