#include "hieq/hierarchy.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "hieq/error.hpp"

namespace hieq {

// ---------------------------------------------------------------------------
// Partition refinement.
//
// Hierarchy equality is decided without ever materializing the (infinite)
// spaces the hierarchy maps land in. Depth 1 groups types by their
// first-order marginal. For the inductive step, the order-(m+1) belief of a
// type is, up to relabeling, the pushforward of its belief onto pairs
// (opponents' strategy profile, opponents' depth-m class labels): class
// labels at depth m determine the labels at every smaller depth because the
// partitions form a refinement chain. So grouping by that pushforward
// reproduces equality of order-(m+1) hierarchies exactly, and a round that
// changes nothing is stable forever.
// ---------------------------------------------------------------------------

class PartitionBuilder {
 public:
  static HierarchyPartition build(
      std::size_t depth, std::vector<std::uint32_t> first_counts,
      const std::vector<std::vector<std::string>>& keys) {
    HierarchyPartition p;
    p.depth_ = depth;
    p.first_counts_ = std::move(first_counts);
    p.labels_.resize(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      std::map<std::string, std::uint32_t> seen;
      p.labels_[i].reserve(keys[i].size());
      for (const auto& key : keys[i]) {
        auto [it, inserted] =
            seen.emplace(key, static_cast<std::uint32_t>(seen.size()));
        p.labels_[i].push_back(it->second);
      }
    }
    return p;
  }
};

std::size_t HierarchyPartition::class_count(PlayerIx i) const {
  std::uint32_t max_label = 0;
  if (labels_[i].empty()) return 0;
  for (std::uint32_t l : labels_[i]) max_label = std::max(max_label, l);
  return max_label + 1;
}

std::vector<std::vector<TaggedType>> HierarchyPartition::classes(
    PlayerIx i) const {
  std::vector<std::vector<TaggedType>> out(class_count(i));
  for (std::size_t c = 0; c < labels_[i].size(); ++c) {
    TaggedType tt;
    tt.origin = c < first_counts_[i] ? 0 : 1;
    tt.player = i;
    tt.type = static_cast<std::uint32_t>(
        tt.origin == 0 ? c : c - first_counts_[i]);
    out[labels_[i][c]].push_back(tt);
  }
  return out;
}

namespace {

struct Carrier {
  const TypeStructure* structures[2] = {nullptr, nullptr};
  std::size_t count = 1;

  const TypeStructure& at(std::uint8_t origin) const {
    return *structures[origin];
  }
  std::size_t players() const {
    return structures[0]->game().num_players();
  }
};

Carrier make_carrier(const TypeStructure& a, const TypeStructure* b) {
  if (b != nullptr) require_same_game(a, *b);
  Carrier c;
  c.structures[0] = &a;
  c.structures[1] = b;
  c.count = b == nullptr ? 1 : 2;
  return c;
}

std::vector<std::uint32_t> first_counts_of(const Carrier& c) {
  std::vector<std::uint32_t> out(c.players());
  for (PlayerIx i = 0; i < c.players(); ++i)
    out[i] = c.structures[0]->type_count(i);
  return out;
}

// Canonical text of a first-order marginal; equal strings iff equal LPSs.
std::string depth1_key(const TypeStructure& ts, PlayerIx i, std::uint32_t t) {
  Lps marg = marginal_lps(ts.belief(i, t), ts.cospace(i));
  std::string key;
  for (const auto& level : marg.levels()) {
    key += '|';
    for (const auto& [index, mass] : level.entries()) {
      key += std::to_string(index);
      key += ':';
      key += mass.str();
      key += ';';
    }
  }
  return key;
}

// Canonical text of the belief pushed onto pairs of (co-strategy rank,
// opponents' depth-m class labels).
std::string step_key(const TypeStructure& ts, std::uint8_t origin, PlayerIx i,
                     std::uint32_t t, const HierarchyPartition& prev) {
  const CoSpace& cs = ts.cospace(i);
  const Lps& belief = ts.belief(i, t);

  std::vector<std::string> cell(cs.size());
  std::vector<std::uint32_t> strats(cs.arity());
  std::vector<std::uint32_t> types(cs.arity());
  for (std::size_t r = 0; r < cs.size(); ++r) {
    cs.unrank(r, strats, types);
    std::string ck = std::to_string(cs.strategy_of(r));
    for (std::size_t k = 0; k < cs.arity(); ++k) {
      ck += ',';
      ck += std::to_string(prev.label(origin, cs.opponents()[k], types[k]));
    }
    cell[r] = std::move(ck);
  }

  std::string key;
  for (const auto& level : belief.levels()) {
    std::map<std::string, Rational> acc;
    for (const auto& [r, mass] : level.entries()) acc[cell[r]] += mass;
    key += '|';
    for (const auto& [ck, mass] : acc) {
      key += ck;
      key += '=';
      key += mass.str();
      key += ';';
    }
  }
  return key;
}

HierarchyPartition depth1_partition(const Carrier& c) {
  std::vector<std::vector<std::string>> keys(c.players());
  for (PlayerIx i = 0; i < c.players(); ++i) {
    for (std::size_t origin = 0; origin < c.count; ++origin) {
      const TypeStructure& ts = c.at(static_cast<std::uint8_t>(origin));
      for (std::uint32_t t = 0; t < ts.type_count(i); ++t)
        keys[i].push_back(depth1_key(ts, i, t));
    }
  }
  return PartitionBuilder::build(1, first_counts_of(c), keys);
}

HierarchyPartition step_partition(const Carrier& c,
                                  const HierarchyPartition& prev) {
  std::vector<std::vector<std::string>> keys(c.players());
  for (PlayerIx i = 0; i < c.players(); ++i) {
    for (std::size_t origin = 0; origin < c.count; ++origin) {
      const TypeStructure& ts = c.at(static_cast<std::uint8_t>(origin));
      for (std::uint32_t t = 0; t < ts.type_count(i); ++t)
        keys[i].push_back(
            step_key(ts, static_cast<std::uint8_t>(origin), i, t, prev));
    }
  }
  return PartitionBuilder::build(prev.depth() + 1, first_counts_of(c), keys);
}

HierarchyPartition refine_impl(const Carrier& c, std::size_t depth) {
  if (depth < 1)
    throw std::logic_error("partition depth must be at least 1");
  HierarchyPartition p = depth1_partition(c);
  for (std::size_t d = 2; d <= depth; ++d) p = step_partition(c, p);
  return p;
}

std::pair<HierarchyPartition, std::size_t> stable_impl(const Carrier& c) {
  HierarchyPartition current = depth1_partition(c);
  for (;;) {
    HierarchyPartition next = step_partition(c, current);
    if (next.same_grouping(current)) return {current, current.depth()};
    current = std::move(next);
  }
}

}  // namespace

HierarchyPartition refine(const TypeStructure& a, std::size_t depth) {
  return refine_impl(make_carrier(a, nullptr), depth);
}

HierarchyPartition refine(const TypeStructure& a, const TypeStructure& b,
                          std::size_t depth) {
  return refine_impl(make_carrier(a, &b), depth);
}

std::pair<HierarchyPartition, std::size_t> stable_partition(
    const TypeStructure& a) {
  return stable_impl(make_carrier(a, nullptr));
}

std::pair<HierarchyPartition, std::size_t> stable_partition(
    const TypeStructure& a, const TypeStructure& b) {
  return stable_impl(make_carrier(a, &b));
}

// ---------------------------------------------------------------------------
// Explicit hierarchy terms.
// ---------------------------------------------------------------------------

int compare(const TermPoint& a, const TermPoint& b) {
  if (a.base.size() != b.base.size())
    return a.base.size() < b.base.size() ? -1 : 1;
  if (a.base.empty())
    return a.co_strategy == b.co_strategy
               ? 0
               : (a.co_strategy < b.co_strategy ? -1 : 1);
  if (int c = compare(a.base.front(), b.base.front())) return c;
  if (a.opponent_terms.size() != b.opponent_terms.size())
    return a.opponent_terms.size() < b.opponent_terms.size() ? -1 : 1;
  for (std::size_t k = 0; k < a.opponent_terms.size(); ++k)
    if (int c = compare(a.opponent_terms[k], b.opponent_terms[k])) return c;
  return 0;
}

namespace {

int compare_rational(const Rational& a, const Rational& b) {
  if (a == b) return 0;
  return a < b ? -1 : 1;
}

int compare_measure(const HierarchyTerm::TermMeasure& a,
                    const HierarchyTerm::TermMeasure& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t e = 0; e < a.size(); ++e) {
    if (int c = compare(a[e].first, b[e].first)) return c;
    if (int c = compare_rational(a[e].second, b[e].second)) return c;
  }
  return 0;
}

int compare_lps(const HierarchyTerm::TermLps& a,
                const HierarchyTerm::TermLps& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t l = 0; l < a.size(); ++l)
    if (int c = compare_measure(a[l], b[l])) return c;
  return 0;
}

struct TermPointLess {
  bool operator()(const TermPoint& a, const TermPoint& b) const {
    return compare(a, b) < 0;
  }
};

}  // namespace

int compare(const HierarchyTerm& a, const HierarchyTerm& b) {
  if (a.orders.size() != b.orders.size())
    return a.orders.size() < b.orders.size() ? -1 : 1;
  for (std::size_t k = 0; k < a.orders.size(); ++k)
    if (int c = compare_lps(a.orders[k], b.orders[k])) return c;
  return 0;
}

bool operator==(const TermPoint& a, const TermPoint& b) {
  return compare(a, b) == 0;
}

bool operator==(const HierarchyTerm& a, const HierarchyTerm& b) {
  return compare(a, b) == 0;
}

namespace {

// Shared sub-term cache; terms of the same type at the same depth recur in
// every ground element that names the type.
struct TermBuilder {
  const TypeStructure& ts;
  std::map<std::tuple<PlayerIx, std::uint32_t, std::size_t>, HierarchyTerm>
      memo;

  const HierarchyTerm& get(PlayerIx player, std::uint32_t type,
                           std::size_t depth) {
    auto key = std::make_tuple(player, type, depth);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const Lps& belief = ts.belief(player, type);
    const CoSpace& cs = ts.cospace(player);

    HierarchyTerm term;
    std::vector<TermPoint> points(cs.size());
    for (std::size_t r = 0; r < cs.size(); ++r)
      points[r].co_strategy = static_cast<std::uint32_t>(cs.strategy_of(r));
    term.orders.push_back(push_levels(belief, points));

    std::vector<std::uint32_t> strats(cs.arity());
    std::vector<std::uint32_t> types(cs.arity());
    for (std::size_t d = 2; d <= depth; ++d) {
      std::vector<TermPoint> next(cs.size());
      for (std::size_t r = 0; r < cs.size(); ++r) {
        cs.unrank(r, strats, types);
        next[r].base.push_back(points[r]);
        next[r].opponent_terms.reserve(cs.arity());
        for (std::size_t k = 0; k < cs.arity(); ++k)
          next[r].opponent_terms.push_back(
              get(cs.opponents()[k], types[k], d - 1));
      }
      points = std::move(next);
      term.orders.push_back(push_levels(belief, points));
    }
    return memo.emplace(key, std::move(term)).first->second;
  }

  static HierarchyTerm::TermLps push_levels(
      const Lps& belief, const std::vector<TermPoint>& points) {
    HierarchyTerm::TermLps lps;
    lps.reserve(belief.length());
    for (const auto& level : belief.levels()) {
      std::map<TermPoint, Rational, TermPointLess> acc;
      for (const auto& [r, mass] : level.entries()) acc[points[r]] += mass;
      HierarchyTerm::TermMeasure measure;
      measure.reserve(acc.size());
      for (auto& [point, mass] : acc) measure.emplace_back(point, mass);
      lps.push_back(std::move(measure));
    }
    return lps;
  }
};

}  // namespace

HierarchyTerm explicit_hierarchy(const TypeStructure& ts, PlayerIx player,
                                 std::uint32_t type, std::size_t depth) {
  if (depth < 1 || depth > kMaxTermDepth)
    raise(errc::depth_too_large,
          "explicit hierarchies support depths 1.." +
              std::to_string(kMaxTermDepth) + ", got " +
              std::to_string(depth));
  if (type >= ts.type_count(player))
    raise(errc::unknown_type,
          "player '" + ts.game().player_name(player) + "' has no type index " +
              std::to_string(type));
  TermBuilder builder{ts, {}};
  return builder.get(player, type, depth);
}

HierarchyTerm::TermLps marginalize_onto_base(
    const HierarchyTerm::TermLps& lps) {
  HierarchyTerm::TermLps out;
  out.reserve(lps.size());
  for (const auto& measure : lps) {
    std::map<TermPoint, Rational, TermPointLess> acc;
    for (const auto& [point, mass] : measure) {
      if (point.base.empty())
        throw std::logic_error("marginalizing an order-1 term level");
      acc[point.base.front()] += mass;
    }
    HierarchyTerm::TermMeasure reduced;
    reduced.reserve(acc.size());
    for (auto& [point, mass] : acc) reduced.emplace_back(point, mass);
    out.push_back(std::move(reduced));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Morphisms.
// ---------------------------------------------------------------------------

std::optional<Morphism> find_morphism(const TypeStructure& from,
                                      const TypeStructure& to) {
  auto [partition, depth] = stable_partition(from, to);
  (void)depth;
  Morphism phi;
  phi.maps.resize(from.game().num_players());
  for (PlayerIx i = 0; i < from.game().num_players(); ++i) {
    phi.maps[i].reserve(from.type_count(i));
    for (std::uint32_t t = 0; t < from.type_count(i); ++t) {
      std::uint32_t want = partition.label(0, i, t);
      bool found = false;
      for (std::uint32_t u = 0; u < to.type_count(i); ++u) {
        if (partition.label(1, i, u) == want) {
          phi.maps[i].push_back(u);
          found = true;
          break;
        }
      }
      if (!found) return std::nullopt;
    }
  }
  return phi;
}

bool is_hierarchy_morphism(const TypeStructure& from, const TypeStructure& to,
                           const Morphism& phi) {
  if (phi.maps.size() != from.game().num_players())
    throw std::logic_error("morphism does not cover every player");
  auto [partition, depth] = stable_partition(from, to);
  (void)depth;
  for (PlayerIx i = 0; i < from.game().num_players(); ++i) {
    if (phi.maps[i].size() != from.type_count(i))
      throw std::logic_error("morphism is not total on the type set");
    for (std::uint32_t t = 0; t < from.type_count(i); ++t) {
      std::uint32_t image = phi.maps[i][t];
      if (image >= to.type_count(i))
        throw std::logic_error("morphism image outside the target type set");
      if (partition.label(0, i, t) != partition.label(1, i, image))
        return false;
    }
  }
  return true;
}

Equivalence hierarchy_equivalent(const TypeStructure& a,
                                 const TypeStructure& b) {
  Equivalence result;
  result.forward = find_morphism(a, b);
  result.backward = find_morphism(b, a);
  result.equivalent = result.forward.has_value() && result.backward.has_value();
  return result;
}

}  // namespace hieq
