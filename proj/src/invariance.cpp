#include "hieq/invariance.hpp"

#include <algorithm>

#include "hieq/error.hpp"

namespace hieq {

namespace {

const std::vector<Event>& level_or_fixpoint(const RcbrTrace& trace,
                                            std::size_t m) {
  return m < trace.levels.size() ? trace.levels[m] : trace.fixpoint();
}

}  // namespace

InvarianceReport verify_invariance(const TypeStructure& first,
                                   const TypeStructure& second) {
  require_same_game(first, second);
  RcbrTrace a = rcbr_iterate(first);
  RcbrTrace b = rcbr_iterate(second);

  InvarianceReport report;
  report.stabilized_first = a.stabilized_at;
  report.stabilized_second = b.stabilized_at;
  report.verdict = true;

  const std::size_t players = first.game().num_players();
  const std::size_t top = std::max(a.stabilized_at, b.stabilized_at);
  for (std::size_t m = 0; m <= top; ++m) {
    std::vector<InvarianceReport::Cell> row;
    row.reserve(players);
    for (PlayerIx i = 0; i < players; ++i) {
      InvarianceReport::Cell cell;
      cell.first = level_or_fixpoint(a, m)[i].strategy_projection();
      cell.second = level_or_fixpoint(b, m)[i].strategy_projection();
      cell.equal = cell.first == cell.second;
      report.verdict = report.verdict && cell.equal;
      row.push_back(std::move(cell));
    }
    report.levels.push_back(std::move(row));
  }
  return report;
}

Event event_image(const Event& e, const TypeStructure& target,
                  const Morphism& phi) {
  Event out = Event::empty(target, e.player());
  for (const auto& [s, t] : e.pairs()) out.insert(s, phi.maps[e.player()][t]);
  return out;
}

TransportReport transport_check(const TypeStructure& first,
                                const TypeStructure& second,
                                const Morphism& phi) {
  require_same_game(first, second);
  if (!is_hierarchy_morphism(first, second, phi))
    raise(errc::invalid_morphism,
          "the supplied map does not preserve belief hierarchies");

  RcbrTrace a = rcbr_iterate(first);
  RcbrTrace b = rcbr_iterate(second);

  TransportReport report;
  report.ok = true;
  const std::size_t players = first.game().num_players();
  const std::size_t top = std::max(a.stabilized_at, b.stabilized_at);
  for (std::size_t m = 0; m <= top; ++m) {
    std::vector<TransportReport::Cell> row;
    row.reserve(players);
    for (PlayerIx i = 0; i < players; ++i) {
      const Event& mine = level_or_fixpoint(a, m)[i];
      const Event& theirs = level_or_fixpoint(b, m)[i];
      Event image = event_image(mine, second, phi);
      TransportReport::Cell cell;
      cell.image_included = image.subset_of(theirs);
      cell.projection_identity =
          image.strategy_projection() == mine.strategy_projection();
      report.ok = report.ok && cell.image_included && cell.projection_identity;
      row.push_back(cell);
    }
    report.levels.push_back(std::move(row));
  }
  return report;
}

}  // namespace hieq
