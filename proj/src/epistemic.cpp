#include "hieq/epistemic.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "hieq/error.hpp"

namespace hieq {

bool cautiously_believed_at_level(const Lps& belief, const JointEvent& E,
                                  std::size_t m) {
  if (E.is_empty())
    raise(errc::empty_event, "cautious belief is defined for nonempty events");
  if (m < 1 || m > belief.length())
    raise(errc::level_out_of_range,
          "level " + std::to_string(m) + " outside 1.." +
              std::to_string(belief.length()));
  if (belief.ground_size() != E.universe_size())
    throw std::logic_error("belief and event over different grounds");

  // (i) mass exactly 1 on E at every level up to m
  for (std::size_t l = 0; l < m; ++l)
    if (!(belief.level(l).mass_on(E.bits()) == Rational(1))) return false;

  // (ii) every cylinder meeting E carries positive mass at some level <= m
  const CoSpace& cs = E.cospace();
  std::vector<char> meets(cs.strategy_space_size(), 0);
  for (std::size_t r = 0; r < E.universe_size(); ++r)
    if (E.contains(r)) meets[cs.strategy_of(r)] = 1;
  std::vector<char> covered(cs.strategy_space_size(), 0);
  for (std::size_t l = 0; l < m; ++l)
    for (const auto& [r, mass] : belief.level(l).entries())
      if (E.contains(r)) covered[cs.strategy_of(r)] = 1;
  for (std::size_t s = 0; s < meets.size(); ++s)
    if (meets[s] && !covered[s]) return false;
  return true;
}

std::optional<std::size_t> cautiously_believes(const Lps& belief,
                                               const JointEvent& E) {
  if (E.is_empty())
    raise(errc::empty_event, "cautious belief is defined for nonempty events");
  for (std::size_t m = 1; m <= belief.length(); ++m)
    if (cautiously_believed_at_level(belief, E, m)) return m;
  return std::nullopt;
}

Event cautious_belief_operator(const TypeStructure& ts, PlayerIx player,
                               const JointEvent& E) {
  Event out = Event::empty(ts, player);
  if (E.is_empty()) return out;
  const std::uint32_t strats = ts.game().strategy_count(player);
  for (std::uint32_t t = 0; t < ts.type_count(player); ++t) {
    if (cautiously_believes(ts.belief(player, t), E)) {
      for (std::uint32_t s = 0; s < strats; ++s) out.insert(s, t);
    }
  }
  return out;
}

namespace {

std::vector<Event> next_level(const TypeStructure& ts,
                              const std::vector<Event>& current) {
  const std::size_t n = ts.game().num_players();
  std::vector<Event> next;
  next.reserve(n);
  for (PlayerIx i = 0; i < n; ++i) {
    std::vector<Event> parts;
    parts.reserve(n - 1);
    for (PlayerIx j = 0; j < n; ++j)
      if (j != i) parts.push_back(current[j]);
    JointEvent opponents = product_event(ts, i, parts);
    next.push_back(
        current[i].intersect(cautious_belief_operator(ts, i, opponents)));
  }
  return next;
}

RcbrTrace run_iteration(const TypeStructure& ts, std::vector<Event> level1) {
  const std::size_t n = ts.game().num_players();
  RcbrTrace trace;
  std::vector<Event> full;
  full.reserve(n);
  for (PlayerIx i = 0; i < n; ++i) full.push_back(Event::full(ts, i));
  trace.levels.push_back(std::move(full));
  trace.levels.push_back(std::move(level1));

  // Level 1 is set by fiat, not by the recursion, so only a repeat between
  // two recursion-produced levels certifies a fixpoint. Apply the step at
  // least once, then stop at the first repeat.
  do {
    trace.levels.push_back(next_level(ts, trace.levels.back()));
  } while (trace.levels[trace.levels.size() - 2] != trace.levels.back());

  trace.stabilized_at = trace.levels.size() - 2;
  if (trace.stabilized_at == 1 && trace.levels[0] == trace.levels[1])
    trace.stabilized_at = 0;
  return trace;
}

}  // namespace

RcbrTrace rcbr_iterate(const TypeStructure& ts) {
  const std::size_t n = ts.game().num_players();
  std::vector<Event> rational;
  rational.reserve(n);
  for (PlayerIx i = 0; i < n; ++i) {
    Event e = Event::empty(ts, i);
    for (std::uint32_t t = 0; t < ts.type_count(i); ++t) {
      if (!is_cautious(ts, i, t)) continue;
      for (std::uint32_t s : best_replies(ts, i, ts.belief(i, t)))
        e.insert(s, t);
    }
    rational.push_back(std::move(e));
  }
  return run_iteration(ts, std::move(rational));
}

RcbrTrace iterate_assumption(const TypeStructure& ts,
                             std::span<const Event> base) {
  const std::size_t n = ts.game().num_players();
  if (base.size() != n)
    throw std::logic_error("iterate_assumption needs one base event per player");
  std::vector<Event> level1;
  level1.reserve(n);
  for (PlayerIx i = 0; i < n; ++i) {
    if (base[i].player() != i ||
        base[i].universe_size() != ts.pair_count(i))
      throw std::logic_error("base event does not match the structure");
    level1.push_back(base[i]);
  }
  return run_iteration(ts, std::move(level1));
}

}  // namespace hieq
