#include "hieq/generate.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hieq/error.hpp"

namespace hieq {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  return n == 0 ? 0 : rng() % n;
}

namespace {

std::uint32_t pick(std::mt19937_64& rng,
                   std::pair<std::uint32_t, std::uint32_t> range) {
  return range.first +
         static_cast<std::uint32_t>(bounded(rng, range.second - range.first + 1));
}

void check_range(std::pair<std::uint32_t, std::uint32_t> range,
                 std::uint32_t least, const char* what) {
  if (range.first > range.second || range.first < least)
    raise(errc::infeasible_bounds,
          std::string(what) + " bounds [" + std::to_string(range.first) +
              ", " + std::to_string(range.second) + "] are infeasible");
}

}  // namespace

TypeStructure gen_structure(const GenParams& params) {
  if (params.players < 2)
    raise(errc::infeasible_bounds, "a game needs at least two players");
  check_range(params.strategies, 1, "strategies-per-player");
  check_range(params.types, 1, "types-per-player");
  check_range(params.lps_length, 1, "lps-length");
  if (params.mass_denominator < 1)
    raise(errc::infeasible_bounds, "mass denominator must be positive");

  std::mt19937_64 rng(params.seed);

  std::vector<std::string> players(params.players);
  std::vector<std::vector<std::string>> strategies(params.players);
  for (std::size_t i = 0; i < params.players; ++i) {
    players[i] = "p" + std::to_string(i);
    std::uint32_t count = pick(rng, params.strategies);
    for (std::uint32_t s = 0; s < count; ++s)
      strategies[i].push_back("s" + std::to_string(s));
  }

  std::size_t profile_count = 1;
  for (const auto& names : strategies) profile_count *= names.size();
  std::vector<std::vector<Rational>> payoffs(params.players);
  const std::uint64_t payoff_span =
      static_cast<std::uint64_t>(2 * params.payoff_magnitude + 1);
  for (std::size_t i = 0; i < params.players; ++i) {
    payoffs[i].reserve(profile_count);
    for (std::size_t r = 0; r < profile_count; ++r)
      payoffs[i].push_back(Rational(
          static_cast<std::int64_t>(bounded(rng, payoff_span)) -
          params.payoff_magnitude));
  }

  auto game = std::make_shared<const Game>(
      Game::create(std::move(players), std::move(strategies),
                   std::move(payoffs)));

  std::vector<std::vector<std::string>> type_names(params.players);
  for (std::size_t i = 0; i < params.players; ++i) {
    std::uint32_t count = pick(rng, params.types);
    for (std::uint32_t t = 0; t < count; ++t)
      type_names[i].push_back("t" + std::to_string(t));
  }

  // Ground sizes of the co-spaces, before the structure object exists.
  std::vector<std::size_t> ground(params.players, 1);
  for (std::size_t i = 0; i < params.players; ++i)
    for (std::size_t j = 0; j < params.players; ++j)
      if (j != i)
        ground[i] *= std::size_t{game->strategy_count(j)} *
                     type_names[j].size();

  std::vector<std::vector<Lps>> beliefs(params.players);
  for (std::size_t i = 0; i < params.players; ++i) {
    for (std::size_t t = 0; t < type_names[i].size(); ++t) {
      std::uint32_t levels = pick(rng, params.lps_length);
      std::vector<Measure> measures;
      measures.reserve(levels);
      for (std::uint32_t l = 0; l < levels; ++l) {
        const std::uint32_t den = params.mass_denominator;
        std::vector<Measure::Entry> entries;
        for (std::uint32_t unit = 0; unit < den; ++unit)
          entries.emplace_back(
              static_cast<std::uint32_t>(bounded(rng, ground[i])),
              Rational(1, den));
        measures.push_back(Measure::from_entries(ground[i], entries));
      }
      beliefs[i].push_back(Lps::of(std::move(measures)));
    }
  }

  return TypeStructure::create(game, std::move(type_names),
                               std::move(beliefs));
}

namespace {

// Profile-keyed working copy of a structure. Keys carry explicit
// per-opponent strategy and type indices so that type sets can grow and
// shrink without rank arithmetic.
struct Bench {
  using Profile = std::pair<std::vector<std::uint32_t>,   // strategies
                            std::vector<std::uint32_t>>;  // types
  using Level = std::map<Profile, Rational>;

  std::shared_ptr<const Game> game;
  std::vector<std::vector<std::string>> types;
  std::vector<std::vector<std::vector<Level>>> beliefs;  // [player][type][lv]

  std::size_t players() const { return game->num_players(); }

  std::size_t opponent_slot(PlayerIx of, PlayerIx who) const {
    return who < of ? who : who - 1;
  }

  static Bench from(const TypeStructure& ts) {
    Bench b;
    b.game = ts.game_ptr();
    const std::size_t n = ts.game().num_players();
    b.types.resize(n);
    b.beliefs.resize(n);
    for (PlayerIx i = 0; i < n; ++i) {
      b.types[i] = ts.type_names(i);
      const CoSpace& cs = ts.cospace(i);
      b.beliefs[i].resize(ts.type_count(i));
      for (std::uint32_t t = 0; t < ts.type_count(i); ++t) {
        const Lps& lps = ts.belief(i, t);
        for (const auto& level : lps.levels()) {
          Bench::Level lv;
          std::vector<std::uint32_t> strats(cs.arity());
          std::vector<std::uint32_t> typs(cs.arity());
          for (const auto& [r, mass] : level.entries()) {
            cs.unrank(r, strats, typs);
            lv[{strats, typs}] = mass;
          }
          b.beliefs[i][t].push_back(std::move(lv));
        }
      }
    }
    return b;
  }

  TypeStructure to_structure() const {
    const std::size_t n = players();
    std::vector<std::vector<Lps>> out(n);
    for (PlayerIx i = 0; i < n; ++i) {
      std::vector<PlayerIx> opponents;
      std::vector<std::uint32_t> strat_counts;
      std::vector<std::uint32_t> type_counts;
      for (PlayerIx j = 0; j < n; ++j) {
        if (j == i) continue;
        opponents.push_back(j);
        strat_counts.push_back(game->strategy_count(j));
        type_counts.push_back(static_cast<std::uint32_t>(types[j].size()));
      }
      CoSpace cs(i, opponents, strat_counts, type_counts);
      for (const auto& levels : beliefs[i]) {
        std::vector<Measure> measures;
        for (const auto& level : levels) {
          std::vector<Measure::Entry> entries;
          for (const auto& [profile, mass] : level)
            entries.emplace_back(
                static_cast<std::uint32_t>(
                    cs.rank(profile.first, profile.second)),
                mass);
          measures.push_back(Measure::from_entries(cs.size(), entries));
        }
        out[i].push_back(Lps::of(std::move(measures)));
      }
    }
    return TypeStructure::create(game, types, std::move(out));
  }

  std::string fresh_name(PlayerIx i, const std::string& base) const {
    std::string name = base + "c";
    while (std::find(types[i].begin(), types[i].end(), name) !=
           types[i].end())
      name += "c";
    return name;
  }

  // Appends a copy of type t of player i; opponents' mass on cells naming
  // t is split between the original and the copy, independently per level
  // and per cell, preserving each cell's total.
  void duplicate(PlayerIx i, std::uint32_t t, std::mt19937_64& rng) {
    const std::uint32_t copy = static_cast<std::uint32_t>(types[i].size());
    types[i].push_back(fresh_name(i, types[i][t]));
    beliefs[i].push_back(beliefs[i][t]);

    constexpr std::uint32_t split_den = 4;
    for (PlayerIx j = 0; j < players(); ++j) {
      if (j == i) continue;
      const std::size_t slot = opponent_slot(j, i);
      for (auto& levels : beliefs[j]) {
        for (auto& level : levels) {
          Level next;
          for (const auto& [profile, mass] : level) {
            if (profile.second[slot] != t) {
              next[profile] += mass;
              continue;
            }
            Rational kept = mass * Rational(
                static_cast<std::int64_t>(bounded(rng, split_den + 1)),
                split_den);
            Rational moved = mass - kept;
            if (!kept.is_zero()) next[profile] += kept;
            if (!moved.is_zero()) {
              Profile shifted = profile;
              shifted.second[slot] = copy;
              next[shifted] += moved;
            }
          }
          level = std::move(next);
        }
      }
    }
  }

  // Pairs (t, u), t < u, of one player whose beliefs coincide exactly.
  std::vector<std::tuple<PlayerIx, std::uint32_t, std::uint32_t>>
  merge_candidates() const {
    std::vector<std::tuple<PlayerIx, std::uint32_t, std::uint32_t>> out;
    for (PlayerIx i = 0; i < players(); ++i)
      for (std::uint32_t t = 0; t + 1 < beliefs[i].size(); ++t)
        for (std::uint32_t u = t + 1; u < beliefs[i].size(); ++u)
          if (beliefs[i][t] == beliefs[i][u]) out.emplace_back(i, t, u);
    return out;
  }

  // Removes type u of player i, redirecting opponents' mass on u to t.
  void merge(PlayerIx i, std::uint32_t t, std::uint32_t u) {
    types[i].erase(types[i].begin() + u);
    beliefs[i].erase(beliefs[i].begin() + u);

    for (PlayerIx j = 0; j < players(); ++j) {
      if (j == i) continue;
      const std::size_t slot = opponent_slot(j, i);
      for (auto& levels : beliefs[j]) {
        for (auto& level : levels) {
          Level next;
          for (const auto& [profile, mass] : level) {
            Profile target = profile;
            std::uint32_t& ty = target.second[slot];
            if (ty == u)
              ty = t;
            else if (ty > u)
              --ty;
            next[target] += mass;
          }
          level = std::move(next);
        }
      }
    }
  }
};

Morphism identity_morphism(const Bench& b) {
  Morphism phi;
  phi.maps.resize(b.players());
  for (PlayerIx i = 0; i < b.players(); ++i) {
    phi.maps[i].resize(b.types[i].size());
    for (std::uint32_t t = 0; t < b.types[i].size(); ++t) phi.maps[i][t] = t;
  }
  return phi;
}

}  // namespace

VariantResult equivalent_variant(const TypeStructure& ts, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Bench bench = Bench::from(ts);

  Morphism forward = identity_morphism(bench);   // input -> current
  Morphism backward = identity_morphism(bench);  // current -> input

  const std::size_t steps = bounded(rng, 3);
  for (std::size_t step = 0; step < steps; ++step) {
    bool try_merge = bounded(rng, 2) == 1;
    if (try_merge) {
      auto candidates = bench.merge_candidates();
      if (!candidates.empty()) {
        auto [i, t, u] = candidates[bounded(rng, candidates.size())];
        bench.merge(i, t, u);
        for (auto& v : forward.maps[i]) {
          if (v == u)
            v = t;
          else if (v > u)
            --v;
        }
        backward.maps[i].erase(backward.maps[i].begin() + u);
        continue;
      }
    }
    PlayerIx i = static_cast<PlayerIx>(bounded(rng, bench.players()));
    std::uint32_t t =
        static_cast<std::uint32_t>(bounded(rng, bench.types[i].size()));
    bench.duplicate(i, t, rng);
    backward.maps[i].push_back(backward.maps[i][t]);
  }

  VariantResult result{bench.to_structure(), std::move(forward),
                       std::move(backward)};
  return result;
}

std::uint64_t structure_digest(const TypeStructure& ts) {
  std::string text;
  const Game& game = ts.game();
  for (PlayerIx i = 0; i < game.num_players(); ++i) {
    text += game.player_name(i);
    text += '(';
    for (const auto& s : game.strategy_names(i)) {
      text += s;
      text += ',';
    }
    text += ')';
    for (const auto& p : game.payoff_table(i)) {
      text += p.str();
      text += ';';
    }
  }
  for (PlayerIx i = 0; i < game.num_players(); ++i) {
    text += '[';
    for (std::uint32_t t = 0; t < ts.type_count(i); ++t) {
      text += ts.type_name(i, t);
      text += ':';
      for (const auto& level : ts.belief(i, t).levels()) {
        text += '|';
        for (const auto& [r, mass] : level.entries()) {
          text += std::to_string(r);
          text += '=';
          text += mass.str();
          text += ';';
        }
      }
      text += ' ';
    }
    text += ']';
  }

  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

}  // namespace hieq
