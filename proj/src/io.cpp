#include "hieq/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hieq/error.hpp"

namespace hieq {

using nlohmann::json;

namespace {

std::string quote(const std::string& s) { return "'" + s + "'"; }

const json& need(const json& node, const char* key, const std::string& path) {
  auto it = node.find(key);
  if (node.is_object() && it != node.end()) return *it;
  raise(errc::syntax_error, "missing key " + quote(key), path);
}

void expect_object(const json& node, const std::string& path) {
  if (!node.is_object())
    raise(errc::syntax_error, "expected an object", path);
}

void expect_array(const json& node, const std::string& path) {
  if (!node.is_array()) raise(errc::syntax_error, "expected an array", path);
}

std::string expect_string(const json& node, const std::string& path) {
  if (!node.is_string())
    raise(errc::syntax_error, "expected a string", path);
  return node.get<std::string>();
}

Rational expect_rational(const json& node, const std::string& path) {
  if (!node.is_string())
    raise(errc::syntax_error,
          "rationals must be \"p/q\" strings, floating point is not accepted",
          path);
  auto parsed = Rational::parse(node.get<std::string>());
  if (!parsed)
    raise(errc::syntax_error,
          "malformed rational " + quote(node.get<std::string>()), path);
  return *parsed;
}

std::vector<std::string> string_array(const json& node,
                                      const std::string& path) {
  expect_array(node, path);
  std::vector<std::string> out;
  out.reserve(node.size());
  for (std::size_t k = 0; k < node.size(); ++k)
    out.push_back(expect_string(node[k], path + "[" + std::to_string(k) + "]"));
  return out;
}

std::shared_ptr<const Game> parse_game(const json& doc) {
  auto players = string_array(need(doc, "players", ""), "players");
  if (players.size() < 2)
    raise(errc::too_few_players,
          "a game needs at least two players, got " +
              std::to_string(players.size()),
          "players");

  const json& strategies_node = need(doc, "strategies", "");
  expect_object(strategies_node, "strategies");
  std::vector<std::vector<std::string>> strategies;
  for (const auto& p : players) {
    std::string path = "strategies." + p;
    auto it = strategies_node.find(p);
    if (it == strategies_node.end())
      raise(errc::dangling_reference, "no strategies for player " + quote(p),
            "strategies");
    auto names = string_array(*it, path);
    if (names.empty())
      raise(errc::empty_strategy_set,
            "player " + quote(p) + " has no strategies", path);
    strategies.push_back(std::move(names));
  }

  std::size_t profile_count = 1;
  for (const auto& names : strategies) profile_count *= names.size();

  const json& payoffs_node = need(doc, "payoffs", "");
  expect_object(payoffs_node, "payoffs");
  std::vector<std::vector<Rational>> payoffs;
  for (std::size_t i = 0; i < players.size(); ++i) {
    std::string path = "payoffs." + players[i];
    auto it = payoffs_node.find(players[i]);
    if (it == payoffs_node.end())
      raise(errc::dangling_reference,
            "no payoff table for player " + quote(players[i]), "payoffs");
    expect_object(*it, path);
    if (it->size() != profile_count)
      raise(errc::dangling_reference,
            "payoff table has " + std::to_string(it->size()) +
                " entries, expected " + std::to_string(profile_count),
            path);

    std::vector<Rational> table;
    table.reserve(profile_count);
    std::vector<std::uint32_t> digits(players.size(), 0);
    for (std::size_t rank = 0; rank < profile_count; ++rank) {
      std::size_t rest = rank;
      for (std::size_t j = players.size(); j-- > 0;) {
        digits[j] = static_cast<std::uint32_t>(rest % strategies[j].size());
        rest /= strategies[j].size();
      }
      std::string key;
      for (std::size_t j = 0; j < players.size(); ++j) {
        if (j > 0) key += '|';
        key += strategies[j][digits[j]];
      }
      auto cell = it->find(key);
      if (cell == it->end())
        raise(errc::dangling_reference,
              "missing payoff for profile " + quote(key), path);
      table.push_back(expect_rational(*cell, path + "." + key));
    }
    payoffs.push_back(std::move(table));
  }

  return std::make_shared<const Game>(Game::create(
      std::move(players), std::move(strategies), std::move(payoffs)));
}

TypeStructure parse_structure(const json& node,
                              const std::shared_ptr<const Game>& game,
                              const std::string& path) {
  expect_object(node, path);
  const std::size_t n = game->num_players();

  const json& types_node = need(node, "types", path);
  expect_object(types_node, path + ".types");
  std::vector<std::vector<std::string>> type_names;
  for (PlayerIx i = 0; i < n; ++i) {
    const std::string& p = game->player_name(i);
    auto it = types_node.find(p);
    if (it == types_node.end())
      raise(errc::dangling_reference, "no types for player " + quote(p),
            path + ".types");
    type_names.push_back(string_array(*it, path + ".types." + p));
  }

  // Co-space shapes are known once every player's type list is read.
  std::vector<CoSpace> cospaces;
  for (PlayerIx i = 0; i < n; ++i) {
    std::vector<PlayerIx> opponents;
    std::vector<std::uint32_t> strat_counts;
    std::vector<std::uint32_t> type_counts;
    for (PlayerIx j = 0; j < n; ++j) {
      if (j == i) continue;
      opponents.push_back(j);
      strat_counts.push_back(game->strategy_count(j));
      type_counts.push_back(static_cast<std::uint32_t>(type_names[j].size()));
    }
    cospaces.emplace_back(i, std::move(opponents), std::move(strat_counts),
                          std::move(type_counts));
  }

  const json& beliefs_node = need(node, "beliefs", path);
  expect_object(beliefs_node, path + ".beliefs");
  std::vector<std::vector<Lps>> beliefs(n);
  for (PlayerIx i = 0; i < n; ++i) {
    const std::string& p = game->player_name(i);
    std::string player_path = path + ".beliefs." + p;
    auto it = beliefs_node.find(p);
    if (it == beliefs_node.end()) {
      if (type_names[i].empty()) continue;
      raise(errc::dangling_reference, "no beliefs for player " + quote(p),
            path + ".beliefs");
    }
    expect_object(*it, player_path);
    const CoSpace& cs = cospaces[i];
    for (const auto& type_name : type_names[i]) {
      std::string type_path = player_path + "." + type_name;
      auto belief_it = it->find(type_name);
      if (belief_it == it->end())
        raise(errc::dangling_reference,
              "no belief for type " + quote(type_name), player_path);
      expect_array(*belief_it, type_path);
      if (belief_it->empty())
        raise(errc::empty_lps, "a belief needs at least one level", type_path);

      std::vector<Measure> levels;
      for (std::size_t l = 0; l < belief_it->size(); ++l) {
        std::string level_path = type_path + "[" + std::to_string(l) + "]";
        const json& level_node = (*belief_it)[l];
        expect_array(level_node, level_path);
        std::vector<Measure::Entry> entries;
        for (std::size_t e = 0; e < level_node.size(); ++e) {
          std::string entry_path =
              level_path + "[" + std::to_string(e) + "]";
          const json& entry = level_node[e];
          expect_object(entry, entry_path);
          auto profile =
              string_array(need(entry, "profile", entry_path),
                           entry_path + ".profile");
          if (profile.size() != 2 * cs.arity())
            raise(errc::dangling_reference,
                  "profile lists " + std::to_string(profile.size()) +
                      " names, expected " + std::to_string(2 * cs.arity()),
                  entry_path + ".profile");
          std::vector<std::uint32_t> strats(cs.arity());
          std::vector<std::uint32_t> typs(cs.arity());
          for (std::size_t k = 0; k < cs.arity(); ++k) {
            PlayerIx j = cs.opponents()[k];
            auto s = game->strategy_index(j, profile[2 * k]);
            if (!s)
              raise(errc::dangling_reference,
                    "unknown strategy " + quote(profile[2 * k]) +
                        " of player " + quote(game->player_name(j)),
                    entry_path + ".profile");
            auto t = std::find(type_names[j].begin(), type_names[j].end(),
                               profile[2 * k + 1]);
            if (t == type_names[j].end())
              raise(errc::dangling_reference,
                    "unknown type " + quote(profile[2 * k + 1]) +
                        " of player " + quote(game->player_name(j)),
                    entry_path + ".profile");
            strats[k] = *s;
            typs[k] = static_cast<std::uint32_t>(t - type_names[j].begin());
          }
          entries.emplace_back(
              static_cast<std::uint32_t>(cs.rank(strats, typs)),
              expect_rational(need(entry, "p", entry_path),
                              entry_path + ".p"));
        }
        try {
          levels.push_back(Measure::from_entries(cs.size(), entries));
        } catch (const Error& err) {
          raise(err.code(), err.message(), level_path);
        }
      }
      beliefs[i].push_back(Lps::of(std::move(levels)));
    }
  }

  return TypeStructure::create(game, std::move(type_names),
                               std::move(beliefs));
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    raise(errc::syntax_error, e.what());
  }
  expect_object(doc, "");

  Instance instance;
  instance.game = parse_game(doc);

  const json& structures = need(doc, "structures", "");
  expect_array(structures, "structures");
  if (structures.empty() || structures.size() > 2)
    raise(errc::syntax_error,
          "expected one or two structures, got " +
              std::to_string(structures.size()),
          "structures");
  for (std::size_t k = 0; k < structures.size(); ++k) {
    std::string path = "structures[" + std::to_string(k) + "]";
    instance.names.push_back(
        expect_string(need(structures[k], "name", path), path + ".name"));
    instance.structures.push_back(
        parse_structure(structures[k], instance.game, path));
  }
  return instance;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(errc::syntax_error, "cannot read file " + quote(path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string serialize_instance(const Instance& instance) {
  const Game& game = *instance.game;
  json doc;
  doc["players"] = game.players();

  json strategies = json::object();
  for (PlayerIx i = 0; i < game.num_players(); ++i)
    strategies[game.player_name(i)] = game.strategy_names(i);
  doc["strategies"] = strategies;

  json payoffs = json::object();
  for (PlayerIx i = 0; i < game.num_players(); ++i) {
    json table = json::object();
    for (std::size_t rank = 0; rank < game.profile_count(); ++rank) {
      auto profile = game.profile_unrank(rank);
      std::string key;
      for (PlayerIx j = 0; j < game.num_players(); ++j) {
        if (j > 0) key += '|';
        key += game.strategy_names(j)[profile[j]];
      }
      table[key] = game.payoff(i, rank).str();
    }
    payoffs[game.player_name(i)] = table;
  }
  doc["payoffs"] = payoffs;

  json structures = json::array();
  for (std::size_t k = 0; k < instance.structures.size(); ++k) {
    const TypeStructure& ts = instance.structures[k];
    json node;
    node["name"] = instance.names[k];

    json types = json::object();
    for (PlayerIx i = 0; i < game.num_players(); ++i)
      types[game.player_name(i)] = ts.type_names(i);
    node["types"] = types;

    json beliefs = json::object();
    for (PlayerIx i = 0; i < game.num_players(); ++i) {
      const CoSpace& cs = ts.cospace(i);
      json per_type = json::object();
      for (std::uint32_t t = 0; t < ts.type_count(i); ++t) {
        json levels = json::array();
        std::vector<std::uint32_t> strats(cs.arity());
        std::vector<std::uint32_t> typs(cs.arity());
        for (const auto& measure : ts.belief(i, t).levels()) {
          json level = json::array();
          for (const auto& [r, mass] : measure.entries()) {
            cs.unrank(r, strats, typs);
            json profile = json::array();
            for (std::size_t c = 0; c < cs.arity(); ++c) {
              PlayerIx j = cs.opponents()[c];
              profile.push_back(game.strategy_names(j)[strats[c]]);
              profile.push_back(ts.type_names(j)[typs[c]]);
            }
            level.push_back(json{{"profile", profile}, {"p", mass.str()}});
          }
          levels.push_back(level);
        }
        per_type[ts.type_name(i, t)] = levels;
      }
      beliefs[game.player_name(i)] = per_type;
    }
    node["beliefs"] = beliefs;
    structures.push_back(node);
  }
  doc["structures"] = structures;

  return doc.dump(2) + "\n";
}

Instance wrap_instance(TypeStructure structure, std::string name) {
  Instance instance;
  instance.game = structure.game_ptr();
  instance.names.push_back(std::move(name));
  instance.structures.push_back(std::move(structure));
  return instance;
}

}  // namespace hieq
