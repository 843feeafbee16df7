#include "hieq/error.hpp"

namespace hieq {

const char* errc_name(errc code) {
  switch (code) {
    case errc::non_probability: return "NonProbability";
    case errc::dangling_reference: return "DanglingReference";
    case errc::empty_lps: return "EmptyLps";
    case errc::too_few_players: return "TooFewPlayers";
    case errc::empty_strategy_set: return "EmptyStrategySet";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::unknown_strategy: return "UnknownStrategy";
    case errc::unknown_type: return "UnknownType";
    case errc::empty_event: return "EmptyEvent";
    case errc::level_out_of_range: return "LevelOutOfRange";
    case errc::mismatched_games: return "MismatchedGames";
    case errc::depth_too_large: return "DepthTooLarge";
    case errc::invalid_morphism: return "InvalidMorphism";
    case errc::infeasible_bounds: return "InfeasibleBounds";
    case errc::syntax_error: return "SyntaxError";
  }
  return "Unknown";
}

namespace {
std::string format_message(errc code, const std::string& message,
                           const std::string& path) {
  std::string text = errc_name(code);
  text += ": ";
  text += message;
  if (!path.empty()) {
    text += " (at ";
    text += path;
    text += ")";
  }
  return text;
}
}  // namespace

Error::Error(errc code, const std::string& message, std::string path)
    : std::runtime_error(format_message(code, message, path)),
      code_(code),
      message_(message),
      path_(std::move(path)) {}

void raise(errc code, const std::string& message, std::string path) {
  throw Error(code, message, std::move(path));
}

}  // namespace hieq
