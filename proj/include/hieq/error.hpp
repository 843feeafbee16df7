#pragma once

#include <stdexcept>
#include <string>

namespace hieq {

enum class errc {
  non_probability,
  dangling_reference,
  empty_lps,
  too_few_players,
  empty_strategy_set,
  length_mismatch,
  unknown_strategy,
  unknown_type,
  empty_event,
  level_out_of_range,
  mismatched_games,
  depth_too_large,
  invalid_morphism,
  infeasible_bounds,
  syntax_error,
};

const char* errc_name(errc code);

/// Error thrown by validation and by operations whose contract names a
/// failure mode. `path()` points into the offending document when the
/// error was raised while reading an instance file.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message, std::string path = {});

  errc code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }
  const std::string& path() const noexcept { return path_; }

 private:
  errc code_;
  std::string message_;
  std::string path_;
};

[[noreturn]] void raise(errc code, const std::string& message,
                        std::string path = {});

}  // namespace hieq
