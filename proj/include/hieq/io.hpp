#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hieq/structure.hpp"

namespace hieq {

/// One game plus one or two type structures, as read from an instance
/// file.
struct Instance {
  std::shared_ptr<const Game> game;
  std::vector<std::string> names;        // structure names, declaration order
  std::vector<TypeStructure> structures;  // aligned with names
};

/// Parses an instance document. Malformed JSON raises SyntaxError with
/// the parser's location; structural and model errors carry the path of
/// the offending node (for example "structures[0].beliefs.ann.t_a[2]").
Instance parse_instance(const std::string& text);

/// Reads and parses a file; file-system failures raise SyntaxError.
Instance load_instance(const std::string& path);

/// Canonical serialization. Parsing the output yields an equal model,
/// and equal models serialize to identical bytes. Rationals are written
/// as "p/q" strings; floating point never appears on the wire.
std::string serialize_instance(const Instance& instance);

/// Convenience: a single generated structure wrapped as an instance.
Instance wrap_instance(TypeStructure structure, std::string name);

}  // namespace hieq
