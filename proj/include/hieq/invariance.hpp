#pragma once

#include <cstdint>
#include <vector>

#include "hieq/epistemic.hpp"
#include "hieq/hierarchy.hpp"

namespace hieq {

/// Side-by-side strategy projections of two iteration traces. Rows cover
/// every level from 0 through the later of the two stabilization points;
/// past its own stabilization a trace repeats its fixpoint, so equality
/// over those rows decides equality at every level.
struct InvarianceReport {
  struct Cell {
    std::vector<std::uint32_t> first;   // Proj of the first structure's event
    std::vector<std::uint32_t> second;  // Proj of the second structure's event
    bool equal = false;
  };

  std::vector<std::vector<Cell>> levels;  // levels[m][player]
  std::size_t stabilized_first = 0;
  std::size_t stabilized_second = 0;
  bool verdict = false;  // true iff every cell is equal
};

/// Runs the cautious-rationality iteration on both structures and
/// compares strategy projections per player per level. Does not require
/// the structures to be hierarchy-equivalent, so it can also exhibit
/// pairs where the projections differ. Throws MismatchedGames.
InvarianceReport verify_invariance(const TypeStructure& first,
                                   const TypeStructure& second);

/// Level-by-level checks of a hierarchy morphism phi : first -> second
/// against both iterations: the image of each level lands inside the
/// other structure's level, and projecting through (Id, phi) leaves the
/// strategy projection unchanged.
struct TransportReport {
  struct Cell {
    bool image_included = false;
    bool projection_identity = false;
  };

  std::vector<std::vector<Cell>> levels;  // levels[m][player]
  bool ok = false;
};

/// Throws InvalidMorphism if phi does not preserve hierarchies.
TransportReport transport_check(const TypeStructure& first,
                                const TypeStructure& second,
                                const Morphism& phi);

/// Image of a per-player event under (Id, phi): pairs (s, phi(t)).
Event event_image(const Event& e, const TypeStructure& target,
                  const Morphism& phi);

}  // namespace hieq
