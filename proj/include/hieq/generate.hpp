#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "hieq/hierarchy.hpp"
#include "hieq/structure.hpp"

namespace hieq {

/// Bounds for the random instance generator. The same params and seed
/// always produce the same structure, bit for bit.
struct GenParams {
  std::uint64_t seed = 0;
  std::size_t players = 2;                       // >= 2
  std::pair<std::uint32_t, std::uint32_t> strategies{1, 3};
  std::pair<std::uint32_t, std::uint32_t> types{1, 3};
  std::pair<std::uint32_t, std::uint32_t> lps_length{1, 3};
  std::uint32_t mass_denominator = 8;            // >= 1
  std::int64_t payoff_magnitude = 4;             // payoffs drawn from [-M, M]
};

/// Deterministic pseudo-random structure within the bounds. Probabilities
/// are multiples of 1/mass_denominator, payoffs small integers. Throws
/// InfeasibleBounds on empty ranges, zero type bounds, or fewer than two
/// players.
TypeStructure gen_structure(const GenParams& params);

struct VariantResult {
  TypeStructure structure;
  Morphism forward;   // input -> variant
  Morphism backward;  // variant -> input
};

/// Applies a random sequence of hierarchy-preserving transformations:
/// duplicating a type (opponents' mass on the original is split among the
/// copies level by level, keeping per-cell totals) and merging two types
/// with equal beliefs (opponents' mass on the copies is summed). Returns
/// the transformed structure with morphism witnesses in both directions.
VariantResult equivalent_variant(const TypeStructure& ts, std::uint64_t seed);

/// Uniform draw from [0, n). Uses plain modulo reduction of the engine
/// output: the tiny bias is irrelevant here and the result is identical
/// on every platform, which std::uniform_int_distribution does not
/// promise.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n);

/// FNV-1a digest of the canonical serialization; used to regression-pin
/// generator outputs.
std::uint64_t structure_digest(const TypeStructure& ts);

}  // namespace hieq
