#pragma once

#include <cstdint>
#include <random>

#include "unref/star_sequence.hpp"

namespace unref {

/// Draws an unrefinable star sequence of exactly `length` slots with mex
/// `mu` by walking the enumeration tree: starting from (1, ..., mu-1, *),
/// each admissible part is taken with probability `part_bias`, otherwise a
/// star is appended. Once every residue class is closed only stars remain.
/// Requires 1 <= mu <= length.
StarSequence sample_unrefinable(std::int64_t length, std::int64_t mu, std::mt19937_64& rng,
                                double part_bias = 0.75);

/// Uniformly random slot pattern of the given length.
StarSequence sample_uniform(std::int64_t length, std::mt19937_64& rng);

}  // namespace unref
