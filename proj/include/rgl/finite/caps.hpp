#pragma once

#include <cstddef>
#include <cstdint>

namespace rgl::caps {

// Size limits for the finite families. Exhaustive suites over instances at
// these limits finish in seconds.
inline constexpr int max_boolean_ground = 24;
inline constexpr int max_partition_ground = 7;
inline constexpr int max_subspace_dimension = 6;
inline constexpr int max_subspace_prime = 97;

// Exhaustive enumeration (chains, antichains, modular elements). Antichains
// are tracked as 64-bit masks over element indices.
inline constexpr std::uint64_t max_exhaustive_elements = 64;
inline constexpr std::size_t max_maximal_chains = 1u << 20;
inline constexpr std::uint64_t max_verified_elements = 1u << 14;

}  // namespace rgl::caps
