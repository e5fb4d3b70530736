#pragma once
/// \file rng.hpp
/// Counter-based deterministic random numbers: every draw is a pure function
/// of (seed, counter), so independent samplers never share state and replays
/// are exact across threads and runs.

#include <cstdint>

namespace hessdyn {

/// splitmix64 finalizer: bijective 64-bit mix.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Draw for a (seed, step) pair; step may itself be a mixed sub-key.
inline std::uint64_t rng_at(std::uint64_t seed, std::uint64_t step) {
  return mix64(seed ^ mix64(step));
}

/// Uniform double in [0, 1).
inline double rng_unit(std::uint64_t seed, std::uint64_t step) {
  return static_cast<double>(rng_at(seed, step) >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n), n >= 1 (negligible modulo bias for small n).
inline std::uint64_t rng_below(std::uint64_t seed, std::uint64_t step, std::uint64_t n) {
  return rng_at(seed, step) % n;
}

}  // namespace hessdyn
