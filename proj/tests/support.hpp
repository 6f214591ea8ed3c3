#pragma once

#include <cstdint>
#include <random>

#include "ifslab/landmarks.hpp"

namespace testing {

// Set from --seed-rng in the test main; fixed default so CI runs repeat.
std::uint64_t rng_seed();

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) { return std::mt19937_64(rng_seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

inline ifslab::Complex root_of(int id) { return ifslab::resolve_root(ifslab::landmark(id)); }

}  // namespace testing
