#pragma once

#include <cstdint>

#include "ilab/space.hpp"
#include "ilab/vector.hpp"

namespace ilab {

struct DualNormResult {
    double value;    // certified lower bound of sup <x,y> over ||x||_space <= 1
    Vector witness;  // attains the reported value, ||witness||_space = 1
};

// Evaluates the dual norm on the nonnegative orthant (valid by
// 1-unconditionality) via normalized multiplicative coordinate ascent with
// random restarts.  Exact short-circuits: l_p and weighted l_p (Hoelder),
// Tsirelson-2 on blocks starting at an index at least as large as the block
// length (there the primal norm is max(||.||_inf, ||.||_2 / sqrt(2)) and the
// dual is the infimal convolution of l_1 with sqrt(2) l_2), and DualOf(X)
// (the bidual norm is the norm of X itself).
//
// budget = coordinate sweeps per restart.
DualNormResult dual_norm(const SpaceSpec& space, const Vector& y, std::size_t budget = 500,
                         std::uint64_t seed = 0x51ab, std::size_t restarts = 16);

// forces the ascent path even when a closed form exists (used by tests to
// keep the two routes independent)
DualNormResult dual_norm_ascent(const SpaceSpec& space, const Vector& y, std::size_t budget,
                                std::uint64_t seed, std::size_t restarts);

}  // namespace ilab
