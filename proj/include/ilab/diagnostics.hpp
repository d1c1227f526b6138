#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ilab/derivations.hpp"
#include "ilab/interpolate.hpp"
#include "ilab/partition.hpp"
#include "ilab/space.hpp"

namespace ilab {

// All constants below are sampled lower bounds: deterministic structured
// candidates first, then per-index random substreams, so enlarging the sample
// count never decreases a reported value under the same seed.

// sup ||Omega(x+y) - Omega(x) - Omega(y)|| / (||x|| + ||y||)
double quasilinearity_constant(const DerivationSpec& omega, const SpaceSpec& space,
                               std::size_t dim, std::size_t samples, std::uint64_t seed);

// sup ||Omega(xi x) - xi Omega(x)|| / (||xi||_inf ||x||) over bounded multipliers
double centralizer_constant(const DerivationSpec& omega, const SpaceSpec& space,
                            std::size_t dim, std::size_t samples, std::uint64_t seed);

struct GapResult {
    double gap;
    Vector witness;
};

// distance to diagonal-linear maps on a block: f_i = [Omega(e_i)]_i, then the
// sampled sup of ||Omega(x) - f x|| over ||x|| <= 1 supported in the block
GapResult triviality_gap_witness(const DerivationSpec& omega, const SpaceSpec& space,
                                 const IndexSet& block, std::size_t samples,
                                 std::uint64_t seed);
double triviality_gap(const DerivationSpec& omega, const SpaceSpec& space,
                      const IndexSet& block, std::size_t samples, std::uint64_t seed);

// sampled sup of ||Omega1(x) - Omega2(x)|| / ||x||; the comparison used for
// all closed-form vs numerical checks
double bounded_equivalence(const DerivationSpec& omega1, const DerivationSpec& omega2,
                           const SpaceSpec& space, std::size_t dim, std::size_t samples,
                           std::uint64_t seed);

// max ||v + w|| / (||v|| + ||w||) of the derived-space quasi-norm
double quasi_triangle_constant(const DerivationSpec& omega, const SpaceSpec& space,
                               std::size_t dim, std::size_t samples, std::uint64_t seed);

struct GapReport {
    std::vector<std::size_t> dims;
    std::vector<double> gaps;
    std::vector<Vector> witnesses;
    std::size_t samples;
    std::uint64_t seed;
};

GapReport gap_curve(const DerivationSpec& omega, const SpaceSpec& space,
                    const std::vector<IndexSet>& blocks, std::size_t samples,
                    std::uint64_t seed);

struct AParamResult {
    std::size_t n;
    double lower_bound;  // achieved by witness
    Vector witness;
    std::optional<double> analytic;  // exact value when the kind has a formula
    std::string formula;
};

// sup ||x_1 + ... + x_n|| over ||x_i|| <= 1 with n < supp x_1 < ... < supp x_n
// (successive supports).  Candidates: normalized constant blocks of several
// widths, geometrically growing widths, plus ascent refinement bounded by
// `budget` norm evaluations.
AParamResult a_param(const SpaceSpec& space, std::size_t n, std::size_t budget,
                     std::uint64_t seed);

struct ScalePredicates {
    bool a_different;
    bool a_interpolates;
    double alpha0, alpha1, alpha_theta;  // fitted growth exponents (heuristic)
    double tol;
    std::vector<std::size_t> n_range;
};

// fits log A(n) ~ alpha log n for X0, X1 and the interpolated space; the
// finite-range exponent fit makes both predicates heuristic
ScalePredicates scale_predicates(const CoupleSpec& c, const std::vector<std::size_t>& n_range,
                                 double tol, std::size_t budget, std::uint64_t seed);

struct SingularityReport {
    std::vector<std::size_t> block_sizes;
    std::vector<double> full_gaps;      // triviality gap per block
    std::vector<double> diagonal_gaps;  // gap on the span of one normalized vector per block
    std::size_t samples;
    std::uint64_t seed;
};

// heuristic probe, never a proof: small diagonal-subspace gaps are evidence
// toward strict non-singularity, growing full-block gaps toward singularity
SingularityReport singularity_probe(const DerivationSpec& omega, const SpaceSpec& space,
                                    const Partition& partition, std::size_t samples,
                                    std::uint64_t seed);

}  // namespace ilab
