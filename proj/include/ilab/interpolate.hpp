#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "ilab/space.hpp"
#include "ilab/vector.hpp"

namespace ilab {

// ordered couple of compatible spaces with interior interpolation parameter
struct CoupleSpec {
    SpacePtr x0, x1;
    double theta;
};

CoupleSpec couple(SpacePtr x0, SpacePtr x1, double theta);

// raised when the factorization solver cannot certify a result; experiments
// must never report uncertified values
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

// Almost optimal factorization |x| = a0^(1-theta) a1^theta with
// a0 = |x| exp(theta s), a1 = |x| exp(-(1-theta) s) on supp(x).
// bound = ||a0||_0^(1-theta) ||a1||_1^theta, within (1+eps) of the infimum.
// The factorization is gauge-balanced: ||a0||_0 = ||a1||_1.
struct Factorization {
    Vector a0, a1;
    Vector s;  // log-ratio parameter on supp(x)
    double bound;
    double eps;
};

// Minimizes G(s) = (1-theta) log||a0(s)||_0 + theta log||a1(s)||_1 (convex)
// by coordinate descent with backtracking until the relative improvement per
// sweep drops below eps/4 and a first-order stationarity residual passes.
// Closed-form warm starts for l_p and weighted couples; couples of the form
// (X, DualOf(X), 1/2) are solved through the equivalent primal program
// max { sum x_i^2 log a_i : ||a||_X <= 1 }.
Factorization lozanovskii_factor(const CoupleSpec& c, const Vector& x, double eps = 1e-6);

// Calderon-product interpolation norm: inf ||y||_0^(1-theta) ||z||_1^theta
// over |x| = |y|^(1-theta) |z|^theta.  0 for x = 0.
double calderon_norm(const CoupleSpec& c, const Vector& x, double eps = 1e-6);

// Omega_theta(x) = x log(a1/a0) = -x.s; defined up to an additive term of
// order O(eps)||x||, so callers compare derivations via bounded_equivalence
Vector numerical_derivation(const CoupleSpec& c, const Vector& x, double eps = 1e-6);

struct ReiterationReport {
    double theta0, theta1, eta;
    double theta;       // (1-eta) theta0 + eta theta1
    double distance;    // sup ||Omega_reit(x) - (theta1-theta0) Omega_theta(x)|| / ||x||
    std::size_t samples;
    std::uint64_t seed;
};

// Builds X_theta0, X_theta1 as Calderon-product norms, extracts the numerical
// derivation of the reiterated couple at eta and compares it against
// (theta1 - theta0) * Omega_theta of the base couple.
ReiterationReport reiteration_check(const CoupleSpec& base, double theta0, double theta1,
                                    double eta, std::size_t samples, std::size_t dim,
                                    std::uint64_t seed, double eps = 1e-6);

}  // namespace ilab
