#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ilab/interpolate.hpp"
#include "ilab/partition.hpp"
#include "ilab/space.hpp"
#include "ilab/vector.hpp"

namespace ilab {

class DerivationSpec;
using DerivationPtr = std::shared_ptr<const DerivationSpec>;

// element (y, z) of a derived space dX_theta
struct DerivedVector {
    Vector y, z;
};

struct KaltonPeckKind {
    double coeff;
    SpacePtr space;
};
struct LinearDiagonalKind {
    Vector f;
};
// two-term map of the amalgam theorem: outer vectorial log term over block
// norms plus blockwise inner derivations
struct AmalgamPhiKind {
    double p0, p1, theta;
    Partition partition;
    std::vector<DerivationPtr> inner;
    std::vector<SpacePtr> inner_spaces;  // interpolated block spaces X_theta
    SpacePtr lambda_base;                // lambda whose convexifications are the outers
    SpacePtr total_space;                // lambda_p amalgam of inner_spaces
};
struct FragmentedKind {
    DerivationPtr base;
    Partition partition;
};
struct LorentzCompositeKind {
    double p0, q0, p1, q1, theta;
    double eps;
};
struct NumericalKind {
    CoupleSpec couple;
    double eps;
};

// Tagged homogeneous map, evaluable on Vectors.  Immutable; evaluation is a
// pure function, so specs can be shared across threads.
class DerivationSpec {
public:
    using Kind = std::variant<KaltonPeckKind, LinearDiagonalKind, AmalgamPhiKind,
                              FragmentedKind, LorentzCompositeKind, NumericalKind>;

    explicit DerivationSpec(Kind k) : kind_(std::move(k)) {}
    const Kind& kind() const { return kind_; }

    template <class K>
    const K* as() const {
        return std::get_if<K>(&kind_);
    }

    Vector evaluate(const Vector& x) const;
    std::string describe() const;

private:
    Kind kind_;
};

DerivationPtr kalton_peck_map(double coeff, SpacePtr space);
DerivationPtr linear_diagonal(Vector f);
DerivationPtr amalgam_phi_map(double p0, double p1, double theta, Partition partition,
                              std::vector<DerivationPtr> inner,
                              std::vector<SpacePtr> inner_spaces, SpacePtr lambda_base);
DerivationPtr fragmented(DerivationPtr base, Partition partition);
DerivationPtr lorentz_composite(double p0, double q0, double p1, double q1, double theta,
                                double eps = 1e-6);
DerivationPtr numerical(CoupleSpec couple, double eps = 1e-6);

// coeff * x log(||x||/|x|): coordinatewise, 0 off the support and at x = 0
Vector kalton_peck(const Vector& x, const SpaceSpec& space, double coeff = 1.0);

// (p/p1 - p/p0) sum a_n log(||a_n||/||a||) e_n + sum Omega_n(a_n) e_n with
// 1/p = (1-theta)/p0 + theta/p1; blocks with a_n = 0 contribute 0
Vector amalgam_phi(const Vector& a, double p0, double p1, double theta,
                   const std::vector<DerivationPtr>& inner,
                   const std::vector<SpacePtr>& inner_spaces, const SpacePtr& lambda_base,
                   const Partition& partition);

// counting-measure simple-function form: omega applied to the block-norm
// vector scales the normalized blocks, plus the blockwise inner terms
Vector amalgam_phi_general(const Vector& a, const DerivationSpec& outer_derivation,
                           const std::vector<DerivationPtr>& inner,
                           const std::vector<SpacePtr>& inner_spaces,
                           const Partition& partition);

// 1_A Omega(1_A x); for the Kalton-Peck map the norm inside the logarithm
// becomes the block norm
Vector fragment_derivation(const DerivationSpec& base, const IndexSet& a, const Vector& x);

// q(1/q0 - 1/q1) K + ( (q/p)(1/q0 - 1/q1) - (1/p0 - 1/p1) ) kappa, with K
// taken in l_{p,q}.  The K coefficient is oriented so that the composite
// matches the derivation extracted from the factorization (the equal-ratio
// scale degenerates to the plain l_p couple).
Vector lorentz_derivation(const Vector& x, double p0, double q0, double p1, double q1,
                          double theta, const DerivationSpec& kappa_source);

// kappa up to bounded ambiguity: the numerical derivation of the equal-q
// Lorentz couple divided by -(1/p0 - 1/p1); compare through
// bounded_equivalence only
Vector kalton_map_numeric(const Vector& x, double p0, double p1, double q, double theta,
                          double eps = 1e-6);

// ||y - Omega(z)|| + ||z||
double derived_norm(const DerivationSpec& omega, const DerivedVector& v,
                    const SpaceSpec& space);

}  // namespace ilab
