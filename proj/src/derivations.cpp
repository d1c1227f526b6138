#include "ilab/derivations.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ilab {

namespace {

double interp_exponent(double e0, double e1, double theta) {
    // 1/e = (1-theta)/e0 + theta/e1, with inf handled as 1/inf = 0
    double i0 = std::isinf(e0) ? 0.0 : 1.0 / e0;
    double i1 = std::isinf(e1) ? 0.0 : 1.0 / e1;
    double ie = (1.0 - theta) * i0 + theta * i1;
    return ie == 0.0 ? kInf : 1.0 / ie;
}

double ratio_or_zero(double p, double pj) { return std::isinf(pj) ? 0.0 : p / pj; }

}  // namespace

Vector kalton_peck(const Vector& x, const SpaceSpec& space, double coeff) {
    Vector out(x.dim());
    if (x.is_zero()) return out;
    double nx = norm(space, x);
    if (nx == 0.0) return out;
    for (std::size_t i : x.support())
        out.at(i) = coeff * x[i] * std::log(nx / std::fabs(x[i]));
    return out;
}

Vector amalgam_phi_general(const Vector& a, const DerivationSpec& outer_derivation,
                           const std::vector<DerivationPtr>& inner,
                           const std::vector<SpacePtr>& inner_spaces,
                           const Partition& partition) {
    if (inner.size() != partition.count() || inner_spaces.size() != partition.count())
        throw std::invalid_argument("amalgam_phi: block layout mismatch");
    std::size_t dim = std::max(a.dim(), partition.span());
    Vector block_norms(std::max<std::size_t>(1, partition.count()));
    std::vector<Vector> blocks;
    blocks.reserve(partition.count());
    for (std::size_t n = 0; n < partition.count(); ++n) {
        blocks.push_back(restrict_to(a, partition.block(n)));
        block_norms.at(n) = norm(*inner_spaces[n], blocks.back());
    }
    Vector omega_hat = outer_derivation.evaluate(block_norms);
    Vector out(dim);
    for (std::size_t n = 0; n < partition.count(); ++n) {
        if (block_norms[n] == 0.0) continue;
        double scale = omega_hat[n] / block_norms[n];
        Vector t2 = inner[n]->evaluate(blocks[n]);
        for (std::size_t i : partition.block(n)) out.at(i) += scale * blocks[n][i] + t2[i];
    }
    return out;
}

Vector amalgam_phi(const Vector& a, double p0, double p1, double theta,
                   const std::vector<DerivationPtr>& inner,
                   const std::vector<SpacePtr>& inner_spaces, const SpacePtr& lambda_base,
                   const Partition& partition) {
    if (inner.size() != partition.count() || inner_spaces.size() != partition.count())
        throw std::invalid_argument("amalgam_phi: block layout mismatch");
    double p = interp_exponent(p0, p1, theta);
    double coeff = ratio_or_zero(p, p1) - ratio_or_zero(p, p0);
    SpacePtr outer = std::isinf(p) ? lp(kInf) : convexified(lambda_base, p);
    SpacePtr total = amalgam(outer, inner_spaces, partition);

    std::size_t dim = std::max(a.dim(), partition.span());
    Vector out(dim);
    double na = norm(*total, a);
    for (std::size_t n = 0; n < partition.count(); ++n) {
        Vector an = restrict_to(a, partition.block(n));
        if (an.is_zero()) continue;
        double nan = norm(*inner_spaces[n], an);
        double logterm = na > 0.0 && nan > 0.0 ? std::log(nan / na) : 0.0;
        Vector t2 = inner[n]->evaluate(an);
        for (std::size_t i : partition.block(n))
            out.at(i) += coeff * an[i] * logterm + t2[i];
    }
    return out;
}

Vector fragment_derivation(const DerivationSpec& base, const IndexSet& a, const Vector& x) {
    return restrict_to(base.evaluate(restrict_to(x, a)), a);
}

Vector kalton_map_numeric(const Vector& x, double p0, double p1, double q, double theta,
                          double eps) {
    if (p0 == p1) throw std::invalid_argument("kalton_map_numeric: requires p0 != p1");
    if (x.is_zero()) return Vector(x.dim());
    CoupleSpec c = couple(lorentz(p0, q), lorentz(p1, q), theta);
    Vector omega = numerical_derivation(c, x, eps);
    double denom = -(1.0 / p0 - 1.0 / p1);
    return (1.0 / denom) * omega;
}

Vector lorentz_derivation(const Vector& x, double p0, double q0, double p1, double q1,
                          double theta, const DerivationSpec& kappa_source) {
    double p = interp_exponent(p0, p1, theta);
    double q = interp_exponent(q0, q1, theta);
    double kp_coeff = q * (1.0 / q0 - 1.0 / q1);
    double kappa_coeff = (q / p) * (1.0 / q0 - 1.0 / q1) - (1.0 / p0 - 1.0 / p1);
    Vector out(x.dim());
    if (kp_coeff != 0.0) out += kalton_peck(x, *lorentz(p, q), kp_coeff);
    if (kappa_coeff != 0.0) out += kappa_coeff * kappa_source.evaluate(x);
    return out;
}

double derived_norm(const DerivationSpec& omega, const DerivedVector& v,
                    const SpaceSpec& space) {
    return norm(space, v.y - omega.evaluate(v.z)) + norm(space, v.z);
}

Vector DerivationSpec::evaluate(const Vector& x) const {
    if (auto* k = as<KaltonPeckKind>()) return kalton_peck(x, *k->space, k->coeff);
    if (auto* k = as<LinearDiagonalKind>()) return k->f.hadamard(x);
    if (auto* k = as<AmalgamPhiKind>())
        return amalgam_phi(x, k->p0, k->p1, k->theta, k->inner, k->inner_spaces,
                           k->lambda_base, k->partition);
    if (auto* k = as<FragmentedKind>()) {
        std::size_t dim = std::max(x.dim(), k->partition.span());
        Vector out(dim);
        for (const auto& block : k->partition.blocks()) {
            Vector xb = restrict_to(x, block);
            if (xb.is_zero()) continue;
            Vector ob = restrict_to(k->base->evaluate(xb), block);
            out += ob;
        }
        return out;
    }
    if (auto* k = as<LorentzCompositeKind>()) {
        if (x.is_zero()) return Vector(x.dim());
        double q = interp_exponent(k->q0, k->q1, k->theta);
        double kp_coeff = q * (1.0 / k->q0 - 1.0 / k->q1);
        double p = interp_exponent(k->p0, k->p1, k->theta);
        double kappa_coeff = (q / p) * (1.0 / k->q0 - 1.0 / k->q1) - (1.0 / k->p0 - 1.0 / k->p1);
        Vector out(x.dim());
        if (kp_coeff != 0.0) out += kalton_peck(x, *lorentz(p, q), kp_coeff);
        if (kappa_coeff != 0.0)
            out += kappa_coeff * kalton_map_numeric(x, k->p0, k->p1, q, k->theta, k->eps);
        return out;
    }
    if (auto* k = as<NumericalKind>()) {
        if (x.is_zero()) return Vector(x.dim());
        return numerical_derivation(k->couple, x, k->eps);
    }
    throw std::logic_error("DerivationSpec: unhandled kind");
}

std::string DerivationSpec::describe() const {
    std::ostringstream out;
    if (auto* k = as<KaltonPeckKind>()) {
        out << k->coeff << "*K[" << k->space->describe() << "]";
    } else if (auto* k = as<LinearDiagonalKind>()) {
        out << "diag[" << k->f.dim() << "]";
    } else if (as<AmalgamPhiKind>()) {
        out << "amalgam_phi";
    } else if (auto* k = as<FragmentedKind>()) {
        out << "fragmented(" << k->base->describe() << ")";
    } else if (auto* k = as<LorentzCompositeKind>()) {
        out << "lorentz_omega(" << k->p0 << "," << k->q0 << ";" << k->p1 << "," << k->q1 << ")";
    } else if (auto* k = as<NumericalKind>()) {
        out << "numerical[" << k->couple.x0->describe() << "," << k->couple.x1->describe()
            << ";" << k->couple.theta << "]";
    }
    return out.str();
}

DerivationPtr kalton_peck_map(double coeff, SpacePtr space) {
    if (!space) throw std::invalid_argument("kalton_peck_map: null space");
    return std::make_shared<DerivationSpec>(
        DerivationSpec::Kind(KaltonPeckKind{coeff, std::move(space)}));
}

DerivationPtr linear_diagonal(Vector f) {
    return std::make_shared<DerivationSpec>(DerivationSpec::Kind(LinearDiagonalKind{std::move(f)}));
}

DerivationPtr amalgam_phi_map(double p0, double p1, double theta, Partition partition,
                              std::vector<DerivationPtr> inner,
                              std::vector<SpacePtr> inner_spaces, SpacePtr lambda_base) {
    if (inner.size() != partition.count() || inner_spaces.size() != partition.count())
        throw std::invalid_argument("amalgam_phi_map: block layout mismatch");
    double p = interp_exponent(p0, p1, theta);
    SpacePtr outer = std::isinf(p) ? lp(kInf) : convexified(lambda_base, p);
    SpacePtr total = amalgam(outer, inner_spaces, partition);
    return std::make_shared<DerivationSpec>(DerivationSpec::Kind(
        AmalgamPhiKind{p0, p1, theta, std::move(partition), std::move(inner),
                       std::move(inner_spaces), std::move(lambda_base), std::move(total)}));
}

DerivationPtr fragmented(DerivationPtr base, Partition partition) {
    if (!base) throw std::invalid_argument("fragmented: null base");
    return std::make_shared<DerivationSpec>(
        DerivationSpec::Kind(FragmentedKind{std::move(base), std::move(partition)}));
}

DerivationPtr lorentz_composite(double p0, double q0, double p1, double q1, double theta,
                                double eps) {
    if (!(theta > 0.0 && theta < 1.0))
        throw std::invalid_argument("lorentz_composite: theta must lie in (0,1)");
    return std::make_shared<DerivationSpec>(
        DerivationSpec::Kind(LorentzCompositeKind{p0, q0, p1, q1, theta, eps}));
}

DerivationPtr numerical(CoupleSpec c, double eps) {
    return std::make_shared<DerivationSpec>(DerivationSpec::Kind(NumericalKind{std::move(c), eps}));
}

}  // namespace ilab
