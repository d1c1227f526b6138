#include "ilab/space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ilab/dual_norm.hpp"
#include "ilab/interpolate.hpp"
#include "ilab/tsirelson.hpp"

namespace ilab {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void check_exponent(double p, bool allow_inf = true) {
    if (std::isnan(p) || p < 1.0 || (!allow_inf && std::isinf(p)))
        throw std::invalid_argument("exponent must lie in [1, inf]");
}

double stable_p_sum(const std::vector<double>& vals, double p) {
    // vals are nonnegative; returns (sum vals^p)^(1/p) with max factored out
    double m = 0.0;
    for (double v : vals) m = std::max(m, v);
    if (m == 0.0) return 0.0;
    double s = 0.0;
    for (double v : vals)
        if (v > 0.0) s += std::pow(v / m, p);
    return m * std::pow(s, 1.0 / p);
}

double lp_norm(double p, const Vector& x) {
    if (std::isinf(p)) return x.linf();
    if (p == 1.0) return x.l1();
    if (p == 2.0) return x.l2();
    std::vector<double> vals;
    vals.reserve(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) vals.push_back(std::fabs(x[i]));
    return stable_p_sum(vals, p);
}

double weighted_lp_norm(const WeightedLpKind& k, const Vector& x) {
    if (std::isinf(k.p)) return x.linf();
    std::vector<double> vals;
    vals.reserve(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (x[i] == 0.0) continue;
        if (i >= k.weight.dim())
            throw std::invalid_argument("weighted_lp: weight shorter than the support of x");
        vals.push_back(std::fabs(x[i]) * std::pow(k.weight[i], 1.0 / k.p));
    }
    return stable_p_sum(vals, k.p);
}

double lorentz_norm(const LorentzKind& k, const Vector& x) {
    std::vector<double> sorted;
    sorted.reserve(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i)
        if (x[i] != 0.0) sorted.push_back(std::fabs(x[i]));
    if (sorted.empty()) return 0.0;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (std::isinf(k.q)) {
        double m = 0.0;
        for (std::size_t n = 0; n < sorted.size(); ++n)
            m = std::max(m, std::pow(double(n + 1), 1.0 / k.p) * sorted[n]);
        return m;
    }
    // (p/q) ( sum x*(n)^q (n^(q/p) - (n-1)^(q/p)) )^(1/q); the p/q factor sits
    // outside the root, as documented
    double scale = sorted.front();
    double s = 0.0, prev = 0.0;
    for (std::size_t n = 0; n < sorted.size(); ++n) {
        double cur = std::pow(double(n + 1), k.q / k.p);
        s += std::pow(sorted[n] / scale, k.q) * (cur - prev);
        prev = cur;
    }
    return (k.p / k.q) * scale * std::pow(s, 1.0 / k.q);
}

}  // namespace

SpacePtr lp(double p) {
    check_exponent(p);
    return std::make_shared<SpaceSpec>(SpaceSpec::Kind(LpKind{p}));
}

SpacePtr weighted_lp(double p, Vector weight) {
    check_exponent(p);
    for (std::size_t i = 0; i < weight.dim(); ++i)
        require(weight[i] > 0.0, "weighted_lp: weights must be strictly positive");
    return std::make_shared<SpaceSpec>(SpaceSpec::Kind(WeightedLpKind{p, std::move(weight)}));
}

SpacePtr lorentz(double p, double q) {
    check_exponent(p, /*allow_inf=*/false);
    check_exponent(q);
    return std::make_shared<SpaceSpec>(SpaceSpec::Kind(LorentzKind{p, q}));
}

SpacePtr tsirelson() { return std::make_shared<SpaceSpec>(SpaceSpec::Kind(TsirelsonTKind{})); }

SpacePtr tsirelson2() { return std::make_shared<SpaceSpec>(SpaceSpec::Kind(Tsirelson2Kind{})); }

SpacePtr convexified(SpacePtr base, double p) {
    require(base != nullptr, "convexified: null base");
    check_exponent(p);
    return std::make_shared<SpaceSpec>(SpaceSpec::Kind(ConvexifiedKind{std::move(base), p}));
}

SpacePtr amalgam(SpacePtr outer, std::vector<SpacePtr> inner, Partition partition) {
    require(outer != nullptr, "amalgam: null outer");
    require(inner.size() == partition.count(),
            "amalgam: inner list length must equal the block count");
    for (const auto& s : inner) require(s != nullptr, "amalgam: null inner space");
    return std::make_shared<SpaceSpec>(
        SpaceSpec::Kind(AmalgamKind{std::move(outer), std::move(inner), std::move(partition)}));
}

SpacePtr restricted(SpacePtr base, IndexSet block) {
    require(base != nullptr, "restricted: null base");
    return std::make_shared<SpaceSpec>(SpaceSpec::Kind(RestrictedKind{std::move(base), std::move(block)}));
}

SpacePtr dual_of(SpacePtr base) {
    require(base != nullptr, "dual_of: null base");
    return std::make_shared<SpaceSpec>(SpaceSpec::Kind(DualOfKind{std::move(base)}));
}

SpacePtr interpolated(SpacePtr x0, SpacePtr x1, double theta, double eps) {
    require(x0 != nullptr && x1 != nullptr, "interpolated: null space");
    require(theta > 0.0 && theta < 1.0, "interpolated: theta must lie in (0,1)");
    require(eps > 0.0, "interpolated: eps must be > 0");
    return std::make_shared<SpaceSpec>(
        SpaceSpec::Kind(InterpolatedKind{std::move(x0), std::move(x1), theta, eps}));
}

bool same_spec(const SpaceSpec& a, const SpaceSpec& b) {
    if (a.kind().index() != b.kind().index()) return false;
    if (auto* ka = a.as<LpKind>()) return ka->p == b.as<LpKind>()->p;
    if (auto* ka = a.as<WeightedLpKind>()) {
        auto* kb = b.as<WeightedLpKind>();
        return ka->p == kb->p && ka->weight == kb->weight;
    }
    if (auto* ka = a.as<LorentzKind>()) {
        auto* kb = b.as<LorentzKind>();
        return ka->p == kb->p && ka->q == kb->q;
    }
    if (a.as<TsirelsonTKind>() || a.as<Tsirelson2Kind>()) return true;
    if (auto* ka = a.as<ConvexifiedKind>()) {
        auto* kb = b.as<ConvexifiedKind>();
        return ka->p == kb->p && same_spec(*ka->base, *kb->base);
    }
    if (auto* ka = a.as<AmalgamKind>()) {
        auto* kb = b.as<AmalgamKind>();
        if (!same_spec(*ka->outer, *kb->outer)) return false;
        if (ka->inner.size() != kb->inner.size()) return false;
        for (std::size_t i = 0; i < ka->inner.size(); ++i)
            if (!same_spec(*ka->inner[i], *kb->inner[i])) return false;
        return ka->partition.blocks() == kb->partition.blocks();
    }
    if (auto* ka = a.as<RestrictedKind>()) {
        auto* kb = b.as<RestrictedKind>();
        return ka->block == kb->block && same_spec(*ka->base, *kb->base);
    }
    if (auto* ka = a.as<DualOfKind>()) return same_spec(*ka->base, *b.as<DualOfKind>()->base);
    if (auto* ka = a.as<InterpolatedKind>()) {
        auto* kb = b.as<InterpolatedKind>();
        return ka->theta == kb->theta && same_spec(*ka->x0, *kb->x0) && same_spec(*ka->x1, *kb->x1);
    }
    return false;
}

bool same_spec(const SpacePtr& a, const SpacePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return same_spec(*a, *b);
}

std::string SpaceSpec::describe() const {
    std::ostringstream out;
    if (auto* k = as<LpKind>()) {
        out << "lp(" << k->p << ")";
    } else if (auto* k = as<WeightedLpKind>()) {
        out << "lp(" << k->p << ", w[" << k->weight.dim() << "])";
    } else if (auto* k = as<LorentzKind>()) {
        out << "lorentz(" << k->p << ", " << k->q << ")";
    } else if (as<TsirelsonTKind>()) {
        out << "tsirelson";
    } else if (as<Tsirelson2Kind>()) {
        out << "tsirelson2";
    } else if (auto* k = as<ConvexifiedKind>()) {
        out << "convexified(" << k->base->describe() << ", " << k->p << ")";
    } else if (auto* k = as<AmalgamKind>()) {
        out << "amalgam(" << k->outer->describe() << "; " << k->inner.size() << " blocks)";
    } else if (auto* k = as<RestrictedKind>()) {
        out << k->base->describe() << "[A:" << k->block.size() << "]";
    } else if (auto* k = as<DualOfKind>()) {
        out << "dual(" << k->base->describe() << ")";
    } else if (auto* k = as<InterpolatedKind>()) {
        out << "(" << k->x0->describe() << ", " << k->x1->describe() << ")_" << k->theta;
    }
    return out.str();
}

double norm(const SpaceSpec& space, const Vector& x) {
    if (auto* k = space.as<LpKind>()) return lp_norm(k->p, x);
    if (auto* k = space.as<WeightedLpKind>()) return weighted_lp_norm(*k, x);
    if (auto* k = space.as<LorentzKind>()) return lorentz_norm(*k, x);
    if (space.as<TsirelsonTKind>()) return tsirelson_norm(x);
    if (space.as<Tsirelson2Kind>()) return tsirelson2_norm(x);
    if (auto* k = space.as<ConvexifiedKind>()) {
        if (std::isinf(k->p)) return x.linf();
        return std::pow(norm(*k->base, x.abs_pow(k->p)), 1.0 / k->p);
    }
    if (auto* k = space.as<AmalgamKind>()) {
        IndexSet supp = x.support();
        for (std::size_t i : supp) {
            bool covered = false;
            for (const auto& b : k->partition.blocks())
                if (std::binary_search(b.begin(), b.end(), i)) {
                    covered = true;
                    break;
                }
            if (!covered)
                throw std::invalid_argument("amalgam: x supported outside the partition");
        }
        Vector block_norms(std::max<std::size_t>(1, k->partition.count()));
        for (std::size_t n = 0; n < k->partition.count(); ++n)
            block_norms.at(n) = norm(*k->inner[n], restrict_to(x, k->partition.block(n)));
        return norm(*k->outer, block_norms);
    }
    if (auto* k = space.as<RestrictedKind>()) return norm(*k->base, restrict_to(x, k->block));
    if (auto* k = space.as<DualOfKind>()) {
        // reduced internal budget: the evaluation sits inside solver loops and
        // closed forms handle the common cases exactly
        return dual_norm(*k->base, x, 80, 0x51ab, 4).value;
    }
    if (auto* k = space.as<InterpolatedKind>())
        return calderon_norm(CoupleSpec{k->x0, k->x1, k->theta}, x, k->eps);
    throw std::logic_error("norm: unhandled space kind");
}

double norm(const SpacePtr& space, const Vector& x) {
    if (!space) throw std::invalid_argument("norm: null space");
    return norm(*space, x);
}

}  // namespace ilab
