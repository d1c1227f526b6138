#include "ilab/dual_norm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ilab/rng.hpp"

namespace ilab {

namespace {

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

DualNormResult holder_lp(double p, const Vector& y) {
    std::size_t d = y.dim();
    Vector w(d);
    if (y.is_zero()) return {0.0, w};
    if (p == 1.0) {  // dual is l_inf
        std::size_t arg = 0;
        for (std::size_t i = 0; i < d; ++i)
            if (std::fabs(y[i]) > std::fabs(y[arg])) arg = i;
        w.at(arg) = sgn(y[arg]);
        return {std::fabs(y[arg]), w};
    }
    if (std::isinf(p)) {  // dual is l_1
        for (std::size_t i = 0; i < d; ++i) w.at(i) = sgn(y[i]);
        return {y.l1(), w};
    }
    double q = p / (p - 1.0);
    double value;
    {
        Vector a = y.abs();
        std::vector<double> vals(a.data());
        double m = a.linf(), s = 0.0;
        for (double v : vals)
            if (v > 0.0) s += std::pow(v / m, q);
        value = m * std::pow(s, 1.0 / q);
    }
    for (std::size_t i = 0; i < d; ++i)
        if (y[i] != 0.0)
            w.at(i) = sgn(y[i]) * std::pow(std::fabs(y[i]) / value, q - 1.0);
    return {value, w};
}

DualNormResult holder_weighted_lp(const WeightedLpKind& k, const Vector& y) {
    std::size_t d = y.dim();
    Vector w(d);
    if (y.is_zero()) return {0.0, w};
    if (std::isinf(k.p)) {
        for (std::size_t i = 0; i < d; ++i) w.at(i) = sgn(y[i]);
        return {y.l1(), w};
    }
    if (k.p == 1.0) {  // sup |y_i| / w_i, witness e_i / w_i
        std::size_t arg = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < d; ++i) {
            if (y[i] == 0.0) continue;
            double v = std::fabs(y[i]) / k.weight[i];
            if (v > best) {
                best = v;
                arg = i;
            }
        }
        w.at(arg) = sgn(y[arg]) / k.weight[arg];
        return {best, w};
    }
    double q = k.p / (k.p - 1.0);
    double s = 0.0, m = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        if (y[i] != 0.0) m = std::max(m, std::fabs(y[i]) * std::pow(k.weight[i], 1.0 - q));
    for (std::size_t i = 0; i < d; ++i)
        if (y[i] != 0.0)
            s += std::pow(std::fabs(y[i]) / m, q) * std::pow(k.weight[i], 1.0 - q);
    double value = m * std::pow(s, 1.0 / q);
    for (std::size_t i = 0; i < d; ++i)
        if (y[i] != 0.0)
            w.at(i) = sgn(y[i]) *
                      std::pow(std::fabs(y[i]) / (value * k.weight[i]), q - 1.0);
    return {value, w};
}

// Dual of max(||.||_inf, ||.||_2 / sqrt(2)) via infimal convolution of l_1
// with sqrt(2) l_2, valid on blocks deep enough that the Tsirelson-2 norm
// takes that closed form.
DualNormResult deep_t2_dual(const SpaceSpec& space, const Vector& y) {
    std::size_t d = y.dim();
    Vector w(d);
    IndexSet supp = y.support();
    if (supp.empty()) return {0.0, w};
    auto g = [&](double t) {
        double lin = 0.0, sq = 0.0;
        for (std::size_t i : supp) {
            double a = std::fabs(y[i]);
            lin += std::max(a - t, 0.0);
            double c = std::min(a, t);
            sq += c * c;
        }
        return lin + std::sqrt(2.0) * std::sqrt(sq);
    };
    double hi = 0.0;
    for (std::size_t i : supp) hi = std::max(hi, std::fabs(y[i]));
    double lo = 0.0, best_t = hi;
    for (int it = 0; it < 200; ++it) {
        double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (g(m1) < g(m2))
            hi = m2;
        else
            lo = m1;
    }
    best_t = 0.5 * (lo + hi);
    if (best_t <= 0.0) {
        std::size_t arg = supp.front();
        for (std::size_t i : supp)
            if (std::fabs(y[i]) > std::fabs(y[arg])) arg = i;
        w.at(arg) = sgn(y[arg]);
        return {std::fabs(y[arg]), w};
    }
    for (std::size_t i : supp) w.at(i) = sgn(y[i]) * std::min(std::fabs(y[i]), best_t) / best_t;
    double nw = norm(space, w);
    w *= 1.0 / nw;
    return {w.dot(y), w};
}

bool deep_block(const IndexSet& s) {
    if (s.empty()) return true;
    std::size_t min1 = s.front() + 1, max1 = s.back() + 1;
    return min1 >= max1 - min1 + 1;
}

DualNormResult ascent(const SpaceSpec& space, const Vector& y, std::size_t budget,
                      std::uint64_t seed, std::size_t restarts) {
    Vector ay = y.abs();
    IndexSet supp = ay.support();
    std::size_t d = y.dim();
    if (supp.empty()) return {0.0, Vector(d)};

    auto value_of = [&](const Vector& x) {
        double n = norm(space, x);
        return n > 0.0 ? x.dot(ay) / n : 0.0;
    };

    double best_val = 0.0;
    Vector best_x(d);

    for (std::size_t r = 0; r < std::max<std::size_t>(1, restarts); ++r) {
        Rng rng = Rng::substream(seed, r);
        Vector x(d);
        if (r == 0) {
            x = ay;
        } else if (r == 1) {
            for (std::size_t i : supp) x.at(i) = 1.0;
        } else {
            double a = rng.uniform(0.3, 1.2);
            for (std::size_t i : supp)
                x.at(i) = std::pow(ay[i], a) * std::exp(0.4 * rng.gaussian());
        }
        double nx = norm(space, x);
        if (nx <= 0.0) continue;
        x *= 1.0 / nx;
        double val = value_of(x);

        for (std::size_t sweep = 0; sweep < budget; ++sweep) {
            double before = val;
            for (std::size_t i : supp) {
                double xi = x[i];
                double base = std::max(xi, 1e-8 * x.linf());
                double cand_hi = 8.0 * base;
                // coarse scan then golden refinement of the quasiconcave
                // single-coordinate profile
                double bt = xi, bv = val;
                for (double t : {0.0, 0.125 * base, 0.25 * base, 0.5 * base, 0.75 * base,
                                 base, 1.5 * base, 2.0 * base, 4.0 * base, cand_hi}) {
                    Vector xt = x;
                    xt.at(i) = t;
                    double v = value_of(xt);
                    if (v > bv) {
                        bv = v;
                        bt = t;
                    }
                }
                double lo = std::max(0.0, bt * 0.5), hi = std::min(cand_hi, bt * 2.0 + 1e-12);
                for (int it = 0; it < 14; ++it) {
                    double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
                    Vector x1 = x, x2 = x;
                    x1.at(i) = m1;
                    x2.at(i) = m2;
                    double v1 = value_of(x1), v2 = value_of(x2);
                    if (v1 < v2)
                        lo = m1;
                    else
                        hi = m2;
                    double vm = std::max(v1, v2);
                    if (vm > bv) {
                        bv = vm;
                        bt = v1 < v2 ? m2 : m1;
                    }
                }
                if (bv > val) {
                    x.at(i) = bt;
                    val = bv;
                }
            }
            if (val - before <= 1e-13 * std::max(1.0, val)) break;
        }
        if (val > best_val) {
            best_val = val;
            best_x = x;
        }
    }

    double n = norm(space, best_x);
    if (n > 0.0) best_x *= 1.0 / n;
    Vector w(d);
    for (std::size_t i : supp) w.at(i) = sgn(y[i]) * best_x[i];
    double nn = norm(space, w);
    if (nn > 0.0) w *= 1.0 / nn;
    return {w.dot(y), w};
}

}  // namespace

DualNormResult dual_norm_ascent(const SpaceSpec& space, const Vector& y, std::size_t budget,
                                std::uint64_t seed, std::size_t restarts) {
    return ascent(space, y, budget, seed, restarts);
}

DualNormResult dual_norm(const SpaceSpec& space, const Vector& y, std::size_t budget,
                         std::uint64_t seed, std::size_t restarts) {
    if (auto* k = space.as<LpKind>()) return holder_lp(k->p, y);
    if (auto* k = space.as<WeightedLpKind>()) return holder_weighted_lp(*k, y);
    if (space.as<Tsirelson2Kind>() && deep_block(y.support())) return deep_t2_dual(space, y);
    if (auto* k = space.as<RestrictedKind>()) {
        // L(A) pairs within A; components off the block do not act on it
        Vector ya = restrict_to(y, k->block);
        if (k->base->as<Tsirelson2Kind>() && deep_block(ya.support())) {
            auto r = deep_t2_dual(space, ya);
            return r;
        }
        return ascent(space, ya, budget, seed, restarts);
    }
    if (auto* k = space.as<DualOfKind>()) {
        // bidual: the norm of the base space itself; witness from the norm's
        // gradient (Euler homogeneity gives <g, y> = ||y||)
        double v = norm(*k->base, y);
        Vector g(y.dim());
        if (v > 0.0) {
            double h = 1e-6 * y.linf();
            for (std::size_t i : y.support()) {
                Vector yp = y, ym = y;
                yp.at(i) += h;
                ym.at(i) -= h;
                g.at(i) = (norm(*k->base, yp) - norm(*k->base, ym)) / (2.0 * h);
            }
        }
        return {v, g};
    }
    return ascent(space, y, budget, seed, restarts);
}

}  // namespace ilab
