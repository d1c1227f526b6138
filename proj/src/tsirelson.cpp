#include "ilab/tsirelson.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ilab {

namespace {

constexpr std::size_t kMaxDpDim = 192;  // desk scale; memory is O(d^3)

// flat 3-d table best[k][s][j], 1-based in s and j, k >= 1
class BestTable {
public:
    BestTable(std::size_t kcap, std::size_t d)
        : d_(d), data_((kcap + 1) * (d + 1) * (d + 1), 0.0) {}
    double& at(std::size_t k, std::size_t s, std::size_t j) {
        return data_[(k * (d_ + 1) + s) * (d_ + 1) + j];
    }

private:
    std::size_t d_;
    std::vector<double> data_;
};

}  // namespace

double tsirelson_norm(const Vector& x, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tsirelson_norm: tol must be > 0");

    IndexSet supp = x.support();
    if (supp.empty()) return 0.0;

    std::size_t min1 = supp.front() + 1;  // 1-based
    std::size_t max1 = supp.back() + 1;
    if (min1 >= max1 - min1 + 1) {
        // all families admissible at every level: exact closed form
        return std::max(x.linf(), 0.5 * x.l1());
    }

    std::size_t d = max1;
    if (d > kMaxDpDim)
        throw std::invalid_argument("tsirelson_norm: support too long for the interval DP");

    // scale so table entries stay moderate
    double scale = x.linf();
    std::vector<double> a(d + 1, 0.0);
    for (std::size_t i = 1; i <= d; ++i) a[i] = std::fabs(x[i - 1]) / scale;

    std::size_t kcap = (d + 1) / 2 + 1;
    BestTable best(kcap, d);
    // N[i][j] = norm of x restricted to [i..j]
    std::vector<std::vector<double>> N(d + 2, std::vector<double>(d + 1, 0.0));

    auto query_branch = [&](std::size_t i, std::size_t j) {
        double br = 0.0;
        for (std::size_t s = i; s <= j; ++s) {
            std::size_t kq = std::min(s, j - s + 1);
            double cand;
            if (kq == 1) {
                if (s == i) continue;  // the full interval itself: never binds
                cand = N[s][j];
            } else {
                cand = best.at(kq, s, j);
            }
            br = std::max(br, cand);
        }
        return br;
    };

    for (std::size_t j = 1; j <= d; ++j) {
        double running_inf = 0.0;
        for (std::size_t i = j; i > 0; --i) {
            running_inf = std::max(running_inf, a[i]);
            std::size_t kmax_ij = std::min(i, j - i + 1);
            for (std::size_t k = 2; k <= kmax_ij; ++k) {
                double m = 0.0;
                for (std::size_t t = i + k - 2; t <= j - 1; ++t)
                    m = std::max(m, best.at(k - 1, i, t) + N[t + 1][j]);
                best.at(k, i, j) = m;
            }
            N[i][j] = std::max(running_inf, 0.5 * query_branch(i, j));
            best.at(1, i, j) = N[i][j];
        }
    }

    // residual re-check of the fixed-point equation against the final tables
    for (std::size_t j = 1; j <= d; ++j) {
        double running_inf = 0.0;
        for (std::size_t i = j; i > 0; --i) {
            running_inf = std::max(running_inf, a[i]);
            double rhs = std::max(running_inf, 0.5 * query_branch(i, j));
            if (std::fabs(rhs - N[i][j]) > tol)
                throw std::runtime_error("tsirelson_norm: fixed point failed to stabilize");
        }
    }

    return scale * N[1][d];
}

double tsirelson2_norm(const Vector& x, double tol) {
    return std::sqrt(tsirelson_norm(x.abs_pow(2.0), tol));
}

}  // namespace ilab
