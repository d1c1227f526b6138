#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "ilab/rng.hpp"
#include "ilab/tsirelson.hpp"
#include "ilab/vector.hpp"

using namespace ilab;

namespace {

// Independent oracle: the fixed point over families of arbitrary successive
// finite sets (not only intervals), enumerated exhaustively over bitmasks.
// Positions are 1-based; bit (i-1) of a mask holds coordinate i.
struct BruteTsirelson {
    std::vector<double> a;  // a[1..d] = |x_i|
    std::size_t d;
    std::vector<double> nu;  // by mask; proper submasks are numerically smaller

    explicit BruteTsirelson(const Vector& x) {
        d = x.dim();
        a.assign(d + 1, 0.0);
        for (std::size_t i = 1; i <= d; ++i) a[i] = std::fabs(x[i - 1]);
        nu.assign(std::size_t(1) << d, 0.0);
        for (std::size_t mask = 1; mask < nu.size(); ++mask) nu[mask] = compute(mask);
    }

    static int min_pos(std::size_t mask) {
        int p = 1;
        while (!(mask & 1u)) {
            mask >>= 1;
            ++p;
        }
        return p;
    }
    static int max_pos(std::size_t mask) {
        int p = 0;
        while (mask) {
            mask >>= 1;
            ++p;
        }
        return p;
    }

    // best sum of nu over `count` successive nonempty subsets of `avail`
    double family_sum(std::size_t avail, int count, std::size_t full, int self_guard) const {
        if (count == 0) return 0.0;
        double best = -1.0;
        // enumerate nonempty submasks of avail
        for (std::size_t e = avail; e; e = (e - 1) & avail) {
            if (self_guard && e == full) continue;  // the single full set never binds
            std::size_t rest_mask = avail & ~((std::size_t(1) << max_pos(e)) - 1);
            double tail = family_sum(rest_mask, count - 1, full, 0);
            if (tail < 0.0) continue;
            double cand = nu[e] + tail;
            best = std::max(best, cand);
        }
        return best;
    }

    double compute(std::size_t mask) {
        double inf = 0.0;
        for (int i = 1; i <= int(d); ++i)
            if (mask & (std::size_t(1) << (i - 1))) inf = std::max(inf, a[i]);
        double branch = 0.0;
        for (int k = 1; k <= int(d); ++k) {
            // admissibility: k sets, min E_1 >= k
            std::size_t avail = mask & ~((std::size_t(1) << (k - 1)) - 1);
            double s = family_sum(avail, k, mask, k == 1 ? 1 : 0);
            if (s > branch) branch = s;
        }
        return std::max(inf, 0.5 * branch);
    }

    double value() const { return nu.back(); }
};

Vector flat(std::size_t dim, std::size_t lo1, std::size_t hi1) {
    Vector v(dim);
    for (std::size_t i = lo1; i <= hi1; ++i) v.at(i - 1) = 1.0;
    return v;
}

}  // namespace

TEST_CASE("singleton far out in the space has norm 1") {
    CHECK(tsirelson_norm(Vector::unit(8, 4)) == doctest::Approx(1.0));
    CHECK(tsirelson_norm(Vector::unit(3, 0)) == doctest::Approx(1.0));
}

TEST_CASE("e_2 + e_3: best family ties the sup branch with the max branch") {
    Vector x(3);
    x.at(1) = 1.0;
    x.at(2) = 1.0;
    CHECK(tsirelson_norm(x) == doctest::Approx(1.0));
}

TEST_CASE("flat vector after its own length") {
    for (std::size_t n : {2, 3, 5, 8, 16}) {
        Vector x(2 * n);
        for (std::size_t i = n; i < 2 * n; ++i) x.at(i) = 1.0;
        double v = tsirelson_norm(x);
        CHECK(v >= 0.5 * double(n));
        CHECK(v <= double(n));
        CHECK(v == doctest::Approx(std::max(1.0, 0.5 * double(n))));
    }
}

TEST_CASE("initial flat segments") {
    CHECK(tsirelson_norm(flat(3, 1, 3)) == doctest::Approx(1.0));
    CHECK(tsirelson_norm(flat(4, 1, 4)) == doctest::Approx(1.0));
    CHECK(tsirelson_norm(flat(5, 1, 5)) == doctest::Approx(1.5));
}

TEST_CASE("interval DP agrees with the exhaustive set-family oracle") {
    Rng rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t d = 4 + rng.index(3);  // 4..6
        Vector x(d);
        for (std::size_t i = 0; i < d; ++i)
            x.at(i) = rng.uniform() < 0.2 ? 0.0 : rng.gaussian();
        if (x.is_zero()) x.at(0) = 1.0;
        BruteTsirelson oracle(x);
        CHECK(tsirelson_norm(x) == doctest::Approx(oracle.value()).epsilon(1e-12));
    }
}

TEST_CASE("deep supports collapse to max(linf, l1/2), oracle-confirmed") {
    Rng rng(72);
    for (int trial = 0; trial < 20; ++trial) {
        Vector x(7);
        for (std::size_t i = 3; i < 7; ++i) x.at(i) = rng.gaussian();  // support in [4..7]
        if (x.is_zero()) x.at(3) = 1.0;
        BruteTsirelson oracle(x);
        double closed = std::max(x.linf(), 0.5 * x.l1());
        CHECK(oracle.value() == doctest::Approx(closed).epsilon(1e-12));
        CHECK(tsirelson_norm(x) == doctest::Approx(closed).epsilon(1e-12));
    }
}

TEST_CASE("lattice monotonicity") {
    Rng rng(73);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t d = 5 + rng.index(8);
        Vector y(d), x(d);
        for (std::size_t i = 0; i < d; ++i) {
            y.at(i) = rng.gaussian();
            x.at(i) = y[i] * rng.uniform();
        }
        if (x.is_zero() || y.is_zero()) continue;
        CHECK(tsirelson_norm(x) <= tsirelson_norm(y) + 1e-12);
    }
}

TEST_CASE("unconditionality: sign flips do not change the value") {
    Rng rng(74);
    Vector x(9);
    for (std::size_t i = 0; i < 9; ++i) x.at(i) = rng.gaussian();
    double base = tsirelson_norm(x);
    for (int trial = 0; trial < 8; ++trial) {
        Vector y = x;
        for (std::size_t i = 0; i < 9; ++i)
            if (rng.sign() < 0) y.at(i) = -y[i];
        CHECK(tsirelson_norm(y) == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("two-convexification squares the coordinates") {
    Rng rng(75);
    for (int trial = 0; trial < 10; ++trial) {
        Vector x(10);
        for (std::size_t i = 0; i < 10; ++i) x.at(i) = rng.gaussian();
        double direct = tsirelson2_norm(x);
        CHECK(direct == doctest::Approx(std::sqrt(tsirelson_norm(x.abs_pow(2.0)))));
        CHECK(direct <= x.l2() + 1e-12);
    }
}

TEST_CASE("dyadic blocks sandwich the l2 norm within sqrt(2)") {
    Rng rng(76);
    for (std::size_t n : {2, 3, 4, 5}) {
        std::size_t lo = (std::size_t(1) << (n - 1)) - 1;  // 0-based block start
        std::size_t len = std::size_t(1) << (n - 1);
        Vector x(lo + len);
        for (std::size_t i = 0; i < len; ++i) x.at(lo + i) = rng.gaussian();
        double t2 = tsirelson2_norm(x);
        CHECK(t2 <= x.l2() + 1e-12);
        CHECK(std::sqrt(2.0) * t2 >= x.l2() - 1e-12);
    }
}

TEST_CASE("invalid tolerance is rejected") {
    CHECK_THROWS_AS(tsirelson_norm(Vector{1.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(tsirelson_norm(Vector{1.0}, -1.0), std::invalid_argument);
}
