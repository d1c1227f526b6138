#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "ilab/vector.hpp"

namespace ilab {

// Deterministic RNG used everywhere results depend on sampling.  Distributions
// are hand-rolled on top of mt19937_64 so streams are identical across
// platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // substream for sample index i: extending the sample count never changes
    // earlier draws
    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return Rng(z ^ (z >> 31));
    }

    std::uint64_t bits() { return eng_(); }

    // uniform in (0,1)
    double uniform() {
        return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }

    double sign() { return (eng_() & 1u) ? 1.0 : -1.0; }

    // Box-Muller
    double gaussian() {
        double u1 = uniform(), u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    // symmetric heavy-tailed draw (Cauchy), used to stress log terms
    double cauchy() { return std::tan(3.141592653589793 * (uniform() - 0.5)); }

    // sign * lognormal magnitude
    double signed_lognormal(double sigma = 1.5) {
        return sign() * std::exp(sigma * gaussian());
    }

private:
    std::mt19937_64 eng_;
};

// generic random test vector; rotates through gaussian / heavy-tailed /
// lognormal coordinates so log terms get stressed
inline Vector sample_vector(std::size_t dim, Rng& rng) {
    int kind = static_cast<int>(rng.bits() % 3);
    Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        switch (kind) {
            case 0: v.at(i) = rng.gaussian(); break;
            case 1: v.at(i) = rng.cauchy(); break;
            default: v.at(i) = rng.signed_lognormal(); break;
        }
    }
    if (v.is_zero()) v.at(0) = 1.0;
    return v;
}

}  // namespace ilab
