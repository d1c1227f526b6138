#pragma once

#include <limits>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ilab/partition.hpp"
#include "ilab/vector.hpp"

namespace ilab {

class SpaceSpec;
using SpacePtr = std::shared_ptr<const SpaceSpec>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct LpKind {
    double p;
};
struct WeightedLpKind {
    double p;
    Vector weight;  // strictly positive
};
struct LorentzKind {
    double p, q;  // q may be inf
};
struct TsirelsonTKind {};
struct Tsirelson2Kind {};
struct ConvexifiedKind {
    SpacePtr base;
    double p;
};
struct AmalgamKind {
    SpacePtr outer;  // 1-unconditional sequence norm applied to block norms
    std::vector<SpacePtr> inner;
    Partition partition;
};
struct RestrictedKind {
    SpacePtr base;
    IndexSet block;
};
struct DualOfKind {
    SpacePtr base;
};
// norm realized as the Calderon-product infimum of the couple; solver-backed,
// every value carries eps
struct InterpolatedKind {
    SpacePtr x0, x1;
    double theta;
    double eps;
};

class SpaceSpec {
public:
    using Kind = std::variant<LpKind, WeightedLpKind, LorentzKind, TsirelsonTKind,
                              Tsirelson2Kind, ConvexifiedKind, AmalgamKind, RestrictedKind,
                              DualOfKind, InterpolatedKind>;

    explicit SpaceSpec(Kind k) : kind_(std::move(k)) {}
    const Kind& kind() const { return kind_; }

    template <class K>
    const K* as() const {
        return std::get_if<K>(&kind_);
    }

    std::string describe() const;

private:
    Kind kind_;
};

// factories (validate parameters)
SpacePtr lp(double p);
SpacePtr weighted_lp(double p, Vector weight);
SpacePtr lorentz(double p, double q);
SpacePtr tsirelson();
SpacePtr tsirelson2();
SpacePtr convexified(SpacePtr base, double p);
SpacePtr amalgam(SpacePtr outer, std::vector<SpacePtr> inner, Partition partition);
SpacePtr restricted(SpacePtr base, IndexSet block);
SpacePtr dual_of(SpacePtr base);
SpacePtr interpolated(SpacePtr x0, SpacePtr x1, double theta, double eps = 1e-6);

// structural equality of descriptions
bool same_spec(const SpaceSpec& a, const SpaceSpec& b);
bool same_spec(const SpacePtr& a, const SpacePtr& b);

// 1-unconditional norm described by the spec; exact for closed-form kinds,
// solver-backed for Tsirelson / DualOf / Interpolated
double norm(const SpaceSpec& space, const Vector& x);
double norm(const SpacePtr& space, const Vector& x);

}  // namespace ilab
