#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace ilab {

using IndexSet = std::vector<std::size_t>;  // sorted, 0-based

// Finitely supported real coordinate sequence against the canonical basis.
// Storage is 0-based; coordinates at or beyond dim() are implicitly zero.
class Vector {
public:
    Vector() : coords_(1, 0.0) {}

    explicit Vector(std::size_t dim) : coords_(dim, 0.0) {
        if (dim == 0) throw std::invalid_argument("Vector: dim must be >= 1");
    }

    Vector(std::initializer_list<double> vals) : coords_(vals) {
        if (coords_.empty()) throw std::invalid_argument("Vector: dim must be >= 1");
        check_finite();
    }

    explicit Vector(std::vector<double> vals) : coords_(std::move(vals)) {
        if (coords_.empty()) throw std::invalid_argument("Vector: dim must be >= 1");
        check_finite();
    }

    static Vector unit(std::size_t dim, std::size_t i) {
        Vector v(dim);
        v.coords_.at(i) = 1.0;
        return v;
    }

    std::size_t dim() const { return coords_.size(); }
    double operator[](std::size_t i) const { return i < coords_.size() ? coords_[i] : 0.0; }
    double& at(std::size_t i) { return coords_.at(i); }

    const std::vector<double>& data() const { return coords_; }

    IndexSet support() const {
        IndexSet s;
        for (std::size_t i = 0; i < coords_.size(); ++i)
            if (coords_[i] != 0.0) s.push_back(i);
        return s;
    }

    bool is_zero() const {
        for (double c : coords_)
            if (c != 0.0) return false;
        return true;
    }

    Vector abs() const {
        Vector r(*this);
        for (double& c : r.coords_) c = std::fabs(c);
        return r;
    }

    // coordinatewise |x|^p
    Vector abs_pow(double p) const {
        Vector r(dim());
        for (std::size_t i = 0; i < dim(); ++i)
            r.coords_[i] = coords_[i] == 0.0 ? 0.0 : std::pow(std::fabs(coords_[i]), p);
        return r;
    }

    Vector hadamard(const Vector& o) const {
        Vector r(std::max(dim(), o.dim()));
        for (std::size_t i = 0; i < r.dim(); ++i) r.coords_[i] = (*this)[i] * o[i];
        return r;
    }

    Vector& operator+=(const Vector& o) {
        if (o.dim() > dim()) coords_.resize(o.dim(), 0.0);
        for (std::size_t i = 0; i < o.dim(); ++i) coords_[i] += o[i];
        return *this;
    }
    Vector& operator-=(const Vector& o) {
        if (o.dim() > dim()) coords_.resize(o.dim(), 0.0);
        for (std::size_t i = 0; i < o.dim(); ++i) coords_[i] -= o[i];
        return *this;
    }
    Vector& operator*=(double c) {
        for (double& v : coords_) v *= c;
        return *this;
    }

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(double c, Vector a) { return a *= c; }
    friend Vector operator*(Vector a, double c) { return a *= c; }

    friend bool operator==(const Vector& a, const Vector& b) {
        std::size_t d = std::max(a.dim(), b.dim());
        for (std::size_t i = 0; i < d; ++i)
            if (a[i] != b[i]) return false;
        return true;
    }

    double linf() const {
        double m = 0.0;
        for (double c : coords_) m = std::max(m, std::fabs(c));
        return m;
    }
    double l1() const {
        double s = 0.0;
        for (double c : coords_) s += std::fabs(c);
        return s;
    }
    double l2() const {
        double m = linf();
        if (m == 0.0) return 0.0;
        double s = 0.0;
        for (double c : coords_) s += (c / m) * (c / m);
        return m * std::sqrt(s);
    }
    double dot(const Vector& o) const {
        double s = 0.0;
        std::size_t d = std::min(dim(), o.dim());
        for (std::size_t i = 0; i < d; ++i) s += coords_[i] * o[i];
        return s;
    }

private:
    void check_finite() const {
        for (double c : coords_)
            if (!std::isfinite(c)) throw std::invalid_argument("Vector: entries must be finite");
    }

    std::vector<double> coords_;
};

// 1_A * x: zero outside A. Idempotent.
inline Vector restrict_to(const Vector& x, const IndexSet& a) {
    Vector r(x.dim());
    for (std::size_t i : a)
        if (i < x.dim()) r.at(i) = x[i];
    return r;
}

}  // namespace ilab
