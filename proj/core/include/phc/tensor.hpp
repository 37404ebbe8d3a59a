#pragma once

#include <cstddef>
#include <vector>

#include "phc/matrix.hpp"

namespace phc {

// Dense covariant 2-tensor. Symmetry is a property of a value, never a
// storage constraint.
template <typename S>
struct Tensor2T {
    std::size_t dim = 0;
    std::vector<S> e;

    Tensor2T() = default;
    explicit Tensor2T(std::size_t d) : dim(d), e(d * d, S(0)) {}

    S& at(std::size_t a, std::size_t b) { return e[a * dim + b]; }
    const S& at(std::size_t a, std::size_t b) const { return e[a * dim + b]; }

    bool operator==(const Tensor2T& o) const { return dim == o.dim && e == o.e; }
    bool operator!=(const Tensor2T& o) const { return !(*this == o); }

    Tensor2T operator+(const Tensor2T& o) const {
        check(o);
        Tensor2T r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    Tensor2T operator-(const Tensor2T& o) const {
        check(o);
        Tensor2T r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
        return r;
    }
    Tensor2T operator*(const S& c) const {
        Tensor2T r = *this;
        for (auto& v : r.e) v = v * c;
        return r;
    }
    Tensor2T operator-() const { return *this * S(-1); }

    bool is_zero_tensor() const {
        for (const auto& v : e)
            if (!is_zero(v)) return false;
        return true;
    }
    bool is_symmetric() const {
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = a + 1; b < dim; ++b)
                if (at(a, b) != at(b, a)) return false;
        return true;
    }
    bool is_antisymmetric() const {
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = a; b < dim; ++b)
                if (at(a, b) != -at(b, a)) return false;
        return true;
    }

    static Tensor2T from_matrix(const MatrixT<S>& m) {
        Tensor2T t(m.rows());
        for (std::size_t a = 0; a < m.rows(); ++a)
            for (std::size_t b = 0; b < m.cols(); ++b) t.at(a, b) = m(a, b);
        return t;
    }

private:
    void check(const Tensor2T& o) const {
        if (dim != o.dim) throw DimensionMismatch("Tensor2 dimension mismatch");
    }
};

// Dense covariant 4-tensor, indexed (a,b,c,d), row-major.
template <typename S>
struct Tensor4T {
    std::size_t dim = 0;
    std::vector<S> e;

    Tensor4T() = default;
    explicit Tensor4T(std::size_t d) : dim(d), e(d * d * d * d, S(0)) {}

    std::size_t flat(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
        return ((a * dim + b) * dim + c) * dim + d;
    }
    S& at(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
        return e[flat(a, b, c, d)];
    }
    const S& at(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
        return e[flat(a, b, c, d)];
    }

    bool operator==(const Tensor4T& o) const { return dim == o.dim && e == o.e; }
    bool operator!=(const Tensor4T& o) const { return !(*this == o); }

    Tensor4T operator+(const Tensor4T& o) const {
        check(o);
        Tensor4T r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    Tensor4T operator-(const Tensor4T& o) const {
        check(o);
        Tensor4T r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
        return r;
    }
    Tensor4T operator*(const S& c) const {
        Tensor4T r = *this;
        for (auto& v : r.e) v = v * c;
        return r;
    }
    Tensor4T operator-() const { return *this * S(-1); }

    bool is_zero_tensor() const {
        for (const auto& v : e)
            if (!is_zero(v)) return false;
        return true;
    }

private:
    void check(const Tensor4T& o) const {
        if (dim != o.dim) throw DimensionMismatch("Tensor4 dimension mismatch");
    }
};

using Tensor2 = Tensor2T<Rational>;
using Tensor4 = Tensor4T<Rational>;
using GaussTensor2 = Tensor2T<GaussRational>;
using GaussTensor4 = Tensor4T<GaussRational>;

}  // namespace phc
