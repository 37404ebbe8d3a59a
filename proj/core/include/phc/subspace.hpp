#pragma once

#include <vector>

#include "phc/matrix.hpp"

namespace phc {

struct SingularForm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Linear subspace of S^ambient, held as a reduced row-echelon basis (rows).
// RREF is the canonical representative, so equality of subspaces is equality
// of basis matrices.
template <typename S>
class SubspaceT {
public:
    SubspaceT() : ambient_(0), basis_(0, 0) {}

    // Row span of the given matrix.
    static SubspaceT span(MatrixT<S> rows) {
        SubspaceT s;
        s.ambient_ = rows.cols();
        auto pivots = rows.rref();
        MatrixT<S> b(pivots.size(), rows.cols());
        for (std::size_t i = 0; i < pivots.size(); ++i)
            for (std::size_t j = 0; j < rows.cols(); ++j) b(i, j) = rows(i, j);
        s.basis_ = std::move(b);
        s.pivots_ = std::move(pivots);
        return s;
    }

    static SubspaceT zero(std::size_t ambient) {
        SubspaceT s;
        s.ambient_ = ambient;
        s.basis_ = MatrixT<S>(0, ambient);
        return s;
    }

    static SubspaceT full(std::size_t ambient) {
        return span(MatrixT<S>::identity(ambient));
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const MatrixT<S>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    std::vector<S> basis_row(std::size_t i) const {
        std::vector<S> v(ambient_);
        for (std::size_t j = 0; j < ambient_; ++j) v[j] = basis_(i, j);
        return v;
    }

    bool contains(const std::vector<S>& v) const {
        if (v.size() != ambient_) throw DimensionMismatch("subspace ambient mismatch");
        std::vector<S> w = v;
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            const S c = w[pivots_[i]];
            if (is_zero(c)) continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                if (!is_zero(basis_(i, j))) w[j] -= c * basis_(i, j);
        }
        for (const auto& x : w)
            if (!is_zero(x)) return false;
        return true;
    }

    bool contains(const SubspaceT& o) const {
        for (std::size_t i = 0; i < o.dim(); ++i)
            if (!contains(o.basis_row(i))) return false;
        return true;
    }

    bool operator==(const SubspaceT& o) const {
        if (ambient_ != o.ambient_) throw DimensionMismatch("subspace ambient mismatch");
        return basis_ == o.basis_;
    }
    bool operator!=(const SubspaceT& o) const { return !(*this == o); }

private:
    std::size_t ambient_;
    MatrixT<S> basis_;
    std::vector<std::size_t> pivots_;
};

using Subspace = SubspaceT<Rational>;
using GaussSubspace = SubspaceT<GaussRational>;

template <typename S>
bool subspace_equal(const SubspaceT<S>& a, const SubspaceT<S>& b) {
    return a == b;
}

template <typename S>
SubspaceT<S> sum(const SubspaceT<S>& a, const SubspaceT<S>& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("subspace sum: ambient mismatch");
    MatrixT<S> stacked(a.dim() + b.dim(), a.ambient_dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.ambient_dim(); ++j) stacked(i, j) = a.basis()(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.ambient_dim(); ++j)
            stacked(a.dim() + i, j) = b.basis()(i, j);
    return SubspaceT<S>::span(std::move(stacked));
}

template <typename S>
SubspaceT<S> intersect(const SubspaceT<S>& a, const SubspaceT<S>& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("subspace intersect: ambient mismatch");
    // (u, v) with u*A = v*B; the intersection is the set of those u*A.
    const std::size_t p = a.dim(), q = b.dim(), n = a.ambient_dim();
    MatrixT<S> m(n, p + q);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < p; ++i) m(j, i) = a.basis()(i, j);
        for (std::size_t i = 0; i < q; ++i) m(j, p + i) = -b.basis()(i, j);
    }
    MatrixT<S> ker = m.kernel();
    MatrixT<S> rows(ker.rows(), n);
    for (std::size_t r = 0; r < ker.rows(); ++r)
        for (std::size_t i = 0; i < p; ++i) {
            if (is_zero(ker(r, i))) continue;
            for (std::size_t j = 0; j < n; ++j)
                rows(r, j) += ker(r, i) * a.basis()(i, j);
        }
    return SubspaceT<S>::span(std::move(rows));
}

// {v : form(v, w) = 0 for every w in s}. The form must be symmetric and
// nondegenerate on the ambient space; it may be indefinite, so the result
// need not be a direct complement of s.
template <typename S>
SubspaceT<S> orthogonal_complement(const SubspaceT<S>& s, const MatrixT<S>& form) {
    const std::size_t n = s.ambient_dim();
    if (form.rows() != n || form.cols() != n)
        throw DimensionMismatch("orthogonal_complement: form shape");
    if (form != form.transpose()) throw SingularForm("form is not symmetric");
    if (form.rank() != n) throw SingularForm("form is degenerate");
    MatrixT<S> constraints = s.basis() * form;  // dim(s) x n
    return SubspaceT<S>::span(constraints.kernel());
}

template <typename S>
SubspaceT<S> kernel_subspace(const MatrixT<S>& m) {
    return SubspaceT<S>::span(m.kernel());
}

}  // namespace phc
