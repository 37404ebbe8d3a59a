#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "phc/structure.hpp"
#include "phc/subspace.hpp"
#include "phc/tensor.hpp"

namespace phc {

struct NotCurvatureTensor : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// True iff all three identities hold exactly for every index tuple:
// antisymmetry in the first pair, pair-interchange symmetry, and the first
// Bianchi identity.
bool is_algebraic_curvature(const Tensor4& t);

template <typename S>
bool is_algebraic_curvature_t(const Tensor4T<S>& t) {
    const std::size_t d = t.dim;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t w = 0; w < d; ++w) {
                    if (t.at(a, b, c, w) != -t.at(b, a, c, w)) return false;
                    if (t.at(a, b, c, w) != t.at(c, w, a, b)) return false;
                    if (!is_zero(t.at(a, b, c, w) + t.at(b, c, a, w) + t.at(c, a, b, w)))
                        return false;
                }
    return true;
}

// Full contraction of two 4-tensors against the inverse form in every slot.
Rational tensor_inner_product(const Tensor4& a, const Tensor4& b, const Structure& s);
Rational tensor_inner_product2(const Tensor2& a, const Tensor2& b, const Structure& s);

// Pullback U*A(x,y,z,w) = A(Ux,Uy,Uz,Uw).
Tensor4 pullback(const Tensor4& t, const Matrix& u);
Tensor2 pullback2(const Tensor2& t, const Matrix& u);

// The space A(V) of algebraic curvature tensors over a structure, held as a
// reduced row-echelon basis of the ambient (2n)^4 coordinate space. All
// subspace work on curvature tensors runs in coordinates relative to this
// basis (dimension 20/105/336 at 2n = 4/6/8 instead of 256/1296/4096).
class CurvatureSpace {
public:
    explicit CurvatureSpace(const Structure& s);

    // Shared, memoized instance per (dim, kind).
    static const CurvatureSpace& get(const Structure& s);

    const Structure& structure() const { return s_; }
    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient_dim() const { return ambient_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    Tensor4 basis_tensor(std::size_t k) const;

    // Coordinates of t relative to the basis. Throws NotCurvatureTensor if t
    // is not in A(V).
    std::vector<Rational> coords(const Tensor4& t) const;
    Tensor4 from_coords(const std::vector<Rational>& c) const;

    // Gram matrix of the basis under the tensor inner product. The induced
    // form on coordinate space; nondegenerate for definite and neutral forms.
    const Matrix& gram() const { return gram_; }

    // The whole space as a Subspace of the ambient tensor coordinates.
    Subspace ambient_subspace() const;
    // Lift a subspace of coordinate space to ambient tensor coordinates.
    Subspace to_ambient(const Subspace& coord_space) const;

private:
    Structure s_;
    std::size_t ambient_;
    // Sparse RREF rows: (flat ambient index, value), ascending index.
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows_;
    std::vector<std::size_t> pivots_;
    Matrix gram_;
};

// Echelon basis of A(V) in ambient coordinates (the public contract; heavy
// callers should use CurvatureSpace directly).
Subspace curvature_space(const Structure& s);

// Kernel, in A(V)-coordinates, of an entrywise-linear map from curvature
// tensors to flat value vectors. Exact: a fast modular prescreen picks the
// constraint rows that matter, the kernel is computed from those rows in
// exact arithmetic, and every kernel vector is then verified against the full
// map; any violation feeds the offending rows back in.
Subspace map_kernel(const CurvatureSpace& space,
                    const std::function<std::vector<Rational>(const Tensor4&)>& map);

// Tensor file format: one line per nonzero entry, "a b c d p/q" with 1-based
// indices; zero entries omitted. Lines starting with '#' are comments.
Tensor4 read_tensor4(std::istream& in, std::size_t dim);
void write_tensor4(std::ostream& out, const Tensor4& t);
Tensor4 read_tensor4_file(const std::string& path, std::size_t dim);
void write_tensor4_file(const std::string& path, const Tensor4& t);

}  // namespace phc
