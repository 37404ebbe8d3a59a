#include "phc/gray.hpp"

namespace phc {

Tensor4 j_pullback4(const Tensor4& t, const SignedPerm& j, std::uint8_t slot_mask) {
    const std::size_t d = t.dim;
    Tensor4 out(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t w = 0; w < d; ++w) {
                    std::size_t ia = a, ib = b, ic = c, iw = w;
                    int sign = 1;
                    if (slot_mask & 1) { ia = j.image[a]; sign *= j.sign[a]; }
                    if (slot_mask & 2) { ib = j.image[b]; sign *= j.sign[b]; }
                    if (slot_mask & 4) { ic = j.image[c]; sign *= j.sign[c]; }
                    if (slot_mask & 8) { iw = j.image[w]; sign *= j.sign[w]; }
                    const Rational& v = t.at(ia, ib, ic, iw);
                    if (is_zero(v)) continue;
                    out.at(a, b, c, w) = sign > 0 ? v : -v;
                }
    return out;
}

Tensor2 j_pullback2(const Tensor2& t, const SignedPerm& j) {
    const std::size_t d = t.dim;
    Tensor2 out(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const Rational& v = t.at(j.image[a], j.image[b]);
            if (is_zero(v)) continue;
            out.at(a, b) = j.sign[a] * j.sign[b] > 0 ? v : -v;
        }
    return out;
}

std::vector<Tensor2> sym2_basis(std::size_t dim) {
    std::vector<Tensor2> basis;
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a; b < dim; ++b) {
            Tensor2 t(dim);
            t.at(a, b) = Rational(1);
            t.at(b, a) = Rational(1);
            basis.push_back(std::move(t));
        }
    return basis;
}

std::vector<Tensor2> alt2_basis(std::size_t dim) {
    std::vector<Tensor2> basis;
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a + 1; b < dim; ++b) {
            Tensor2 t(dim);
            t.at(a, b) = Rational(1);
            t.at(b, a) = Rational(-1);
            basis.push_back(std::move(t));
        }
    return basis;
}

namespace {

std::vector<Tensor2> eigen_filter(const std::vector<Tensor2>& spanning, const Structure& s,
                                  int eps) {
    const SignedPerm j = s.j_perm();
    const std::size_t d = s.dim;
    // Project each spanning element onto the eigenspace and row-reduce for a
    // clean basis. The projector (theta + eps J* theta)/2 is exact: (J*)^2 is
    // +-Id and both signs square to the identity on 2-tensors.
    Matrix rows(spanning.size(), d * d);
    for (std::size_t i = 0; i < spanning.size(); ++i) {
        Tensor2 proj = spanning[i] + j_pullback2(spanning[i], j) * Rational(eps);
        for (std::size_t k = 0; k < d * d; ++k) rows(i, k) = proj.e[k];
    }
    Subspace span = Subspace::span(std::move(rows));
    std::vector<Tensor2> basis;
    for (std::size_t i = 0; i < span.dim(); ++i) {
        Tensor2 t(d);
        for (std::size_t k = 0; k < d * d; ++k) t.e[k] = span.basis()(i, k);
        basis.push_back(std::move(t));
    }
    return basis;
}

}  // namespace

std::vector<Tensor2> sym2_eigen_basis(const Structure& s, int eps) {
    return eigen_filter(sym2_basis(s.dim), s, eps);
}

std::vector<Tensor2> alt2_eigen_basis(const Structure& s, int eps) {
    return eigen_filter(alt2_basis(s.dim), s, eps);
}

Tensor4 gray_symmetrize(const Tensor4& t, const Structure& s) {
    if (t.dim != s.dim) throw DimensionMismatch("gray_symmetrize: dimension mismatch");
    const SignedPerm j = s.j_perm();
    const bool para = s.is_para();
    // Slot masks of the eight terms; the six two-J terms flip sign in the
    // Hermitian identity.
    Tensor4 acc = t + j_pullback4(t, j, 0b1111);
    static constexpr std::uint8_t two_j[6] = {0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100};
    for (std::uint8_t mask : two_j) {
        Tensor4 term = j_pullback4(t, j, mask);
        acc = para ? acc + term : acc - term;
    }
    return acc;
}

bool satisfies_gray(const Tensor4& a, const Structure& s) {
    if (!is_algebraic_curvature(a))
        throw NotCurvatureTensor("satisfies_gray: input is not a curvature tensor");
    return gray_symmetrize(a, s).is_zero_tensor();
}

Tensor4 p_operator(const Tensor4& theta) {
    const std::size_t d = theta.dim;
    Tensor4 out(d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t z = 0; z < d; ++z)
                for (std::size_t w = 0; w < d; ++w)
                    out.at(x, y, z, w) = theta.at(x, z, y, w) + theta.at(y, w, x, z) -
                                         theta.at(x, w, y, z) - theta.at(y, z, x, w);
    return out;
}

Subspace p_image_subspace_coords(const Structure& s, int eps) {
    const CurvatureSpace& space = CurvatureSpace::get(s);
    auto first = sym2_eigen_basis(s, eps);
    auto second = sym2_basis(s.dim);
    const std::size_t d = s.dim;
    Matrix rows(first.size() * second.size(), space.dim());
    std::size_t r = 0;
    for (const auto& phi : first)
        for (const auto& psi : second) {
            Tensor4 theta(d);
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) {
                    if (is_zero(phi.at(a, b))) continue;
                    for (std::size_t c = 0; c < d; ++c)
                        for (std::size_t w = 0; w < d; ++w)
                            theta.at(a, b, c, w) = phi.at(a, b) * psi.at(c, w);
                }
            auto c = space.coords(p_operator(theta));
            for (std::size_t k = 0; k < c.size(); ++k) rows(r, k) = c[k];
            ++r;
        }
    return Subspace::span(std::move(rows));
}

Subspace p_image_subspace(const Structure& s) {
    if (!s.is_para())
        throw NotParaHermitian("p_image_subspace: para-Hermitian structure required");
    const CurvatureSpace& space = CurvatureSpace::get(s);
    return space.to_ambient(p_image_subspace_coords(s, -1));
}

Subspace gray_kernel_subspace_coords(const Structure& s) {
    const CurvatureSpace& space = CurvatureSpace::get(s);
    return map_kernel(space, [&s](const Tensor4& t) { return gray_symmetrize(t, s).e; });
}

Subspace gray_kernel_subspace(const Structure& s) {
    const CurvatureSpace& space = CurvatureSpace::get(s);
    return space.to_ambient(gray_kernel_subspace_coords(s));
}

Subspace w7_subspace_coords(const Structure& s) {
    const CurvatureSpace& space = CurvatureSpace::get(s);
    const SignedPerm j = s.j_perm();
    return map_kernel(space, [j](const Tensor4& t) {
        return (j_pullback4(t, j, 0b0001) - j_pullback4(t, j, 0b0100)).e;
    });
}

Subspace w7_subspace(const Structure& s) {
    const CurvatureSpace& space = CurvatureSpace::get(s);
    return space.to_ambient(w7_subspace_coords(s));
}

}  // namespace phc
