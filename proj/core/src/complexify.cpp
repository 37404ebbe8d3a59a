#include "phc/complexify.hpp"

namespace phc {

TransferMap transfer_structure(const Structure& s) {
    if (s.kind != StructureKind::Hermitian)
        throw NonStandardBasis("transfer_structure: Hermitian source required");
    const std::size_t n = s.n();
    const Structure standard = standard_hermitian(0, n);
    if (s.dim != standard.dim || s.form != standard.form || s.J != standard.J)
        throw NonStandardBasis(
            "transfer_structure: source must be the standard positive definite model");

    TransferMap map;
    map.source = s;
    map.target = standard_para_hermitian(n);
    map.change_of_basis = GaussMatrix(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        map.change_of_basis(i, i) = GaussRational::i();           // e~_i = sqrt(-1) e_i
        map.change_of_basis(n + i, n + i) = GaussRational(-1);    // f~_i = -f_i
    }

    // Cross-checks: J~ = sqrt(-1) J in the new basis is the standard para
    // swap, and the complex-bilinear form restricts with signature (n, n).
    GaussMatrix jc(2 * n, 2 * n);
    for (std::size_t a = 0; a < 2 * n; ++a)
        for (std::size_t b = 0; b < 2 * n; ++b)
            jc(a, b) = GaussRational(s.J(a, b)) * GaussRational::i();
    GaussMatrix cob_inv = map.change_of_basis.inverse();
    GaussMatrix j_target = cob_inv * jc * map.change_of_basis;
    for (std::size_t a = 0; a < 2 * n; ++a)
        for (std::size_t b = 0; b < 2 * n; ++b)
            if (j_target(a, b) != GaussRational(map.target.J(a, b)))
                throw NonStandardBasis("transfer_structure: J transfer mismatch");
    for (std::size_t a = 0; a < 2 * n; ++a)
        for (std::size_t b = 0; b < 2 * n; ++b) {
            GaussRational form_ab =
                map.factor(a) * map.factor(b) * GaussRational(s.form(a, b));
            if (form_ab != GaussRational(map.target.form(a, b)))
                throw NonStandardBasis("transfer_structure: form transfer mismatch");
        }
    return map;
}

GaussTensor2 transfer_two_tensor(const Tensor2& theta, const TransferMap& map) {
    const std::size_t d = map.source.dim;
    if (theta.dim != d) throw DimensionMismatch("transfer_two_tensor: dimension");
    GaussTensor2 out(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const Rational& v = theta.at(a, b);
            if (is_zero(v)) continue;
            out.at(a, b) = map.factor(a) * map.factor(b) * GaussRational(v);
        }
    return out;
}

GaussTensor4 transfer_curvature(const Tensor4& a, const TransferMap& map) {
    const std::size_t d = map.source.dim;
    if (a.dim != d) throw DimensionMismatch("transfer_curvature: dimension");
    GaussTensor4 out(d);
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q)
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t t = 0; t < d; ++t) {
                    const Rational& v = a.at(p, q, r, t);
                    if (is_zero(v)) continue;
                    out.at(p, q, r, t) = map.factor(p) * map.factor(q) * map.factor(r) *
                                         map.factor(t) * GaussRational(v);
                }
    return out;
}

Tensor2 real_part(const GaussTensor2& t) {
    Tensor2 r(t.dim);
    for (std::size_t i = 0; i < t.e.size(); ++i) r.e[i] = t.e[i].re;
    return r;
}

Tensor2 imag_part(const GaussTensor2& t) {
    Tensor2 r(t.dim);
    for (std::size_t i = 0; i < t.e.size(); ++i) r.e[i] = t.e[i].im;
    return r;
}

Tensor4 real_part(const GaussTensor4& t) {
    Tensor4 r(t.dim);
    for (std::size_t i = 0; i < t.e.size(); ++i) r.e[i] = t.e[i].re;
    return r;
}

Tensor4 imag_part(const GaussTensor4& t) {
    Tensor4 r(t.dim);
    for (std::size_t i = 0; i < t.e.size(); ++i) r.e[i] = t.e[i].im;
    return r;
}

Tensor2 expect_real(const GaussTensor2& t) {
    if (!imag_part(t).is_zero_tensor())
        throw ImaginaryResidue("expect_real: 2-tensor has an imaginary component");
    return real_part(t);
}

Tensor4 expect_real(const GaussTensor4& t) {
    if (!imag_part(t).is_zero_tensor())
        throw ImaginaryResidue("expect_real: 4-tensor has an imaginary component");
    return real_part(t);
}

bool transfer_curvature_bijective(const TransferMap& map) {
    const CurvatureSpace& src = CurvatureSpace::get(map.source);
    const CurvatureSpace& dst = CurvatureSpace::get(map.target);
    if (src.dim() != dst.dim()) return false;
    const std::size_t ambient = map.source.dim * map.source.dim * map.source.dim *
                                map.source.dim;
    // Real and imaginary parts of every transferred basis tensor, stacked.
    Matrix parts(2 * src.dim(), ambient);
    for (std::size_t k = 0; k < src.dim(); ++k) {
        GaussTensor4 image = transfer_curvature(src.basis_tensor(k), map);
        Tensor4 re = real_part(image), im = imag_part(image);
        if (!is_algebraic_curvature(re) || !is_algebraic_curvature(im)) return false;
        for (std::size_t i = 0; i < ambient; ++i) {
            parts(2 * k, i) = re.e[i];
            parts(2 * k + 1, i) = im.e[i];
        }
    }
    // Entrywise unit scaling is injective; surjectivity onto the complexified
    // target space amounts to the parts spanning all of A(target).
    return parts.rank() == dst.dim();
}

}  // namespace phc
