#include <random>

#include "doctest.h"
#include "phc/complexify.hpp"
#include "phc/gray.hpp"

using namespace phc;

TEST_SUITE("complexify") {

TEST_CASE("structure transfer hits the standard para model") {
    for (std::size_t n : {1ul, 2ul}) {
        TransferMap map = transfer_structure(standard_hermitian(0, n));
        Structure target = standard_para_hermitian(n);
        CHECK(map.target.dim == target.dim);
        CHECK(map.target.form == target.form);
        CHECK(map.target.J == target.J);
        CHECK(validate(map.target).empty());
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(map.factor(i) == GaussRational::i());
            CHECK(map.factor(n + i) == GaussRational(-1));
        }
    }
}

TEST_CASE("non-standard sources are rejected") {
    CHECK_THROWS_AS(transfer_structure(standard_para_hermitian(2)), NonStandardBasis);
    CHECK_THROWS_AS(transfer_structure(standard_hermitian(2, 0)), NonStandardBasis);
    CHECK_THROWS_AS(transfer_structure(standard_hermitian(1, 1)), NonStandardBasis);
}

TEST_CASE("entry scaling: ee real, ef imaginary") {
    TransferMap map = transfer_structure(standard_hermitian(0, 2));
    Tensor2 ee(4);
    ee.at(0, 0) = Rational(3);
    GaussTensor2 tee = transfer_two_tensor(ee, map);
    CHECK(tee.at(0, 0) == GaussRational(-3));  // i * i * 3
    CHECK(expect_real(tee).at(0, 0) == Rational(-3));

    Tensor2 ef(4);
    ef.at(0, 2) = Rational(1);
    ef.at(2, 0) = Rational(1);
    GaussTensor2 tef = transfer_two_tensor(ef, map);
    CHECK(tef.at(0, 2) == GaussRational(Rational(0), Rational(-1)));  // i * (-1)
    CHECK(real_part(tef).is_zero_tensor());
    CHECK(!imag_part(tef).is_zero_tensor());
    CHECK_THROWS_AS(expect_real(tef), ImaginaryResidue);
}

TEST_CASE("symmetric and antisymmetric eigenspaces swap sign") {
    TransferMap map = transfer_structure(standard_hermitian(0, 2));
    SignedPerm jt = map.target.j_perm();
    Structure source = map.source;
    for (int eps : {+1, -1}) {
        auto check_part = [&](const Tensor2& part) {
            if (part.is_zero_tensor()) return;
            CHECK((j_pullback2(part, jt) + part * Rational(eps)).is_zero_tensor());
        };
        for (const Tensor2& b : sym2_eigen_basis(source, eps)) {
            GaussTensor2 image = transfer_two_tensor(b, map);
            check_part(real_part(image));
            check_part(imag_part(image));
        }
        for (const Tensor2& b : alt2_eigen_basis(source, eps)) {
            GaussTensor2 image = transfer_two_tensor(b, map);
            check_part(real_part(image));
            check_part(imag_part(image));
        }
    }
}

TEST_CASE("curvature transfer is bijective") {
    for (std::size_t n : {1ul, 2ul}) {
        TransferMap map = transfer_structure(standard_hermitian(0, n));
        CHECK(transfer_curvature_bijective(map));
    }
}

TEST_CASE("gray kernels correspond") {
    TransferMap map = transfer_structure(standard_hermitian(0, 2));
    const CurvatureSpace& src = CurvatureSpace::get(map.source);
    const CurvatureSpace& dst = CurvatureSpace::get(map.target);
    Subspace gh = gray_kernel_subspace_coords(map.source);
    Subspace gp = gray_kernel_subspace_coords(map.target);
    CHECK(gh.dim() == gp.dim());
    Matrix stacked(2 * gh.dim(), dst.dim());
    for (std::size_t k = 0; k < gh.dim(); ++k) {
        GaussTensor4 image = transfer_curvature(src.from_coords(gh.basis_row(k)), map);
        Tensor4 re = real_part(image), im = imag_part(image);
        CHECK(satisfies_gray(re, map.target));
        CHECK(satisfies_gray(im, map.target));
        std::vector<Rational> cre = dst.coords(re), cim = dst.coords(im);
        for (std::size_t j = 0; j < dst.dim(); ++j) {
            stacked(2 * k, j) = cre[j];
            stacked(2 * k + 1, j) = cim[j];
        }
    }
    CHECK(Subspace::span(stacked).dim() == gp.dim());
}

}
