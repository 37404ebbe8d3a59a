#include <random>

#include "doctest.h"
#include "phc/gray.hpp"
#include "phc/realize.hpp"

using namespace phc;

TEST_SUITE("gray") {

TEST_CASE("two-tensor eigenspace bases") {
    for (const Structure& s : {standard_para_hermitian(2), standard_hermitian(0, 2)}) {
        const std::size_t d = s.dim;
        CHECK(sym2_basis(d).size() == d * (d + 1) / 2);
        CHECK(alt2_basis(d).size() == d * (d - 1) / 2);
        SignedPerm j = s.j_perm();
        std::size_t sym_total = 0, alt_total = 0;
        for (int eps : {+1, -1}) {
            for (const Tensor2& b : sym2_eigen_basis(s, eps)) {
                CHECK(b.is_symmetric());
                CHECK((j_pullback2(b, j) - b * Rational(eps)).is_zero_tensor());
                ++sym_total;
            }
            for (const Tensor2& b : alt2_eigen_basis(s, eps)) {
                CHECK(b.is_antisymmetric());
                CHECK((j_pullback2(b, j) - b * Rational(eps)).is_zero_tensor());
                ++alt_total;
            }
        }
        CHECK(sym_total == d * (d + 1) / 2);
        CHECK(alt_total == d * (d - 1) / 2);
    }
}

TEST_CASE("slot pullback is an involution for para J") {
    Structure s = standard_para_hermitian(2);
    SignedPerm j = s.j_perm();
    std::mt19937_64 rng(23);
    Tensor4 theta = random_realization_theta(s, rng);
    for (std::uint8_t mask : {0b0011, 0b1100, 0b1111, 0b0101})
        CHECK(j_pullback4(j_pullback4(theta, j, mask), j, mask) == theta);
}

TEST_CASE("operator image lies in the curvature space and the gray kernel") {
    Structure s = standard_para_hermitian(2);
    std::mt19937_64 rng(29);
    for (int k = 0; k < 10; ++k) {
        Tensor4 theta = random_realization_theta(s, rng);
        Tensor4 a = p_operator(theta);
        CHECK(is_algebraic_curvature(a));
        CHECK(satisfies_gray(a, s));
        CHECK(gray_symmetrize(a, s).is_zero_tensor());
    }
}

TEST_CASE("gray symmetrization is linear") {
    Structure s = standard_para_hermitian(2);
    std::mt19937_64 rng(31);
    Tensor4 a = p_operator(random_realization_theta(s, rng));
    Tensor4 b = p_operator(random_realization_theta(s, rng));
    CHECK(gray_symmetrize(a + b * Rational(3), s) ==
          gray_symmetrize(a, s) + gray_symmetrize(b, s) * Rational(3));
}

TEST_CASE("w7 is the eigenvalue-8 eigenspace of the symmetrizer") {
    Structure s = standard_para_hermitian(2);
    const CurvatureSpace& sp = CurvatureSpace::get(s);
    Subspace w7 = w7_subspace_coords(s);
    CHECK(w7.dim() == 2);
    for (std::size_t k = 0; k < w7.dim(); ++k) {
        Tensor4 a = sp.from_coords(w7.basis_row(k));
        CHECK((gray_symmetrize(a, s) - a * Rational(8)).is_zero_tensor());
    }
}

TEST_CASE("hermitian mirror slot is the metric eigenspace") {
    Structure s = standard_hermitian(0, 2);
    Subspace p = p_image_subspace_coords(s, +1);
    Subspace g = gray_kernel_subspace_coords(s);
    CHECK(p.dim() == 18);
    CHECK(subspace_equal(p, g));
}

TEST_CASE("para realizable subspace requires a para structure") {
    CHECK_THROWS_AS(p_image_subspace(standard_hermitian(0, 2)), NotParaHermitian);
}

}
