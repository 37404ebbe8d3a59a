#include "doctest.h"
#include "phc/structure.hpp"

using namespace phc;

TEST_SUITE("model") {

TEST_CASE("standard para model") {
    Structure s = standard_para_hermitian(2);
    CHECK(validate(s).empty());
    CHECK(s.dim == 4);
    CHECK(s.is_para());
    CHECK(s.J * s.J == Matrix::identity(4));
    CHECK(s.J.transpose() * s.form * s.J == -s.form);
    auto signs = s.form_signs();
    CHECK(signs == std::vector<int>{-1, -1, 1, 1});
}

TEST_CASE("standard hermitian model") {
    Structure s = standard_hermitian(0, 2);
    CHECK(validate(s).empty());
    CHECK(!s.is_para());
    CHECK(s.J * s.J == -Matrix::identity(4));
    CHECK(s.J.transpose() * s.form * s.J == s.form);
    CHECK(s.form == Matrix::identity(4));
}

TEST_CASE("mixed signature hermitian is constructible") {
    Structure s = standard_hermitian(1, 1);
    CHECK(validate(s).empty());
    auto signs = s.form_signs();
    int minus = 0;
    for (int x : signs) minus += x < 0;
    CHECK(minus == 2);
}

TEST_CASE("signed permutation agrees with the matrix") {
    for (const Structure& s : {standard_para_hermitian(3), standard_hermitian(0, 3)}) {
        SignedPerm p = s.j_perm();
        for (std::size_t a = 0; a < s.dim; ++a)
            for (std::size_t b = 0; b < s.dim; ++b) {
                Rational expected = p.image[a] == b ? Rational(p.sign[a]) : Rational(0);
                CHECK(s.J(b, a) == expected);
            }
    }
}

TEST_CASE("kaehler form") {
    for (const Structure& s : {standard_para_hermitian(2), standard_hermitian(0, 2)}) {
        Tensor2 omega = kaehler_form(s);
        CHECK(omega.is_antisymmetric());
        Matrix m(s.dim, s.dim);
        for (std::size_t a = 0; a < s.dim; ++a)
            for (std::size_t b = 0; b < s.dim; ++b) m(a, b) = omega.at(a, b);
        CHECK(m.rank() == s.dim);
        CHECK(m == s.form * s.J);
    }
}

}
