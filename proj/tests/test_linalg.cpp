#include "doctest.h"
#include "phc/subspace.hpp"

using namespace phc;

namespace {

Matrix mat(std::size_t r, std::size_t c, std::initializer_list<int> vals) {
    Matrix m(r, c);
    auto it = vals.begin();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(*it++);
    return m;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("rref rank determinant inverse") {
    Matrix m = mat(3, 3, {2, 1, 1, 1, 3, 2, 1, 0, 0});
    CHECK(m.rank() == 3);
    CHECK(m.determinant() == Rational(-1));
    CHECK(m.inverse() * m == Matrix::identity(3));
    CHECK(m * m.inverse() == Matrix::identity(3));

    Matrix s = mat(3, 3, {1, 2, 3, 2, 4, 6, 1, 1, 1});
    CHECK(s.rank() == 2);
    CHECK(is_zero(s.determinant()));
    CHECK_THROWS_AS(s.inverse(), SingularMatrix);
}

TEST_CASE("kernel annihilates and has complementary dimension") {
    Matrix m = mat(2, 4, {1, 2, 0, -1, 0, 0, 1, 3});
    Matrix k = m.kernel();
    CHECK(k.rows() == 2);  // rank-nullity
    for (std::size_t r = 0; r < k.rows(); ++r) {
        std::vector<Rational> v(4);
        for (std::size_t j = 0; j < 4; ++j) v[j] = k(r, j);
        for (const auto& x : m.apply(v)) CHECK(is_zero(x));
    }
}

TEST_CASE("subspace canonical equality") {
    Subspace a = Subspace::span(mat(2, 3, {1, 1, 0, 0, 1, 1}));
    Subspace b = Subspace::span(mat(2, 3, {2, 2, 0, 1, 2, 1}));  // same span
    CHECK(subspace_equal(a, b));
    CHECK(a.dim() == 2);
    CHECK(a.contains({Rational(1), Rational(2), Rational(1)}));
    CHECK(!a.contains({Rational(1), Rational(0), Rational(1)}));
}

TEST_CASE("sum and intersection") {
    Subspace a = Subspace::span(mat(1, 3, {1, 0, 0}));
    Subspace b = Subspace::span(mat(1, 3, {0, 1, 0}));
    CHECK(sum(a, b).dim() == 2);
    CHECK(intersect(a, b).dim() == 0);
    Subspace c = Subspace::span(mat(2, 3, {1, 0, 0, 0, 1, 0}));
    Subspace d = Subspace::span(mat(2, 3, {0, 1, 0, 0, 0, 1}));
    Subspace meet = intersect(c, d);
    CHECK(meet.dim() == 1);
    CHECK(meet.contains({Rational(0), Rational(1), Rational(0)}));
}

TEST_CASE("orthogonal complement") {
    Matrix form = Matrix::identity(4);
    Subspace s = Subspace::span(mat(2, 4, {1, 1, 0, 0, 0, 0, 1, 0}));
    Subspace c = orthogonal_complement(s, form);
    CHECK(c.dim() == 2);
    CHECK(subspace_equal(orthogonal_complement(c, form), s));

    // Indefinite form: an isotropic line lies inside its own complement.
    Matrix minkowski = Matrix::identity(2);
    minkowski(0, 0) = Rational(-1);
    Subspace iso = Subspace::span(mat(1, 2, {1, 1}));
    CHECK(orthogonal_complement(iso, minkowski) == iso);

    Matrix degenerate(4, 4);
    CHECK_THROWS_AS(orthogonal_complement(s, degenerate), SingularForm);
}

}
