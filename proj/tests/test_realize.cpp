#include <random>

#include "doctest.h"
#include "phc/realize.hpp"
#include "phc/tvdecomp.hpp"

using namespace phc;

namespace {

std::vector<Rational> origin(std::size_t d) { return std::vector<Rational>(d, Rational(0)); }

}  // namespace

TEST_SUITE("realize") {

TEST_CASE("polynomial arithmetic") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    Poly p = x * x * y + y * Rational(3);  // x^2 y + 3y
    CHECK(p.degree() == 3);
    CHECK(p.eval({Rational(2), Rational(1, 2)}) == Rational(7, 2));
    CHECK(p.derivative(0) == x * y * Rational(2));
    CHECK(p.derivative(1) == x * x + Poly::constant(2, Rational(3)));
    CHECK((p - p).is_zero_poly());
}

TEST_CASE("flat metrics are flat") {
    Structure s = standard_para_hermitian(2);
    PolyMetric m = flat_metric(s.form);
    std::mt19937_64 rng(47);
    CHECK(riemann_at(m, origin(4)).is_zero_tensor());
    CHECK(riemann_at(m, random_point(4, rng)).is_zero_tensor());
    JetPoint jet = jet_at(m, origin(4));
    CHECK(jet.g == s.form);
    CHECK(jet.g_inv == s.form.inverse());
    for (const Matrix& d : jet.dg) CHECK(d.is_zero_matrix());
}

TEST_CASE("realization metric jet") {
    Structure s = standard_para_hermitian(2);
    std::mt19937_64 rng(53);
    Tensor4 theta = random_realization_theta(s, rng);
    PolyMetric m = realization_metric(theta, s);
    JetPoint jet = jet_at(m, origin(4));
    CHECK(jet.g == s.form);
    for (const Matrix& d : jet.dg) CHECK(d.is_zero_matrix());
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 4; ++l)
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    CHECK(jet.d2g[k][l](i, j) == theta.at(i, j, k, l) + theta.at(i, j, l, k));
}

TEST_CASE("realization metric validates its input") {
    Structure s = standard_para_hermitian(2);
    Tensor4 asym(4);
    asym.at(0, 1, 0, 0) = Rational(1);  // not symmetric in the first pair
    CHECK_THROWS_AS(realization_metric(asym, s), SlotSymmetryViolation);

    Tensor4 wrong_eigen(4);  // symmetric pairs but in the +1 eigenspace
    wrong_eigen.at(0, 0, 0, 0) = Rational(1);
    wrong_eigen.at(2, 2, 0, 0) = Rational(1);
    CHECK_THROWS_AS(realization_metric(wrong_eigen, s), JConditionViolation);
}

TEST_CASE("curvature at the origin is the operator image") {
    Structure s = standard_para_hermitian(2);
    std::mt19937_64 rng(59);
    for (int k = 0; k < 10; ++k) {
        Tensor4 theta = random_realization_theta(s, rng);
        PolyMetric m = realization_metric(theta, s);
        CHECK(riemann_at(m, origin(4)) == p_operator(theta));
        CHECK(d_kaehler_at(m, s, origin(4)).is_zero_tensor());
        for (int p = 0; p < 2; ++p) {
            Tensor4 r = riemann_at(m, random_point(4, rng));
            CHECK(is_algebraic_curvature(r));
            CHECK(satisfies_gray(r, s));
        }
    }
}

TEST_CASE("singular points are reported") {
    Structure s = standard_para_hermitian(2);
    PolyMetric m = flat_metric(s.form);
    m.at(0, 0) = m.at(0, 0) + Poly::variable(4, 0);  // g_00 = -1 + u_1
    std::vector<Rational> p = origin(4);
    p[0] = Rational(1);
    CHECK_THROWS_AS(jet_at(m, p), SingularAtPoint);
    CHECK_THROWS_AS(riemann_at(m, p), SingularAtPoint);
}

TEST_CASE("nijenhuis tensor") {
    const std::size_t d = 4;
    // Constant standard structures are integrable.
    for (const Structure& s : {standard_para_hermitian(2), standard_hermitian(0, 2)}) {
        std::vector<Poly> j(d * d, Poly(d));
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                j[a * d + b] = Poly::constant(d, s.J(a, b));
        std::mt19937_64 rng(61);
        CHECK(nijenhuis_at(j, d, s.kind, random_point(d, rng)).is_zero_tensor());
    }

    // Para structure with eigendistributions span(d1, d2) and
    // span(d3, d4 + f d1): J d4 = -d4 - 2 f d1. The bracket [d3, d4 + f d1]
    // is (df/du3) d1, so f = u3 obstructs integrability while f = u4 does not.
    auto para_j = [&](const Poly& f) {
        std::vector<Poly> j(d * d, Poly(d));
        j[0 * d + 0] = Poly::constant(d, Rational(1));
        j[1 * d + 1] = Poly::constant(d, Rational(1));
        j[2 * d + 2] = Poly::constant(d, Rational(-1));
        j[3 * d + 3] = Poly::constant(d, Rational(-1));
        j[0 * d + 3] = f * Rational(-2);
        return j;
    };
    Tensor3 bad = nijenhuis_at(para_j(Poly::variable(d, 2)), d,
                               StructureKind::ParaHermitian, origin(d));
    CHECK(!bad.is_zero_tensor());
    Tensor3 good = nijenhuis_at(para_j(Poly::variable(d, 3)), d,
                                StructureKind::ParaHermitian, origin(d));
    CHECK(good.is_zero_tensor());

    // J^2 != Id at the point is rejected.
    std::vector<Poly> not_j(d * d, Poly(d));
    for (std::size_t a = 0; a < d; ++a)
        not_j[a * d + a] = Poly::constant(d, Rational(2));
    CHECK_THROWS_AS(nijenhuis_at(not_j, d, StructureKind::ParaHermitian, origin(d)),
                    NotAlmostStructure);
}

TEST_CASE("catalog labels resolve") {
    CHECK_THROWS_AS(catalog_entry("no-such-entry"), LabelAbsent);
    CHECK(catalog_entry("L4.1").dim == 4);
    CHECK(catalog().size() >= 9);
}

TEST_CASE("every catalog entry reproduces its expected values") {
    for (const ExampleCatalogEntry& e : catalog()) {
        for (const auto& [name, ok] : evaluate_catalog_entry(e)) {
            INFO(e.label << ": " << name);
            CHECK(ok);
        }
    }
}

TEST_CASE("higher degree para metrics satisfy the gray identity") {
    Structure s = standard_para_hermitian(2);
    std::mt19937_64 rng(67);
    for (unsigned degree : {3u, 4u}) {
        PolyMetric m = random_para_metric(s, degree, rng);
        for (int p = 0; p < 2; ++p) {
            std::vector<Rational> pt = random_point(4, rng);
            try {
                Tensor4 r = riemann_at(m, pt);
                CHECK(is_algebraic_curvature(r));
                CHECK(satisfies_gray(r, s));
            } catch (const SingularAtPoint&) {
                // acceptable for a random draw; the acceptance suite resamples
            }
        }
    }
}

}
