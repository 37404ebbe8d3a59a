#include <random>

#include "doctest.h"
#include "phc/tvdecomp.hpp"

using namespace phc;

namespace {

Tensor2 random_two_tensor(std::size_t d, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    Tensor2 t(d);
    for (auto& v : t.e) v = Rational(coeff(rng));
    return t;
}

Tensor4 random_curvature(const CurvatureSpace& sp, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<Rational> c(sp.dim());
    for (auto& v : c) v = Rational(coeff(rng));
    return sp.from_coords(c);
}

}  // namespace

TEST_SUITE("tvdecomp") {

TEST_CASE("two-tensor decomposition reassembles orthogonally") {
    std::mt19937_64 rng(37);
    for (std::size_t n : {2ul, 3ul}) {
        Structure s = standard_para_hermitian(n);
        for (int k = 0; k < 50; ++k) {
            Tensor2 t = random_two_tensor(s.dim, rng);
            TwoTensorDecomposition d = decompose_two_tensor(t, s);
            CHECK(d.reassemble() == t);
            const Tensor2* parts[] = {&d.scalar_part, &d.sym0_part, &d.sym_part,
                                      &d.omega_part,  &d.alt0_part, &d.alt_part};
            for (int i = 0; i < 6; ++i)
                for (int j = i + 1; j < 6; ++j)
                    CHECK(is_zero(tensor_inner_product2(*parts[i], *parts[j], s)));
            CHECK(d.scalar_part.is_symmetric());
            CHECK(d.sym0_part.is_symmetric());
            CHECK(d.sym_part.is_symmetric());
            CHECK(d.omega_part.is_antisymmetric());
            CHECK(d.alt0_part.is_antisymmetric());
            CHECK(d.alt_part.is_antisymmetric());
        }
    }
}

TEST_CASE("ricci of a random curvature tensor is symmetric") {
    Structure s = standard_para_hermitian(2);
    const CurvatureSpace& sp = CurvatureSpace::get(s);
    std::mt19937_64 rng(41);
    for (int k = 0; k < 10; ++k) {
        RicciData rd = ricci(random_curvature(sp, rng), s);
        CHECK(rd.rho.is_symmetric());
    }
}

TEST_CASE("module table dimensions") {
    ModuleTable t4 = module_table(standard_para_hermitian(2));
    CHECK(t4.module_count == 7);
    CHECK(t4.find("W1+W4").dim() == 2);
    CHECK(t4.find("W2").dim() == 3);
    CHECK(t4.find("W3").dim() == 5);
    CHECK(t4.find("W7").dim() == 2);
    CHECK(t4.find("W8").dim() == 6);
    CHECK(t4.find("W9").dim() == 2);
    CHECK(!t4.has("W10"));
    CHECK_THROWS_AS(t4.find("W10"), LabelAbsent);

    ModuleTable t6 = module_table(standard_para_hermitian(3));
    CHECK(t6.module_count == 9);
    CHECK(t6.find("W3").dim() == 27);
    CHECK(t6.find("W7").dim() == 12);
    CHECK(t6.find("W10").dim() == 30);
    std::size_t total = 0;
    for (const auto& [name, module] : t6.modules) total += module.dim();
    CHECK(total == 105);
}

TEST_CASE("unsupported dimension throws") {
    CHECK_THROWS_AS(module_table(standard_para_hermitian(5)), UnsupportedDimension);
}

TEST_CASE("components project orthogonally and reassemble") {
    Structure s = standard_para_hermitian(2);
    const CurvatureSpace& sp = CurvatureSpace::get(s);
    ModuleTable table = module_table(s);
    std::mt19937_64 rng(43);
    for (int k = 0; k < 5; ++k) {
        Tensor4 a = random_curvature(sp, rng);
        Tensor4 total(s.dim);
        for (const auto& [name, module] : table.modules) {
            Tensor4 comp = component_in(a, name, table);
            total = total + comp;
            // Idempotent on its own module, zero on the others.
            CHECK(component_in(comp, name, table) == comp);
            for (const auto& [other, om] : table.modules)
                if (other != name)
                    CHECK(component_in(comp, other, table).is_zero_tensor());
        }
        CHECK(total == a);
    }
}

TEST_CASE("hermitian module table matches the para block dimensions") {
    ModuleTable t = module_table(standard_hermitian(0, 2));
    CHECK(t.module_count == 7);
    std::size_t total = 0;
    for (const auto& [name, module] : t.modules) total += module.dim();
    CHECK(total == 20);
}

}
