#include "phc/realize.hpp"

#include <array>
#include <stdexcept>

#include "phc/tvdecomp.hpp"

namespace phc {

PolyMetric flat_metric(const Matrix& background) {
    const std::size_t d = background.rows();
    PolyMetric m(d);
    m.background = background;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            m.at(a, b) = Poly::constant(d, background(a, b));
    return m;
}

PolyMetric realization_metric(const Tensor4& theta, const Structure& s) {
    if (!s.is_para())
        throw NotParaHermitian("realization_metric: para-Hermitian structure required");
    const std::size_t d = s.dim;
    if (theta.dim != d) throw DimensionMismatch("realization_metric: theta dimension");
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t w = 0; w < d; ++w) {
                    if (theta.at(a, b, c, w) != theta.at(b, a, c, w) ||
                        theta.at(a, b, c, w) != theta.at(a, b, w, c))
                        throw SlotSymmetryViolation("realization_metric: theta not pair-symmetric");
                }
    const SignedPerm j = s.j_perm();
    if (!(j_pullback4(theta, j, 0b0011) + theta).is_zero_tensor())
        throw JConditionViolation("realization_metric: theta not in S^2_-");

    PolyMetric m = flat_metric(s.form);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l) {
                    const Rational& v = theta.at(a, b, k, l);
                    if (is_zero(v)) continue;
                    std::vector<unsigned> exp(d, 0);
                    exp[k] += 1;
                    exp[l] += 1;
                    m.at(a, b).add_term(exp, v);
                }
    return m;
}

JetPoint jet_at(const PolyMetric& m, const std::vector<Rational>& point) {
    const std::size_t d = m.dim;
    if (point.size() != d) throw DimensionMismatch("jet_at: point dimension");
    JetPoint jet;
    jet.point = point;
    jet.g = Matrix(d, d);
    jet.dg.assign(d, Matrix(d, d));
    jet.d2g.assign(d, std::vector<Matrix>(d, Matrix(d, d)));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b) {
            const Poly& g_ab = m.at(a, b);
            jet.g(a, b) = jet.g(b, a) = g_ab.eval(point);
            for (std::size_t c = 0; c < d; ++c) {
                Poly dc = g_ab.derivative(c);
                jet.dg[c](a, b) = jet.dg[c](b, a) = dc.eval(point);
                for (std::size_t e2 = c; e2 < d; ++e2) {
                    Rational v = dc.derivative(e2).eval(point);
                    jet.d2g[c][e2](a, b) = jet.d2g[c][e2](b, a) = v;
                    jet.d2g[e2][c](a, b) = jet.d2g[e2][c](b, a) = v;
                }
            }
        }
    try {
        jet.g_inv = jet.g.inverse();
    } catch (const SingularMatrix&) {
        throw SingularAtPoint("jet_at: metric degenerate at the point");
    }
    return jet;
}

Tensor4 riemann_at(const PolyMetric& m, const std::vector<Rational>& point) {
    const JetPoint jet = jet_at(m, point);
    const std::size_t d = m.dim;
    const Rational half(1, 2);

    // Gamma_{abc} = (g_{bc/a} + g_{ac/b} - g_{ab/c}) / 2 and its coordinate
    // derivatives from the 2-jet.
    auto gamma_low = [&](std::size_t a, std::size_t b, std::size_t c) -> Rational {
        return (jet.dg[a](b, c) + jet.dg[b](a, c) - jet.dg[c](a, b)) * half;
    };
    auto dgamma_low = [&](std::size_t p, std::size_t a, std::size_t b, std::size_t c) -> Rational {
        return (jet.d2g[p][a](b, c) + jet.d2g[p][b](a, c) - jet.d2g[p][c](a, b)) * half;
    };

    // Gamma_{ab}^d = g^{cd} Gamma_{abc}
    std::vector<Rational> gup(d * d * d, Rational(0));
    auto gu = [&](std::size_t a, std::size_t b, std::size_t c) -> Rational& {
        return gup[(a * d + b) * d + c];
    };
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t dd = 0; dd < d; ++dd) {
                Rational acc(0);
                for (std::size_t c = 0; c < d; ++c) {
                    const Rational& inv = jet.g_inv(c, dd);
                    if (is_zero(inv)) continue;
                    acc += inv * gamma_low(a, b, c);
                }
                gu(a, b, dd) = acc;
            }

    // d_p g^{cd} = -g^{ce} g_{ef/p} g^{fd}
    std::vector<Matrix> dginv(d, Matrix(d, d));
    for (std::size_t p = 0; p < d; ++p)
        dginv[p] = -(jet.g_inv * jet.dg[p] * jet.g_inv);

    Tensor4 r(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            if (a == b) continue;
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t dd = 0; dd < d; ++dd) {
                    Rational up(0);  // R_{abc}^dd
                    for (std::size_t e2 = 0; e2 < d; ++e2) {
                        const Rational& inv = jet.g_inv(e2, dd);
                        if (!is_zero(inv))
                            up += inv * (dgamma_low(a, b, c, e2) - dgamma_low(b, a, c, e2));
                        up += dginv[a](e2, dd) * gamma_low(b, c, e2) -
                              dginv[b](e2, dd) * gamma_low(a, c, e2);
                        up += gu(a, e2, dd) * gu(b, c, e2) - gu(b, e2, dd) * gu(a, c, e2);
                    }
                    if (is_zero(up)) continue;
                    for (std::size_t f = 0; f < d; ++f) {
                        const Rational& gf = jet.g(dd, f);
                        if (!is_zero(gf)) r.at(a, b, c, f) += gf * up;
                    }
                }
        }
    return r;
}

Tensor3 d_kaehler_at(const PolyMetric& m, const Structure& s,
                     const std::vector<Rational>& point) {
    const std::size_t d = m.dim;
    if (s.dim != d) throw DimensionMismatch("d_kaehler_at: structure dimension");
    const SignedPerm j = s.j_perm();
    // Omega_ab = g(xi_a, J xi_b) = sign_b * g_{a, image_b}
    std::vector<Poly> omega(d * d, Poly(d));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            Poly v = m.at(a, j.image[b]);
            omega[a * d + b] = j.sign[b] > 0 ? v : -v;
        }
    Tensor3 out(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c) {
                Rational v = omega[b * d + c].derivative(a).eval(point) +
                             omega[c * d + a].derivative(b).eval(point) +
                             omega[a * d + b].derivative(c).eval(point);
                out.at(a, b, c) = v;
            }
    return out;
}

Tensor3 nijenhuis_at(const std::vector<Poly>& j_field, std::size_t dim, StructureKind kind,
                     const std::vector<Rational>& point) {
    if (j_field.size() != dim * dim)
        throw DimensionMismatch("nijenhuis_at: J field shape");
    Matrix jp(dim, dim);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) jp(a, b) = j_field[a * dim + b].eval(point);
    Matrix sq = jp * jp;
    const Rational want(kind == StructureKind::ParaHermitian ? 1 : -1);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
            if (sq(a, b) != (a == b ? want : Rational(0)))
                throw NotAlmostStructure("nijenhuis_at: J^2 != +-Id at the point");

    // dj[c](d,a) = d_c J^d_a
    std::vector<Matrix> dj(dim, Matrix(dim, dim));
    for (std::size_t c = 0; c < dim; ++c)
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b)
                dj[c](a, b) = j_field[a * dim + b].derivative(c).eval(point);

    Tensor3 n(dim);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
            for (std::size_t dd = 0; dd < dim; ++dd) {
                Rational acc(0);
                for (std::size_t c = 0; c < dim; ++c) {
                    acc += jp(dd, c) * (dj[b](c, a) - dj[a](c, b));
                    acc += jp(c, a) * dj[c](dd, b) - jp(c, b) * dj[c](dd, a);
                }
                n.at(a, b, dd) = acc;
            }
    return n;
}

// ---------------------------------------------------------------------------
// Example catalog
// ---------------------------------------------------------------------------

namespace {

Tensor2 two_tensor_transpose(const Tensor2& t) {
    Tensor2 r(t.dim);
    for (std::size_t a = 0; a < t.dim; ++a)
        for (std::size_t b = 0; b < t.dim; ++b) r.at(a, b) = t.at(b, a);
    return r;
}

// Coordinate index of x_i / y_i, zero-based i.
std::size_t X(std::size_t i, std::size_t n) {
    (void)n;
    return i;
}
std::size_t Y(std::size_t i, std::size_t n) { return n + i; }

// c * (du_a o du_b) added into the metric, with the symmetric product
// normalization du_a o du_b = (du_a x du_b + du_b x du_a)/2.
void add_sym_product(PolyMetric& m, std::size_t a, std::size_t b, const Poly& c) {
    if (a == b) {
        m.at(a, a) = m.at(a, a) + c;
    } else {
        Poly half = c * Rational(1, 2);
        m.at(a, b) = m.at(a, b) + half;
        m.at(b, a) = m.at(b, a) + half;
    }
}

struct Entry4 {
    std::size_t a, b, c, d;
    Rational v;
};

// Expected curvature tensor from the listed entries, completed through the
// Z2 symmetries (antisymmetry in both pairs, pair interchange). Conflicting
// listings throw.
Tensor4 curvature_from_entries(std::size_t dim, const std::vector<Entry4>& entries) {
    Tensor4 t(dim);
    std::vector<bool> set(t.e.size(), false);
    auto put = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d,
                   const Rational& v) {
        std::size_t i = t.flat(a, b, c, d);
        if (set[i] && t.e[i] != v)
            throw std::logic_error("curvature_from_entries: inconsistent table");
        t.e[i] = v;
        set[i] = true;
    };
    for (const auto& en : entries) {
        const std::array<std::array<std::size_t, 4>, 2> ord = {{
            {en.a, en.b, en.c, en.d},
            {en.c, en.d, en.a, en.b},
        }};
        for (int k = 0; k < 2; ++k) {
            auto [a, b, c, d] = std::tuple{ord[k][0], ord[k][1], ord[k][2], ord[k][3]};
            put(a, b, c, d, en.v);
            put(b, a, c, d, -en.v);
            put(a, b, d, c, -en.v);
            put(b, a, d, c, en.v);
        }
    }
    return t;
}

Tensor2 two_tensor_from_entries(std::size_t dim,
                                const std::vector<std::tuple<std::size_t, std::size_t, Rational>>&
                                    entries,
                                bool symmetric) {
    Tensor2 t(dim);
    for (const auto& [a, b, v] : entries) {
        t.at(a, b) = v;
        if (symmetric && a != b) t.at(b, a) = v;
    }
    return t;
}

using Check = std::pair<std::string, std::function<bool(const CatalogContext&)>>;

// g = Xi - eps x1^2 (dx1 o dx1 - dy1 o dy1) - rho x1^2 (dx2 o dx2 - dy2 o dy2)
PolyMetric metric_one(const Rational& eps, const Rational& rho) {
    const std::size_t n = 2, d = 4;
    PolyMetric m = flat_metric(standard_para_hermitian(n).form);
    Poly x1sq = Poly::variable(d, X(0, n)) * Poly::variable(d, X(0, n));
    add_sym_product(m, X(0, n), X(0, n), x1sq * (-eps));
    add_sym_product(m, Y(0, n), Y(0, n), x1sq * eps);
    add_sym_product(m, X(1, n), X(1, n), x1sq * (-rho));
    add_sym_product(m, Y(1, n), Y(1, n), x1sq * rho);
    return m;
}

// g = Xi - 4 eps x1^2 (-dx1 o dx2 + dy1 o dy2)
PolyMetric metric_two(const Rational& eps) {
    const std::size_t n = 2, d = 4;
    PolyMetric m = flat_metric(standard_para_hermitian(n).form);
    Poly x1sq = Poly::variable(d, X(0, n)) * Poly::variable(d, X(0, n));
    add_sym_product(m, X(0, n), X(1, n), x1sq * (eps * 4));
    add_sym_product(m, Y(0, n), Y(1, n), x1sq * (eps * -4));
    return m;
}

// g = Xi - 2 rho x1^2 (-dx1 o dx2 + dy1 o dy2) - 2 eps x1^2 (-dx2 o dx3 + dy2 o dy3)
PolyMetric metric_three(const Rational& rho, const Rational& eps) {
    const std::size_t n = 3, d = 6;
    PolyMetric m = flat_metric(standard_para_hermitian(n).form);
    Poly x1sq = Poly::variable(d, X(0, n)) * Poly::variable(d, X(0, n));
    add_sym_product(m, X(0, n), X(1, n), x1sq * (rho * 2));
    add_sym_product(m, Y(0, n), Y(1, n), x1sq * (rho * -2));
    add_sym_product(m, X(1, n), X(2, n), x1sq * (eps * 2));
    add_sym_product(m, Y(1, n), Y(2, n), x1sq * (eps * -2));
    return m;
}

// g = Xi - 2 {x1^2 - y1^2 - x2^2 + y2^2} (-dx1 o dx2 + dy1 o dy2)
PolyMetric metric_w3() {
    const std::size_t n = 2, d = 4;
    PolyMetric m = flat_metric(standard_para_hermitian(n).form);
    auto sq = [&](std::size_t i) { return Poly::variable(d, i) * Poly::variable(d, i); };
    Poly f = sq(X(0, n)) - sq(Y(0, n)) - sq(X(1, n)) + sq(Y(1, n));
    add_sym_product(m, X(0, n), X(1, n), f * Rational(2));
    add_sym_product(m, Y(0, n), Y(1, n), f * Rational(-2));
    return m;
}

// g = Xi - 2 {x1^2 + y1^2} (-dx2 o dx3 + dy2 o dy3)
PolyMetric metric_w10() {
    const std::size_t n = 3, d = 6;
    PolyMetric m = flat_metric(standard_para_hermitian(n).form);
    auto sq = [&](std::size_t i) { return Poly::variable(d, i) * Poly::variable(d, i); };
    Poly f = sq(X(0, n)) + sq(Y(0, n));
    add_sym_product(m, X(1, n), X(2, n), f * Rational(2));
    add_sym_product(m, Y(1, n), Y(2, n), f * Rational(-2));
    return m;
}

// g = Xi - 4 {x1 x2 - y1 y2} (-dx3 o dx4 + dy3 o dy4). The relative minus
// between the x and y coefficients keeps the curvature J*-invariant, which is
// what pushes it out of the J*-antiinvariant module.
PolyMetric metric_w6() {
    const std::size_t n = 4, d = 8;
    PolyMetric m = flat_metric(standard_para_hermitian(n).form);
    Poly f = Poly::variable(d, X(0, n)) * Poly::variable(d, X(1, n)) -
             Poly::variable(d, Y(0, n)) * Poly::variable(d, Y(1, n));
    add_sym_product(m, X(2, n), X(3, n), f * Rational(4));
    add_sym_product(m, Y(2, n), Y(3, n), f * Rational(-4));
    return m;
}

// Theta whose realization metric reproduces metric_one(1, 1); used by the
// generic realization entry.
Tensor4 theta_generic() {
    const std::size_t n = 2, d = 4;
    Tensor4 th(d);
    std::size_t x1 = X(0, n);
    th.at(X(0, n), X(0, n), x1, x1) = Rational(-1);
    th.at(Y(0, n), Y(0, n), x1, x1) = Rational(1);
    th.at(X(1, n), X(1, n), x1, x1) = Rational(-1);
    th.at(Y(1, n), Y(1, n), x1, x1) = Rational(1);
    return th;
}

ExampleCatalogEntry make_l521() {
    const std::size_t n = 2, d = 4;
    const Rational eps(1), rho(1);
    ExampleCatalogEntry e;
    e.label = "L5.2-1";
    e.dim = d;
    e.metric = metric_one(eps, rho);
    e.parameters = {{"eps", eps}, {"rho", rho}};
    Tensor4 want = curvature_from_entries(
        d, {{X(0, n), Y(0, n), Y(0, n), X(0, n), -eps},
            {X(0, n), X(1, n), X(1, n), X(0, n), rho},
            {X(0, n), Y(1, n), Y(1, n), X(0, n), -rho}});
    Tensor2 want_rho = two_tensor_from_entries(
        d,
        {{X(0, n), X(0, n), -eps - rho * 2},
         {Y(0, n), Y(0, n), eps},
         {X(1, n), X(1, n), -rho},
         {Y(1, n), Y(1, n), rho}},
        true);
    e.expected.emplace_back("curvature-table",
                            [want](const CatalogContext& c) { return c.curvature == want; });
    e.expected.emplace_back("tau", [eps, rho](const CatalogContext& c) {
        return ricci(c.curvature, c.s).tau == eps * 2 + rho * 4;
    });
    e.expected.emplace_back("tau-star", [eps](const CatalogContext& c) {
        return ricci(c.curvature, c.s).tau_star == eps * 2;
    });
    e.expected.emplace_back("ricci-table", [want_rho](const CatalogContext& c) {
        return ricci(c.curvature, c.s).rho == want_rho;
    });
    return e;
}

ExampleCatalogEntry make_l522() {
    const std::size_t n = 2, d = 4;
    const Rational eps(2), rho(-1);
    ExampleCatalogEntry e;
    e.label = "L5.2-2";
    e.dim = d;
    e.metric = metric_one(eps, rho);
    e.parameters = {{"eps", eps}, {"rho", rho}};
    Tensor2 want_plus = two_tensor_from_entries(
        d, {{X(0, n), X(0, n), Rational(1)}, {Y(0, n), Y(0, n), Rational(1)}}, true);
    Tensor2 want_zms = two_tensor_from_entries(
        d,
        {{X(0, n), X(0, n), Rational(-1)},
         {Y(0, n), Y(0, n), Rational(1)},
         {X(1, n), X(1, n), Rational(1)},
         {Y(1, n), Y(1, n), Rational(-1)}},
        true);
    e.expected.emplace_back("rho-trace-free", [](const CatalogContext& c) {
        RicciData r = ricci(c.curvature, c.s);
        return is_zero(r.tau) && decompose_two_tensor(r.rho, c.s).scalar_part.is_zero_tensor();
    });
    e.expected.emplace_back("rho-plus-s", [want_plus](const CatalogContext& c) {
        return decompose_two_tensor(ricci(c.curvature, c.s).rho, c.s).sym_part == want_plus;
    });
    e.expected.emplace_back("rho-zero-minus-s", [want_zms](const CatalogContext& c) {
        return decompose_two_tensor(ricci(c.curvature, c.s).rho, c.s).sym0_part == want_zms;
    });
    return e;
}

ExampleCatalogEntry make_l523() {
    const std::size_t n = 2, d = 4;
    const Rational eps(1);
    ExampleCatalogEntry e;
    e.label = "L5.2-3";
    e.dim = d;
    e.metric = metric_two(eps);
    e.parameters = {{"eps", eps}};
    Tensor4 want =
        curvature_from_entries(d, {{X(0, n), Y(0, n), Y(1, n), X(0, n), eps * 2}});
    Tensor2 want_star = two_tensor_from_entries(
        d, {{X(0, n), X(1, n), eps * 2}, {Y(1, n), Y(0, n), eps * -2}}, false);
    Tensor2 want_lambda = two_tensor_from_entries(
        d,
        {{X(0, n), X(1, n), eps},
         {X(1, n), X(0, n), -eps},
         {Y(1, n), Y(0, n), -eps},
         {Y(0, n), Y(1, n), eps}},
        false);
    e.expected.emplace_back("curvature-table",
                            [want](const CatalogContext& c) { return c.curvature == want; });
    e.expected.emplace_back("rho-star-table", [want_star](const CatalogContext& c) {
        return ricci(c.curvature, c.s).rho_star == want_star;
    });
    // rho*_{+,Lambda} equals the full antisymmetric part and is nonzero.
    e.expected.emplace_back("rho-star-plus-lambda", [want_lambda](const CatalogContext& c) {
        RicciData r = ricci(c.curvature, c.s);
        TwoTensorDecomposition dec = decompose_two_tensor(r.rho_star, c.s);
        Tensor2 full_lambda = (r.rho_star - two_tensor_transpose(r.rho_star)) * Rational(1, 2);
        return dec.alt_part == want_lambda && dec.alt_part == full_lambda &&
               !dec.alt_part.is_zero_tensor();
    });
    return e;
}

ExampleCatalogEntry make_l52_metric3(const std::string& label, const Rational& rho,
                                     const Rational& eps) {
    const std::size_t n = 3, d = 6;
    ExampleCatalogEntry e;
    e.label = label;
    e.dim = d;
    e.metric = metric_three(rho, eps);
    e.parameters = {{"eps", eps}, {"rho", rho}};
    Tensor4 want = curvature_from_entries(
        d, {{X(0, n), Y(0, n), Y(1, n), X(0, n), rho},
            {X(0, n), X(1, n), X(2, n), X(0, n), -eps},
            {X(0, n), Y(1, n), Y(2, n), X(0, n), eps}});
    e.expected.emplace_back("curvature-table",
                            [want](const CatalogContext& c) { return c.curvature == want; });
    const Rational hr = rho / 2;
    e.expected.emplace_back("ricci-entries", [rho, eps, n](const CatalogContext& c) {
        Tensor2 r = ricci(c.curvature, c.s).rho;
        return r.at(Y(0, n), Y(1, n)) == -rho && is_zero(r.at(X(0, n), X(1, n))) &&
               r.at(X(1, n), X(2, n)) == eps && r.at(Y(1, n), Y(2, n)) == -eps &&
               r.is_symmetric();
    });
    e.expected.emplace_back("rho-decomposition", [hr, eps, n](const CatalogContext& c) {
        TwoTensorDecomposition dec =
            decompose_two_tensor(ricci(c.curvature, c.s).rho, c.s);
        return dec.sym0_part.at(X(0, n), X(1, n)) == hr &&
               dec.sym_part.at(X(0, n), X(1, n)) == -hr &&
               dec.sym0_part.at(Y(0, n), Y(1, n)) == -hr &&
               dec.sym_part.at(Y(0, n), Y(1, n)) == -hr &&
               dec.sym0_part.at(X(1, n), X(2, n)) == eps &&
               is_zero(dec.sym_part.at(X(1, n), X(2, n))) &&
               dec.sym0_part.at(Y(1, n), Y(2, n)) == -eps &&
               is_zero(dec.sym_part.at(Y(1, n), Y(2, n)));
    });
    e.expected.emplace_back("rho-star-entries", [rho, n](const CatalogContext& c) {
        Tensor2 rs = ricci(c.curvature, c.s).rho_star;
        return rs.at(X(0, n), X(1, n)) == rho && rs.at(Y(1, n), Y(0, n)) == -rho;
    });
    e.expected.emplace_back("rho-star-decomposition", [hr, n](const CatalogContext& c) {
        TwoTensorDecomposition dec =
            decompose_two_tensor(ricci(c.curvature, c.s).rho_star, c.s);
        return dec.sym0_part.at(X(0, n), X(1, n)) == hr &&
               dec.alt_part.at(X(0, n), X(1, n)) == hr &&
               dec.sym0_part.at(Y(0, n), Y(1, n)) == -hr &&
               dec.alt_part.at(Y(0, n), Y(1, n)) == hr;
    });
    if (is_zero(rho)) {
        e.expected.emplace_back("rho-zms-nonzero-star-zms-zero", [](const CatalogContext& c) {
            RicciData r = ricci(c.curvature, c.s);
            return !decompose_two_tensor(r.rho, c.s).sym0_part.is_zero_tensor() &&
                   decompose_two_tensor(r.rho_star, c.s).sym0_part.is_zero_tensor();
        });
    } else {
        e.expected.emplace_back("rho-star-zms-nonzero", [](const CatalogContext& c) {
            RicciData r = ricci(c.curvature, c.s);
            return !decompose_two_tensor(r.rho_star, c.s).sym0_part.is_zero_tensor();
        });
    }
    return e;
}

ExampleCatalogEntry make_w3() {
    const std::size_t n = 2, d = 4;
    ExampleCatalogEntry e;
    e.label = "L5.2-W3";
    e.dim = d;
    e.metric = metric_w3();
    Tensor4 want = curvature_from_entries(
        d, {{X(0, n), Y(0, n), Y(1, n), X(0, n), Rational(1)},
            {Y(0, n), X(0, n), X(1, n), Y(0, n), Rational(1)},
            {X(1, n), Y(0, n), Y(1, n), X(1, n), Rational(-1)},
            {Y(1, n), X(0, n), X(1, n), Y(1, n), Rational(-1)}});
    e.expected.emplace_back("curvature-table",
                            [want](const CatalogContext& c) { return c.curvature == want; });
    e.expected.emplace_back("ricci-zero", [](const CatalogContext& c) {
        return ricci(c.curvature, c.s).rho.is_zero_tensor();
    });
    // A(Jx,Jy,z,w) = -A: membership in the W3 module.
    e.expected.emplace_back("j12-antiinvariant", [](const CatalogContext& c) {
        return j_pullback4(c.curvature, c.s.j_perm(), 0b0011) == -c.curvature;
    });
    return e;
}

ExampleCatalogEntry make_w10() {
    const std::size_t n = 3, d = 6;
    ExampleCatalogEntry e;
    e.label = "L5.2-W10";
    e.dim = d;
    e.metric = metric_w10();
    Tensor4 want = curvature_from_entries(
        d, {{X(0, n), X(1, n), X(2, n), X(0, n), Rational(-1)},
            {X(0, n), Y(1, n), Y(2, n), X(0, n), Rational(1)},
            {Y(0, n), X(1, n), X(2, n), Y(0, n), Rational(-1)},
            {Y(0, n), Y(1, n), Y(2, n), Y(0, n), Rational(1)}});
    e.expected.emplace_back("curvature-table",
                            [want](const CatalogContext& c) { return c.curvature == want; });
    e.expected.emplace_back("ricci-zero", [](const CatalogContext& c) {
        RicciData r = ricci(c.curvature, c.s);
        return r.rho.is_zero_tensor() && r.rho_star.is_zero_tensor();
    });
    // J*A = -A: with both Ricci traces zero this is membership in W10.
    e.expected.emplace_back("j-star-antiinvariant", [](const CatalogContext& c) {
        return j_pullback4(c.curvature, c.s.j_perm(), 0b1111) == -c.curvature;
    });
    return e;
}

ExampleCatalogEntry make_w6() {
    const std::size_t n = 4, d = 8;
    ExampleCatalogEntry e;
    e.label = "L5.2-W6";
    e.dim = d;
    e.metric = metric_w6();
    std::vector<Entry4> table;
    for (int pair = 0; pair < 2; ++pair) {
        // The y1..y2 outer entries carry the opposite sign of the x1..x2 ones.
        std::size_t p = pair == 0 ? X(0, n) : Y(0, n);
        std::size_t q = pair == 0 ? X(1, n) : Y(1, n);
        Rational v(pair == 0 ? -1 : 1);
        table.push_back({p, X(2, n), X(3, n), q, v});
        table.push_back({p, X(3, n), X(2, n), q, v});
        table.push_back({p, Y(2, n), Y(3, n), q, -v});
        table.push_back({p, Y(3, n), Y(2, n), q, -v});
    }
    Tensor4 want = curvature_from_entries(d, table);
    e.expected.emplace_back("curvature-table",
                            [want](const CatalogContext& c) { return c.curvature == want; });
    e.expected.emplace_back("ricci-zero", [](const CatalogContext& c) {
        RicciData r = ricci(c.curvature, c.s);
        return r.rho.is_zero_tensor() && r.rho_star.is_zero_tensor();
    });
    e.expected.emplace_back("not-in-w3", [](const CatalogContext& c) {
        return j_pullback4(c.curvature, c.s.j_perm(), 0b0011) != -c.curvature;
    });
    e.expected.emplace_back("j-star-invariant", [](const CatalogContext& c) {
        return j_pullback4(c.curvature, c.s.j_perm(), 0b1111) == c.curvature;
    });
    // In the Gray kernel, hence orthogonal to W7; with the checks above the
    // remaining component sits in W6 and is nonzero.
    e.expected.emplace_back("para-gray", [](const CatalogContext& c) {
        return gray_symmetrize(c.curvature, c.s).is_zero_tensor();
    });
    return e;
}

ExampleCatalogEntry make_l41() {
    const std::size_t d = 4;
    ExampleCatalogEntry e;
    e.label = "L4.1";
    e.dim = d;
    Structure s = standard_para_hermitian(2);
    Tensor4 th = theta_generic();
    e.metric = realization_metric(th, s);
    e.parameters = {{"eps", Rational(1)}, {"rho", Rational(1)}};
    e.expected.emplace_back("realizes-p-operator", [th](const CatalogContext& c) {
        return c.curvature == p_operator(th);
    });
    e.expected.emplace_back("para-gray", [](const CatalogContext& c) {
        return gray_symmetrize(c.curvature, c.s).is_zero_tensor();
    });
    e.expected.emplace_back("d-omega-origin", [](const CatalogContext& c) {
        std::vector<Rational> origin(c.s.dim, Rational(0));
        return d_kaehler_at(c.entry.metric, c.s, origin).is_zero_tensor();
    });
    return e;
}

}  // namespace

const std::vector<ExampleCatalogEntry>& catalog() {
    static const std::vector<ExampleCatalogEntry> entries = [] {
        std::vector<ExampleCatalogEntry> v;
        v.push_back(make_l521());
        v.push_back(make_l522());
        v.push_back(make_l523());
        v.push_back(make_l52_metric3("L5.2-4", Rational(0), Rational(1)));
        v.push_back(make_l52_metric3("L5.2-5", Rational(1), Rational(1)));
        v.push_back(make_w3());
        v.push_back(make_w10());
        v.push_back(make_w6());
        v.push_back(make_l41());
        return v;
    }();
    return entries;
}

const ExampleCatalogEntry& catalog_entry(const std::string& label) {
    for (const auto& e : catalog())
        if (e.label == label) return e;
    throw LabelAbsent("catalog_entry: unknown label " + label);
}

std::vector<std::pair<std::string, bool>> evaluate_catalog_entry(const ExampleCatalogEntry& e) {
    Structure s = standard_para_hermitian(e.dim / 2);
    std::vector<Rational> origin(e.dim, Rational(0));
    Tensor4 a = riemann_at(e.metric, origin);
    CatalogContext ctx{e, s, a};
    std::vector<std::pair<std::string, bool>> out;
    for (const auto& [name, check] : e.expected) out.emplace_back(name, check(ctx));
    return out;
}

// ---------------------------------------------------------------------------
// Random suites
// ---------------------------------------------------------------------------

Tensor4 random_realization_theta(const Structure& s, std::mt19937_64& rng) {
    const std::size_t d = s.dim;
    std::uniform_int_distribution<int> coeff(-3, 3);
    Tensor4 t(d);
    for (auto& v : t.e) v = Rational(coeff(rng));
    // Symmetrize both pairs, then project the first pair onto S^2_-.
    Tensor4 sym(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t w = 0; w < d; ++w)
                    sym.at(a, b, c, w) = (t.at(a, b, c, w) + t.at(b, a, c, w) +
                                          t.at(a, b, w, c) + t.at(b, a, w, c)) *
                                         Rational(1, 4);
    Tensor4 proj = (sym - j_pullback4(sym, s.j_perm(), 0b0011)) * Rational(1, 2);
    return proj;
}

PolyMetric random_para_metric(const Structure& s, unsigned degree, std::mt19937_64& rng) {
    const std::size_t d = s.dim;
    const SignedPerm j = s.j_perm();
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<std::size_t> pick(0, d - 1);
    // Random homogeneous perturbation p, then enforce J* g = -g by using
    // p - J*p on top of the flat background.
    std::vector<Poly> p(d * d, Poly(d));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b)
            for (int terms = 0; terms < 2; ++terms) {
                int c = coeff(rng);
                if (c == 0) continue;
                std::vector<unsigned> exp(d, 0);
                for (unsigned k = 0; k < degree; ++k) exp[pick(rng)] += 1;
                p[a * d + b].add_term(exp, Rational(c));
                if (a != b) p[b * d + a].add_term(exp, Rational(c));
            }
    PolyMetric m = flat_metric(s.form);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            int sgn = j.sign[a] * j.sign[b];
            Poly pulled = p[j.image[a] * d + j.image[b]];
            if (sgn < 0) pulled = -pulled;
            m.at(a, b) = m.at(a, b) + p[a * d + b] - pulled;
        }
    return m;
}

std::vector<Rational> random_point(std::size_t dim, std::mt19937_64& rng) {
    static const Rational values[5] = {Rational(0), Rational(1, 4), Rational(-1, 4),
                                       Rational(1, 2), Rational(-1, 2)};
    std::uniform_int_distribution<int> pick(0, 4);
    std::vector<Rational> p(dim);
    for (auto& v : p) v = values[pick(rng)];
    return p;
}

}  // namespace phc
