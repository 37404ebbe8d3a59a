#include "phc/tvdecomp.hpp"

#include <algorithm>

namespace phc {

RicciData ricci(const Tensor4& a, const Structure& s) {
    if (a.dim != s.dim) throw DimensionMismatch("ricci: dimension mismatch");
    const std::size_t d = s.dim;
    Matrix inv = s.form.inverse();
    const SignedPerm j = s.j_perm();

    RicciData out;
    out.rho = Tensor2(d);
    out.rho_star = Tensor2(d);
    // A with J in the last two slots: A(e_i, x, Jy, J e_j).
    Tensor4 astar = j_pullback4(a, j, 0b1100);
    const Rational star_sign = s.is_para() ? Rational(-1) : Rational(1);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            Rational r(0), rs(0);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t k = 0; k < d; ++k) {
                    if (is_zero(inv(i, k))) continue;
                    r += inv(i, k) * a.at(i, x, y, k);
                    rs += inv(i, k) * astar.at(i, x, y, k);
                }
            out.rho.at(x, y) = r;
            out.rho_star.at(x, y) = star_sign * rs;
        }
    out.tau = Rational(0);
    out.tau_star = Rational(0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            if (is_zero(inv(i, k))) continue;
            out.tau += inv(i, k) * out.rho.at(i, k);
            out.tau_star += inv(i, k) * out.rho_star.at(i, k);
        }
    return out;
}

TwoTensorDecomposition decompose_two_tensor(const Tensor2& t, const Structure& s) {
    if (t.dim != s.dim) throw DimensionMismatch("decompose_two_tensor: dimension");
    const SignedPerm j = s.j_perm();
    const Rational half(1, 2);

    Tensor2 tt(t.dim);
    for (std::size_t a = 0; a < t.dim; ++a)
        for (std::size_t b = 0; b < t.dim; ++b) tt.at(a, b) = t.at(b, a);
    Tensor2 sym = (t + tt) * half;
    Tensor2 alt = (t - tt) * half;

    Tensor2 sym_plus = (sym + j_pullback2(sym, j)) * half;
    Tensor2 sym_minus = (sym - j_pullback2(sym, j)) * half;
    Tensor2 alt_plus = (alt + j_pullback2(alt, j)) * half;
    Tensor2 alt_minus = (alt - j_pullback2(alt, j)) * half;

    Tensor2 g = Tensor2::from_matrix(s.form);
    Tensor2 omega = kaehler_form(s);

    const Rational cg = tensor_inner_product2(t, g, s) / tensor_inner_product2(g, g, s);
    const Rational co =
        tensor_inner_product2(t, omega, s) / tensor_inner_product2(omega, omega, s);

    TwoTensorDecomposition out;
    out.scalar_part = g * cg;
    out.omega_part = omega * co;
    if (s.is_para()) {
        // g in S^2_-, Omega in Lambda^2_-.
        out.sym0_part = sym_minus - out.scalar_part;
        out.sym_part = sym_plus;
        out.alt0_part = alt_minus - out.omega_part;
        out.alt_part = alt_plus;
    } else {
        out.sym0_part = sym_plus - out.scalar_part;
        out.sym_part = sym_minus;
        out.alt0_part = alt_plus - out.omega_part;
        out.alt_part = alt_minus;
    }
    return out;
}

const Subspace& ModuleTable::find(const std::string& label) const {
    for (const auto& [name, sub] : modules)
        if (name == label) return sub;
    throw LabelAbsent("module label '" + label + "' not present");
}

bool ModuleTable::has(const std::string& label) const {
    for (const auto& [name, sub] : modules)
        if (name == label) return true;
    return false;
}

namespace {

// B * G * B^t for a coordinate-space subspace; the Gram matrix of its basis
// under the tensor form.
Matrix restricted_gram(const Subspace& sub, const Matrix& gram) {
    const std::size_t m = sub.dim(), K = gram.rows();
    Matrix bg(m, K);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < K; ++k) {
            Rational acc(0);
            for (std::size_t l = 0; l < K; ++l) {
                const Rational& b = sub.basis()(i, l);
                if (!is_zero(b) && !is_zero(gram(l, k))) acc += b * gram(l, k);
            }
            bg(i, k) = acc;
        }
    Matrix out(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t jj = 0; jj < m; ++jj) {
            Rational acc(0);
            for (std::size_t k = 0; k < K; ++k)
                if (!is_zero(bg(i, k)) && !is_zero(sub.basis()(jj, k)))
                    acc += bg(i, k) * sub.basis()(jj, k);
            out(i, jj) = acc;
        }
    return out;
}

bool mutually_orthogonal(const Subspace& a, const Subspace& b, const Matrix& gram) {
    const std::size_t K = gram.rows();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        std::vector<Rational> ag(K, Rational(0));
        for (std::size_t l = 0; l < K; ++l) {
            const Rational& v = a.basis()(i, l);
            if (is_zero(v)) continue;
            for (std::size_t k = 0; k < K; ++k)
                if (!is_zero(gram(l, k))) ag[k] += v * gram(l, k);
        }
        for (std::size_t jj = 0; jj < b.dim(); ++jj) {
            Rational acc(0);
            for (std::size_t k = 0; k < K; ++k)
                if (!is_zero(ag[k]) && !is_zero(b.basis()(jj, k)))
                    acc += ag[k] * b.basis()(jj, k);
            if (!is_zero(acc)) return false;
        }
    }
    return true;
}

std::size_t map_rank_on(const Subspace& sub, const CurvatureSpace& space,
                        const std::function<std::vector<Rational>(const Tensor4&)>& f) {
    if (sub.dim() == 0) return 0;
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < sub.dim(); ++i) {
        auto coords = sub.basis_row(i);
        rows.push_back(f(space.from_coords(coords)));
    }
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t jj = 0; jj < rows[i].size(); ++jj) m(i, jj) = rows[i][jj];
    return m.rank();
}

}  // namespace

ModuleTable module_table(const Structure& s) {
    const std::size_t d = s.dim;
    if (d != 4 && d != 6 && d != 8)
        throw UnsupportedDimension("module_table: 2n must be 4, 6 or 8");
    const CurvatureSpace& space = CurvatureSpace::get(s);
    const Matrix& gram = space.gram();
    const SignedPerm j = s.j_perm();
    const std::size_t K = space.dim();

    auto flat_rho = [&](const Tensor4& t) { return ricci(t, s).rho.e; };
    auto flat_rho_both = [&](const Tensor4& t) {
        RicciData r = ricci(t, s);
        std::vector<Rational> v = r.rho.e;
        v.insert(v.end(), r.rho_star.e.begin(), r.rho_star.e.end());
        return v;
    };
    auto flat_tau = [&](const Tensor4& t) {
        RicciData r = ricci(t, s);
        return std::vector<Rational>{r.tau, r.tau_star};
    };
    auto flat_sym0 = [&](const Tensor4& t) {
        RicciData r = ricci(t, s);
        std::vector<Rational> v = decompose_two_tensor(r.rho, s).sym0_part.e;
        if (d >= 6) {
            auto v2 = decompose_two_tensor(r.rho_star, s).sym0_part.e;
            v.insert(v.end(), v2.begin(), v2.end());
        }
        return v;
    };
    auto flat_sym = [&](const Tensor4& t) {
        return decompose_two_tensor(ricci(t, s).rho, s).sym_part.e;
    };
    auto flat_alt = [&](const Tensor4& t) {
        return decompose_two_tensor(ricci(t, s).rho_star, s).alt_part.e;
    };

    // First-pair J pullback: para W3 satisfies A(Jx,Jy,z,w) = -A, Hermitian
    // W3 the plus sign.
    const Rational w3_sign = s.is_para() ? Rational(1) : Rational(-1);
    Subspace w3 = map_kernel(space, [&](const Tensor4& t) {
        std::vector<Rational> v = (j_pullback4(t, j, 0b0011) * w3_sign + t).e;
        auto rho_v = flat_rho(t);
        v.insert(v.end(), rho_v.begin(), rho_v.end());
        return v;
    });
    Subspace w7 = w7_subspace_coords(s);

    ModuleTable table;
    table.s = s;
    Subspace characterized = sum(w3, w7);

    Subspace w10 = Subspace::zero(K);
    if (d >= 6) {
        w10 = map_kernel(space, [&](const Tensor4& t) {
            std::vector<Rational> v = (j_pullback4(t, j, 0b1111) + t).e;
            auto rr = flat_rho_both(t);
            v.insert(v.end(), rr.begin(), rr.end());
            return v;
        });
        characterized = sum(characterized, w10);
    }
    Subspace w6 = Subspace::zero(K);
    if (d >= 8) {
        Subspace jfix_ker = map_kernel(space, [&](const Tensor4& t) {
            std::vector<Rational> v = (j_pullback4(t, j, 0b1111) - t).e;
            auto rr = flat_rho_both(t);
            v.insert(v.end(), rr.begin(), rr.end());
            return v;
        });
        // W7 is also J*-fixed and Ricci flat, so cutting by the complement of
        // W3 alone leaves a copy of W7 behind; remove both.
        w6 = intersect(jfix_ker,
                       intersect(orthogonal_complement(w3, gram),
                                 orthogonal_complement(w7, gram)));
        characterized = sum(characterized, w6);
    }

    // The remaining four blocks live in the orthogonal complement of the
    // characterized modules; each block is cut out by the kernels of the
    // other three characterizing maps.
    Subspace rest = orthogonal_complement(characterized, gram);
    Subspace ker_tau = map_kernel(space, flat_tau);
    Subspace ker_sym0 = map_kernel(space, flat_sym0);
    Subspace ker_sym = map_kernel(space, flat_sym);
    Subspace ker_alt = map_kernel(space, flat_alt);

    Subspace b14 = intersect(rest, intersect(ker_sym0, intersect(ker_sym, ker_alt)));
    Subspace b25 = intersect(rest, intersect(ker_tau, intersect(ker_sym, ker_alt)));
    Subspace w8 = intersect(rest, intersect(ker_tau, intersect(ker_sym0, ker_alt)));
    Subspace w9 = intersect(rest, intersect(ker_tau, intersect(ker_sym0, ker_sym)));

    table.modules.emplace_back("W1+W4", b14);
    table.modules.emplace_back(d >= 6 ? "W2+W5" : "W2", b25);
    table.modules.emplace_back("W3", w3);
    if (d >= 8) table.modules.emplace_back("W6", w6);
    table.modules.emplace_back("W7", w7);
    table.modules.emplace_back("W8", w8);
    table.modules.emplace_back("W9", w9);
    if (d >= 6) table.modules.emplace_back("W10", w10);
    table.module_count = table.modules.size() + 1 + (d >= 6 ? 1 : 0);

    // Validate the construction.
    std::size_t total = 0;
    for (const auto& [name, sub] : table.modules) {
        total += sub.dim();
        if (restricted_gram(sub, gram).rank() != sub.dim())
            throw DegenerateRestriction("form degenerate on " + name);
    }
    if (total != K) throw DegenerateRestriction("module dimensions do not sum to dim A(V)");
    for (std::size_t i = 0; i < table.modules.size(); ++i)
        for (std::size_t jj = i + 1; jj < table.modules.size(); ++jj)
            if (!mutually_orthogonal(table.modules[i].second, table.modules[jj].second, gram))
                throw DegenerateRestriction("modules " + table.modules[i].first + " and " +
                                            table.modules[jj].first + " are not orthogonal");

    // Bijectivity of the characterizing maps on their blocks.
    const std::size_t dim_s0 = sym2_eigen_basis(s, s.is_para() ? -1 : 1).size() - 1;
    const std::size_t dim_sym = sym2_eigen_basis(s, s.is_para() ? 1 : -1).size();
    const std::size_t dim_alt = alt2_eigen_basis(s, s.is_para() ? 1 : -1).size();
    auto expect = [&](const char* what, std::size_t got, std::size_t want) {
        if (got != want)
            throw DegenerateRestriction(std::string("rank check failed for ") + what);
    };
    expect("tau+tau* on W1+W4", map_rank_on(b14, space, flat_tau), 2);
    expect("tau+tau* on W1+W4 (dim)", b14.dim(), 2);
    expect("rho_0 on W2(+W5)", map_rank_on(b25, space, flat_sym0), b25.dim());
    expect("rho_0 on W2(+W5) (dim)", b25.dim(), d >= 6 ? 2 * dim_s0 : dim_s0);
    expect("rho_S on W8", map_rank_on(w8, space, flat_sym), dim_sym);
    expect("rho_S on W8 (dim)", w8.dim(), dim_sym);
    expect("rho*_L on W9", map_rank_on(w9, space, flat_alt), dim_alt);
    expect("rho*_L on W9 (dim)", w9.dim(), dim_alt);

    return table;
}

Tensor4 component_in(const Tensor4& a, const std::string& label, const ModuleTable& table) {
    const CurvatureSpace& space = CurvatureSpace::get(table.s);
    const Subspace& sub = table.find(label);
    auto coords = space.coords(a);
    const Matrix& gram = space.gram();
    const std::size_t K = gram.rows(), m = sub.dim();
    if (m == 0) return Tensor4(table.s.dim);

    Matrix g_restricted = restricted_gram(sub, gram);
    Matrix rhs(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        Rational acc(0);
        for (std::size_t l = 0; l < K; ++l) {
            const Rational& b = sub.basis()(i, l);
            if (is_zero(b)) continue;
            for (std::size_t k = 0; k < K; ++k)
                if (!is_zero(gram(l, k)) && !is_zero(coords[k])) acc += b * gram(l, k) * coords[k];
        }
        rhs(i, 0) = acc;
    }
    Matrix sol;
    try {
        sol = g_restricted.inverse() * rhs;
    } catch (const SingularMatrix&) {
        throw DegenerateRestriction("form degenerate on module " + label);
    }
    std::vector<Rational> comp(K, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < K; ++k)
            if (!is_zero(sub.basis()(i, k))) comp[k] += sol(i, 0) * sub.basis()(i, k);
    return space.from_coords(comp);
}

}  // namespace phc
