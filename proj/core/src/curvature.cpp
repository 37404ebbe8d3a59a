#include "phc/curvature.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace phc {

bool is_algebraic_curvature(const Tensor4& t) { return is_algebraic_curvature_t(t); }

namespace {

// Contract one slot of a dense 4-tensor with a matrix:
// out[..., j, ...] = sum_i m(i, j) t[..., i, ...].
Tensor4 contract_slot(const Tensor4& t, const Matrix& m, int slot) {
    const std::size_t d = t.dim;
    Tensor4 out(d);
    std::size_t stride = 1;
    for (int s = 3; s > slot; --s) stride *= d;
    const std::size_t block = stride * d;
    for (std::size_t base = 0; base < t.e.size(); base += block) {
        for (std::size_t off = 0; off < stride; ++off) {
            for (std::size_t i = 0; i < d; ++i) {
                const Rational& v = t.e[base + i * stride + off];
                if (is_zero(v)) continue;
                for (std::size_t j = 0; j < d; ++j) {
                    if (is_zero(m(i, j))) continue;
                    out.e[base + j * stride + off] += m(i, j) * v;
                }
            }
        }
    }
    return out;
}

Tensor2 contract_slot2(const Tensor2& t, const Matrix& m, int slot) {
    const std::size_t d = t.dim;
    Tensor2 out(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const Rational& v = t.at(a, b);
            if (is_zero(v)) continue;
            const std::size_t i = slot == 0 ? a : b;
            for (std::size_t j = 0; j < d; ++j) {
                if (is_zero(m(i, j))) continue;
                if (slot == 0)
                    out.at(j, b) += m(i, j) * v;
                else
                    out.at(a, j) += m(i, j) * v;
            }
        }
    return out;
}

}  // namespace

Rational tensor_inner_product(const Tensor4& a, const Tensor4& b, const Structure& s) {
    if (a.dim != b.dim || a.dim != s.dim)
        throw DimensionMismatch("tensor_inner_product: dimension mismatch");
    // Diagonal +-1 forms (every structure this library builds) admit a fast
    // path: weight each entry by the product of the four index signs.
    try {
        auto signs = s.form_signs();
        Rational acc(0);
        const std::size_t d = a.dim;
        std::size_t idx = 0;
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = 0; q < d; ++q)
                for (std::size_t r = 0; r < d; ++r)
                    for (std::size_t t = 0; t < d; ++t, ++idx) {
                        if (is_zero(a.e[idx]) || is_zero(b.e[idx])) continue;
                        const int w = signs[p] * signs[q] * signs[r] * signs[t];
                        if (w > 0)
                            acc += a.e[idx] * b.e[idx];
                        else
                            acc -= a.e[idx] * b.e[idx];
                    }
        return acc;
    } catch (const std::domain_error&) {
        Matrix inv = s.form.inverse();
        Tensor4 raised = a;
        for (int slot = 0; slot < 4; ++slot) raised = contract_slot(raised, inv, slot);
        Rational acc(0);
        for (std::size_t i = 0; i < raised.e.size(); ++i)
            if (!is_zero(raised.e[i]) && !is_zero(b.e[i])) acc += raised.e[i] * b.e[i];
        return acc;
    }
}

Rational tensor_inner_product2(const Tensor2& a, const Tensor2& b, const Structure& s) {
    if (a.dim != b.dim || a.dim != s.dim)
        throw DimensionMismatch("tensor_inner_product2: dimension mismatch");
    Matrix inv = s.form.inverse();
    Tensor2 raised = contract_slot2(contract_slot2(a, inv, 0), inv, 1);
    Rational acc(0);
    for (std::size_t i = 0; i < raised.e.size(); ++i)
        if (!is_zero(raised.e[i]) && !is_zero(b.e[i])) acc += raised.e[i] * b.e[i];
    return acc;
}

Tensor4 pullback(const Tensor4& t, const Matrix& u) {
    Tensor4 r = t;
    for (int slot = 0; slot < 4; ++slot) r = contract_slot(r, u, slot);
    return r;
}

Tensor2 pullback2(const Tensor2& t, const Matrix& u) {
    return contract_slot2(contract_slot2(t, u, 0), u, 1);
}

// ---------------------------------------------------------------------------
// CurvatureSpace

CurvatureSpace::CurvatureSpace(const Structure& s) : s_(s) {
    const std::size_t d = s.dim;
    ambient_ = d * d * d * d;

    // Pre-space: tensors antisymmetric in each pair with pair-interchange
    // symmetry (S^2 of Lambda^2). One basis element per unordered pair of
    // index pairs P <= Q.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) pairs.emplace_back(a, b);
    const std::size_t np = pairs.size();

    struct PreElem {
        std::map<std::size_t, Rational> entries;
    };
    std::vector<PreElem> pre;
    auto flat = [d](std::size_t a, std::size_t b, std::size_t c, std::size_t w) {
        return ((a * d + b) * d + c) * d + w;
    };
    for (std::size_t pi = 0; pi < np; ++pi)
        for (std::size_t qi = pi; qi < np; ++qi) {
            auto [a, b] = pairs[pi];
            auto [c, w] = pairs[qi];
            PreElem el;
            auto put = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l, int v) {
                el.entries[flat(i, j, k, l)] = Rational(v);
            };
            put(a, b, c, w, 1);
            put(b, a, c, w, -1);
            put(a, b, w, c, -1);
            put(b, a, w, c, 1);
            put(c, w, a, b, 1);
            put(w, c, a, b, -1);
            put(c, w, b, a, -1);
            put(w, c, b, a, 1);
            pre.push_back(std::move(el));
        }
    const std::size_t npre = pre.size();

    // Bianchi constraints. Within the pre-space, constraints for ordered
    // triples x < y < z (any w) generate all of them.
    std::vector<std::vector<Rational>> constraint_rows;
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = x + 1; y < d; ++y)
            for (std::size_t z = y + 1; z < d; ++z)
                for (std::size_t w = 0; w < d; ++w) {
                    std::vector<Rational> row(npre, Rational(0));
                    bool nonzero = false;
                    const std::size_t tuples[3] = {flat(x, y, z, w), flat(y, z, x, w),
                                                   flat(z, x, y, w)};
                    for (std::size_t k = 0; k < npre; ++k) {
                        Rational v(0);
                        for (auto t : tuples) {
                            auto it = pre[k].entries.find(t);
                            if (it != pre[k].entries.end()) v += it->second;
                        }
                        if (!is_zero(v)) {
                            row[k] = v;
                            nonzero = true;
                        }
                    }
                    if (nonzero) constraint_rows.push_back(std::move(row));
                }

    Matrix constraints(constraint_rows.size(), npre);
    for (std::size_t i = 0; i < constraint_rows.size(); ++i)
        for (std::size_t j = 0; j < npre; ++j) constraints(i, j) = constraint_rows[i][j];
    Matrix ker = constraints.rows() ? constraints.kernel() : Matrix::identity(npre);

    // Expand kernel combinations to ambient coordinates and canonicalize.
    Matrix rows(ker.rows(), ambient_);
    for (std::size_t r = 0; r < ker.rows(); ++r)
        for (std::size_t k = 0; k < npre; ++k) {
            if (is_zero(ker(r, k))) continue;
            for (const auto& [idx, v] : pre[k].entries) rows(r, idx) += ker(r, k) * v;
        }
    pivots_ = rows.rref();

    rows_.resize(pivots_.size());
    for (std::size_t r = 0; r < pivots_.size(); ++r)
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!is_zero(rows(r, j))) rows_[r].emplace_back(j, rows(r, j));

    // Gram matrix of the basis under the tensor inner product.
    const std::size_t K = rows_.size();
    gram_ = Matrix(K, K);
    auto signs = s.form_signs();
    auto weight = [&](std::size_t t) {
        const std::size_t i0 = t / (d * d * d);
        const std::size_t i1 = (t / (d * d)) % d;
        const std::size_t i2 = (t / d) % d;
        const std::size_t i3 = t % d;
        return signs[i0] * signs[i1] * signs[i2] * signs[i3];
    };
    std::vector<Rational> dense(ambient_, Rational(0));
    for (std::size_t i = 0; i < K; ++i) {
        for (const auto& [idx, v] : rows_[i]) dense[idx] = weight(idx) > 0 ? v : -v;
        for (std::size_t j = i; j < K; ++j) {
            Rational acc(0);
            for (const auto& [idx, v] : rows_[j])
                if (!is_zero(dense[idx])) acc += dense[idx] * v;
            gram_(i, j) = acc;
            gram_(j, i) = acc;
        }
        for (const auto& [idx, v] : rows_[i]) dense[idx] = Rational(0);
    }
}

const CurvatureSpace& CurvatureSpace::get(const Structure& s) {
    static std::mutex mu;
    static std::map<std::pair<std::size_t, int>, std::unique_ptr<CurvatureSpace>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(s.dim, static_cast<int>(s.kind));
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<CurvatureSpace>(s)).first;
    return *it->second;
}

Tensor4 CurvatureSpace::basis_tensor(std::size_t k) const {
    Tensor4 t(s_.dim);
    for (const auto& [idx, v] : rows_[k]) t.e[idx] = v;
    return t;
}

std::vector<Rational> CurvatureSpace::coords(const Tensor4& t) const {
    if (t.dim != s_.dim) throw DimensionMismatch("coords: tensor dimension");
    std::vector<Rational> c(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) c[k] = t.e[pivots_[k]];
    std::vector<Rational> residual = t.e;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (is_zero(c[k])) continue;
        for (const auto& [idx, v] : rows_[k]) residual[idx] -= c[k] * v;
    }
    for (const auto& r : residual)
        if (!is_zero(r))
            throw NotCurvatureTensor("tensor is not in the algebraic curvature space");
    return c;
}

Tensor4 CurvatureSpace::from_coords(const std::vector<Rational>& c) const {
    if (c.size() != rows_.size()) throw DimensionMismatch("from_coords: length");
    Tensor4 t(s_.dim);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (is_zero(c[k])) continue;
        for (const auto& [idx, v] : rows_[k]) t.e[idx] += c[k] * v;
    }
    return t;
}

Subspace CurvatureSpace::ambient_subspace() const {
    Matrix m(rows_.size(), ambient_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [idx, v] : rows_[r]) m(r, idx) = v;
    return Subspace::span(std::move(m));
}

Subspace CurvatureSpace::to_ambient(const Subspace& coord_space) const {
    if (coord_space.ambient_dim() != rows_.size())
        throw DimensionMismatch("to_ambient: coordinate ambient mismatch");
    Matrix m(coord_space.dim(), ambient_);
    for (std::size_t r = 0; r < coord_space.dim(); ++r)
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Rational& c = coord_space.basis()(r, k);
            if (is_zero(c)) continue;
            for (const auto& [idx, v] : rows_[k]) m(r, idx) += c * v;
        }
    return Subspace::span(std::move(m));
}

Subspace curvature_space(const Structure& s) {
    return CurvatureSpace::get(s).ambient_subspace();
}

// ---------------------------------------------------------------------------
// map_kernel: modular prescreen + exact kernel + exact verification.

namespace {

constexpr std::int64_t kPrimes[] = {2147483629, 2147483587, 2147482819, 1000000007};

struct BadPrime {};

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::int64_t mod_of(const Rational& r, std::int64_t p) {
    const std::int64_t num = mpz_fdiv_ui(r.get_num().get_mpz_t(), p);
    const std::int64_t den = mpz_fdiv_ui(r.get_den().get_mpz_t(), p);
    if (den == 0) throw BadPrime{};
    return num * mod_pow(den, p - 2, p) % p;
}

}  // namespace

Subspace map_kernel(const CurvatureSpace& space,
                    const std::function<std::vector<Rational>(const Tensor4&)>& map) {
    const std::size_t K = space.dim();
    if (K == 0) return Subspace::zero(0);

    std::vector<std::size_t> selected;
    std::size_t L = 0;
    for (std::int64_t p : kPrimes) {
        try {
            selected.clear();
            // Echelon rows mod p, grown incrementally; record the source row
            // index of every independent constraint.
            std::vector<std::vector<std::int64_t>> echelon;
            std::vector<std::size_t> echelon_pivot;
            std::vector<std::vector<std::int64_t>> cols(K);
            for (std::size_t k = 0; k < K; ++k) {
                auto img = map(space.basis_tensor(k));
                if (k == 0) L = img.size();
                cols[k].resize(L);
                for (std::size_t t = 0; t < L; ++t) cols[k][t] = mod_of(img[t], p);
            }
            for (std::size_t t = 0; t < L; ++t) {
                std::vector<std::int64_t> row(K);
                bool nz = false;
                for (std::size_t k = 0; k < K; ++k) {
                    row[k] = cols[k][t];
                    nz = nz || row[k] != 0;
                }
                if (!nz) continue;
                for (std::size_t e = 0; e < echelon.size(); ++e) {
                    const std::int64_t f = row[echelon_pivot[e]];
                    if (f == 0) continue;
                    for (std::size_t k = 0; k < K; ++k)
                        row[k] = ((row[k] - f * echelon[e][k]) % p + p) % p;
                }
                std::size_t piv = K;
                for (std::size_t k = 0; k < K; ++k)
                    if (row[k] != 0) {
                        piv = k;
                        break;
                    }
                if (piv == K) continue;
                const std::int64_t inv = mod_pow(row[piv], p - 2, p);
                for (std::size_t k = 0; k < K; ++k) row[k] = row[k] * inv % p;
                echelon.push_back(std::move(row));
                echelon_pivot.push_back(piv);
                selected.push_back(t);
                if (echelon.size() == K) break;
            }
        } catch (const BadPrime&) {
            continue;
        }
        break;
    }

    // Exact kernel of the selected rows, then verify against the full map;
    // any surviving violation adds its rows to the selection.
    for (;;) {
        std::vector<std::vector<Rational>> images(K);
        for (std::size_t k = 0; k < K; ++k) images[k] = map(space.basis_tensor(k));
        Matrix c(selected.size(), K);
        for (std::size_t i = 0; i < selected.size(); ++i)
            for (std::size_t k = 0; k < K; ++k) c(i, k) = images[k][selected[i]];
        Matrix ker = selected.empty() ? Matrix::identity(K) : c.kernel();

        std::vector<std::size_t> extra;
        for (std::size_t r = 0; r < ker.rows() && extra.empty(); ++r) {
            std::vector<Rational> coords(K);
            for (std::size_t k = 0; k < K; ++k) coords[k] = ker(r, k);
            auto v = map(space.from_coords(coords));
            for (std::size_t t = 0; t < v.size(); ++t)
                if (!is_zero(v[t])) extra.push_back(t);
        }
        if (extra.empty()) return Subspace::span(std::move(ker));
        selected.insert(selected.end(), extra.begin(), extra.end());
    }
}

// ---------------------------------------------------------------------------
// Tensor file IO

Tensor4 read_tensor4(std::istream& in, std::size_t dim) {
    Tensor4 t(dim);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto pos = line.find_first_not_of(" \t");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ss(line);
        long a, b, c, d;
        std::string val;
        if (!(ss >> a >> b >> c >> d >> val))
            throw ParseError("line " + std::to_string(lineno) + ": expected 'a b c d p/q'");
        if (a < 1 || b < 1 || c < 1 || d < 1 || static_cast<std::size_t>(a) > dim ||
            static_cast<std::size_t>(b) > dim || static_cast<std::size_t>(c) > dim ||
            static_cast<std::size_t>(d) > dim)
            throw ParseError("line " + std::to_string(lineno) + ": index out of range");
        try {
            t.at(a - 1, b - 1, c - 1, d - 1) = parse_rational(val);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return t;
}

void write_tensor4(std::ostream& out, const Tensor4& t) {
    const std::size_t d = t.dim;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t w = 0; w < d; ++w) {
                    const Rational& v = t.at(a, b, c, w);
                    if (is_zero(v)) continue;
                    out << (a + 1) << ' ' << (b + 1) << ' ' << (c + 1) << ' ' << (w + 1)
                        << ' ' << rat_to_string(v) << '\n';
                }
}

Tensor4 read_tensor4_file(const std::string& path, std::size_t dim) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_tensor4(in, dim);
}

void write_tensor4_file(const std::string& path, const Tensor4& t) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    write_tensor4(out, t);
}

}  // namespace phc
