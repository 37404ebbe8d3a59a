#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "phc/gray.hpp"
#include "phc/poly.hpp"

namespace phc {

struct SlotSymmetryViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct JConditionViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularAtPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAlmostStructure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Metric with polynomial components in the coordinates u_1..u_dim. The
// component array is kept symmetric; the background is the constant part.
struct PolyMetric {
    std::size_t dim = 0;
    std::vector<Poly> components;  // dim*dim, row-major
    Matrix background;

    PolyMetric() : background(0, 0) {}
    explicit PolyMetric(std::size_t d)
        : dim(d), components(d * d, Poly(d)), background(Matrix::identity(d)) {}

    Poly& at(std::size_t a, std::size_t b) { return components[a * dim + b]; }
    const Poly& at(std::size_t a, std::size_t b) const { return components[a * dim + b]; }
};

// Constant-coefficient flat metric with the given background form.
PolyMetric flat_metric(const Matrix& background);

// g_ij = Xi_ij + Theta_ijkl u^k u^l for Theta in S^2_- (x) S^2. The quadratic
// coefficient is normalized so the curvature at the origin is exactly the
// image of Theta under the realization operator p_operator.
PolyMetric realization_metric(const Tensor4& theta, const Structure& s);

// Exact 2-jet of a polynomial metric at a rational point.
struct JetPoint {
    std::vector<Rational> point;
    Matrix g;
    Matrix g_inv;
    std::vector<Matrix> dg;                // dg[c](a,b) = d_c g_ab
    std::vector<std::vector<Matrix>> d2g;  // d2g[c][e](a,b) = d_c d_e g_ab
};

JetPoint jet_at(const PolyMetric& m, const std::vector<Rational>& point);

// Levi-Civita curvature tensor R_abcd at the point, all lower indices, the
// direction pair first.
Tensor4 riemann_at(const PolyMetric& m, const std::vector<Rational>& point);

struct Tensor3 {
    std::size_t dim = 0;
    std::vector<Rational> e;

    explicit Tensor3(std::size_t d = 0) : dim(d), e(d * d * d, Rational(0)) {}
    Rational& at(std::size_t a, std::size_t b, std::size_t c) {
        return e[(a * dim + b) * dim + c];
    }
    const Rational& at(std::size_t a, std::size_t b, std::size_t c) const {
        return e[(a * dim + b) * dim + c];
    }
    bool is_zero_tensor() const {
        for (const auto& v : e)
            if (!is_zero(v)) return false;
        return true;
    }
};

// Exterior derivative of the Kaehler form Omega_ab = g(xi_a, J xi_b) at the
// point, as the unnormalized cyclic sum of coordinate derivatives.
Tensor3 d_kaehler_at(const PolyMetric& m, const Structure& s, const std::vector<Rational>& point);

// Nijenhuis tensor of a matrix-valued polynomial J-field on coordinate
// fields; component (a,b,d) is the d-th component of N(xi_a, xi_b).
Tensor3 nijenhuis_at(const std::vector<Poly>& j_field, std::size_t dim, StructureKind kind,
                     const std::vector<Rational>& point);

struct ExampleCatalogEntry;

struct CatalogContext {
    const ExampleCatalogEntry& entry;
    const Structure& s;
    const Tensor4& curvature;  // riemann_at(metric, origin)
};

struct ExampleCatalogEntry {
    std::string label;
    std::size_t dim = 0;
    PolyMetric metric;
    std::map<std::string, Rational> parameters;
    std::vector<std::pair<std::string, std::function<bool(const CatalogContext&)>>> expected;
};

const std::vector<ExampleCatalogEntry>& catalog();
const ExampleCatalogEntry& catalog_entry(const std::string& label);  // LabelAbsent

// Runs every expected check of the entry against the curvature of its metric
// at the origin.
std::vector<std::pair<std::string, bool>> evaluate_catalog_entry(const ExampleCatalogEntry& e);

// Random sampling helpers used by the verification suites.
Tensor4 random_realization_theta(const Structure& s, std::mt19937_64& rng);
PolyMetric random_para_metric(const Structure& s, unsigned degree, std::mt19937_64& rng);
std::vector<Rational> random_point(std::size_t dim, std::mt19937_64& rng);

}  // namespace phc
