#pragma once

#include <string>
#include <utility>
#include <vector>

#include "phc/gray.hpp"

namespace phc {

struct UnsupportedDimension : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LabelAbsent : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateRestriction : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RicciData {
    Tensor2 rho;
    Tensor2 rho_star;
    Rational tau;
    Rational tau_star;
};

// rho(x,y) = e^{ij} A(e_i, x, y, e_j); the star contraction carries a leading
// minus in the para case.
RicciData ricci(const Tensor4& a, const Structure& s);

// The six-way orthogonal decomposition of a 2-tensor under the (para-)unitary
// group. Component naming is relative to the structure kind:
//   sym0_part: trace-free symmetric piece in the eigenspace of the form
//              (S^2_{0,-} para / S^2_{0,+} Hermitian)
//   sym_part:  the opposite symmetric eigenspace (S^2_+ para / S^2_- Hermitian)
//   alt0_part: Omega-orthogonal piece of the eigenspace of the Kaehler form
//   alt_part:  the opposite antisymmetric eigenspace
struct TwoTensorDecomposition {
    Tensor2 scalar_part;
    Tensor2 sym0_part;
    Tensor2 sym_part;
    Tensor2 omega_part;
    Tensor2 alt0_part;
    Tensor2 alt_part;

    Tensor2 reassemble() const {
        return scalar_part + sym0_part + sym_part + omega_part + alt0_part + alt_part;
    }
};

TwoTensorDecomposition decompose_two_tensor(const Tensor2& t, const Structure& s);

// The curvature module decomposition. Subspaces live in coordinates relative
// to CurvatureSpace::get(s). The isotypic pairs W1+W4 and W2+W5 are kept as
// single blocks; no canonical splitting is produced.
struct ModuleTable {
    Structure s;
    std::vector<std::pair<std::string, Subspace>> modules;
    std::size_t module_count = 0;  // blocks count as two

    const Subspace& find(const std::string& label) const;
    bool has(const std::string& label) const;
};

// 2n must be 4, 6 or 8. The construction is validated internally: the listed
// modules are pairwise orthogonal under the tensor form, their dimensions sum
// to dim A(V), the form restricted to each module is nondegenerate, and the
// characterizing maps have full rank on their blocks; a violation throws
// DegenerateRestriction.
ModuleTable module_table(const Structure& s);

// Orthogonal projection of a curvature tensor onto a listed module.
Tensor4 component_in(const Tensor4& a, const std::string& label, const ModuleTable& table);

}  // namespace phc
