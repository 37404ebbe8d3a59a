#pragma once

#include <string>
#include <vector>

#include "phc/matrix.hpp"
#include "phc/tensor.hpp"

namespace phc {

enum class StructureKind { Hermitian, ParaHermitian };

// J as a signed permutation of basis vectors: J e_a = sign[a] * e_{image[a]}.
// Every structure this library constructs has such a J; tensor pullbacks rely
// on it to stay cheap.
struct SignedPerm {
    std::vector<std::size_t> image;
    std::vector<int> sign;
};

// (V, <.,.>, J): even-dimensional space with a nondegenerate symmetric form
// and a compatible (para-)complex operator.
//   Hermitian:      J^2 = -Id,  J^t form J =  form
//   ParaHermitian:  J^2 = +Id,  J^t form J = -form, signature (n,n)
struct Structure {
    std::size_t dim = 0;
    StructureKind kind = StructureKind::ParaHermitian;
    Matrix form;
    Matrix J;

    std::size_t n() const { return dim / 2; }
    bool is_para() const { return kind == StructureKind::ParaHermitian; }

    // Throws if J is not a monomial +-1 matrix.
    SignedPerm j_perm() const;

    // Diagonal form entries; throws if the form is not diagonal.
    std::vector<int> form_signs() const;
};

// Basis {e_1..e_n, f_1..f_n}, form diag(-1..-1, +1..+1), J e_i = f_i and
// J f_i = e_i.
Structure standard_para_hermitian(std::size_t n);

// Basis {e_1..e_n, f_1..f_n} with J e_i = f_i, J f_i = -e_i; the first p of
// the e/f pairs are timelike (2p minus signs), the rest spacelike.
Structure standard_hermitian(std::size_t p, std::size_t q);

// Empty iff every Structure invariant holds exactly.
std::vector<std::string> validate(const Structure& s);

// Omega(x,y) = <x, Jy>.
Tensor2 kaehler_form(const Structure& s);

}  // namespace phc
