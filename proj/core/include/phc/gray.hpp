#pragma once

#include <cstdint>

#include "phc/curvature.hpp"
#include "phc/structure.hpp"

namespace phc {

struct NotParaHermitian : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// J applied to the slots picked out by slot_mask (bit i = slot i):
// out(x0..x3) = A(..., J x_i, ...). Requires a signed-permutation J.
Tensor4 j_pullback4(const Tensor4& t, const SignedPerm& j, std::uint8_t slot_mask);
Tensor2 j_pullback2(const Tensor2& t, const SignedPerm& j);

// Bases of the symmetric / antisymmetric 2-tensors and of their J*
// eigenspaces S^2_eps(V*, J) and Lambda^2_eps(V*, J), eps = +1 or -1.
std::vector<Tensor2> sym2_basis(std::size_t dim);
std::vector<Tensor2> alt2_basis(std::size_t dim);
std::vector<Tensor2> sym2_eigen_basis(const Structure& s, int eps);
std::vector<Tensor2> alt2_eigen_basis(const Structure& s, int eps);

// The Gray symmetrization. Para case: the 8-term sum with all plus signs;
// Hermitian case: identity and all-four-J terms plus, the six two-J terms
// minus. Linear in t; vanishing on a curvature tensor is the (para-)Gray
// identity.
Tensor4 gray_symmetrize(const Tensor4& t, const Structure& s);

// gray_symmetrize(a, s) == 0, with a required to be a curvature tensor.
bool satisfies_gray(const Tensor4& a, const Structure& s);

// P(Theta)(x,y,z,w) = Theta(x,z,y,w) + Theta(y,w,x,z)
//                   - Theta(x,w,y,z) - Theta(y,z,x,w).
Tensor4 p_operator(const Tensor4& theta);

// Image of P restricted to S^2_eps(V*, J) ⊗ S^2(V*), in coordinates relative
// to CurvatureSpace::get(s). eps = -1 gives the realizable subspace of the
// para case; eps = +1 is the Hermitian mirror slot.
Subspace p_image_subspace_coords(const Structure& s, int eps);

// The para realizable subspace, ambient echelon basis. Throws
// NotParaHermitian for Hermitian structures.
Subspace p_image_subspace(const Structure& s);

// Kernel of the Gray symmetrizer inside the curvature space.
Subspace gray_kernel_subspace_coords(const Structure& s);
Subspace gray_kernel_subspace(const Structure& s);

// {A in A(V) : A(Jx,y,z,w) = A(x,y,Jz,w)}.
Subspace w7_subspace_coords(const Structure& s);
Subspace w7_subspace(const Structure& s);

}  // namespace phc
