#pragma once

#include "phc/curvature.hpp"
#include "phc/structure.hpp"

namespace phc {

struct NonStandardBasis : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ImaginaryResidue : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Carries the standard positive definite Hermitian model (V, <.,.>, J) to the
// standard para-Hermitian model on the basis e~_i = sqrt(-1) e_i, f~_i = -f_i
// with J~ = sqrt(-1) J. The change of basis is diagonal over the Gaussian
// rationals, so tensor transfer is entrywise scaling.
struct TransferMap {
    Structure source;  // Hermitian, positive definite
    Structure target;  // para-Hermitian, signature (n, n)
    GaussMatrix change_of_basis;  // target basis vectors in source coordinates

    // Scale factor of the a-th basis vector.
    const GaussRational& factor(std::size_t a) const { return change_of_basis(a, a); }
};

TransferMap transfer_structure(const Structure& s);

// Complex-bilinear extension evaluated on the target basis. Entries with one
// e-index (2-tensors) or an odd number of e-indices (4-tensors) pick up a
// factor of sqrt(-1); callers split the result into real and imaginary parts,
// both of which are honest real tensors over the target model.
GaussTensor2 transfer_two_tensor(const Tensor2& theta, const TransferMap& map);
GaussTensor4 transfer_curvature(const Tensor4& a, const TransferMap& map);

Tensor2 real_part(const GaussTensor2& t);
Tensor2 imag_part(const GaussTensor2& t);
Tensor4 real_part(const GaussTensor4& t);
Tensor4 imag_part(const GaussTensor4& t);

// The value as a real tensor; throws ImaginaryResidue if any imaginary part
// survives (which signals a convention bug for inputs promised to land real).
Tensor2 expect_real(const GaussTensor2& t);
Tensor4 expect_real(const GaussTensor4& t);

// Checks that curvature transfer is a bijection onto the complexified target
// curvature space: every transferred basis tensor of A(source) splits into
// real/imaginary parts inside A(target), and those parts together span
// A(target).
bool transfer_curvature_bijective(const TransferMap& map);

}  // namespace phc
