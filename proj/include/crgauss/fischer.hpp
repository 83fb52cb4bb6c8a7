#pragma once

#include <utility>

#include "crgauss/tensor.hpp"
#include "crgauss/types.hpp"

namespace crgauss {

/// Harmonic pattern [[a,b,c],[conj(b),-4a,-b],[conj(c),-conj(b),a]].
SectionalMatrix harmonic_matrix(const NormalForm& nf);

/// 3x3 lift of the Hermitian 2x2 matrix A: Z lift_A(A) Z^* = zeta A zeta^* |zeta|^2,
///   [[tau, sigma, 0],[conj(sigma), tau+rho, sigma],[0, conj(sigma), rho]].
SectionalMatrix lift_A(const HermitianA& A);

/// Unique split m = harmonic_matrix(nf) + lift_A(A) of a Hermitian 3x3 matrix
/// (5 harmonic + 4 lift parameters spanning the 9 real dimensions). Solved
/// through the constant 9x9 real system, factored once; the reconstruction
/// residual is checked to 1e-12 relative. Non-Hermitian input is rejected.
std::pair<NormalForm, HermitianA> fischer_decompose(const SectionalMatrix& m);

/// True iff the Frobenius norm of laplacian(m) is <= 1e-11.
bool is_harmonic(const SectionalMatrix& m);

}  // namespace crgauss
