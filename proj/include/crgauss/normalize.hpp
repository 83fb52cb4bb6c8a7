#pragma once

#include <vector>

#include "crgauss/types.hpp"

namespace crgauss {

// Coframe-change conventions, fixed by random-point verification against the
// transformation law (see tests):
//   * the transformed coefficients represent the same sectional polynomial
//     after the substitution zeta -> U zeta (column action), i.e.
//     S~(zeta) = S(U zeta) with U = [[p,q],[-conj(q),conj(p)]];
//   * applying u1 then u2 equals applying compose(u1,u2), whose matrix is
//     the product U1 * U2;
//   * inverse(p,q) = (conj(p), -q).

SU2Element compose(const SU2Element& u1, const SU2Element& u2);
SU2Element inverse(const SU2Element& u);

/// Direct evaluation of the transformation law for (a, b, c) under u.
/// The new a is real by Hermitian invariance; an imaginary residue above
/// 1e-12 (relative to the input scale) indicates corrupted input and throws.
NormalForm su2_apply(const NormalForm& nf, const SU2Element& u);

/// All unit pairs (p, q) with transformed c = 0, obtained from the roots w of
///   c + 2 b w + 6 a w^2 - 2 conj(b) w^3 + conj(c) w^4 = 0,   w = conj(q)/p,
/// via companion-matrix eigenvalues, plus the root at infinity (p,q) = (0,1)
/// when the leading coefficient vanishes (degree drop), included iff c = 0.
/// Candidates are ordered by (Re w, Im w), the infinity candidate last.
/// For the zero form the identity is returned alone.
std::vector<SU2Element> c_root_candidates(const NormalForm& nf);

struct NormalizeResult {
  NormalForm nf;   // |c| <= c_tol * scale of the input
  SU2Element u;    // nf == su2_apply(input, u)
  double c_residual = 0.0;  // |c| / scale actually achieved
};

/// Applies the candidate minimizing |c~| (ties broken by the candidate order
/// above). Throws NumericalFailure with the best residual if no candidate
/// reaches c_tol at unit scale.
NormalizeResult normalize(const NormalForm& nf, double c_tol = tol::c_tol);

}  // namespace crgauss
