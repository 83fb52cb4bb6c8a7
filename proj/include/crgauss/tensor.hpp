#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "crgauss/types.hpp"

namespace crgauss {

/// Full rank-4 curvature coefficient array S_{alpha betabar nu mubar} for
/// n=2. All 16 quadruple-indexed entries are stored explicitly; validate()
/// checks the symmetry and trace laws against the stored values.
class CurvatureTensor {
 public:
  CurvatureTensor() { entries_.fill(Complex{0.0, 0.0}); }

  /// Indices are 1-based, each in {1,2}, in slot order (alpha, betabar, nu, mubar).
  Complex& at(int alpha, int beta, int nu, int mu) { return entries_[offset(alpha, beta, nu, mu)]; }
  const Complex& at(int alpha, int beta, int nu, int mu) const {
    return entries_[offset(alpha, beta, nu, mu)];
  }

  const std::array<Complex, 16>& entries() const { return entries_; }
  std::array<Complex, 16>& entries() { return entries_; }

  double max_abs() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, std::abs(e));
    return m;
  }

  static int offset(int alpha, int beta, int nu, int mu) {
    if (alpha < 1 || alpha > 2 || beta < 1 || beta > 2 || nu < 1 || nu > 2 || mu < 1 || mu > 2)
      throw InvalidInput("tensor index out of range (expected 1 or 2)");
    return ((alpha - 1) << 3) | ((beta - 1) << 2) | ((nu - 1) << 1) | (mu - 1);
  }

 private:
  std::array<Complex, 16> entries_;
};

/// 3x3 Hermitian coefficient matrix of the sectional polynomial in the
/// monomial basis Z = (zeta1^2, zeta1 zeta2, zeta2^2).
struct SectionalMatrix {
  Matrix3c m = Matrix3c::Zero();

  double hermitian_defect() const { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }
};

enum class TraceSign : std::uint8_t { negative, zero, positive };

const char* to_string(TraceSign s);

struct Classification {
  int rank = 0;                              // in {0, 2, 3}; rank 1 never occurs
  TraceSign trace_sign = TraceSign::zero;    // sign of tr L_S = -a
  int solution_count = 0;                    // Gauss-equation solution count
};

struct Violation {
  std::string kind;    // "symmetry", "hermitian", "trace", "finite"
  std::string detail;
  double magnitude = 0.0;
};

/// Builds the unique valid tensor whose sectional matrix is the harmonic
/// pattern [[a,b,c],[conj(b),-4a,-b],[conj(c),-conj(b),a]].
CurvatureTensor tensor_from_normal_form(const NormalForm& nf);

/// Empty iff both the symmetry/Hermitian law and the trace law hold within v_tol
/// (relative to the largest entry).
std::vector<Violation> validate(const CurvatureTensor& t, double v_tol = tol::v_tol);

/// Coefficient matrix of the sectional polynomial. Throws InvalidInput with the
/// violation list attached to the message when the tensor is not valid.
SectionalMatrix sectional_matrix(const CurvatureTensor& t, double v_tol = tol::v_tol);

/// Z(zeta) m Z(zeta)^*, checked real within e_tol (relative to the evaluation
/// scale) and returned with the imaginary part discarded.
double sectional_eval(const SectionalMatrix& m, const Vector2c& zeta, double e_tol = tol::e_tol);

/// Coefficient matrix Q of the bidegree-(1,1) polynomial zeta Q zeta^* equal to
/// (1/4)(d/dzeta1 d/dzeta1bar + d/dzeta2 d/dzeta2bar) applied to Z m Z^*.
/// The operator is a fixed linear map on the 9 real parameters of m:
///   Q11 = m11 + m22/4,  Q22 = m22/4 + m33,  Q12 = (m12 + m23)/2.
Matrix2c laplacian(const SectionalMatrix& m);

/// The value of the coefficient a attained by any c=0 normalization of
/// (a, b, c). It is the unique real root t of
///   t^3 - I2 t - I3/2 = 0,  3 t^2 <= I2,
/// where I2 = 3a^2 + |b|^2 + |c|^2 and I3 = det(sectional matrix) are
/// invariants of the SU(2) coframe action. An independent route to the same
/// number runs through normalize(); tests compare the two.
double invariant_a(const NormalForm& nf);

/// Matrix of L_S in the basis e1=[[1,0],[0,0]], e2=[[0,1],[1,0]],
/// e3=[[0,0],[0,1]] of symmetric 2x2 arrays:
///   [[a, b, c], [b/2, -2a, -conj(b)/2], [conj(c), -conj(b), a - invariant_a]].
/// For c=0 this is exactly the normalized matrix below; the corner term makes
/// tr L_S = -invariant_a in every coframe. See the convention note in the
/// implementation.
Matrix3c build_LS_general(const CurvatureTensor& t, double v_tol = tol::v_tol);

/// The normalized-frame matrix [[a,b,0],[b/2,-2a,-conj(b)/2],[0,-conj(b),0]];
/// treats the input as a normal form with c = 0.
Matrix3c build_LS_normalized(double a, Complex b);

/// Rank / trace-sign / solution-count classification from a normalized (c=0)
/// pair. Zero tests are relative: |x| <= z_tol * max(|a|,|b|).
Classification classify(double a, Complex b, double z_tol = tol::z_tol);

}  // namespace crgauss
