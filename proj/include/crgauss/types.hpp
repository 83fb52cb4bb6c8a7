#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace crgauss {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix3c = Eigen::Matrix3cd;
using Vector2c = Eigen::Vector2cd;
using Vector3c = Eigen::Vector3cd;

// Default tolerances. Every CLI command surfaces the ones it uses.
namespace tol {
inline constexpr double z_tol = 1e-9;   // relative zero threshold for a/b in classification
inline constexpr double v_tol = 1e-10;  // tensor invariant checks
inline constexpr double e_tol = 1e-9;   // discarded imaginary parts
inline constexpr double c_tol = 1e-10;  // |c| after normalization, at unit scale
inline constexpr double r_tol = 1e-8;   // relative numerical rank-1 threshold
inline constexpr double g_tol = 0.2;    // coarse grid oracle acceptance
inline constexpr double p_tol = 1e-8;   // Webster map pole detection
}  // namespace tol

/// Reduced curvature triple (a real, b and c complex) parameterizing the
/// sectional 3x3 matrix [[a,b,c],[conj(b),-4a,-b],[conj(c),-conj(b),a]].
struct NormalForm {
  double a = 0.0;
  Complex b{0.0, 0.0};
  Complex c{0.0, 0.0};

  bool finite() const {
    return std::isfinite(a) && std::isfinite(b.real()) && std::isfinite(b.imag()) &&
           std::isfinite(c.real()) && std::isfinite(c.imag());
  }
  double scale() const { return std::max({std::abs(a), std::abs(b), std::abs(c)}); }
};

/// Element of SU(2) stored as the top row (p, q) of [[p,q],[-conj(q),conj(p)]].
struct SU2Element {
  Complex p{1.0, 0.0};
  Complex q{0.0, 0.0};

  double unit_defect() const { return std::abs(std::norm(p) + std::norm(q) - 1.0); }
};

inline SU2Element su2_identity() { return SU2Element{}; }

/// 2x2 Hermitian matrix [[tau, sigma],[conj(sigma), rho]].
/// (The paper names the off-diagonal eta when the matrix is introduced and
/// sigma in the lifted 3x3 display; both denote the same entry.)
struct HermitianA {
  double tau = 0.0;
  double rho = 0.0;
  Complex sigma{0.0, 0.0};

  Matrix2c matrix() const {
    Matrix2c m;
    m << Complex(tau, 0.0), sigma, std::conj(sigma), Complex(rho, 0.0);
    return m;
  }
  bool finite() const {
    return std::isfinite(tau) && std::isfinite(rho) && std::isfinite(sigma.real()) &&
           std::isfinite(sigma.imag());
  }
};

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConsistencyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace crgauss
