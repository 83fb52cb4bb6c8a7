#include "crgauss/fischer.hpp"

#include <mutex>

#include <Eigen/Dense>

namespace crgauss {

SectionalMatrix harmonic_matrix(const NormalForm& nf) {
  SectionalMatrix s;
  const Complex a{nf.a, 0.0};
  s.m << a, nf.b, nf.c,
      std::conj(nf.b), -4.0 * a, -nf.b,
      std::conj(nf.c), -std::conj(nf.b), a;
  return s;
}

SectionalMatrix lift_A(const HermitianA& A) {
  if (!A.finite()) throw InvalidInput("lift_A: non-finite matrix");
  SectionalMatrix s;
  const Complex t{A.tau, 0.0}, r{A.rho, 0.0};
  s.m << t, A.sigma, Complex(0.0, 0.0),
      std::conj(A.sigma), t + r, A.sigma,
      Complex(0.0, 0.0), std::conj(A.sigma), r;
  return s;
}

namespace {

// real coordinates of a Hermitian 3x3 matrix
Eigen::Matrix<double, 9, 1> coords(const Matrix3c& m) {
  Eigen::Matrix<double, 9, 1> v;
  v << m(0, 0).real(), m(1, 1).real(), m(2, 2).real(),
      m(0, 1).real(), m(0, 1).imag(),
      m(0, 2).real(), m(0, 2).imag(),
      m(1, 2).real(), m(1, 2).imag();
  return v;
}

Matrix3c reconstruct(const Eigen::Matrix<double, 9, 1>& u) {
  const NormalForm nf{u(0), {u(1), u(2)}, {u(3), u(4)}};
  const HermitianA A{u(5), u(6), {u(7), u(8)}};
  return harmonic_matrix(nf).m + lift_A(A).m;
}

struct System {
  Eigen::PartialPivLU<Eigen::Matrix<double, 9, 9>> lu;
};

const System& system_once() {
  static System sys;
  static std::once_flag flag;
  std::call_once(flag, [] {
    Eigen::Matrix<double, 9, 9> K;
    for (int j = 0; j < 9; ++j) {
      Eigen::Matrix<double, 9, 1> e = Eigen::Matrix<double, 9, 1>::Zero();
      e(j) = 1.0;
      K.col(j) = coords(reconstruct(e));
    }
    const double cond = K.norm() * K.inverse().norm();
    if (!(cond < 100.0))
      throw NumericalFailure("fischer: decomposition system badly conditioned, cond ~ " +
                             std::to_string(cond));
    sys.lu = Eigen::PartialPivLU<Eigen::Matrix<double, 9, 9>>(K);
  });
  return sys;
}

}  // namespace

std::pair<NormalForm, HermitianA> fischer_decompose(const SectionalMatrix& m) {
  const double scale = std::max(1.0, m.m.cwiseAbs().maxCoeff());
  if (m.hermitian_defect() > 1e-12 * scale)
    throw InvalidInput("fischer_decompose: matrix is not Hermitian, defect " +
                       std::to_string(m.hermitian_defect()));

  const Eigen::Matrix<double, 9, 1> u = system_once().lu.solve(coords(m.m));
  const NormalForm nf{u(0), {u(1), u(2)}, {u(3), u(4)}};
  const HermitianA A{u(5), u(6), {u(7), u(8)}};

  const double resid = (reconstruct(u) - m.m).cwiseAbs().maxCoeff();
  if (resid > 1e-12 * scale)
    throw NumericalFailure("fischer_decompose: reconstruction residual " + std::to_string(resid));
  return {nf, A};
}

bool is_harmonic(const SectionalMatrix& m) { return laplacian(m).norm() <= 1e-11; }

}  // namespace crgauss
