#include "crgauss/embed.hpp"

#include <cmath>

namespace crgauss {

QuadraticForm::QuadraticForm(int dim, Eigen::MatrixXcd mat) : n(dim), B(std::move(mat)) {
  if (n <= 0 || B.rows() != n || B.cols() != n)
    throw InvalidInput("QuadraticForm: B must be n x n with n >= 1");
  if ((B - B.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, B.cwiseAbs().maxCoeff()))
    throw InvalidInput("QuadraticForm: B must be symmetric");
}

double defining_residual(const QuadraticForm& Q, const Eigen::VectorXcd& z) {
  if (z.size() != Q.n) throw InvalidInput("defining_residual: dimension mismatch");
  return z.squaredNorm() + 2.0 * Q.b(z).real() - 1.0;
}

Eigen::VectorXcd webster_map(const QuadraticForm& Q, const Eigen::VectorXcd& z, double p_tol) {
  if (z.size() != Q.n) throw InvalidInput("webster_map: dimension mismatch");
  const Complex bz = Q.b(z);
  const Complex denom = 1.0 - bz;
  if (std::abs(denom) < p_tol) throw PoleError(bz);
  Eigen::VectorXcd f(Q.n + 1);
  f.head(Q.n) = z;
  f(Q.n) = bz;
  return f / denom;
}

double sphere_residual(const QuadraticForm& Q, const Eigen::VectorXcd& z, double p_tol) {
  return webster_map(Q, z, p_tol).squaredNorm() - 1.0;
}

Eigen::VectorXcd sample_hypersurface(const QuadraticForm& Q, Eigen::VectorXcd d,
                                     std::mt19937_64& rng, double s_floor, int max_resamples) {
  if (d.size() != Q.n) throw InvalidInput("sample_hypersurface: dimension mismatch");
  if (d.cwiseAbs().maxCoeff() == 0.0) throw InvalidInput("sample_hypersurface: zero direction");

  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int attempt = 0; attempt <= max_resamples; ++attempt) {
    const double radicand = d.squaredNorm() + 2.0 * Q.b(d).real();
    if (radicand >= s_floor) return d / std::sqrt(radicand);
    for (int i = 0; i < Q.n; ++i) d(i) = Complex(gauss(rng), gauss(rng));
  }
  throw NumericalFailure("sample_hypersurface: exceeded max_resamples, hypersurface far from "
                         "a small perturbation of the sphere");
}

}  // namespace crgauss
