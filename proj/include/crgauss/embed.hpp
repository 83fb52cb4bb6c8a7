#pragma once

#include <random>

#include "crgauss/types.hpp"

namespace crgauss {

/// Complex symmetric n x n matrix B defining b(z) = sum B_{ab} z^a z^b.
/// The hypersurface is { |z|^2 + b(z) + conj(b(z)) - 1 = 0 }.
struct QuadraticForm {
  int n = 3;
  Eigen::MatrixXcd B;

  QuadraticForm() : B(Eigen::MatrixXcd::Zero(3, 3)) {}
  QuadraticForm(int dim, Eigen::MatrixXcd mat);

  Complex b(const Eigen::VectorXcd& z) const { return (z.transpose() * B * z)(0); }
};

struct PoleError : NumericalFailure {
  Complex b_value;
  explicit PoleError(Complex bv)
      : NumericalFailure("webster_map: pole, |1 - b(z)| too small, b(z) = (" +
                         std::to_string(bv.real()) + ", " + std::to_string(bv.imag()) + ")"),
        b_value(bv) {}
};

/// |z|^2 + 2 Re b(z) - 1; zero exactly on the hypersurface.
double defining_residual(const QuadraticForm& Q, const Eigen::VectorXcd& z);

/// z -> (z, b(z)) / (1 - b(z)). Throws PoleError when |1 - b(z)| < p_tol.
Eigen::VectorXcd webster_map(const QuadraticForm& Q, const Eigen::VectorXcd& z,
                             double p_tol = tol::p_tol);

/// |webster_map(z)|^2 - 1; equals defining_residual / |1 - b|^2.
double sphere_residual(const QuadraticForm& Q, const Eigen::VectorXcd& z,
                       double p_tol = tol::p_tol);

/// Scales the direction d onto the hypersurface: t d with
/// t = 1/sqrt(|d|^2 + 2 Re b(d)) (exact since b is homogeneous of degree 2).
/// When the radicand drops below s_floor the direction is resampled from rng
/// (complex standard normal); after max_resamples failures a NumericalFailure
/// is thrown.
Eigen::VectorXcd sample_hypersurface(const QuadraticForm& Q, Eigen::VectorXcd d,
                                     std::mt19937_64& rng, double s_floor = 1e-6,
                                     int max_resamples = 1000);

}  // namespace crgauss
