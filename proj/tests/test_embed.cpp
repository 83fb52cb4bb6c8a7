#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "crgauss/embed.hpp"

using namespace crgauss;

namespace {

std::mt19937_64 rng(5150);

double urand(double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}
Complex crand() { return {urand(), urand()}; }

// b(z) = z1^2 on C^3
QuadraticForm z1_squared() {
  Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(3, 3);
  B(0, 0) = 1.0;
  return QuadraticForm(3, B);
}

QuadraticForm random_small_form(double max_norm = 0.3) {
  Eigen::MatrixXcd B(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) B(i, k) = crand();
  B = 0.5 * (B + B.transpose()).eval();
  B *= urand(0.05, max_norm) / B.norm();
  return QuadraticForm(3, B);
}

Eigen::VectorXcd random_dir(int n) {
  Eigen::VectorXcd d(n);
  std::normal_distribution<double> gauss;
  for (int i = 0; i < n; ++i) d(i) = Complex(gauss(rng), gauss(rng));
  return d;
}

}  // namespace

TEST_CASE("QuadraticForm validation") {
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(2, 2);
  bad(0, 1) = 1.0;  // not symmetric
  CHECK_THROWS_AS(QuadraticForm(2, bad), InvalidInput);
  CHECK_THROWS_AS(QuadraticForm(3, Eigen::MatrixXcd::Zero(2, 2)), InvalidInput);
}

TEST_CASE("defining_residual") {
  SUBCASE("unit vector on the round sphere") {
    QuadraticForm q;  // B = 0, n = 3
    Eigen::VectorXcd z = Eigen::VectorXcd::Zero(3);
    z(1) = 1.0;
    CHECK(defining_residual(q, z) == doctest::Approx(0.0));
  }
  SUBCASE("b = z1^2 at (1/sqrt(3), 0, 0)") {
    Eigen::VectorXcd z = Eigen::VectorXcd::Zero(3);
    z(0) = 1.0 / std::sqrt(3.0);
    CHECK(defining_residual(z1_squared(), z) == doctest::Approx(0.0));
  }
  SUBCASE("origin gives -1") {
    QuadraticForm q;
    CHECK(defining_residual(q, Eigen::VectorXcd::Zero(3)) == doctest::Approx(-1.0));
  }
}

TEST_CASE("webster_map") {
  SUBCASE("B = 0 reduces to the linear embedding exactly") {
    QuadraticForm q;
    const auto z = random_dir(3);
    const auto f = webster_map(q, z);
    REQUIRE(f.size() == 4);
    CHECK((f.head(3) - z).cwiseAbs().maxCoeff() == 0.0);
    CHECK(std::abs(f(3)) == 0.0);
  }
  SUBCASE("b = z1^2 at (1/sqrt(3),0,0) maps to (sqrt(3)/2, 0, 0, 1/2), unit norm") {
    Eigen::VectorXcd z = Eigen::VectorXcd::Zero(3);
    z(0) = 1.0 / std::sqrt(3.0);
    const auto f = webster_map(z1_squared(), z);
    CHECK(f(0).real() == doctest::Approx(std::sqrt(3.0) / 2.0));
    CHECK(std::abs(f(1)) <= 1e-15);
    CHECK(std::abs(f(2)) <= 1e-15);
    CHECK(f(3).real() == doctest::Approx(0.5));
    CHECK(f.squaredNorm() == doctest::Approx(1.0));
  }
  SUBCASE("pole at b(z) = 1") {
    Eigen::VectorXcd z = Eigen::VectorXcd::Zero(3);
    z(0) = 1.0;
    CHECK_THROWS_AS(webster_map(z1_squared(), z), PoleError);
  }
}

TEST_CASE("sphere_residual") {
  SUBCASE("B = 0, unit z") {
    QuadraticForm q;
    Eigen::VectorXcd z = random_dir(3);
    z /= z.norm();
    CHECK(sphere_residual(q, z) == doctest::Approx(0.0));
  }
  SUBCASE("scaled-residual identity at random points, on and off the hypersurface") {
    for (int i = 0; i < 10000; ++i) {
      const auto q = random_small_form();
      Eigen::VectorXcd z = 0.7 * random_dir(3);
      const Complex bz = q.b(z);
      const double expect = defining_residual(q, z) / std::norm(1.0 - bz);
      CHECK(sphere_residual(q, z) - expect == doctest::Approx(0.0).epsilon(1e-12));
    }
  }
  SUBCASE("b = z1^2 on-surface point") {
    Eigen::VectorXcd z = Eigen::VectorXcd::Zero(3);
    z(0) = 1.0 / std::sqrt(3.0);
    CHECK(sphere_residual(z1_squared(), z) == doctest::Approx(0.0));
  }
}

TEST_CASE("sample_hypersurface") {
  SUBCASE("B = 0: a unit direction is already on the surface") {
    QuadraticForm q;
    Eigen::VectorXcd d = random_dir(3);
    d /= d.norm();
    const auto z = sample_hypersurface(q, d, rng);
    CHECK((z - d).cwiseAbs().maxCoeff() <= 1e-15);
  }
  SUBCASE("b = z1^2, d = e1 scales to 1/sqrt(3)") {
    Eigen::VectorXcd d = Eigen::VectorXcd::Zero(3);
    d(0) = 1.0;
    const auto z = sample_hypersurface(z1_squared(), d, rng);
    CHECK(z(0).real() == doctest::Approx(1.0 / std::sqrt(3.0)));
  }
  SUBCASE("negative radicand triggers a resample") {
    Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(3, 3);
    B(0, 0) = -0.6;
    const QuadraticForm q(3, B);
    Eigen::VectorXcd d = Eigen::VectorXcd::Zero(3);
    d(0) = 1.0;  // radicand 1 - 1.2 < 0
    std::mt19937_64 local(11);
    const auto z = sample_hypersurface(q, d, local);
    CHECK(std::abs(defining_residual(q, z)) <= 1e-12);
    // the ray must have moved off e1
    CHECK((std::abs(z(1)) + std::abs(z(2))) > 0.0);
  }
  SUBCASE("sampled points satisfy the defining equation to 1e-12") {
    for (int trial = 0; trial < 20; ++trial) {
      const auto q = random_small_form();
      for (int i = 0; i < 50; ++i) {
        const auto z = sample_hypersurface(q, random_dir(3), rng);
        CHECK(std::abs(defining_residual(q, z)) <= 1e-12);
        CHECK(std::abs(sphere_residual(q, z)) <= 1e-9);
      }
    }
  }
  SUBCASE("zero direction rejected") {
    QuadraticForm q;
    CHECK_THROWS_AS(sample_hypersurface(q, Eigen::VectorXcd::Zero(3), rng), InvalidInput);
  }
}

TEST_CASE("sampling is reproducible for a fixed seed") {
  Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(3, 3);
  B(0, 0) = -0.6;  // forces resampling, exercising the rng path
  const QuadraticForm q(3, B);
  Eigen::VectorXcd d = Eigen::VectorXcd::Zero(3);
  d(0) = 1.0;
  std::mt19937_64 r1(99), r2(99);
  const auto z1 = sample_hypersurface(q, d, r1);
  const auto z2 = sample_hypersurface(q, d, r2);
  CHECK((z1 - z2).cwiseAbs().maxCoeff() == 0.0);
}
