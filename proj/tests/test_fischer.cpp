#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "crgauss/fischer.hpp"

using namespace crgauss;

namespace {

std::mt19937_64 rng(9090);

double urand() { return std::uniform_real_distribution<double>(-1.0, 1.0)(rng); }
Complex crand() { return {urand(), urand()}; }

SectionalMatrix random_hermitian() {
  Matrix3c raw;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) raw(r, c) = crand();
  SectionalMatrix m;
  m.m = 0.5 * (raw + raw.adjoint());
  return m;
}

// Closed-form split derived by matching entries; an independent check on the
// 9x9 solve. From m = harmonic(a,b,c) + lift(tau,rho,sigma):
//   a = (m11 - m22 + m33)/6, tau = m11 - a, rho = m33 - a, c = m13,
//   b = (m12 - m23)/2, sigma = (m12 + m23)/2.
std::pair<NormalForm, HermitianA> split_closed_form(const SectionalMatrix& m) {
  const double a = (m.m(0, 0).real() - m.m(1, 1).real() + m.m(2, 2).real()) / 6.0;
  NormalForm nf{a, 0.5 * (m.m(0, 1) - m.m(1, 2)), m.m(0, 2)};
  HermitianA A{m.m(0, 0).real() - a, m.m(2, 2).real() - a, 0.5 * (m.m(0, 1) + m.m(1, 2))};
  return {nf, A};
}

}  // namespace

TEST_CASE("lift_A examples") {
  SUBCASE("identity lifts to diag(1,2,1)") {
    const auto L = lift_A(HermitianA{1.0, 1.0, {0, 0}});
    Matrix3c want;
    want << 1, 0, 0, 0, 2, 0, 0, 0, 1;
    CHECK((L.m - want).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("zero lifts to zero") {
    CHECK(lift_A(HermitianA{}).m.cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("(1,-1,i)") {
    const auto L = lift_A(HermitianA{1.0, -1.0, {0, 1}});
    Matrix3c want;
    want << Complex(1, 0), Complex(0, 1), Complex(0, 0),
            Complex(0, -1), Complex(0, 0), Complex(0, 1),
            Complex(0, 0), Complex(0, -1), Complex(-1, 0);
    CHECK((L.m - want).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("polynomial identity Z lift(A) Z^* = zeta A zeta^* |zeta|^2") {
    for (int i = 0; i < 100; ++i) {
      const HermitianA A{urand(), urand(), crand()};
      const auto L = lift_A(A);
      const Vector2c z(crand(), crand());
      const double lhs = sectional_eval(L, z);
      const Complex quad =
          (Eigen::RowVector2cd(z(0), z(1)) * A.matrix() * Eigen::Vector2cd(z(0), z(1)).conjugate())(0);
      const double rhs = quad.real() * z.squaredNorm();
      CHECK(lhs - rhs == doctest::Approx(0.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("fischer_decompose examples") {
  SUBCASE("diag(1,2,1): pure lift of the identity") {
    SectionalMatrix m;
    m.m = Matrix3c::Zero();
    m.m(0, 0) = 1;
    m.m(1, 1) = 2;
    m.m(2, 2) = 1;
    const auto [nf, A] = fischer_decompose(m);
    CHECK(std::abs(nf.a) <= 1e-14);
    CHECK(std::abs(nf.b) <= 1e-14);
    CHECK(std::abs(nf.c) <= 1e-14);
    CHECK(A.tau == doctest::Approx(1.0));
    CHECK(A.rho == doctest::Approx(1.0));
    CHECK(std::abs(A.sigma) <= 1e-14);
  }
  SUBCASE("diag(1,0,0), i.e. |zeta1|^4") {
    SectionalMatrix m;
    m.m = Matrix3c::Zero();
    m.m(0, 0) = 1;
    const auto [nf, A] = fischer_decompose(m);
    CHECK(nf.a == doctest::Approx(1.0 / 6.0));
    CHECK(std::abs(nf.b) <= 1e-14);
    CHECK(std::abs(nf.c) <= 1e-14);
    CHECK(A.tau == doctest::Approx(5.0 / 6.0));
    CHECK(A.rho == doctest::Approx(-1.0 / 6.0));
  }
  SUBCASE("harmonic input decomposes with A = 0") {
    const NormalForm in{1.0, {0, 1}, {2, 0}};
    const auto [nf, A] = fischer_decompose(harmonic_matrix(in));
    CHECK(nf.a == doctest::Approx(1.0));
    CHECK(std::abs(nf.b - in.b) <= 1e-14);
    CHECK(std::abs(nf.c - in.c) <= 1e-14);
    CHECK(std::abs(A.tau) <= 1e-14);
    CHECK(std::abs(A.rho) <= 1e-14);
    CHECK(std::abs(A.sigma) <= 1e-14);
  }
  SUBCASE("non-Hermitian input rejected") {
    SectionalMatrix m;
    m.m = Matrix3c::Zero();
    m.m(0, 1) = Complex(1, 0);  // no mirror entry
    CHECK_THROWS_AS(fischer_decompose(m), InvalidInput);
  }
}

TEST_CASE("round trip and uniqueness over random Hermitian matrices") {
  for (int i = 0; i < 1000; ++i) {
    const auto m = random_hermitian();
    const auto [nf, A] = fischer_decompose(m);

    const Matrix3c recon = harmonic_matrix(nf).m + lift_A(A).m;
    CHECK((recon - m.m).cwiseAbs().maxCoeff() <= 1e-12);

    CHECK(is_harmonic(harmonic_matrix(nf)));

    // dual route: the closed-form split must give the same parameters
    const auto [nf2, A2] = split_closed_form(m);
    CHECK(nf.a == doctest::Approx(nf2.a).epsilon(1e-12));
    CHECK(std::abs(nf.b - nf2.b) <= 1e-12);
    CHECK(std::abs(nf.c - nf2.c) <= 1e-12);
    CHECK(A.tau == doctest::Approx(A2.tau).epsilon(1e-12));
    CHECK(A.rho == doctest::Approx(A2.rho).epsilon(1e-12));
    CHECK(std::abs(A.sigma - A2.sigma) <= 1e-12);
  }
}

TEST_CASE("is_harmonic") {
  CHECK(is_harmonic(harmonic_matrix(NormalForm{0.3, {1, -2}, {0.5, 0.25}})));
  SectionalMatrix zero;
  CHECK(is_harmonic(zero));
  SectionalMatrix norm4;
  norm4.m = Matrix3c::Zero();
  norm4.m(0, 0) = 1;
  norm4.m(1, 1) = 2;
  norm4.m(2, 2) = 1;
  CHECK(!is_harmonic(norm4));
}
