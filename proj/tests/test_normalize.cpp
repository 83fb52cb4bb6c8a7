#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "crgauss/normalize.hpp"
#include "crgauss/tensor.hpp"

using namespace crgauss;

namespace {

std::mt19937_64 rng(771);

double urand(double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Complex crand() { return {urand(), urand()}; }

NormalForm random_nf() { return NormalForm{urand(), crand(), crand()}; }

SU2Element random_u() {
  Eigen::Vector4d v;
  for (int i = 0; i < 4; ++i) v(i) = std::normal_distribution<double>()(rng);
  v.normalize();
  return SU2Element{{v(0), v(1)}, {v(2), v(3)}};
}

Matrix2c matrix_of(const SU2Element& u) {
  Matrix2c U;
  U << u.p, u.q, -std::conj(u.q), std::conj(u.p);
  return U;
}

double eval_nf(const NormalForm& nf, const Vector2c& z) {
  return sectional_eval(sectional_matrix(tensor_from_normal_form(nf)), z);
}

}  // namespace

TEST_CASE("su2_apply") {
  SUBCASE("identity element leaves the form unchanged") {
    const auto nf = random_nf();
    const auto out = su2_apply(nf, su2_identity());
    CHECK(out.a == doctest::Approx(nf.a));
    CHECK(std::abs(out.b - nf.b) <= 1e-15);
    CHECK(std::abs(out.c - nf.c) <= 1e-15);
  }
  SUBCASE("u = (0,1) conjugates b and c") {
    const NormalForm nf{0.7, {0.3, -0.2}, {-0.1, 0.5}};
    const auto out = su2_apply(nf, SU2Element{{0, 0}, {1, 0}});
    CHECK(out.a == doctest::Approx(nf.a));
    CHECK(std::abs(out.b - std::conj(nf.b)) <= 1e-15);
    CHECK(std::abs(out.c - std::conj(nf.c)) <= 1e-15);
  }
  SUBCASE("(0,0,1) at a quartic root lands on (0, unit b, 0)") {
    const double s = 1.0 / std::sqrt(2.0);
    const Complex qbar = std::polar(s, M_PI / 4.0);
    const SU2Element u{{s, 0.0}, std::conj(qbar)};
    const auto out = su2_apply(NormalForm{0.0, {0, 0}, {1, 0}}, u);
    CHECK(std::abs(out.a) <= 1e-15);
    CHECK(std::abs(out.b) == doctest::Approx(1.0));
    CHECK(std::abs(out.c) <= 1e-15);
  }
  SUBCASE("non-unit element rejected") {
    CHECK_THROWS_AS(su2_apply(random_nf(), SU2Element{{0.5, 0}, {0.5, 0}}), InvalidInput);
  }
}

TEST_CASE("group action and composition convention") {
  for (int i = 0; i < 200; ++i) {
    const auto nf = random_nf();
    const auto u1 = random_u(), u2 = random_u();
    const auto stepwise = su2_apply(su2_apply(nf, u1), u2);
    const auto direct = su2_apply(nf, compose(u1, u2));
    CHECK(std::abs(stepwise.a - direct.a) <= 1e-10);
    CHECK(std::abs(stepwise.b - direct.b) <= 1e-10);
    CHECK(std::abs(stepwise.c - direct.c) <= 1e-10);
  }
  SUBCASE("compose matches the matrix product") {
    const auto u1 = random_u(), u2 = random_u();
    const Matrix2c want = matrix_of(u1) * matrix_of(u2);
    CHECK((matrix_of(compose(u1, u2)) - want).cwiseAbs().maxCoeff() <= 1e-14);
  }
  SUBCASE("inverse undoes the action") {
    const auto nf = random_nf();
    const auto u = random_u();
    const auto back = su2_apply(su2_apply(nf, u), inverse(u));
    CHECK(std::abs(back.a - nf.a) <= 1e-12);
    CHECK(std::abs(back.b - nf.b) <= 1e-12);
    CHECK(std::abs(back.c - nf.c) <= 1e-12);
  }
}

TEST_CASE("polynomial equivariance: transformed form at zeta = original at U zeta") {
  for (int i = 0; i < 100; ++i) {
    const auto nf = random_nf();
    const auto u = random_u();
    const auto tr = su2_apply(nf, u);
    const Matrix2c U = matrix_of(u);
    const Vector2c z(crand(), crand());
    const Vector2c Uz = U * z;
    CHECK(eval_nf(tr, z) - eval_nf(nf, Uz) == doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("c_root_candidates") {
  SUBCASE("(0,0,1): four candidates from w^4 = -1") {
    const auto cands = c_root_candidates(NormalForm{0.0, {0, 0}, {1, 0}});
    CHECK(cands.size() == 4);
    for (const auto& u : cands) {
      CHECK(u.unit_defect() <= 1e-12);
      const auto out = su2_apply(NormalForm{0.0, {0, 0}, {1, 0}}, u);
      CHECK(std::abs(out.c) <= 1e-10);
    }
    // one of them is w = e^{i pi/4}: q/p has modulus 1
    bool modulus_one = false;
    for (const auto& u : cands)
      if (std::abs(std::abs(u.q / u.p) - 1.0) < 1e-9) modulus_one = true;
    CHECK(modulus_one);
  }
  SUBCASE("(1,0,0): identity included, c already zero at w = 0") {
    const auto cands = c_root_candidates(NormalForm{1.0, {0, 0}, {0, 0}});
    bool has_identity = false;
    for (const auto& u : cands)
      if (std::abs(u.p - Complex(1, 0)) < 1e-12 && std::abs(u.q) < 1e-12) has_identity = true;
    CHECK(has_identity);
  }
  SUBCASE("(0,1,0): finite roots are 0, 1, -1") {
    const auto cands = c_root_candidates(NormalForm{0.0, {1, 0}, {0, 0}});
    std::vector<double> ws;
    for (const auto& u : cands)
      if (std::abs(u.p) > 1e-9) ws.push_back((std::conj(u.q) / u.p).real());
    REQUIRE(ws.size() == 3);
    CHECK(ws[0] == doctest::Approx(-1.0));
    CHECK(ws[1] == doctest::Approx(0.0));
    CHECK(ws[2] == doctest::Approx(1.0));
  }
  SUBCASE("zero form: identity only") {
    const auto cands = c_root_candidates(NormalForm{0.0, {0, 0}, {0, 0}});
    REQUIRE(cands.size() == 1);
    CHECK(std::abs(cands[0].p - Complex(1, 0)) <= 1e-15);
  }
}

TEST_CASE("normalize") {
  SUBCASE("(a,0,0) unchanged with the identity element") {
    const auto res = normalize(NormalForm{0.8, {0, 0}, {0, 0}});
    CHECK(res.nf.a == doctest::Approx(0.8));
    CHECK(std::abs(res.nf.b) <= 1e-15);
    CHECK(std::abs(res.nf.c) <= 1e-15);
    CHECK(std::abs(res.u.p - Complex(1, 0)) <= 1e-15);
    CHECK(std::abs(res.u.q) <= 1e-15);
  }
  SUBCASE("(0,0,1) lands on (0, b', 0) with |b'| = 1") {
    const auto res = normalize(NormalForm{0.0, {0, 0}, {1, 0}});
    CHECK(std::abs(res.nf.a) <= 1e-12);
    CHECK(std::abs(res.nf.b) == doctest::Approx(1.0));
    CHECK(std::abs(res.nf.c) <= 1e-10);
  }
  SUBCASE("random forms reach |c| <= 1e-10 and match su2_apply(nf, u)") {
    for (int i = 0; i < 1000; ++i) {
      const auto nf = random_nf();
      const auto res = normalize(nf);
      CHECK(std::abs(res.nf.c) <= 1e-10 * std::max(1.0, nf.scale()));
      const auto replay = su2_apply(nf, res.u);
      CHECK(std::abs(replay.a - res.nf.a) <= 1e-12);
      CHECK(std::abs(replay.b - res.nf.b) <= 1e-12);
      CHECK(std::abs(replay.c - res.nf.c) <= 1e-12);
    }
  }
}

TEST_CASE("classification invariance across all c-root candidates") {
  for (int i = 0; i < 300; ++i) {
    const auto nf = random_nf();
    const auto cands = c_root_candidates(nf);
    int rank = -1;
    TraceSign sign = TraceSign::zero;
    for (const auto& u : cands) {
      const auto tr = su2_apply(nf, u);
      if (std::abs(tr.c) > 1e-8 * std::max(1.0, nf.scale())) continue;  // inexact root
      const auto cls = classify(tr.a, tr.b);
      if (rank < 0) {
        rank = cls.rank;
        sign = cls.trace_sign;
      } else {
        CHECK(cls.rank == rank);
        CHECK(cls.trace_sign == sign);
      }
    }
    CHECK(rank >= 0);
  }
}
