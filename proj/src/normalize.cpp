#include "crgauss/normalize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

namespace crgauss {

SU2Element compose(const SU2Element& u1, const SU2Element& u2) {
  SU2Element r;
  r.p = u1.p * u2.p - u1.q * std::conj(u2.q);
  r.q = u1.p * u2.q + u1.q * std::conj(u2.p);
  return r;
}

SU2Element inverse(const SU2Element& u) { return SU2Element{std::conj(u.p), -u.q}; }

NormalForm su2_apply(const NormalForm& nf, const SU2Element& u) {
  if (!nf.finite()) throw InvalidInput("su2_apply: non-finite normal form");
  if (u.unit_defect() > 1e-12)
    throw InvalidInput("su2_apply: (p,q) not on the unit sphere, defect " +
                       std::to_string(u.unit_defect()));

  const Complex p = u.p, q = u.q;
  const Complex pb = std::conj(p), qb = std::conj(q);
  const double p2 = std::norm(p), q2 = std::norm(q);
  const double a = nf.a;
  const Complex b = nf.b, c = nf.c;
  const Complex bb = std::conj(b), cb = std::conj(c);

  const Complex at = (p2 * p2 - 4.0 * p2 * q2 + q2 * q2) * a + p * q * (q2 - p2) * b +
                     pb * qb * (q2 - p2) * bb + p * p * q * q * c + pb * pb * qb * qb * cb;
  const Complex bt = 6.0 * p * qb * (p2 - q2) * a + p * p * (p2 - 3.0 * q2) * b +
                     qb * qb * (q2 - 3.0 * p2) * bb - 2.0 * p * p * p * q * c +
                     2.0 * pb * qb * qb * qb * cb;
  const Complex ct = 6.0 * p * p * qb * qb * a + 2.0 * p * p * p * qb * b -
                     2.0 * p * qb * qb * qb * bb + p * p * p * p * c + qb * qb * qb * qb * cb;

  const double scale = std::max(1.0, nf.scale());
  if (std::abs(at.imag()) > 1e-12 * scale)
    throw NumericalFailure("su2_apply: transformed a has imaginary residue " +
                           std::to_string(at.imag()));
  return NormalForm{at.real(), bt, ct};
}

namespace {

struct Candidate {
  SU2Element u;
  bool at_infinity = false;
  Complex w{0.0, 0.0};
};

SU2Element element_from_root(const Complex& w) {
  const double p = 1.0 / std::sqrt(1.0 + std::norm(w));
  return SU2Element{Complex(p, 0.0), std::conj(w) * p};
}

std::vector<Candidate> candidates_impl(const NormalForm& nf) {
  const double s = nf.scale();
  std::vector<Candidate> out;
  if (s == 0.0 || !nf.finite()) {
    out.push_back({su2_identity(), false, {0.0, 0.0}});
    return out;
  }

  // ascending powers of w, at unit scale
  const Complex a{nf.a / s, 0.0};
  const Complex b = nf.b / s, c = nf.c / s;
  std::array<Complex, 5> coeff = {c, 2.0 * b, 6.0 * a, -2.0 * std::conj(b), std::conj(c)};

  double cmax = 0.0;
  for (const auto& x : coeff) cmax = std::max(cmax, std::abs(x));
  const double trim = 1e-13 * cmax;

  int deg = 4;
  while (deg > 0 && std::abs(coeff[deg]) <= trim) --deg;

  if (deg < 4 && std::abs(c) <= trim)
    out.push_back({SU2Element{{0.0, 0.0}, {1.0, 0.0}}, true, {0.0, 0.0}});

  if (deg == 0) {
    // cannot happen at unit scale (the constant and leading coefficients are
    // conjugates, 6a sits in the middle), but keep the list nonempty
    if (out.empty()) out.push_back({su2_identity(), false, {0.0, 0.0}});
  } else {
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -coeff[i] / coeff[deg];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, /*computeEigenvectors=*/false);
    std::vector<Complex> roots(es.eigenvalues().data(), es.eigenvalues().data() + deg);
    std::sort(roots.begin(), roots.end(), [](const Complex& x, const Complex& y) {
      if (x.real() != y.real()) return x.real() < y.real();
      return x.imag() < y.imag();
    });
    for (const auto& w : roots) {
      const bool dup = std::any_of(out.begin(), out.end(), [&](const Candidate& cd) {
        return !cd.at_infinity && std::abs(cd.w - w) <= 1e-10 * (1.0 + std::abs(w));
      });
      if (!dup) out.push_back({element_from_root(w), false, w});
    }
    // keep finite candidates first, ordered by (Re w, Im w)
    std::stable_partition(out.begin(), out.end(),
                          [](const Candidate& cd) { return !cd.at_infinity; });
  }
  return out;
}

}  // namespace

std::vector<SU2Element> c_root_candidates(const NormalForm& nf) {
  std::vector<SU2Element> out;
  for (const auto& cd : candidates_impl(nf)) out.push_back(cd.u);
  return out;
}

NormalizeResult normalize(const NormalForm& nf, double c_tol) {
  if (!nf.finite()) throw InvalidInput("normalize: non-finite normal form");
  const double s = nf.scale();
  if (s == 0.0) return NormalizeResult{nf, su2_identity(), 0.0};

  const auto cands = candidates_impl(nf);
  double best = std::numeric_limits<double>::infinity();
  const Candidate* pick = nullptr;
  NormalForm best_nf;
  for (const auto& cd : cands) {
    const NormalForm tr = su2_apply(nf, cd.u);
    const double res = std::abs(tr.c) / s;
    if (res < best) {  // candidate order already encodes the tie-break
      best = res;
      pick = &cd;
      best_nf = tr;
    }
  }
  if (pick == nullptr || best > c_tol)
    throw NumericalFailure("normalize: no candidate reaches |c| <= c_tol, best residual " +
                           std::to_string(best));
  return NormalizeResult{best_nf, pick->u, best};
}

}  // namespace crgauss
