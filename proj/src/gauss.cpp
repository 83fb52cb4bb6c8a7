#include "crgauss/gauss.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace crgauss {

SffVector SffVector::canonicalized() const {
  SffVector out{v};
  const double vmax = v.cwiseAbs().maxCoeff();
  if (vmax == 0.0) return out;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(v(i)) > 1e-12 * vmax) {
      const Complex phase = std::conj(v(i)) / std::abs(v(i));
      out.v = v * phase;
      out.v(i) = Complex(std::abs(v(i)), 0.0);
      break;
    }
  }
  return out;
}

double SffVector::phase_distance(const SffVector& other) const {
  return (canonicalized().v - other.canonicalized().v).cwiseAbs().maxCoeff();
}

const char* to_string(Branch b) {
  switch (b) {
    case Branch::case1_mid: return "case1_mid";
    case Branch::case1_third: return "case1_third";
    case Branch::case1_first: return "case1_first";
    case Branch::case2_sigma_plus_b: return "case2_sigma_plus_b";
    case Branch::case2_sigma_minus_b: return "case2_sigma_minus_b";
  }
  return "?";
}

std::optional<Branch> branch_from_string(const std::string& s) {
  for (Branch b : {Branch::case1_mid, Branch::case1_third, Branch::case1_first,
                   Branch::case2_sigma_plus_b, Branch::case2_sigma_minus_b})
    if (s == to_string(b)) return b;
  return std::nullopt;
}

SectionalMatrix build_TA(double a, Complex b, const HermitianA& A) {
  SectionalMatrix T;
  const Complex sb = A.sigma + b, smb = A.sigma - b;
  T.m << Complex(A.tau + a, 0.0), sb, Complex(0.0, 0.0),
      std::conj(sb), Complex(A.tau + A.rho - 4.0 * a, 0.0), smb,
      Complex(0.0, 0.0), std::conj(smb), Complex(A.rho + a, 0.0);
  return T;
}

std::optional<SffVector> rank1_nsd_factor(const SectionalMatrix& T, double r_tol) {
  const double scale = T.m.cwiseAbs().maxCoeff();
  if (T.hermitian_defect() > 1e-12 * std::max(1.0, scale))
    throw InvalidInput("rank1_nsd_factor: matrix is not Hermitian");
  if (scale == 0.0) return std::nullopt;  // rank 0, no nonzero factor

  Eigen::SelfAdjointEigenSolver<Matrix3c> es(T.m);
  const Eigen::Vector3d ev = es.eigenvalues();  // ascending
  Eigen::Vector3d mags = ev.cwiseAbs();
  int dom = 0;
  mags.maxCoeff(&dom);
  double second = 0.0;
  for (int i = 0; i < 3; ++i)
    if (i != dom) second = std::max(second, mags(i));

  if (mags(dom) == 0.0 || second > r_tol * mags(dom)) return std::nullopt;
  if (ev(dom) >= 0.0) return std::nullopt;

  SffVector out;
  out.v = std::sqrt(-ev(dom)) * es.eigenvectors().col(dom);
  return out.canonicalized();
}

namespace {

struct CandidateA {
  HermitianA A;
  Branch branch;
};

std::vector<CandidateA> enumerate_candidates(double a, Complex b, bool b_zero) {
  std::vector<CandidateA> cand;
  if (b_zero) {
    cand.push_back({HermitianA{-a, -a, {0.0, 0.0}}, Branch::case1_mid});
    cand.push_back({HermitianA{-a, 5.0 * a, {0.0, 0.0}}, Branch::case1_third});
    cand.push_back({HermitianA{5.0 * a, -a, {0.0, 0.0}}, Branch::case1_first});
  } else {
    const double disc = std::sqrt(9.0 * a * a + 4.0 * std::norm(b));
    for (double sgn : {+1.0, -1.0}) {
      cand.push_back({HermitianA{2.0 * a + sgn * disc, -a, b}, Branch::case2_sigma_plus_b});
      cand.push_back({HermitianA{-a, 2.0 * a + sgn * disc, -b}, Branch::case2_sigma_minus_b});
    }
  }
  return cand;
}

}  // namespace

GaussResult solve_gauss(double a, Complex b, const GaussOptions& opts) {
  if (!std::isfinite(a) || !std::isfinite(b.real()) || !std::isfinite(b.imag()))
    throw InvalidInput("solve_gauss: non-finite input");

  const Classification cls = classify(a, b, opts.z_tol);
  GaussResult result;
  if (cls.rank == 0) {
    result.flat = true;
    return result;
  }

  const double s = std::max(std::abs(a), std::abs(b));
  const bool b_zero = std::abs(b) <= opts.z_tol * s;
  std::vector<CandidateA> cands = enumerate_candidates(a, b, b_zero);

  std::vector<double> cand_eigs;
  for (const auto& cd : cands) {
    const SectionalMatrix T = build_TA(a, b, cd.A);
    Eigen::SelfAdjointEigenSolver<Matrix3c> es(T.m, Eigen::EigenvaluesOnly);
    Eigen::Vector3d mags = es.eigenvalues().cwiseAbs();
    int dom = 0;
    mags.maxCoeff(&dom);
    cand_eigs.push_back(es.eigenvalues()(dom));

    if (opts.drop_branch && *opts.drop_branch == cd.branch) continue;
    auto factor = rank1_nsd_factor(T, opts.r_tol);
    if (!factor) continue;

    // T = -v v^*, so the nonzero eigenvalue is -|v|^2
    result.solutions.push_back({cd.A, *factor, -factor->v.squaredNorm(), cd.branch});
  }

  std::sort(result.solutions.begin(), result.solutions.end(),
            [](const GaussSolution& x, const GaussSolution& y) {
              if (x.branch != y.branch) return static_cast<int>(x.branch) < static_cast<int>(y.branch);
              return x.A.tau < y.A.tau;
            });

  if (static_cast<int>(result.solutions.size()) != cls.solution_count) {
    std::ostringstream os;
    os << "solve_gauss: accepted " << result.solutions.size() << " solutions but classification "
       << "promises " << cls.solution_count << " (rank " << cls.rank << ", trace "
       << to_string(cls.trace_sign) << "); candidate eigenvalues:";
    for (double e : cand_eigs) os << " " << e;
    throw ConsistencyFailure(os.str());
  }
  return result;
}

double verify_gauss(double a, Complex b, const HermitianA& A, const SffVector& sff) {
  const Matrix3c W = sff.v * sff.v.adjoint();
  return (build_TA(a, b, A).m + W).cwiseAbs().maxCoeff();
}

HermitianA A_from_sff(const SffVector& sff) {
  Matrix2c w;
  w << sff.v(0), 0.5 * sff.v(1), 0.5 * sff.v(1), sff.v(2);
  const Matrix2c gram = w.adjoint() * w;  // gram(a,b) = sum_g conj(w_{ga}) w_{gb}
  const double total = gram.real().trace();
  const Matrix2c Am = -gram.transpose() + (total / 6.0) * Matrix2c::Identity();
  return HermitianA{Am(0, 0).real(), Am(1, 1).real(), Am(0, 1)};
}

std::vector<BruteCluster> brute_solutions(double a, Complex b, const GridSpec& grid) {
  if (!(grid.step > 0.0) || !(grid.hi > grid.lo))
    throw InvalidInput("brute_solutions: empty grid");

  const int n = static_cast<int>(std::floor((grid.hi - grid.lo) / grid.step + 0.5)) + 1;

  struct Hit {
    int i[4];
    double lam = 0.0;
    double score = 0.0;
  };
  std::vector<Hit> hits;

  const auto coord = [&](int k) { return grid.lo + grid.step * k; };

  for (int it = 0; it < n; ++it)
    for (int ir = 0; ir < n; ++ir)
      for (int is = 0; is < n; ++is)
        for (int ii = 0; ii < n; ++ii) {
          const HermitianA A{coord(it), coord(ir), {coord(is), coord(ii)}};
          const SectionalMatrix T = build_TA(a, b, A);
          Eigen::SelfAdjointEigenSolver<Matrix3c> es;
          es.computeDirect(T.m, Eigen::EigenvaluesOnly);
          const Eigen::Vector3d ev = es.eigenvalues();  // ascending
          // dominant must be a nonzero negative eigenvalue
          if (!(ev(0) < -grid.g_tol)) continue;
          const double second = std::max(std::abs(ev(1)), std::abs(ev(2)));
          const double pos = std::max({ev(0), ev(1), ev(2), 0.0});
          if (second > grid.g_tol || pos > grid.g_tol) continue;
          hits.push_back(Hit{{it, ir, is, ii}, ev(0), std::max(second, pos)});
        }

  // chained clustering: neighbors within 1.5 * step in max-norm
  std::vector<int> parent(hits.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < hits.size(); ++i)
    for (size_t j = i + 1; j < hits.size(); ++j) {
      int d = 0;
      for (int k = 0; k < 4; ++k) d = std::max(d, std::abs(hits[i].i[k] - hits[j].i[k]));
      if (d <= 1) parent[find(static_cast<int>(j))] = find(static_cast<int>(i));
    }

  std::vector<BruteCluster> clusters;
  std::vector<int> roots;
  for (size_t i = 0; i < hits.size(); ++i) {
    const int r = find(static_cast<int>(i));
    auto it = std::find(roots.begin(), roots.end(), r);
    size_t ci;
    if (it == roots.end()) {
      roots.push_back(r);
      clusters.push_back({});
      ci = clusters.size() - 1;
    } else {
      ci = static_cast<size_t>(it - roots.begin());
    }
    BruteCluster& cl = clusters[ci];
    ++cl.points;
    if (cl.points == 1 || hits[i].score < cl.score) {
      cl.score = hits[i].score;
      cl.eigenvalue = hits[i].lam;
      cl.A = HermitianA{coord(hits[i].i[0]), coord(hits[i].i[1]),
                        {coord(hits[i].i[2]), coord(hits[i].i[3])}};
    }
  }
  std::sort(clusters.begin(), clusters.end(), [](const BruteCluster& x, const BruteCluster& y) {
    if (x.A.tau != y.A.tau) return x.A.tau < y.A.tau;
    if (x.A.rho != y.A.rho) return x.A.rho < y.A.rho;
    if (x.A.sigma.real() != y.A.sigma.real()) return x.A.sigma.real() < y.A.sigma.real();
    return x.A.sigma.imag() < y.A.sigma.imag();
  });
  return clusters;
}

}  // namespace crgauss
