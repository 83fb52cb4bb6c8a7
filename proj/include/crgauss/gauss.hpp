#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crgauss/fischer.hpp"
#include "crgauss/tensor.hpp"
#include "crgauss/types.hpp"

namespace crgauss {

/// Monomial coefficients of omega(zeta) = v1 zeta1^2 + v2 zeta1 zeta2 + v3 zeta2^2,
/// considered up to a unit phase. canonicalized() makes the first nonzero
/// entry real positive.
struct SffVector {
  Vector3c v = Vector3c::Zero();

  SffVector canonicalized() const;
  /// max-norm distance between the canonical representatives
  double phase_distance(const SffVector& other) const;
};

enum class Branch : int {
  case1_mid = 0,        // (tau, rho) = (-a, -a)
  case1_third = 1,      // (tau, rho) = (-a, 5a)
  case1_first = 2,      // (tau, rho) = (5a, -a)
  case2_sigma_plus_b = 3,
  case2_sigma_minus_b = 4,
};

const char* to_string(Branch b);
std::optional<Branch> branch_from_string(const std::string& s);

struct GaussSolution {
  HermitianA A;
  SffVector sff;
  double eigenvalue = 0.0;  // the nonzero (negative) eigenvalue of T_A
  Branch branch = Branch::case1_mid;
};

struct GaussOptions {
  double z_tol = tol::z_tol;
  double r_tol = tol::r_tol;
  // Test hook: skip the candidates of one branch before the NSD filter,
  // forcing the count consistency check to fire.
  std::optional<Branch> drop_branch;
};

struct GaussResult {
  std::vector<GaussSolution> solutions;
  bool flat = false;  // a = b = 0: omega == 0 is the unique solution
};

/// T_A = [[tau+a, sigma+b, 0],[conj(sigma+b), tau+rho-4a, sigma-b],
///        [0, conj(sigma-b), rho+a]] for a normalized (c = 0) pair.
SectionalMatrix build_TA(double a, Complex b, const HermitianA& A);

/// If T has numerical rank 1 (second-largest |eigenvalue| <= r_tol * largest)
/// and its nonzero eigenvalue is negative, the factor v with T = -v v^* is
/// returned phase-canonicalized; otherwise nothing.
std::optional<SffVector> rank1_nsd_factor(const SectionalMatrix& T, double r_tol = tol::r_tol);

/// Enumerates the closed-form candidates of the two-case analysis
///   b = 0:  sigma = 0, (tau, rho) in {(-a,-a), (-a,5a), (5a,-a)}
///   b != 0: sigma = b, rho = -a, tau in {2a +- sqrt(9a^2+4|b|^2)}
///           sigma = -b, tau = -a, rho in {2a +- sqrt(9a^2+4|b|^2)}
/// and keeps those accepted by rank1_nsd_factor (the eigendecomposition is
/// the branch-selection ground truth). Results are sorted by branch then tau.
/// Throws ConsistencyFailure, with all candidate eigenvalues in the message,
/// when the accepted count disagrees with classify(a, b).solution_count.
GaussResult solve_gauss(double a, Complex b, const GaussOptions& opts = {});

/// max-norm of build_TA(a,b,A) + v v^*; a solution iff <= 1e-9.
double verify_gauss(double a, Complex b, const HermitianA& A, const SffVector& sff);

/// A from the second fundamental form alone (n = 2, identity Levi form):
///   A_{ab} = -sum_g w_{ga} conj(w_{gb}) + (1/6) (sum |w|^2) delta_{ab},
/// with w11 = v1, w12 = w21 = v2/2, w22 = v3.
HermitianA A_from_sff(const SffVector& sff);

struct GridSpec {
  double lo = -3.0;
  double hi = 6.0;
  double step = 0.25;
  double g_tol = tol::g_tol;
};

struct BruteCluster {
  HermitianA A;          // representative: best rank-1 score in the cluster
  double eigenvalue = 0.0;
  double score = 0.0;    // max(|second eigenvalue|, positive part) at the representative
  int points = 0;
};

/// Grid search oracle over (tau, rho, Re sigma, Im sigma), independent of
/// solve_gauss. A point is accepted when the dominant eigenvalue is below
/// -g_tol (nonzero factor) and both the second-largest |eigenvalue| and the
/// positive part are <= g_tol; accepted points are clustered by chaining
/// max-norm neighbors one grid step apart. Deterministic: points are scanned
/// in lexicographic order and clusters sorted by representative (tau, rho).
std::vector<BruteCluster> brute_solutions(double a, Complex b, const GridSpec& grid);

}  // namespace crgauss
