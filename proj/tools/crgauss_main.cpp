// crgauss: classify CR curvature normal forms, solve the Gauss equation for
// second fundamental forms of embeddings M^5 -> S^7, and verify Webster
// embeddings. JSON reports on stdout, diagnostics on stderr.
//
// Exit codes: 0 success, 2 invalid input, 3 internal consistency or numerical
// failure, 64 unknown command.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "crgauss/embed.hpp"
#include "crgauss/fischer.hpp"
#include "crgauss/gauss.hpp"
#include "crgauss/json_io.hpp"
#include "crgauss/normalize.hpp"
#include "crgauss/tensor.hpp"
#include "crgauss/types.hpp"
#include "crgauss/version.hpp"

namespace {

using crgauss::Complex;
using crgauss::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitConsistency = 3;
constexpr int kExitUsage = 64;

Complex parse_complex_flag(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw crgauss::InvalidInput("complex flag must be re,im: got '" + s + "'");
  try {
    std::size_t used = 0;
    const double re = std::stod(s.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(s);
    const std::string ims = s.substr(comma + 1);
    const double im = std::stod(ims, &used);
    if (used != ims.size()) throw std::invalid_argument(s);
    return Complex(re, im);
  } catch (const std::exception&) {
    throw crgauss::InvalidInput("complex flag must be re,im: got '" + s + "'");
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw crgauss::InvalidInput("cannot open input file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw crgauss::InvalidInput("malformed JSON in " + path + ": " + e.what());
  }
}

struct NormalFormArgs {
  std::optional<double> a;
  std::optional<std::string> b, c;
  std::string input;

  void attach(CLI::App* cmd) {
    cmd->add_option("--a", a, "coefficient a (real)");
    cmd->add_option("--b", b, "coefficient b as re,im");
    cmd->add_option("--c", c, "coefficient c as re,im (default 0,0)");
    cmd->add_option("--input", input, "JSON file with {\"a\":..,\"b\":[..],\"c\":[..]}");
  }

  crgauss::NormalForm load() const {
    const bool inline_given = a.has_value() || b.has_value() || c.has_value();
    if (!input.empty() && inline_given)
      throw crgauss::InvalidInput("conflicting sources: both --input and inline --a/--b/--c given");
    if (!input.empty()) return crgauss::normal_form_from_json(load_json_file(input));
    if (!a.has_value())
      throw crgauss::InvalidInput("missing input: give --a (and --b/--c) or --input");
    crgauss::NormalForm nf;
    nf.a = *a;
    if (b) nf.b = parse_complex_flag(*b);
    if (c) nf.c = parse_complex_flag(*c);
    if (!nf.finite()) throw crgauss::InvalidInput("non-finite normal form");
    return nf;
  }
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("CR_GAUSS_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw crgauss::InvalidInput("CR_GAUSS_SEED is not an integer");
    }
  }
  return 0;
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

// Human rendering of the same report, on stderr so stdout stays pure JSON.
void emit_table(const json& report) {
  std::ostringstream os;
  os << "command    " << report["command"].get<std::string>() << "\n";
  if (report.contains("normalized")) {
    const auto& nf = report["normalized"];
    os << "normalized a=" << nf["a"].get<double>() << "  b=(" << nf["b"][0].get<double>() << ","
       << nf["b"][1].get<double>() << ")  c=(" << nf["c"][0].get<double>() << ","
       << nf["c"][1].get<double>() << ")\n";
  }
  const json* cls = nullptr;
  if (report.contains("classification")) cls = &report["classification"];
  if (report.contains("rank")) cls = &report;
  if (cls)
    os << "class      rank=" << (*cls)["rank"].get<int>() << "  trace="
       << (*cls)["trace_sign"].get<std::string>() << "  count=" << (*cls)["count"].get<int>()
       << "\n";
  if (report.contains("solutions")) {
    for (const auto& s : report["solutions"]) {
      os << "solution   " << s["branch"].get<std::string>() << "  tau=" << s["A"]["tau"].get<double>()
         << "  rho=" << s["A"]["rho"].get<double>() << "  sigma=(" << s["A"]["sigma"][0].get<double>()
         << "," << s["A"]["sigma"][1].get<double>() << ")  lambda=" << s["eigenvalue"].get<double>();
      if (s.contains("verify_residual"))
        os << "  residual=" << s["verify_residual"].get<double>();
      os << "\n";
    }
  }
  std::cerr << os.str();
}

json report_header(const std::string& command) {
  return json{{"command", command}, {"version", crgauss::kVersion}};
}

// Normalizes when |c| exceeds c_tol at the input scale; otherwise the input
// is already a usable (a, b) pair and u stays the identity.
struct NormalizedInput {
  crgauss::NormalForm nf;
  crgauss::SU2Element u;
  bool was_normalized = false;
  double c_residual = 0.0;
};

NormalizedInput ensure_normalized(const crgauss::NormalForm& nf, double c_tol) {
  const double s = nf.scale();
  if (s == 0.0 || std::abs(nf.c) <= c_tol * s)
    return {nf, crgauss::su2_identity(), false, s == 0.0 ? 0.0 : std::abs(nf.c) / s};
  const auto res = crgauss::normalize(nf, c_tol);
  return {res.nf, res.u, true, res.c_residual};
}

}  // namespace

int main(int argc, char** argv) {
  const std::set<std::string> known = {"validate", "normalize", "classify", "solve",
                                       "verify",   "fischer",   "ellipsoid", "oracle"};
  if (argc < 2 || (!known.count(argv[1]) && std::string(argv[1]) != "--help" &&
                   std::string(argv[1]) != "-h" && std::string(argv[1]) != "--version")) {
    std::cerr << "usage: crgauss <command> [options]\n"
              << "commands: validate | normalize | classify | solve | verify | fischer |"
              << " ellipsoid | oracle\n"
              << "run 'crgauss <command> --help' for the options of a command\n";
    return kExitUsage;
  }

  CLI::App app{"CR curvature classification and Gauss-equation solver (n=2)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", crgauss::kVersion);

  // --- shared tolerance flags (surfaced per command) ---
  double z_tol = crgauss::tol::z_tol;
  double v_tol = crgauss::tol::v_tol;
  double c_tol = crgauss::tol::c_tol;
  double r_tol = crgauss::tol::r_tol;
  double p_tol = crgauss::tol::p_tol;

  // validate
  auto* cmd_validate = app.add_subcommand("validate", "check tensor symmetry and trace laws");
  std::string validate_input;
  cmd_validate->add_option("--input", validate_input, "CurvatureTensor JSON file")->required();
  cmd_validate->add_option("--v-tol", v_tol, "invariant check tolerance");

  // normalize
  auto* cmd_normalize = app.add_subcommand("normalize", "rotate the coframe so that c = 0");
  NormalFormArgs nf_normalize;
  nf_normalize.attach(cmd_normalize);
  cmd_normalize->add_option("--c-tol", c_tol, "required |c| after normalization (unit scale)");

  // classify
  auto* cmd_classify = app.add_subcommand("classify", "rank / trace sign / solution count");
  NormalFormArgs nf_classify;
  nf_classify.attach(cmd_classify);
  cmd_classify->add_option("--z-tol", z_tol, "relative zero threshold for a and b");
  cmd_classify->add_option("--c-tol", c_tol, "normalization tolerance");
  bool classify_table = false;
  cmd_classify->add_flag("--table", classify_table, "also render a text table on stderr");

  // solve
  auto* cmd_solve = app.add_subcommand("solve", "all Gauss-equation solutions (A, omega)");
  NormalFormArgs nf_solve;
  nf_solve.attach(cmd_solve);
  cmd_solve->add_option("--z-tol", z_tol, "relative zero threshold for a and b");
  cmd_solve->add_option("--c-tol", c_tol, "normalization tolerance");
  cmd_solve->add_option("--r-tol", r_tol, "relative rank-1 threshold");
  bool solve_table = false;
  cmd_solve->add_flag("--table", solve_table, "also render a text table on stderr");
  std::string fault_branch;
  cmd_solve->add_option("--fault-drop-branch", fault_branch,
                        "test hook: drop one candidate branch before filtering")
      ->group("");  // hidden

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "residual of a claimed solution");
  std::string verify_input;
  cmd_verify->add_option("--input", verify_input,
                         "JSON {\"a\":..,\"b\":[..],\"A\":{..},\"omega\":[[..]x3]}")
      ->required();

  // fischer
  auto* cmd_fischer = app.add_subcommand("fischer", "harmonic + lifted split of a Hermitian 3x3");
  std::string fischer_input;
  cmd_fischer->add_option("--input", fischer_input, "JSON {\"m\": [[[re,im] x3] x3]}")->required();

  // ellipsoid
  auto* cmd_ell = app.add_subcommand("ellipsoid", "sample the hypersurface, check the Webster map");
  std::string ell_input;
  int ell_samples = 10000;
  std::optional<std::uint64_t> ell_seed;
  cmd_ell->add_option("--input", ell_input, "QuadraticForm JSON file")->required();
  cmd_ell->add_option("--samples", ell_samples, "number of sampled points");
  cmd_ell->add_option("--seed", ell_seed, "RNG seed (fallback: CR_GAUSS_SEED, then 0)");
  cmd_ell->add_option("--p-tol", p_tol, "pole detection threshold");

  // oracle
  auto* cmd_oracle = app.add_subcommand("oracle", "grid-search certificate for solve");
  double or_a = 0.0;
  std::string or_b = "0,0";
  crgauss::GridSpec grid;
  cmd_oracle->add_option("--a", or_a, "coefficient a")->required();
  cmd_oracle->add_option("--b", or_b, "coefficient b as re,im")->required();
  cmd_oracle->add_option("--lo", grid.lo, "grid lower bound");
  cmd_oracle->add_option("--hi", grid.hi, "grid upper bound");
  cmd_oracle->add_option("--step", grid.step, "grid step");
  cmd_oracle->add_option("--g-tol", grid.g_tol, "grid acceptance tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    if (*cmd_validate) {
      const auto t = crgauss::tensor_from_json(load_json_file(validate_input));
      const auto viol = crgauss::validate(t, v_tol);
      json jv = json::array();
      for (const auto& v : viol)
        jv.push_back(json{{"kind", v.kind}, {"detail", v.detail}, {"magnitude", v.magnitude}});
      json rep = report_header("validate");
      rep["tolerances"] = json{{"v_tol", v_tol}};
      rep["input"] = crgauss::to_json(t);
      rep["valid"] = viol.empty();
      rep["violations"] = jv;
      emit(rep);
      return kExitOk;
    }

    if (*cmd_normalize) {
      const auto nf = nf_normalize.load();
      const auto res = crgauss::normalize(nf, c_tol);
      json rep = report_header("normalize");
      rep["tolerances"] = json{{"c_tol", c_tol}};
      rep["input"] = crgauss::to_json(nf);
      rep["normalized"] = crgauss::to_json(res.nf);
      rep["u"] = crgauss::to_json(res.u);
      rep["c_residual"] = res.c_residual;
      emit(rep);
      return kExitOk;
    }

    if (*cmd_classify) {
      const auto nf = nf_classify.load();
      const auto ni = ensure_normalized(nf, c_tol);
      const auto cls = crgauss::classify(ni.nf.a, ni.nf.b, z_tol);
      json rep = report_header("classify");
      rep["tolerances"] = json{{"z_tol", z_tol}, {"c_tol", c_tol}};
      rep["input"] = crgauss::to_json(nf);
      rep["normalized"] = crgauss::to_json(ni.nf);
      rep["u"] = crgauss::to_json(ni.u);
      rep["rank"] = cls.rank;
      rep["trace_sign"] = crgauss::to_string(cls.trace_sign);
      rep["count"] = cls.solution_count;
      emit(rep);
      if (classify_table) emit_table(rep);
      return kExitOk;
    }

    if (*cmd_solve) {
      const auto nf = nf_solve.load();
      const auto ni = ensure_normalized(nf, c_tol);
      const auto cls = crgauss::classify(ni.nf.a, ni.nf.b, z_tol);

      crgauss::GaussOptions opts;
      opts.z_tol = z_tol;
      opts.r_tol = r_tol;
      if (!fault_branch.empty()) {
        opts.drop_branch = crgauss::branch_from_string(fault_branch);
        if (!opts.drop_branch)
          throw crgauss::InvalidInput("unknown branch tag: " + fault_branch);
      }
      const auto result = crgauss::solve_gauss(ni.nf.a, ni.nf.b, opts);

      json sols = json::array();
      double max_resid = 0.0;
      for (const auto& sol : result.solutions) {
        json js = crgauss::to_json(sol);
        const double resid = crgauss::verify_gauss(ni.nf.a, ni.nf.b, sol.A, sol.sff);
        const auto A2 = crgauss::A_from_sff(sol.sff);
        const double a_resid =
            (A2.matrix() - sol.A.matrix()).cwiseAbs().maxCoeff();
        js["verify_residual"] = resid;
        js["a_from_sff_residual"] = a_resid;
        sols.push_back(js);
        max_resid = std::max(max_resid, resid);
      }
      const bool residual_ok = max_resid <= 1e-9;

      json rep = report_header("solve");
      rep["tolerances"] = json{{"z_tol", z_tol}, {"c_tol", c_tol}, {"r_tol", r_tol}};
      rep["input"] = crgauss::to_json(nf);
      rep["normalized"] = crgauss::to_json(ni.nf);
      rep["u"] = crgauss::to_json(ni.u);
      rep["classification"] = crgauss::to_json(cls);
      rep["flat"] = result.flat;
      if (result.flat) rep["note"] = "flat: omega == 0 is the unique solution";
      rep["solutions"] = sols;
      rep["max_residual"] = max_resid;
      rep["residual_ok"] = residual_ok;
      emit(rep);
      if (solve_table) emit_table(rep);
      if (!residual_ok) {
        std::cerr << "solve: a solution failed the residual gate 1e-9\n";
        return kExitConsistency;
      }
      return kExitOk;
    }

    if (*cmd_verify) {
      const json j = load_json_file(verify_input);
      if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("A") ||
          !j.contains("omega"))
        throw crgauss::InvalidInput("verify input must have a, b, A, omega");
      const double a = j["a"].get<double>();
      const Complex b = crgauss::complex_from_json(j["b"]);
      const auto A = crgauss::hermitian_a_from_json(j["A"]);
      crgauss::SffVector sff;
      const auto& om = j["omega"];
      if (!om.is_array() || om.size() != 3)
        throw crgauss::InvalidInput("omega must be [[re,im] x3]");
      for (int i = 0; i < 3; ++i) sff.v(i) = crgauss::complex_from_json(om[i]);

      const double resid = crgauss::verify_gauss(a, b, A, sff);
      json rep = report_header("verify");
      rep["input"] = j;
      rep["residual"] = resid;
      rep["solution"] = resid <= 1e-9;
      emit(rep);
      return kExitOk;
    }

    if (*cmd_fischer) {
      const auto m = crgauss::sectional_from_json(load_json_file(fischer_input));
      const auto [nf, A] = crgauss::fischer_decompose(m);
      const auto recon = crgauss::harmonic_matrix(nf).m + crgauss::lift_A(A).m;
      json rep = report_header("fischer");
      rep["input"] = crgauss::to_json(m);
      rep["harmonic"] = crgauss::to_json(nf);
      rep["A"] = crgauss::to_json(A);
      rep["residual"] = (recon - m.m).cwiseAbs().maxCoeff();
      rep["harmonic_part_harmonic"] = crgauss::is_harmonic(crgauss::harmonic_matrix(nf));
      emit(rep);
      return kExitOk;
    }

    if (*cmd_ell) {
      const auto q = crgauss::quadratic_form_from_json(load_json_file(ell_input));
      if (ell_samples < 1) throw crgauss::InvalidInput("--samples must be >= 1");
      const std::uint64_t seed = resolve_seed(ell_seed);
      std::mt19937_64 rng(seed);
      std::normal_distribution<double> gauss(0.0, 1.0);

      double max_sphere = 0.0, max_defining = 0.0;
      for (int k = 0; k < ell_samples; ++k) {
        Eigen::VectorXcd d(q.n);
        for (int i = 0; i < q.n; ++i) d(i) = Complex(gauss(rng), gauss(rng));
        const auto z = crgauss::sample_hypersurface(q, d, rng);
        max_defining = std::max(max_defining, std::abs(crgauss::defining_residual(q, z)));
        max_sphere = std::max(max_sphere, std::abs(crgauss::sphere_residual(q, z, p_tol)));
      }
      json rep = report_header("ellipsoid");
      rep["tolerances"] = json{{"p_tol", p_tol}};
      rep["input"] = crgauss::to_json(q);
      rep["samples"] = ell_samples;
      rep["seed"] = seed;
      rep["max_defining_residual"] = max_defining;
      rep["max_sphere_residual"] = max_sphere;
      emit(rep);
      return kExitOk;
    }

    if (*cmd_oracle) {
      const Complex b = parse_complex_flag(or_b);
      const auto clusters = crgauss::brute_solutions(or_a, b, grid);
      const auto solved = crgauss::solve_gauss(or_a, b, crgauss::GaussOptions{z_tol, r_tol, {}});
      json jc = json::array();
      for (const auto& cl : clusters) {
        double nearest = -1.0;
        for (const auto& sol : solved.solutions) {
          const double d = (cl.A.matrix() - sol.A.matrix()).cwiseAbs().maxCoeff();
          if (nearest < 0.0 || d < nearest) nearest = d;
        }
        jc.push_back(json{{"A", crgauss::to_json(cl.A)},
                          {"eigenvalue", cl.eigenvalue},
                          {"score", cl.score},
                          {"points", cl.points},
                          {"nearest_solution_distance", nearest}});
      }
      json rep = report_header("oracle");
      rep["tolerances"] = json{{"g_tol", grid.g_tol}, {"z_tol", z_tol}, {"r_tol", r_tol}};
      rep["a"] = or_a;
      rep["b"] = crgauss::to_json(b);
      rep["grid"] = json{{"lo", grid.lo}, {"hi", grid.hi}, {"step", grid.step}};
      rep["clusters"] = jc;
      json jsol = json::array();
      for (const auto& sol : solved.solutions) jsol.push_back(crgauss::to_json(sol));
      rep["solutions"] = jsol;
      emit(rep);
      return kExitOk;
    }
  } catch (const crgauss::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const crgauss::ConsistencyFailure& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const crgauss::NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitUsage;
}
