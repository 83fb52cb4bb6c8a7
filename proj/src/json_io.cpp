#include "crgauss/json_io.hpp"

namespace crgauss {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InvalidInput(std::string("json: ") + what);
}

}  // namespace

json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(),
          "complex value must be [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json to_json(const NormalForm& nf) {
  return json{{"a", nf.a}, {"b", to_json(nf.b)}, {"c", to_json(nf.c)}};
}

NormalForm normal_form_from_json(const json& j) {
  require(j.is_object() && j.contains("a") && j.contains("b") && j.contains("c"),
          "normal form must have keys a, b, c");
  require(j["a"].is_number(), "normal form field a must be a real number");
  return NormalForm{j["a"].get<double>(), complex_from_json(j["b"]), complex_from_json(j["c"])};
}

json to_json(const CurvatureTensor& t) {
  json entries = json::array();
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int n = 1; n <= 2; ++n)
        for (int m = 1; m <= 2; ++m)
          entries.push_back(json{{"idx", {a, b, n, m}}, {"val", to_json(t.at(a, b, n, m))}});
  return json{{"entries", entries}};
}

CurvatureTensor tensor_from_json(const json& j) {
  require(j.is_object() && j.contains("entries") && j["entries"].is_array(),
          "tensor must have an entries array");
  CurvatureTensor t;  // entries not listed stay zero; a repeated index wins last
  for (const auto& e : j["entries"]) {
    require(e.is_object() && e.contains("idx") && e.contains("val"),
            "tensor entry must have idx and val");
    const auto& idx = e["idx"];
    require(idx.is_array() && idx.size() == 4, "tensor idx must be [alpha,beta,nu,mu]");
    t.at(idx[0].get<int>(), idx[1].get<int>(), idx[2].get<int>(), idx[3].get<int>()) =
        complex_from_json(e["val"]);
  }
  return t;
}

json to_json(const SU2Element& u) { return json{{"p", to_json(u.p)}, {"q", to_json(u.q)}}; }

SU2Element su2_from_json(const json& j) {
  require(j.is_object() && j.contains("p") && j.contains("q"), "su2 element must have p and q");
  return SU2Element{complex_from_json(j["p"]), complex_from_json(j["q"])};
}

json to_json(const HermitianA& A) {
  return json{{"tau", A.tau}, {"rho", A.rho}, {"sigma", to_json(A.sigma)}};
}

HermitianA hermitian_a_from_json(const json& j) {
  require(j.is_object() && j.contains("tau") && j.contains("rho") && j.contains("sigma"),
          "Hermitian A must have tau, rho, sigma");
  require(j["tau"].is_number() && j["rho"].is_number(), "tau and rho must be real numbers");
  return HermitianA{j["tau"].get<double>(), j["rho"].get<double>(),
                    complex_from_json(j["sigma"])};
}

json to_json(const GaussSolution& sol) {
  return json{{"A", to_json(sol.A)},
              {"omega", {to_json(sol.sff.v(0)), to_json(sol.sff.v(1)), to_json(sol.sff.v(2))}},
              {"eigenvalue", sol.eigenvalue},
              {"branch", to_string(sol.branch)}};
}

json to_json(const SectionalMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int k = 0; k < 3; ++k) row.push_back(to_json(m.m(i, k)));
    rows.push_back(row);
  }
  return json{{"m", rows}};
}

SectionalMatrix sectional_from_json(const json& j) {
  require(j.is_object() && j.contains("m") && j["m"].is_array() && j["m"].size() == 3,
          "sectional matrix must have a 3x3 array m");
  SectionalMatrix s;
  for (int i = 0; i < 3; ++i) {
    const auto& row = j["m"][i];
    require(row.is_array() && row.size() == 3, "sectional matrix rows must have 3 entries");
    for (int k = 0; k < 3; ++k) s.m(i, k) = complex_from_json(row[k]);
  }
  return s;
}

json to_json(const QuadraticForm& q) {
  json rows = json::array();
  for (int i = 0; i < q.n; ++i) {
    json row = json::array();
    for (int k = 0; k < q.n; ++k) row.push_back(to_json(q.B(i, k)));
    rows.push_back(row);
  }
  return json{{"n", q.n}, {"B", rows}};
}

QuadraticForm quadratic_form_from_json(const json& j) {
  require(j.is_object() && j.contains("n") && j.contains("B"), "quadratic form must have n and B");
  require(j["n"].is_number_integer(), "n must be an integer");
  const int n = j["n"].get<int>();
  require(n >= 1, "n must be >= 1");
  require(j["B"].is_array() && static_cast<int>(j["B"].size()) == n, "B must be n x n");
  Eigen::MatrixXcd B(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& row = j["B"][i];
    require(row.is_array() && static_cast<int>(row.size()) == n, "B must be n x n");
    for (int k = 0; k < n; ++k) B(i, k) = complex_from_json(row[k]);
  }
  return QuadraticForm(n, std::move(B));
}

json to_json(const Classification& cls) {
  return json{{"rank", cls.rank},
              {"trace_sign", to_string(cls.trace_sign)},
              {"count", cls.solution_count}};
}

}  // namespace crgauss
