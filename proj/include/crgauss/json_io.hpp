#pragma once

#include <nlohmann/json.hpp>

#include "crgauss/embed.hpp"
#include "crgauss/gauss.hpp"
#include "crgauss/tensor.hpp"
#include "crgauss/types.hpp"

namespace crgauss {

using json = nlohmann::ordered_json;

// Wire schemas:
//   NormalForm       {"a": x, "b": [re, im], "c": [re, im]}
//   CurvatureTensor  {"entries": [{"idx": [a,b,n,m], "val": [re, im]}, ...]}  (1-based)
//   SU2Element       {"p": [re, im], "q": [re, im]}
//   HermitianA       {"tau": x, "rho": x, "sigma": [re, im]}
//   GaussSolution    {"A": {...}, "omega": [[re,im] x3], "eigenvalue": x, "branch": s}
//   QuadraticForm    {"n": k, "B": [[[re,im], ...] x n]}
//   SectionalMatrix  {"m": [[[re,im] x3] x3]}

json to_json(const Complex& z);
Complex complex_from_json(const json& j);

json to_json(const NormalForm& nf);
NormalForm normal_form_from_json(const json& j);

json to_json(const CurvatureTensor& t);
CurvatureTensor tensor_from_json(const json& j);

json to_json(const SU2Element& u);
SU2Element su2_from_json(const json& j);

json to_json(const HermitianA& A);
HermitianA hermitian_a_from_json(const json& j);

json to_json(const GaussSolution& sol);

json to_json(const SectionalMatrix& m);
SectionalMatrix sectional_from_json(const json& j);

json to_json(const QuadraticForm& q);
QuadraticForm quadratic_form_from_json(const json& j);

json to_json(const Classification& cls);

}  // namespace crgauss
