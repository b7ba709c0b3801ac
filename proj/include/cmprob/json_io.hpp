#pragma once

#include "json.hpp"

#include "cmprob/contmat.hpp"
#include "cmprob/eval.hpp"
#include "cmprob/morphism.hpp"

namespace cmprob {

using Json = nlohmann::ordered_json;

Json to_json(const ContingencyMatrix& m);
ContingencyMatrix matrix_from_json(const Json& j);

Json to_json(const Laurent& x);
Laurent laurent_from_json(const Json& j);

Json to_json(const TensorSpace& s);
Json to_json(const LinearMap& f);
Json to_json(const MorphismWord& w);

// Row-major nested arrays of "p/q" strings.
Json to_json(const Matrix<Rational>& m);
Matrix<Rational> rational_matrix_from_json(const Json& j);

}  // namespace cmprob
