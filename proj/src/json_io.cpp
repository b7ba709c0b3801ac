#include "cmprob/json_io.hpp"

namespace cmprob {

Json to_json(const ContingencyMatrix& m) {
  Json e = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    e.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

ContingencyMatrix matrix_from_json(const Json& j) {
  try {
    const Json& e = j.is_array() ? j : j.at("entries");
    Grid g;
    for (const auto& row : e) {
      std::vector<long> r;
      for (const auto& v : row) r.push_back(v.get<long>());
      g.push_back(std::move(r));
    }
    ContingencyMatrix m = validate(g);
    if (j.is_object() && j.contains("rows") &&
        (j.at("rows").get<std::size_t>() != m.rows() ||
         j.at("cols").get<std::size_t>() != m.cols()))
      throw ParseError("matrix shape does not match its entries");
    return m;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad matrix JSON: ") + ex.what());
  }
}

Json to_json(const Laurent& x) {
  Json c = Json::object();
  for (const auto& [e, v] : x.terms()) c[std::to_string(e)] = v.get_str();
  return Json{{"coeffs", c}};
}

Laurent laurent_from_json(const Json& j) {
  try {
    std::vector<Laurent::Term> t;
    for (const auto& [k, v] : j.at("coeffs").items())
      t.emplace_back(std::stoi(k), parse_rational(v.get<std::string>()));
    return Laurent::from_terms(std::move(t));
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad Laurent JSON: ") + ex.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("bad exponent in Laurent JSON");
  }
}

Json to_json(const TensorSpace& s) {
  Json legs = Json::array();
  for (const auto& l : s.legs)
    legs.push_back(Json{{"degree", l.degree}, {"row", l.row}, {"col", l.col}});
  return legs;
}

Json to_json(const LinearMap& f) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < f.matrix.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < f.matrix.cols(); ++j)
      row.push_back(to_json(f.matrix(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"source", to_json(f.source)},
              {"target", to_json(f.target)},
              {"entries", entries}};
}

Json to_json(const MorphismWord& w) {
  Json steps = Json::array();
  for (const auto& s : w.steps()) {
    const char* kind = "";
    switch (s.kind) {
      case GenStep::Kind::DeltaFwd: kind = "DeltaFwd"; break;
      case GenStep::Kind::MuFwd: kind = "MuFwd"; break;
      case GenStep::Kind::DeltaInv: kind = "DeltaInv"; break;
      case GenStep::Kind::MuInv: kind = "MuInv"; break;
    }
    steps.push_back(Json{{"kind", kind}, {"k", s.k}, {"matrix", s.expanded.key()}});
  }
  return Json{{"domain", w.domain().key()}, {"steps", steps}};
}

Json to_json(const Matrix<Rational>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    out.push_back(std::move(row));
  }
  return out;
}

Matrix<Rational> rational_matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  std::size_t r = j.size();
  std::size_t c = r ? j[0].size() : 0;
  Matrix<Rational> m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!j[i].is_array() || j[i].size() != c) throw ParseError("ragged matrix");
    for (std::size_t k = 0; k < c; ++k) {
      const Json& v = j[i][k];
      if (v.is_string())
        m(i, k) = parse_rational(v.get<std::string>());
      else if (v.is_number_integer())
        m(i, k) = Rational(v.get<long>());
      else
        throw ParseError("matrix entries must be rational strings or integers");
    }
  }
  return m;
}

}  // namespace cmprob
