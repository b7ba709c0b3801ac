#include "cmprob/quiver.hpp"

namespace cmprob {

namespace {

const ContingencyMatrix& two() {
  static const ContingencyMatrix m = validate({{2}});
  return m;
}
const ContingencyMatrix& col11() {
  static const ContingencyMatrix m = validate({{1}, {1}});
  return m;
}
const ContingencyMatrix& row11() {
  static const ContingencyMatrix m = validate({{1, 1}});
  return m;
}
const ContingencyMatrix& id2() {
  static const ContingencyMatrix m = validate({{1, 0}, {0, 1}});
  return m;
}
const ContingencyMatrix& anti2() {
  static const ContingencyMatrix m = validate({{0, 1}, {1, 0}});
  return m;
}

std::string gen_tag(const GeneratorKey& g) {
  const auto& [n, axis, k] = g;
  return std::string(axis_name(axis)) + " k=" + std::to_string(k) + " " + n.key();
}

CheckResult compare_q(std::string suite, std::string instance, const QMatrix& lhs,
                      const QMatrix& rhs) {
  CheckResult r{std::move(suite), std::move(instance), lhs == rhs, nullptr, nullptr,
                ""};
  if (!r.pass) {
    r.lhs = to_json(lhs);
    r.rhs = to_json(rhs);
  }
  return r;
}

// Parses a matrix whose shape is known, so that empty row lists still carry
// their column count.
QMatrix shaped(const Json& j, std::size_t rows, std::size_t cols,
               const std::string& what) {
  if (rows == 0) {
    if (!j.is_array() || !j.empty())
      throw ParseError(what + ": expected no rows");
    return QMatrix(0, cols);
  }
  QMatrix m = rational_matrix_from_json(j);
  if (m.rows() != rows || m.cols() != cols)
    throw ParseError(what + ": expected a " + std::to_string(rows) + "x" +
                     std::to_string(cols) + " matrix");
  return m;
}

}  // namespace

std::size_t Representation::dim(const ContingencyMatrix& m) const {
  auto it = spaces.find(m);
  if (it == spaces.end()) throw IncompleteData("no space assigned to " + m.key());
  return it->second;
}

const QMatrix& Representation::generator(const ContingencyMatrix& expanded,
                                         Axis axis, std::size_t k) const {
  auto it = generators.find({expanded, axis, k});
  if (it == generators.end())
    throw IncompleteData("no matrix assigned to generator " +
                         gen_tag({expanded, axis, k}));
  return it->second;
}

std::vector<GeneratorKey> generator_keys(int n) {
  std::vector<GeneratorKey> out;
  for (const auto& m : enumerate(n)) {
    for (std::size_t k = 1; k < m.cols(); ++k) out.emplace_back(m, Axis::Horizontal, k);
    for (std::size_t k = 1; k < m.rows(); ++k) out.emplace_back(m, Axis::Vertical, k);
  }
  return out;
}

std::pair<ContingencyMatrix, ContingencyMatrix> generator_ends(const GeneratorKey& g) {
  const auto& [n, axis, k] = g;
  ContingencyMatrix c = contract(n, axis, k);
  if (axis == Axis::Horizontal) return {c, n};
  return {n, c};
}

namespace {

QMatrix chain_composite(const Representation& rep, const ContractionChain& chain) {
  const auto& mats = chain.mats;
  if (chain.axis == Axis::Horizontal) {
    QMatrix acc = QMatrix::identity(rep.dim(mats.front()));
    for (std::size_t i = 0; i + 1 < mats.size(); ++i)
      acc = rep.generator(mats[i + 1], Axis::Horizontal, chain.ks[i]) * acc;
    return acc;
  }
  QMatrix acc = QMatrix::identity(rep.dim(mats.back()));
  for (std::size_t i = mats.size() - 1; i-- > 0;)
    acc = rep.generator(mats[i + 1], Axis::Vertical, chain.ks[i]) * acc;
  return acc;
}

}  // namespace

QMatrix rep_chain_map(const Representation& rep, const ContingencyMatrix& m,
                      const ContingencyMatrix& n, Axis axis) {
  return chain_composite(rep, canonical_chain(m, n, axis));
}

Report check_representation(const Representation& rep) {
  auto mats = enumerate(rep.n);
  for (const auto& m : mats) rep.dim(m);
  auto keys = generator_keys(rep.n);
  Report shape;
  for (const auto& g : keys) {
    const auto& [n, axis, k] = g;
    const QMatrix& f = rep.generator(n, axis, k);
    auto [dom, cod] = generator_ends(g);
    bool ok = f.rows() == rep.dim(cod) && f.cols() == rep.dim(dom);
    if (!ok)
      shape.add(CheckResult{"rep-shape", gen_tag(g), false,
                            Json::array({f.rows(), f.cols()}),
                            Json::array({rep.dim(cod), rep.dim(dom)}),
                            "matrix shape does not match the spaces"});
  }
  if (!shape.ok()) {
    shape.sort();
    return shape;
  }

  struct Pair {
    ContingencyMatrix m, n;
    Axis axis;
  };
  std::vector<Pair> pairs;
  for (const auto& n : mats)
    for (Axis axis : {Axis::Horizontal, Axis::Vertical})
      for (const auto& m : down_set(n, axis))
        if (n.lines(axis) >= m.lines(axis) + 2) pairs.push_back({m, n, axis});
  Report out = run_parallel(pairs.size(), "rep-chains", [&](std::size_t i, Report& r) {
    const auto& [m, n, axis] = pairs[i];
    auto chains = contraction_chains(m, n, axis);
    QMatrix first = chain_composite(rep, chains.front()), other = first;
    for (std::size_t c = 1; c < chains.size() && other == first; ++c)
      other = chain_composite(rep, chains[c]);
    r.add(compare_q("rep-chains",
                    std::string(axis_name(axis)) + " " + m.key() + " <= " + n.key(),
                    first, other));
  });

  struct Triple {
    ContingencyMatrix m, n, l;
  };
  std::vector<Triple> triples;
  for (const auto& n : mats)
    for (const auto& m : up_set(n, Axis::Vertical))
      for (const auto& l : up_set(n, Axis::Horizontal))
        if (m != n && l != n) triples.push_back({m, n, l});
  out.merge(run_parallel(triples.size(), "rep-base-change",
                         [&](std::size_t i, Report& r) {
                           const auto& [m, n, l] = triples[i];
                           QMatrix lhs = rep_chain_map(rep, n, l, Axis::Horizontal) *
                                         rep_chain_map(rep, n, m, Axis::Vertical);
                           QMatrix rhs(rep.dim(l), rep.dim(m));
                           for (const auto& o : sup_set(m, l))
                             rhs += rep_chain_map(rep, l, o, Axis::Vertical) *
                                    rep_chain_map(rep, m, o, Axis::Horizontal);
                           r.add(compare_q("rep-base-change",
                                           "M=" + m.key() + " N=" + n.key() +
                                               " L=" + l.key(),
                                           lhs, rhs));
                         }));

  for (const auto& g : keys) {
    const auto& [n, axis, k] = g;
    if (!is_anodyne_step(n, axis, k)) continue;
    const QMatrix& f = rep.generator(n, axis, k);
    bool inv = f.rows() == f.cols() && determinant(f) != 0;
    out.add(CheckResult{"rep-anodyne", gen_tag(g), inv, nullptr, nullptr,
                        inv ? "" : "anodyne generator is not invertible"});
  }
  out.sort();
  return out;
}

Representation representation_from_oracle(const BialgebraOracle& oracle, int n) {
  if (!oracle.q_value())
    throw InvalidParameter("a representation needs a numeric q");
  Evaluator ev(std::shared_ptr<const BialgebraOracle>(&oracle,
                                                      [](const BialgebraOracle*) {}));
  Representation rep;
  rep.n = n;
  for (const auto& m : enumerate(n)) rep.spaces[m] = ev.space(m).dim();
  for (const auto& g : generator_keys(n)) {
    const auto& [x, axis, k] = g;
    const LMatrix& f = ev.generator(x, axis, k).matrix;
    QMatrix q(f.rows(), f.cols());
    for (std::size_t i = 0; i < f.rows(); ++i)
      for (std::size_t j = 0; j < f.cols(); ++j) {
        auto c = f(i, j).as_constant();
        if (!c) throw InvalidParameter("oracle returned a non-constant entry");
        q(i, j) = *c;
      }
    rep.generators.emplace(g, std::move(q));
  }
  return rep;
}

QMatrix t_psi(const PhiPsiDiagram& d) {
  QMatrix t = QMatrix::identity(d.psi);
  t -= d.a * d.b;
  return t;
}

Representation from_phi_psi(const PhiPsiDiagram& d) {
  if (d.a.rows() != d.psi || d.a.cols() != d.phi || d.b.rows() != d.phi ||
      d.b.cols() != d.psi)
    throw InvalidParameter("a must be psi x phi and b phi x psi");
  QMatrix t = t_psi(d);
  if (d.psi > 0 && determinant(t) == 0)
    throw SingularT("Id - ab is not invertible");
  Representation rep;
  rep.n = 2;
  for (const auto& m : enumerate(2)) rep.spaces[m] = m == two() ? d.phi : d.psi;
  QMatrix id = QMatrix::identity(d.psi);
  QMatrix r = d.a * d.b;
  r -= id;
  rep.generators[{row11(), Axis::Horizontal, 1}] = d.a;
  rep.generators[{col11(), Axis::Vertical, 1}] = d.b;
  rep.generators[{id2(), Axis::Horizontal, 1}] = id;
  rep.generators[{id2(), Axis::Vertical, 1}] = id;
  rep.generators[{anti2(), Axis::Horizontal, 1}] = id;
  rep.generators[{anti2(), Axis::Vertical, 1}] = r;
  return rep;
}

PhiPsiDiagram to_phi_psi(const Representation& rep) {
  if (rep.n != 2) throw CheckFailed("the (Phi, Psi) form exists for weight 2 only");
  Report r = check_representation(rep);
  if (!r.ok()) throw CheckFailed("representation fails its relations:\n" + r.summary());
  PhiPsiDiagram d;
  d.phi = rep.dim(two());
  d.psi = rep.dim(col11());
  const QMatrix& h = rep.generator(id2(), Axis::Horizontal, 1);
  const QMatrix& v = rep.generator(id2(), Axis::Vertical, 1);
  QMatrix gauge = v * h;
  d.a = d.psi == 0 ? QMatrix(0, d.phi)
                   : inverse(gauge) * rep.generator(row11(), Axis::Horizontal, 1);
  d.b = rep.generator(col11(), Axis::Vertical, 1);
  return d;
}

Json to_json(const Representation& rep) {
  Json spaces = Json::object();
  for (const auto& [m, d] : rep.spaces) spaces[m.key()] = d;
  Json gens = Json::array();
  for (const auto& [g, f] : rep.generators) {
    const auto& [n, axis, k] = g;
    gens.push_back(Json{{"matrix", to_json(n)},
                        {"axis", std::string(axis_name(axis))},
                        {"k", k},
                        {"map", to_json(f)}});
  }
  return Json{{"n", rep.n}, {"spaces", spaces}, {"generators", gens}};
}

Representation representation_from_json(const Json& j) {
  try {
    Representation rep;
    rep.n = j.at("n").get<int>();
    for (const auto& [key, d] : j.at("spaces").items()) {
      ContingencyMatrix m = matrix_from_json(Json::parse(key));
      if (m.weight() != rep.n) throw ParseError("space " + key + " has the wrong weight");
      rep.spaces[m] = d.get<std::size_t>();
    }
    for (const auto& g : j.at("generators")) {
      ContingencyMatrix n = matrix_from_json(g.at("matrix"));
      std::string ax = g.at("axis").get<std::string>();
      if (ax != "H" && ax != "V") throw ParseError("axis must be H or V");
      Axis axis = ax == "H" ? Axis::Horizontal : Axis::Vertical;
      std::size_t k = g.at("k").get<std::size_t>();
      GeneratorKey key{n, axis, k};
      auto [dom, cod] = generator_ends(key);
      rep.generators[key] =
          shaped(g.at("map"), rep.dim(cod), rep.dim(dom), "generator " + gen_tag(key));
    }
    return rep;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad representation JSON: ") + e.what());
  }
}

Json to_json(const PhiPsiDiagram& d) {
  return Json{{"phi", d.phi}, {"psi", d.psi}, {"a", to_json(d.a)}, {"b", to_json(d.b)}};
}

PhiPsiDiagram phi_psi_from_json(const Json& j) {
  try {
    PhiPsiDiagram d;
    d.phi = j.at("phi").get<std::size_t>();
    d.psi = j.at("psi").get<std::size_t>();
    d.a = shaped(j.at("a"), d.psi, d.phi, "a");
    d.b = shaped(j.at("b"), d.phi, d.psi, "b");
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad (phi, psi) JSON: ") + e.what());
  }
}

}  // namespace cmprob
