#include "cmprob/morphism.hpp"

#include <random>

namespace cmprob {

GenStep GenStep::delta_fwd(const ContingencyMatrix& n, std::size_t k) {
  ContingencyMatrix m = contract(n, Axis::Horizontal, k);
  return GenStep{Kind::DeltaFwd, k, n, m, n,
                 is_anodyne_step(n, Axis::Horizontal, k)};
}

GenStep GenStep::mu_fwd(const ContingencyMatrix& n, std::size_t k) {
  ContingencyMatrix m = contract(n, Axis::Vertical, k);
  return GenStep{Kind::MuFwd, k, n, n, m, is_anodyne_step(n, Axis::Vertical, k)};
}

GenStep GenStep::delta_inv(const ContingencyMatrix& n, std::size_t k) {
  GenStep s = delta_fwd(n, k);
  if (!s.anodyne)
    throw NonAnodyneInverse("column merge " + std::to_string(k) + " of " +
                            n.key() + " is not anodyne");
  return s.inverted();
}

GenStep GenStep::mu_inv(const ContingencyMatrix& n, std::size_t k) {
  GenStep s = mu_fwd(n, k);
  if (!s.anodyne)
    throw NonAnodyneInverse("row merge " + std::to_string(k) + " of " +
                            n.key() + " is not anodyne");
  return s.inverted();
}

GenStep GenStep::inverted() const {
  if (!anodyne)
    throw NonAnodyneInverse("inverting a non-anodyne step at " + expanded.key());
  GenStep s = *this;
  switch (kind) {
    case Kind::DeltaFwd: s.kind = Kind::DeltaInv; break;
    case Kind::DeltaInv: s.kind = Kind::DeltaFwd; break;
    case Kind::MuFwd: s.kind = Kind::MuInv; break;
    case Kind::MuInv: s.kind = Kind::MuFwd; break;
  }
  std::swap(s.domain, s.codomain);
  return s;
}

MorphismWord& MorphismWord::append(const GenStep& s) {
  if (s.domain != codomain())
    throw DomainMismatch("step from " + s.domain.key() + " after " +
                         codomain().key());
  if (s.is_inverse() && !s.anodyne)
    throw NonAnodyneInverse("inverse step without anodyne certificate");
  steps_.push_back(s);
  return *this;
}

std::vector<GenStep> steps_from(const ContingencyMatrix& x) {
  std::vector<GenStep> out;
  if (x.empty()) return out;
  for (std::size_t k = 1; k <= x.cols(); ++k)
    for (const auto& n : expansions(x, Axis::Horizontal, k))
      out.push_back(GenStep::delta_fwd(n, k));
  for (std::size_t k = 1; k < x.rows(); ++k) out.push_back(GenStep::mu_fwd(x, k));
  for (std::size_t k = 1; k < x.cols(); ++k)
    if (is_anodyne_step(x, Axis::Horizontal, k))
      out.push_back(GenStep::delta_inv(x, k));
  for (std::size_t k = 1; k <= x.rows(); ++k)
    for (const auto& n : expansions(x, Axis::Vertical, k))
      if (is_anodyne_step(n, Axis::Vertical, k))
        out.push_back(GenStep::mu_inv(n, k));
  return out;
}

MorphismWord compose(const MorphismWord& w1, const MorphismWord& w2) {
  if (w1.codomain() != w2.domain())
    throw DomainMismatch("cannot compose " + w1.codomain().key() + " with " +
                         w2.domain().key());
  MorphismWord r = w1;
  for (const auto& s : w2.steps()) r.append(s);
  return r;
}

MorphismWord inverse(const MorphismWord& w) {
  MorphismWord r(w.codomain());
  for (auto it = w.steps().rbegin(); it != w.steps().rend(); ++it)
    r.append(it->inverted());
  return r;
}

FormalSum& FormalSum::add(const Rational& c, const MorphismWord& w) {
  if (w.domain() != domain || w.codomain() != codomain)
    throw DomainMismatch("summand is not parallel to the sum");
  terms.emplace_back(c, w);
  return *this;
}

LinearMap evaluate(const MorphismWord& w, const Evaluator& ev) {
  LinearMap acc = LinearMap::identity(ev.space(w.domain()));
  for (const auto& s : w.steps()) {
    if (!s.is_inverse()) {
      acc = compose(ev.generator(s.expanded, s.axis(), s.k), acc);
      continue;
    }
    try {
      acc = compose(ev.generator_inverse(s.expanded, s.axis(), s.k), acc);
    } catch (const SingularInverse&) {
      throw SingularInverse("anodyne step at " + s.expanded.key() +
                            " evaluated to a singular map");
    }
  }
  return acc;
}

LinearMap evaluate(const FormalSum& s, const Evaluator& ev) {
  TensorSpace src = ev.space(s.domain), dst = ev.space(s.codomain);
  LinearMap acc{src, dst, LMatrix(dst.dim(), src.dim())};
  for (const auto& [c, w] : s.terms) acc = acc + scale(Laurent(c), evaluate(w, ev));
  return acc;
}

LinearMap evaluate(const MorphismWord& w, const BialgebraOracle& oracle) {
  Evaluator ev(std::shared_ptr<const BialgebraOracle>(
      &oracle, [](const BialgebraOracle*) {}));
  return evaluate(w, ev);
}

MorphismWord exchange_word(const ContingencyMatrix& m, Axis axis,
                           std::size_t k) {
  ContingencyMatrix target = exchange(m, axis, k);
  MorphismWord w(m);
  if (axis == Axis::Vertical) {
    w.append(GenStep::mu_fwd(m, k));
    w.append(GenStep::mu_inv(target, k));
  } else {
    w.append(GenStep::delta_inv(m, k));
    w.append(GenStep::delta_fwd(target, k));
  }
  return w;
}

namespace {

GenStep shifted(const GenStep& s, const ContingencyMatrix& left,
                const ContingencyMatrix& right) {
  GenStep r = s;
  r.expanded = direct_sum(direct_sum(left, s.expanded), right);
  r.domain = direct_sum(direct_sum(left, s.domain), right);
  r.codomain = direct_sum(direct_sum(left, s.codomain), right);
  r.k += s.axis() == Axis::Horizontal ? left.cols() : left.rows();
  return r;
}

// Moves every 'A' line past every 'B' line by adjacent swaps of an (A, B)
// pair, where A lines start in front. Returns 1-based swap positions.
std::vector<std::size_t> block_swaps(std::size_t a, std::size_t b,
                                     bool last_a_first, std::mt19937_64* rng) {
  std::vector<char> labels(a, 'A');
  labels.insert(labels.end(), b, 'B');
  std::vector<std::size_t> out;
  while (true) {
    std::vector<std::size_t> avail;
    for (std::size_t p = 0; p + 1 < labels.size(); ++p)
      if (labels[p] == 'A' && labels[p + 1] == 'B') avail.push_back(p);
    if (avail.empty()) break;
    std::size_t p;
    if (rng)
      p = avail[std::uniform_int_distribution<std::size_t>(0, avail.size() - 1)(*rng)];
    else
      p = last_a_first ? avail.back() : avail.front();
    std::swap(labels[p], labels[p + 1]);
    out.push_back(p + 1);
  }
  return out;
}

}  // namespace

MorphismWord tensor_right(const MorphismWord& w, const ContingencyMatrix& n) {
  MorphismWord r(direct_sum(w.domain(), n));
  for (const auto& s : w.steps()) r.append(shifted(s, ContingencyMatrix{}, n));
  return r;
}

MorphismWord tensor_left(const ContingencyMatrix& n, const MorphismWord& w) {
  MorphismWord r(direct_sum(n, w.domain()));
  for (const auto& s : w.steps()) r.append(shifted(s, n, ContingencyMatrix{}));
  return r;
}

MorphismWord tensor(const MorphismWord& w1, const MorphismWord& w2) {
  return compose(tensor_right(w1, w2.domain()),
                 tensor_left(w1.codomain(), w2));
}

MorphismWord braiding_word(const ContingencyMatrix& m, const ContingencyMatrix& n,
                           std::optional<std::uint64_t> seed) {
  std::optional<std::mt19937_64> rng;
  if (seed) rng.emplace(*seed);
  ContingencyMatrix x = direct_sum(m, n);
  MorphismWord w(x);
  auto run = [&](Axis axis, const std::vector<std::size_t>& swaps) {
    for (std::size_t k : swaps) {
      MorphismWord e = exchange_word(x, axis, k);
      w = compose(w, e);
      x = e.codomain();
    }
  };
  run(Axis::Horizontal,
      block_swaps(m.cols(), n.cols(), true, rng ? &*rng : nullptr));
  // Rows: N's rows are the 'A' lines moving up, so swap roles.
  auto row_swaps = block_swaps(n.rows(), m.rows(), false, rng ? &*rng : nullptr);
  // block_swaps moves leading 'A' lines back; mirror the positions so that
  // trailing N rows move to the front.
  for (auto& k : row_swaps) k = m.rows() + n.rows() - k;
  run(Axis::Vertical, row_swaps);
  return w;
}

MorphismWord inverse_braiding_word(const ContingencyMatrix& m,
                                   const ContingencyMatrix& n) {
  ContingencyMatrix x = direct_sum(m, n);
  MorphismWord w(x);
  auto run = [&](Axis axis, const std::vector<std::size_t>& swaps) {
    for (std::size_t k : swaps) {
      MorphismWord e = exchange_word(x, axis, k);
      w = compose(w, e);
      x = e.codomain();
    }
  };
  auto row_swaps = block_swaps(n.rows(), m.rows(), false, nullptr);
  for (auto& k : row_swaps) k = m.rows() + n.rows() - k;
  run(Axis::Vertical, row_swaps);
  run(Axis::Horizontal, block_swaps(m.cols(), n.cols(), true, nullptr));
  return w;
}

ContingencyMatrix point(int p) {
  if (p < 0) throw InvalidParameter("negative degree");
  return p == 0 ? ContingencyMatrix{} : validate({{p}});
}

MorphismWord a_mu_word(int m, int n) {
  if (m < 0 || n < 0) throw InvalidParameter("negative degree");
  if (m == 0 || n == 0) return MorphismWord::identity(point(m + n));
  MorphismWord w(diagonal({m, n}));
  w.append(GenStep::delta_inv(diagonal({m, n}), 1));
  w.append(GenStep::mu_fwd(column_vector({m, n}), 1));
  return w;
}

MorphismWord a_delta_word(int m, int n) {
  if (m < 0 || n < 0) throw InvalidParameter("negative degree");
  if (m == 0 || n == 0) return MorphismWord::identity(point(m + n));
  MorphismWord w(point(m + n));
  w.append(GenStep::delta_fwd(row_vector({m, n}), 1));
  w.append(GenStep::mu_inv(diagonal({m, n}), 1));
  return w;
}

MorphismWord chain_word(const ContractionChain& chain) {
  const auto& mats = chain.mats;
  if (chain.axis == Axis::Horizontal) {
    MorphismWord w(mats.front());
    for (std::size_t i = 0; i + 1 < mats.size(); ++i)
      w.append(GenStep::delta_fwd(mats[i + 1], chain.ks[i]));
    return w;
  }
  MorphismWord w(mats.back());
  for (std::size_t i = mats.size() - 1; i-- > 0;)
    w.append(GenStep::mu_fwd(mats[i + 1], chain.ks[i]));
  return w;
}

MorphismWord delta_chain_word(const ContingencyMatrix& m,
                              const ContingencyMatrix& n) {
  return chain_word(canonical_chain(m, n, Axis::Horizontal));
}

MorphismWord mu_chain_word(const ContingencyMatrix& n,
                           const ContingencyMatrix& m) {
  return chain_word(canonical_chain(m, n, Axis::Vertical));
}

}  // namespace cmprob
