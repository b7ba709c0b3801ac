#include "cmprob/eval.hpp"

#include <numeric>

namespace cmprob {

namespace {

// I_left (x) f (x) I_right.
LMatrix embed(const LMatrix& f, std::size_t left, std::size_t right) {
  if (left == 1 && right == 1) return f;
  LMatrix r(left * f.rows() * right, left * f.cols() * right);
  for (std::size_t l = 0; l < left; ++l)
    for (std::size_t i = 0; i < f.rows(); ++i)
      for (std::size_t j = 0; j < f.cols(); ++j) {
        const Laurent& x = f(i, j);
        if (x.is_zero()) continue;
        for (std::size_t t = 0; t < right; ++t)
          r((l * f.rows() + i) * right + t, (l * f.cols() + j) * right + t) = x;
      }
  return r;
}

LMatrix kron_all(const std::vector<LMatrix>& blocks) {
  LMatrix r = LMatrix::identity(1);
  for (const auto& b : blocks) r = kron(r, b);
  return r;
}

std::size_t product(const std::vector<std::size_t>& v, std::size_t from,
                    std::size_t to) {
  std::size_t p = 1;
  for (std::size_t i = from; i < to; ++i) p *= v[i];
  return p;
}

}  // namespace

std::size_t TensorSpace::dim() const {
  return product(dims, 0, dims.size());
}

LinearMap LinearMap::identity(const TensorSpace& s) {
  return LinearMap{s, s, LMatrix::identity(s.dim())};
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (!(f.target == g.source))
    throw DomainMismatch("composing maps between different tensor spaces");
  return LinearMap{f.source, g.target, g.matrix * f.matrix};
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  if (!(a.source == b.source) || !(a.target == b.target))
    throw DomainMismatch("adding non-parallel maps");
  return LinearMap{a.source, a.target, a.matrix + b.matrix};
}

LinearMap scale(const Laurent& c, const LinearMap& f) {
  return LinearMap{f.source, f.target, c * f.matrix};
}

LinearMap tensor(const LinearMap& f, const LinearMap& g) {
  LinearMap r{f.source, f.target, kron(f.matrix, g.matrix)};
  r.source.legs.insert(r.source.legs.end(), g.source.legs.begin(),
                       g.source.legs.end());
  r.source.dims.insert(r.source.dims.end(), g.source.dims.begin(),
                       g.source.dims.end());
  r.target.legs.insert(r.target.legs.end(), g.target.legs.begin(),
                       g.target.legs.end());
  r.target.dims.insert(r.target.dims.end(), g.target.dims.begin(),
                       g.target.dims.end());
  return r;
}

LinearMap inverse(const LinearMap& f) {
  return LinearMap{f.target, f.source, inverse(f.matrix)};
}

bool is_invertible(const LinearMap& f) {
  if (f.matrix.rows() != f.matrix.cols())
    throw NonSquare("map between spaces of different dimension");
  return is_invertible(f.matrix);
}

TensorSpace lex_space(const BialgebraOracle& oracle,
                      const ContingencyMatrix& m) {
  TensorSpace s;
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (int d = m.at(i, j)) {
        s.legs.push_back({d, i + 1, j + 1});
        s.dims.push_back(oracle.dim(d));
      }
  return s;
}

TensorSpace alex_space(const BialgebraOracle& oracle,
                       const ContingencyMatrix& m) {
  TensorSpace s;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (int d = m.at(i, j)) {
        s.legs.push_back({d, i + 1, j + 1});
        s.dims.push_back(oracle.dim(d));
      }
  return s;
}

BraidWord BraidWord::inverse() const {
  BraidWord w{strands, {crossings.rbegin(), crossings.rend()}};
  for (auto& c : w.crossings) c.sign = -c.sign;
  return w;
}

BraidWord grid_braid_word(std::size_t r, std::size_t s) {
  // Strand keys are row-major indices listed in column-major order; bubble
  // sort them.
  std::vector<std::size_t> key;
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t i = 0; i < r; ++i) key.push_back(i * s + j);
  BraidWord w{r * s, {}};
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t p = 0; p + 1 < key.size(); ++p)
      if (key[p] > key[p + 1]) {
        std::swap(key[p], key[p + 1]);
        w.crossings.push_back({p, -1});
        swapped = true;
      }
  }
  return w;
}

LinearMap braid_word_map(const BialgebraOracle& oracle,
                         const ContingencyMatrix& m, const BraidWord& word,
                         bool start_from_lex) {
  std::size_t r = m.rows(), s = m.cols();
  if (word.strands != r * s)
    throw InvalidParameter("braid word has the wrong number of strands");
  // Strands as (row, col), 0-based.
  std::vector<std::pair<std::size_t, std::size_t>> seq;
  if (start_from_lex) {
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t i = 0; i < r; ++i) seq.emplace_back(i, j);
  } else {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < s; ++j) seq.emplace_back(i, j);
  }
  auto space_of = [&](const auto& order) {
    TensorSpace t;
    for (auto [i, j] : order)
      if (int d = m.at(i, j)) {
        t.legs.push_back({d, i + 1, j + 1});
        t.dims.push_back(oracle.dim(d));
      }
    return t;
  };
  TensorSpace source = space_of(seq);
  std::vector<std::size_t> dims = source.dims;
  LMatrix acc = LMatrix::identity(source.dim());
  for (const Crossing& c : word.crossings) {
    auto [ai, aj] = seq[c.pos];
    auto [bi, bj] = seq[c.pos + 1];
    int a = m.at(ai, aj), b = m.at(bi, bj);
    if (a != 0 && b != 0) {
      std::size_t leg = 0;
      for (std::size_t p = 0; p < c.pos; ++p)
        leg += m.at(seq[p].first, seq[p].second) != 0;
      const LMatrix& local =
          c.sign > 0 ? oracle.braid(a, b) : oracle.braid_inverse(b, a);
      acc = embed(local, product(dims, 0, leg),
                  product(dims, leg + 2, dims.size())) *
            acc;
      std::swap(dims[leg], dims[leg + 1]);
    }
    std::swap(seq[c.pos], seq[c.pos + 1]);
  }
  return LinearMap{source, space_of(seq), std::move(acc)};
}

LinearMap lex_to_alex(const BialgebraOracle& oracle,
                      const ContingencyMatrix& m) {
  return braid_word_map(oracle, m, grid_braid_word(m.rows(), m.cols()), true);
}

LinearMap alex_to_lex(const BialgebraOracle& oracle,
                      const ContingencyMatrix& m) {
  return braid_word_map(oracle, m,
                        grid_braid_word(m.rows(), m.cols()).inverse(), false);
}

LinearMap elementary_mu_map(const BialgebraOracle& oracle,
                            const ContingencyMatrix& n, std::size_t k) {
  ContingencyMatrix m = contract(n, Axis::Vertical, k);
  std::vector<LMatrix> blocks;
  for (std::size_t j = 0; j < n.cols(); ++j)
    for (std::size_t i = 0; i < n.rows(); ++i) {
      int d = n.at(i, j);
      if (d == 0) continue;
      if (i == k - 1 && n.at(k, j) != 0) {
        blocks.push_back(oracle.mu(d, n.at(k, j)));
        ++i;
      } else {
        blocks.push_back(LMatrix::identity(oracle.dim(d)));
      }
    }
  return LinearMap{lex_space(oracle, n), lex_space(oracle, m), kron_all(blocks)};
}

LinearMap elementary_delta_map(const BialgebraOracle& oracle,
                               const ContingencyMatrix& m, std::size_t k,
                               const ContingencyMatrix& n) {
  if (k < 1 || k >= n.cols() || contract(n, Axis::Horizontal, k) != m)
    throw NotAnExpansion(n.key() + " does not contract to " + m.key() +
                         " at column " + std::to_string(k));
  std::vector<LMatrix> blocks;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      int d = m.at(i, j);
      if (d == 0) continue;
      int a = n.at(i, k - 1), b = n.at(i, k);
      if (j == k - 1 && a != 0 && b != 0)
        blocks.push_back(oracle.delta(a, b));
      else
        blocks.push_back(LMatrix::identity(oracle.dim(d)));
    }
  LinearMap mid{alex_space(oracle, m), alex_space(oracle, n), kron_all(blocks)};
  return compose(alex_to_lex(oracle, n),
                 compose(mid, lex_to_alex(oracle, m)));
}

const LinearMap& Evaluator::generator(const ContingencyMatrix& n, Axis axis,
                                      std::size_t k) const {
  auto key = std::make_tuple(n, axis, k, false);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  LinearMap f = axis == Axis::Horizontal
                    ? elementary_delta_map(*oracle_,
                                           contract(n, Axis::Horizontal, k), k, n)
                    : elementary_mu_map(*oracle_, n, k);
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.emplace(key, std::move(f)).first->second;
}

const LinearMap& Evaluator::generator_inverse(const ContingencyMatrix& n,
                                              Axis axis, std::size_t k) const {
  auto key = std::make_tuple(n, axis, k, true);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  LinearMap f = inverse(generator(n, axis, k));
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.emplace(key, std::move(f)).first->second;
}

LinearMap chain_map(const Evaluator& ev, const ContractionChain& chain) {
  const auto& mats = chain.mats;
  if (chain.axis == Axis::Horizontal) {
    LinearMap acc = LinearMap::identity(ev.space(mats.front()));
    for (std::size_t i = 0; i + 1 < mats.size(); ++i)
      acc = compose(ev.generator(mats[i + 1], Axis::Horizontal, chain.ks[i]),
                    acc);
    return acc;
  }
  LinearMap acc = LinearMap::identity(ev.space(mats.back()));
  for (std::size_t i = mats.size() - 1; i-- > 0;)
    acc = compose(ev.generator(mats[i + 1], Axis::Vertical, chain.ks[i]), acc);
  return acc;
}

LinearMap chain_map(const Evaluator& ev, const ContingencyMatrix& m,
                    const ContingencyMatrix& n, Axis axis) {
  return chain_map(ev, canonical_chain(m, n, axis));
}

LinearMap chain_map(const BialgebraOracle& oracle, const ContingencyMatrix& m,
                    const ContingencyMatrix& n, Axis axis) {
  Evaluator ev(std::shared_ptr<const BialgebraOracle>(
      &oracle, [](const BialgebraOracle*) {}));
  return chain_map(ev, m, n, axis);
}

}  // namespace cmprob
