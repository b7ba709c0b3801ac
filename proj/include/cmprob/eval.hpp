#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "cmprob/contmat.hpp"
#include "cmprob/oracle.hpp"

namespace cmprob {

// A tensor factor A_degree sitting at grid position (row, col), 1-based.
struct GradedLeg {
  int degree = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const GradedLeg&, const GradedLeg&) = default;
};

struct TensorSpace {
  std::vector<GradedLeg> legs;
  std::vector<std::size_t> dims;  // per leg

  std::size_t dim() const;
  // Spaces are identified by their legs; dims follow from the oracle.
  friend bool operator==(const TensorSpace& a, const TensorSpace& b) {
    return a.legs == b.legs;
  }
};

struct LinearMap {
  TensorSpace source;
  TensorSpace target;
  LMatrix matrix;  // dim(target) x dim(source)

  static LinearMap identity(const TensorSpace& s);
  friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

// g after f.
LinearMap compose(const LinearMap& g, const LinearMap& f);
LinearMap operator+(const LinearMap& a, const LinearMap& b);
LinearMap scale(const Laurent& c, const LinearMap& f);
// Kronecker product; legs are concatenated as given.
LinearMap tensor(const LinearMap& f, const LinearMap& g);
LinearMap inverse(const LinearMap& f);
bool is_invertible(const LinearMap& f);

// Nonzero entries of m read column by column (Lex) or row by row (Alex).
TensorSpace lex_space(const BialgebraOracle& oracle, const ContingencyMatrix& m);
TensorSpace alex_space(const BialgebraOracle& oracle,
                       const ContingencyMatrix& m);

// Adjacent transpositions on an ordered set of strands. pos is the 0-based
// index of the left strand; sign +1 crosses by braid, -1 by its inverse.
struct Crossing {
  std::size_t pos = 0;
  int sign = 1;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct BraidWord {
  std::size_t strands = 0;
  std::vector<Crossing> crossings;

  BraidWord inverse() const;
};

// Word taking the column-major order of an r x s grid to the row-major
// order. Every crossing is negative; its inverse consists of positive
// crossings.
BraidWord grid_braid_word(std::size_t r, std::size_t s);

// Evaluates a word on the legs of m. `start` lists the grid positions in
// their initial order (all r*s of them); strands on zero entries are
// suppressed.
LinearMap braid_word_map(const BialgebraOracle& oracle,
                         const ContingencyMatrix& m, const BraidWord& word,
                         bool start_from_lex);

// Lex -> Alex and back.
LinearMap lex_to_alex(const BialgebraOracle& oracle, const ContingencyMatrix& m);
LinearMap alex_to_lex(const BialgebraOracle& oracle, const ContingencyMatrix& m);

// mu_{N, contract(N, V, k)} in Lex determination.
LinearMap elementary_mu_map(const BialgebraOracle& oracle,
                            const ContingencyMatrix& n, std::size_t k);
// Delta_{M,N} for contract(N, H, k) == m, computed as
// alex_to_lex(N) . Delta_Alex . lex_to_alex(M).
LinearMap elementary_delta_map(const BialgebraOracle& oracle,
                               const ContingencyMatrix& m, std::size_t k,
                               const ContingencyMatrix& n);

// Memoizing front end for the elementary maps; safe to share across
// threads.
class Evaluator {
 public:
  explicit Evaluator(std::shared_ptr<const BialgebraOracle> oracle)
      : oracle_(std::move(oracle)) {}

  const BialgebraOracle& oracle() const { return *oracle_; }
  std::shared_ptr<const BialgebraOracle> oracle_ptr() const { return oracle_; }

  // The forward generator attached to the expanded matrix n: for
  // Horizontal, Delta from contract(n, H, k) to n; for Vertical, mu from n
  // to contract(n, V, k).
  const LinearMap& generator(const ContingencyMatrix& n, Axis axis,
                             std::size_t k) const;
  const LinearMap& generator_inverse(const ContingencyMatrix& n, Axis axis,
                                     std::size_t k) const;

  TensorSpace space(const ContingencyMatrix& m) const {
    return lex_space(*oracle_, m);
  }

 private:
  std::shared_ptr<const BialgebraOracle> oracle_;
  mutable std::mutex mutex_;
  mutable std::map<std::tuple<ContingencyMatrix, Axis, std::size_t, bool>,
                   LinearMap>
      cache_;
};

// Composite of the elementary maps along one chain: Delta_{M,N} for
// Horizontal (M <=' N), mu_{N,M} for Vertical (M <='' N).
LinearMap chain_map(const Evaluator& ev, const ContractionChain& chain);
LinearMap chain_map(const Evaluator& ev, const ContingencyMatrix& m,
                    const ContingencyMatrix& n, Axis axis);
LinearMap chain_map(const BialgebraOracle& oracle, const ContingencyMatrix& m,
                    const ContingencyMatrix& n, Axis axis);

}  // namespace cmprob
