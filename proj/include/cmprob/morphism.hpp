#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cmprob/contmat.hpp"
#include "cmprob/eval.hpp"

namespace cmprob {

// One generator of the localized category, or the formal inverse of an
// anodyne one. `expanded` is the larger matrix N of the generator pair
// (contract(N, axis, k), N).
struct GenStep {
  enum class Kind { DeltaFwd, MuFwd, DeltaInv, MuInv };

  Kind kind = Kind::DeltaFwd;
  std::size_t k = 1;
  ContingencyMatrix expanded;
  ContingencyMatrix domain;
  ContingencyMatrix codomain;
  bool anodyne = false;

  // delta' : contract(n, H, k) -> n
  static GenStep delta_fwd(const ContingencyMatrix& n, std::size_t k);
  // delta'' : n -> contract(n, V, k)
  static GenStep mu_fwd(const ContingencyMatrix& n, std::size_t k);
  // Inverses, defined only for anodyne steps.
  static GenStep delta_inv(const ContingencyMatrix& n, std::size_t k);
  static GenStep mu_inv(const ContingencyMatrix& n, std::size_t k);

  Axis axis() const {
    return kind == Kind::DeltaFwd || kind == Kind::DeltaInv ? Axis::Horizontal
                                                            : Axis::Vertical;
  }
  bool is_inverse() const {
    return kind == Kind::DeltaInv || kind == Kind::MuInv;
  }
  GenStep inverted() const;

  friend bool operator==(const GenStep&, const GenStep&) = default;
};

// Composable steps read left to right: steps[0] is applied first.
class MorphismWord {
 public:
  MorphismWord() = default;
  explicit MorphismWord(ContingencyMatrix domain) : domain_(std::move(domain)) {}

  static MorphismWord identity(const ContingencyMatrix& m) {
    return MorphismWord(m);
  }

  const ContingencyMatrix& domain() const { return domain_; }
  const ContingencyMatrix& codomain() const {
    return steps_.empty() ? domain_ : steps_.back().codomain;
  }
  const std::vector<GenStep>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }

  MorphismWord& append(const GenStep& s);

  friend bool operator==(const MorphismWord&, const MorphismWord&) = default;

 private:
  ContingencyMatrix domain_;
  std::vector<GenStep> steps_;
};

// Every generator step and anodyne inverse with domain x.
std::vector<GenStep> steps_from(const ContingencyMatrix& x);

// w1 followed by w2.
MorphismWord compose(const MorphismWord& w1, const MorphismWord& w2);
// Reversed word of inverted steps; every step must be anodyne.
MorphismWord inverse(const MorphismWord& w);

struct FormalSum {
  ContingencyMatrix domain;
  ContingencyMatrix codomain;
  std::vector<std::pair<Rational, MorphismWord>> terms;

  FormalSum(ContingencyMatrix dom, ContingencyMatrix cod)
      : domain(std::move(dom)), codomain(std::move(cod)) {}
  FormalSum& add(const Rational& c, const MorphismWord& w);
};

LinearMap evaluate(const MorphismWord& w, const Evaluator& ev);
LinearMap evaluate(const FormalSum& s, const Evaluator& ev);
LinearMap evaluate(const MorphismWord& w, const BialgebraOracle& oracle);

// The exchange isomorphism of two adjacent disjoint lines, through the
// contraction merging them.
MorphismWord exchange_word(const ContingencyMatrix& m, Axis axis,
                           std::size_t k);

// Monoidal structure on words.
MorphismWord tensor_right(const MorphismWord& w, const ContingencyMatrix& n);
MorphismWord tensor_left(const ContingencyMatrix& n, const MorphismWord& w);
MorphismWord tensor(const MorphismWord& w1, const MorphismWord& w2);

// Braiding [M (+) N] -> [N (+) M]: block-column exchanges moving M's
// columns past N's, then block-row exchanges moving N's rows above M's.
// The canonical schedule moves the last M column first and the first N row
// first; with a seed, each phase picks its swaps at random.
MorphismWord braiding_word(const ContingencyMatrix& m, const ContingencyMatrix& n,
                           std::optional<std::uint64_t> seed = std::nullopt);
// [M (+) N] -> [N (+) M] with rows first, then columns. Evaluates to the
// inverse of the braiding of (N, M).
MorphismWord inverse_braiding_word(const ContingencyMatrix& m,
                                   const ContingencyMatrix& n);

// [[p]] for p > 0 and the empty matrix for p = 0.
ContingencyMatrix point(int p);

// Multiplication [m] (x) [n] -> [m+n] and comultiplication [m+n] ->
// [m] (x) [n] of the bialgebra object built from single-entry matrices.
MorphismWord a_mu_word(int m, int n);
MorphismWord a_delta_word(int m, int n);

// Words along the canonical chains: Delta_{M,N} for M <=' N, and
// mu_{N,M} for M <='' N (from N to M).
MorphismWord delta_chain_word(const ContingencyMatrix& m,
                              const ContingencyMatrix& n);
MorphismWord mu_chain_word(const ContingencyMatrix& n,
                           const ContingencyMatrix& m);
MorphismWord chain_word(const ContractionChain& chain);

}  // namespace cmprob
