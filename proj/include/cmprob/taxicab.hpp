#pragma once

#include <vector>

#include "cmprob/contmat.hpp"
#include "cmprob/morphism.hpp"

namespace cmprob {

// Monotone lattice path from (0,0) to (a,b). A horizontal unit step is a
// row merge, a vertical one a column split.
struct TaxicabPath {
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<bool> horizontal;  // length a + b

  friend bool operator==(const TaxicabPath&, const TaxicabPath&) = default;
};

// All C(a+b, a) paths, starting with the one taking every horizontal step
// first and ending with the one taking every vertical step first.
std::vector<TaxicabPath> taxicab_paths(std::size_t a, std::size_t b);

struct GammaChain {
  std::vector<ContingencyMatrix> mats;  // a + b + 1 matrices, M first, L last
  MorphismWord word;
};

enum class ChainSchedule {
  // Row merges follow the canonical chain from M down to meet(M, L), and
  // column splits the canonical chain from meet(M, L) up to L.
  Canonical,
  // Any elementary merge or split, in any order.
  Any,
};

// The rectangle a = rows(M) - rows(N), b = cols(L) - cols(N) for
// N = meet(M, L).
std::pair<std::size_t, std::size_t> taxicab_rectangle(const ContingencyMatrix& m,
                                                      const ContingencyMatrix& l);

std::vector<GammaChain> gamma_chains(const TaxicabPath& path,
                                     const ContingencyMatrix& m,
                                     const ContingencyMatrix& l,
                                     ChainSchedule schedule = ChainSchedule::Canonical);

}  // namespace cmprob
