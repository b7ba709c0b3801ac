#include "cmprob/taxicab.hpp"

namespace cmprob {

std::vector<TaxicabPath> taxicab_paths(std::size_t a, std::size_t b) {
  std::vector<TaxicabPath> out;
  TaxicabPath cur{a, b, {}};
  auto rec = [&](auto&& self, std::size_t h, std::size_t v) -> void {
    if (h == 0 && v == 0) {
      out.push_back(cur);
      return;
    }
    if (h > 0) {
      cur.horizontal.push_back(true);
      self(self, h - 1, v);
      cur.horizontal.pop_back();
    }
    if (v > 0) {
      cur.horizontal.push_back(false);
      self(self, h, v - 1);
      cur.horizontal.pop_back();
    }
  };
  rec(rec, a, b);
  return out;
}

std::pair<std::size_t, std::size_t> taxicab_rectangle(
    const ContingencyMatrix& m, const ContingencyMatrix& l) {
  auto n = meet(m, l);
  if (!n) throw NoCanonicalChain("no common contraction of " + m.key() +
                                 " and " + l.key());
  return {m.rows() - n->rows(), l.cols() - n->cols()};
}

std::vector<GammaChain> gamma_chains(const TaxicabPath& path,
                                     const ContingencyMatrix& m,
                                     const ContingencyMatrix& l,
                                     ChainSchedule schedule) {
  auto n = meet(m, l);
  if (!n) throw NoCanonicalChain("no common contraction of " + m.key() +
                                 " and " + l.key());
  auto [a, b] = taxicab_rectangle(m, l);
  if (path.a != a || path.b != b || path.horizontal.size() != a + b)
    throw InvalidParameter("path does not fit the rectangle of " + m.key() +
                           " and " + l.key());
  ContractionChain rows = canonical_chain(*n, m, Axis::Vertical);
  ContractionChain cols = canonical_chain(*n, l, Axis::Horizontal);

  std::vector<GammaChain> out;
  GammaChain cur{{m}, MorphismWord(m)};
  auto rec = [&](auto&& self, std::size_t step, std::size_t x,
                 std::size_t y) -> void {
    const ContingencyMatrix here = cur.mats.back();
    if (step == a + b) {
      if (here == l) out.push_back(cur);
      return;
    }
    auto push = [&](const ContingencyMatrix& next, const GenStep& g) {
      if (!meet(next, l)) return;
      cur.mats.push_back(next);
      MorphismWord saved = cur.word;
      cur.word.append(g);
      bool h = path.horizontal[step];
      self(self, step + 1, x + (h ? 1 : 0), y + (h ? 0 : 1));
      cur.word = std::move(saved);
      cur.mats.pop_back();
    };
    if (path.horizontal[step]) {
      if (schedule == ChainSchedule::Canonical) {
        std::size_t k = rows.ks[a - 1 - x];
        push(contract(here, Axis::Vertical, k), GenStep::mu_fwd(here, k));
      } else {
        for (std::size_t k = 1; k < here.rows(); ++k)
          push(contract(here, Axis::Vertical, k), GenStep::mu_fwd(here, k));
      }
    } else {
      std::vector<std::size_t> ks;
      if (schedule == ChainSchedule::Canonical) {
        ks.push_back(cols.ks[y]);
      } else {
        for (std::size_t k = 1; k <= here.cols(); ++k) ks.push_back(k);
      }
      for (std::size_t k : ks)
        for (const auto& next : expansions(here, Axis::Horizontal, k)) {
          if (schedule == ChainSchedule::Canonical &&
              next.col_sums() != cols.mats[y + 1].col_sums())
            continue;
          push(next, GenStep::delta_fwd(next, k));
        }
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

}  // namespace cmprob
