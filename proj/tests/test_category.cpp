#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmprob/morphism.hpp"
#include "cmprob/taxicab.hpp"

using namespace cmprob;

namespace {

ContingencyMatrix M(const Grid& g) { return validate(g); }
const Laurent q1 = Laurent::q();

Laurent scalar_of(const LinearMap& f) {
  REQUIRE(f.matrix.rows() == 1);
  REQUIRE(f.matrix.cols() == 1);
  return f.matrix(0, 0);
}

// Sum over the gamma-chains of one path, evaluated.
LinearMap path_sum(const Evaluator& ev, const TaxicabPath& p,
                   const ContingencyMatrix& m, const ContingencyMatrix& l) {
  auto chains = gamma_chains(p, m, l);
  LinearMap acc{ev.space(m), ev.space(l),
                LMatrix(ev.space(l).dim(), ev.space(m).dim())};
  for (const auto& c : chains) acc = acc + evaluate(c.word, ev);
  return acc;
}

}  // namespace

TEST_CASE("word composition") {
  auto o = rank1_oracle();
  ContingencyMatrix a = M({{1, 0}, {0, 1}});
  MorphismWord w(contract(a, Axis::Horizontal, 1));
  w.append(GenStep::delta_fwd(a, 1));
  CHECK(compose(MorphismWord::identity(w.domain()), w) == w);
  CHECK(compose(w, MorphismWord::identity(w.codomain())) == w);

  MorphismWord round = compose(w, inverse(w));
  LinearMap f = evaluate(round, *o);
  CHECK(f.matrix == LMatrix::identity(1));

  CHECK_THROWS_AS(compose(w, MorphismWord::identity(M({{3}}))), DomainMismatch);
  CHECK_THROWS_AS(GenStep::delta_inv(M({{1, 1}}), 1), NonAnodyneInverse);
  CHECK_THROWS_AS(GenStep::mu_inv(M({{1}, {1}}), 1), NonAnodyneInverse);
  MorphismWord bad(M({{2}}));
  CHECK_THROWS_AS(bad.append(GenStep::mu_fwd(M({{1}, {1}}), 1)), DomainMismatch);
  CHECK(evaluate(MorphismWord::identity(M({{1, 2}})), *o).matrix ==
        LMatrix::identity(1));
}

TEST_CASE("the n = 2 anchor") {
  auto o = rank1_oracle();
  ContingencyMatrix col = M({{1}, {1}}), row = M({{1, 1}});
  MorphismWord w(col);
  w.append(GenStep::mu_fwd(col, 1));
  w.append(GenStep::delta_fwd(row, 1));
  CHECK(scalar_of(evaluate(w, *o)) == 1 + q1);

  auto sup = sup_set(col, row);
  REQUIRE(sup.size() == 2);
  FormalSum s(col, row);
  std::vector<Laurent> parts;
  for (const auto& x : sup) {
    MorphismWord t(col);
    t.append(GenStep::delta_fwd(x, 1));
    t.append(GenStep::mu_fwd(x, 1));
    s.add(1, t);
    parts.push_back(scalar_of(evaluate(t, *o)));
  }
  CHECK(scalar_of(evaluate(s, Evaluator(o))) == 1 + q1);
  std::sort(parts.begin(), parts.end(),
            [](const Laurent& a, const Laurent& b) {
              return a.max_exponent() < b.max_exponent();
            });
  CHECK(parts[0] == Laurent(1));
  CHECK(parts[1] == q1);

  CHECK(scalar_of(evaluate(compose(a_mu_word(1, 1), a_delta_word(1, 1)), *o)) ==
        1 + q1);
}

TEST_CASE("q-Vandermonde through the base change relation") {
  auto o = rank1_oracle();
  Evaluator ev(o);
  for (int m1 = 1; m1 <= 3; ++m1)
    for (int m2 = 1; m2 <= 3; ++m2)
      for (int l1 = 1; l1 < m1 + m2; ++l1) {
        int l2 = m1 + m2 - l1;
        ContingencyMatrix m = column_vector({m1, m2}), l = row_vector({l1, l2});
        MorphismWord lhs = compose(mu_chain_word(m, point(m1 + m2)),
                                   delta_chain_word(point(m1 + m2), l));
        CHECK(scalar_of(evaluate(lhs, ev)) == gaussian_binomial(m1 + m2, l1));
      }
}

TEST_CASE("exchange isomorphisms") {
  auto o = rank1_oracle();
  ContingencyMatrix id2 = M({{1, 0}, {0, 1}}), anti = M({{0, 1}, {1, 0}});
  MorphismWord v = exchange_word(id2, Axis::Vertical, 1);
  CHECK(v.codomain() == anti);
  CHECK(v.size() == 2);
  CHECK(scalar_of(evaluate(v, *o)) == Laurent(1));
  MorphismWord h = exchange_word(id2, Axis::Horizontal, 1);
  CHECK(h.codomain() == anti);
  CHECK(scalar_of(evaluate(h, *o)) == q1);
  CHECK_THROWS_AS(exchange_word(M({{1, 1}}), Axis::Horizontal, 1), NotDisjoint);

  // Exchanging back along the same contraction is formally trivial.
  MorphismWord twice = compose(v, exchange_word(anti, Axis::Vertical, 1));
  CHECK(evaluate(twice, *o).matrix == LMatrix::identity(1));
}

TEST_CASE("braiding words") {
  auto r1 = rank1_oracle();
  auto sh = shuffle_oracle(2);
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; m + n <= 6; ++n) {
      MorphismWord b = braiding_word(point(m), point(n));
      CHECK(b.codomain() == direct_sum(point(n), point(m)));
      CHECK(scalar_of(evaluate(b, *r1)) == Laurent::q(m * n));
      if (m + n <= 4) {
        CHECK(evaluate(b, *sh).matrix == sh->braid(m, n));
        MorphismWord back = braiding_word(point(n), point(m));
        CHECK(evaluate(compose(b, back), *sh).matrix ==
              sh->braid(n, m) * sh->braid(m, n));
        CHECK(scalar_of(evaluate(compose(b, back), *r1)) ==
              Laurent::q(2 * m * n));
      }
    }
  CHECK(braiding_word(ContingencyMatrix{}, M({{1, 1}})).size() == 0);
  CHECK(braiding_word(M({{1, 1}}), ContingencyMatrix{}).size() == 0);

  std::vector<std::pair<ContingencyMatrix, ContingencyMatrix>> pairs = {
      {M({{1, 1}}), M({{1}, {1}})},
      {M({{1, 0}, {1, 1}}), M({{1}})},
      {M({{1}, {1}}), M({{1, 1}})},
      {M({{1, 0}, {0, 1}}), M({{0, 1}, {1, 0}})},
  };
  for (const auto& [a, c] : pairs) {
    Evaluator ev(sh);
    LinearMap canon = evaluate(braiding_word(a, c), ev);
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
      CHECK(evaluate(braiding_word(a, c, seed), ev).matrix == canon.matrix);
    LinearMap inv = evaluate(inverse_braiding_word(c, a), ev);
    CHECK((inv.matrix * canon.matrix) == LMatrix::identity(canon.matrix.rows()));
  }
}

TEST_CASE("bialgebra words against the oracle") {
  for (auto o : {rank1_oracle(), shuffle_oracle(2)}) {
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; m + n <= 4; ++n) {
        CHECK(evaluate(a_mu_word(m, n), *o).matrix == o->mu(m, n));
        CHECK(evaluate(a_delta_word(m, n), *o).matrix == o->delta(m, n));
      }
  }
  CHECK(a_mu_word(2, 0).size() == 0);
  CHECK(a_delta_word(0, 3).codomain() == point(3));
  CHECK_THROWS_AS(a_mu_word(-1, 2), InvalidParameter);
}

TEST_CASE("taxicab paths and gamma-chains") {
  CHECK(taxicab_paths(2, 2).size() == 6);
  CHECK(taxicab_paths(0, 0).size() == 1);
  CHECK(taxicab_paths(3, 1).size() == 4);
  auto ps = taxicab_paths(2, 1);
  CHECK(ps.front().horizontal == std::vector<bool>{true, true, false});
  CHECK(ps.back().horizontal == std::vector<bool>{false, true, true});

  Evaluator ev(rank1_oracle());
  std::size_t pairs = 0;
  for (int w = 1; w <= 4; ++w) {
    auto all = enumerate(w);
    for (const auto& m : all)
      for (const auto& l : all) {
        if (!meet(m, l)) continue;
        ++pairs;
        auto [a, b] = taxicab_rectangle(m, l);
        auto paths = taxicab_paths(a, b);
        CHECK(gamma_chains(paths.front(), m, l).size() == 1);
        auto top = gamma_chains(paths.back(), m, l);
        auto sup = sup_set(m, l);
        REQUIRE(top.size() == sup.size());
        std::vector<ContingencyMatrix> corners;
        for (const auto& c : top) corners.push_back(c.mats[b]);
        std::sort(corners.begin(), corners.end());
        CHECK(corners == sup);
        if (w <= 3) {
          LinearMap first = path_sum(ev, paths.front(), m, l);
          for (const auto& p : paths)
            CHECK(path_sum(ev, p, m, l).matrix == first.matrix);
        }
      }
  }
  CHECK(pairs > 0);

  CHECK_THROWS_AS(taxicab_rectangle(M({{1, 1}}), M({{1}, {1}})), NoCanonicalChain);
  ContingencyMatrix col = M({{1}, {1}}), row = M({{1, 1}});
  auto any = gamma_chains(taxicab_paths(1, 1).back(), col, row, ChainSchedule::Any);
  CHECK(any.size() == 2);
  CHECK_THROWS_AS(gamma_chains(taxicab_paths(2, 1).front(), col, row),
                  InvalidParameter);
}
