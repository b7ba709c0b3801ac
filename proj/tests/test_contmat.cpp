#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "cmprob/contmat.hpp"
#include "margin_enumeration.hpp"

using namespace cmprob;

namespace {

ContingencyMatrix M(const Grid& g) { return validate(g); }

// Reachability by single contractions, the literal definition of the orders.
bool leq_bfs(const ContingencyMatrix& m, const ContingencyMatrix& n, Axis axis) {
  std::set<ContingencyMatrix> seen{n};
  std::vector<ContingencyMatrix> todo{n};
  while (!todo.empty()) {
    auto x = todo.back();
    todo.pop_back();
    if (x == m) return true;
    for (std::size_t k = 1; k < x.lines(axis); ++k) {
      auto y = contract(x, axis, k);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return false;
}

std::vector<ContingencyMatrix> sup_brute(const ContingencyMatrix& m,
                                         const ContingencyMatrix& l) {
  std::vector<ContingencyMatrix> out;
  for (const auto& o : enumerate(m.weight(), std::make_pair(m.rows(), l.cols())))
    if (leq_bfs(m, o, Axis::Horizontal) && leq_bfs(l, o, Axis::Vertical))
      out.push_back(o);
  return out;
}

}  // namespace

TEST_CASE("validate") {
  auto m = M({{1, 0, 2}, {0, 4, 3}});
  CHECK(m.weight() == 10);
  CHECK(M({}).empty());
  CHECK(M({}).weight() == 0);
  try {
    M({{1, 0}, {2, 0}});
    FAIL("expected ZeroLine");
  } catch (const ZeroLine& e) {
    CHECK(e.axis() == Axis::Horizontal);
    CHECK(e.index() == 2);
  }
  CHECK_THROWS_AS(M({{1, -1}}), NegativeEntry);
  CHECK_THROWS_AS(M({{0, 0}, {1, 1}}), ZeroLine);
}

TEST_CASE("contract") {
  CHECK(contract(M({{1, 0, 2}, {0, 4, 3}}), Axis::Horizontal, 1) ==
        M({{1, 2}, {4, 3}}));
  CHECK(contract(M({{1}, {1}}), Axis::Vertical, 1) == M({{2}}));
  CHECK_THROWS_AS(contract(M({{2}}), Axis::Horizontal, 1), IndexOutOfRange);
  CHECK_THROWS_AS(contract(M({{1, 1}}), Axis::Horizontal, 0), IndexOutOfRange);
}

TEST_CASE("expansions agree with brute-force preimages") {
  CHECK(expansions(M({{2}}), Axis::Horizontal, 1) ==
        std::vector<ContingencyMatrix>{M({{1, 1}})});
  auto e = expansions(M({{1}, {1}}), Axis::Horizontal, 1);
  std::vector<ContingencyMatrix> want{M({{0, 1}, {1, 0}}), M({{1, 0}, {0, 1}})};
  CHECK(e == want);
  CHECK_THROWS_AS(expansions(ContingencyMatrix{}, Axis::Horizontal, 1),
                  IndexOutOfRange);
  for (int n = 1; n <= 4; ++n) {
    auto all = enumerate(n);
    for (const auto& m : all)
      for (Axis axis : {Axis::Horizontal, Axis::Vertical})
        for (std::size_t k = 1; k <= m.lines(axis); ++k) {
          std::vector<ContingencyMatrix> brute;
          for (const auto& x : all)
            if (x.lines(axis) == m.lines(axis) + 1 && contract(x, axis, k) == m)
              brute.push_back(x);
          CHECK(expansions(m, axis, k) == brute);
        }
  }
}

TEST_CASE("leq examples and agreement with reachability") {
  CHECK(leq(M({{1, 2}, {4, 3}}), M({{1, 0, 2}, {0, 4, 3}}), Axis::Horizontal));
  CHECK(leq(M({{2}}), M({{2}}), Axis::Vertical));
  CHECK_FALSE(leq(M({{2}}), M({{1, 1}}), Axis::Vertical));
  for (int n = 0; n <= 4; ++n) {
    auto all = enumerate(n);
    for (const auto& a : all)
      for (const auto& b : all)
        for (Axis axis : {Axis::Horizontal, Axis::Vertical})
          CHECK(leq(a, b, axis) == leq_bfs(a, b, axis));
  }
}

TEST_CASE("leq is a partial order on CM_n for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    auto all = enumerate(n);
    for (Axis axis : {Axis::Horizontal, Axis::Vertical}) {
      // Comparable matrices share the number of lines across the axis.
      std::map<std::size_t, std::vector<ContingencyMatrix>> bucket;
      for (const auto& m : all)
        bucket[axis == Axis::Horizontal ? m.rows() : m.cols()].push_back(m);
      std::size_t bad = 0;
      for (const auto& [key, mats] : bucket) {
        std::vector<std::vector<std::size_t>> up(mats.size());
        for (std::size_t i = 0; i < mats.size(); ++i) {
          if (!leq(mats[i], mats[i], axis)) ++bad;
          for (std::size_t j = 0; j < mats.size(); ++j)
            if (leq(mats[i], mats[j], axis)) up[i].push_back(j);
        }
        for (std::size_t i = 0; i < mats.size(); ++i)
          for (std::size_t j : up[i]) {
            if (j != i && std::count(up[j].begin(), up[j].end(), i)) ++bad;
            for (std::size_t k : up[j])
              if (!std::binary_search(up[i].begin(), up[i].end(), k)) ++bad;
          }
      }
      CHECK(bad == 0);
    }
  }
}

TEST_CASE("bi-semisimplicial identities for n <= 5") {
  std::size_t checked = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& m : enumerate(n)) {
      for (Axis axis : {Axis::Horizontal, Axis::Vertical}) {
        std::size_t len = m.lines(axis);
        for (std::size_t j = 1; j + 1 < len; ++j)
          for (std::size_t k = j + 1; k < len; ++k) {
            // Merge k,k+1 first, then j,j+1; equals j first then k-1.
            auto a = contract(contract(m, axis, k), axis, j);
            auto b = contract(contract(m, axis, j), axis, k - 1);
            CHECK(a == b);
            ++checked;
          }
      }
      for (std::size_t j = 1; j < m.cols(); ++j)
        for (std::size_t i = 1; i < m.rows(); ++i) {
          auto a = contract(contract(m, Axis::Horizontal, j), Axis::Vertical, i);
          auto b = contract(contract(m, Axis::Vertical, i), Axis::Horizontal, j);
          CHECK(a == b);
          ++checked;
        }
      for (Axis axis : {Axis::Horizontal, Axis::Vertical})
        for (std::size_t k = 1; k < m.lines(axis); ++k)
          CHECK(contract(m, axis, k).weight() == n);
    }
  CHECK(checked > 0);
}

TEST_CASE("anodyne steps and chains") {
  auto n = M({{1, 0, 2}, {0, 4, 3}});
  CHECK(is_anodyne_step(n, Axis::Horizontal, 1));
  CHECK_FALSE(is_anodyne_step(M({{1, 1}}), Axis::Horizontal, 1));
  CHECK(is_anodyne_step(M({{1, 0}, {0, 1}}), Axis::Vertical, 1));
  CHECK(is_anodyne_leq(M({{1, 2}, {4, 3}}), n, Axis::Horizontal));
  CHECK_FALSE(is_anodyne_leq(M({{2}}), M({{1, 1}}), Axis::Horizontal));
  CHECK(is_anodyne_leq(n, n, Axis::Horizontal));
  CHECK_THROWS_AS(is_anodyne_leq(M({{1, 1}}), M({{2}}), Axis::Horizontal),
                  NotComparable);
  // Oracle: some full contraction chain made only of anodyne steps.
  for (int w = 1; w <= 4; ++w) {
    auto all = enumerate(w);
    for (const auto& a : all)
      for (const auto& b : all)
        for (Axis axis : {Axis::Horizontal, Axis::Vertical}) {
          if (!leq(a, b, axis)) continue;
          bool any = false;
          for (const auto& ch : contraction_chains(a, b, axis)) {
            bool all_anodyne = true;
            for (std::size_t i = 0; i < ch.ks.size(); ++i)
              all_anodyne = all_anodyne &&
                            is_anodyne_step(ch.mats[i + 1], axis, ch.ks[i]);
            any = any || all_anodyne;
          }
          CHECK(is_anodyne_leq(a, b, axis) == any);
        }
  }
}

TEST_CASE("contraction chains") {
  auto chains = contraction_chains(M({{3}}), M({{1, 1, 1}}), Axis::Horizontal);
  CHECK(chains.size() == 2);
  for (const auto& c : chains) {
    CHECK(c.mats.front() == M({{3}}));
    CHECK(c.mats.back() == M({{1, 1, 1}}));
    for (std::size_t i = 0; i < c.ks.size(); ++i)
      CHECK(contract(c.mats[i + 1], Axis::Horizontal, c.ks[i]) == c.mats[i]);
  }
  auto can = canonical_chain(M({{2, 2}}), M({{1, 1, 1, 1}}), Axis::Horizontal);
  CHECK(can.mats.size() == 3);
  CHECK(contraction_chains(M({{2, 2}}), M({{1, 1, 1, 1}}), Axis::Horizontal)
            .size() == 2);
}

TEST_CASE("meet") {
  CHECK(meet(M({{1}, {1}}), M({{1, 1}})) == M({{2}}));
  CHECK(meet(M({{3}}), M({{3}})) == M({{3}}));
  CHECK_FALSE(meet(M({{1, 1}}), M({{1}, {1}})).has_value());
  for (int n = 0; n <= 4; ++n) {
    auto all = enumerate(n);
    std::map<ContingencyMatrix, std::set<ContingencyMatrix>> down_v, down_h;
    for (const auto& m : all)
      for (const auto& x : all) {
        if (leq_bfs(x, m, Axis::Vertical)) down_v[m].insert(x);
        if (leq_bfs(x, m, Axis::Horizontal)) down_h[m].insert(x);
      }
    for (const auto& m : all)
      for (const auto& l : all) {
        std::vector<ContingencyMatrix> found;
        std::set_intersection(down_v[m].begin(), down_v[m].end(),
                              down_h[l].begin(), down_h[l].end(),
                              std::back_inserter(found));
        CHECK(found.size() <= 1);
        auto got = meet(m, l);
        CHECK(got.has_value() == !found.empty());
        if (got && !found.empty()) CHECK(*got == found[0]);
      }
  }
}

TEST_CASE("sup_set") {
  std::vector<ContingencyMatrix> two{M({{0, 1}, {1, 0}}), M({{1, 0}, {0, 1}})};
  CHECK(sup_set(M({{1}, {1}}), M({{1, 1}})) == two);
  CHECK(sup_set(M({{4}}), M({{4}})) == std::vector<ContingencyMatrix>{M({{4}})});
  std::vector<ContingencyMatrix> want{M({{0, 2}, {1, 0}}), M({{1, 1}, {0, 1}})};
  CHECK(sup_set(M({{2}, {1}}), M({{1, 2}})) == want);
  CHECK_THROWS_AS(sup_set(M({{1, 1}}), M({{1}, {1}})), NoMeet);
  for (int n = 1; n <= 4; ++n) {
    auto all = enumerate(n);
    for (const auto& m : all)
      for (const auto& l : all)
        if (meet(m, l)) CHECK(sup_set(m, l) == sup_brute(m, l));
  }
}

TEST_CASE("Sup is a singleton across an anodyne side, and anodyne propagates") {
  // Square O >='' L, O >=' M, L >=' N, M >='' N.
  for (int n = 1; n <= 4; ++n) {
    auto all = enumerate(n);
    for (const auto& m : all)
      for (const auto& l : all) {
        auto nn = meet(m, l);
        if (!nn) continue;
        bool m_anod = is_anodyne_leq(*nn, m, Axis::Vertical);
        bool l_anod = is_anodyne_leq(*nn, l, Axis::Horizontal);
        auto sups = sup_set(m, l);
        if (m_anod || l_anod) CHECK(sups.size() == 1);
        if (l_anod)
          for (const auto& o : sups) CHECK(is_anodyne_leq(m, o, Axis::Horizontal));
        if (m_anod)
          for (const auto& o : sups) CHECK(is_anodyne_leq(l, o, Axis::Vertical));
      }
  }
}

TEST_CASE("direct sum and exchange") {
  CHECK(direct_sum(M({{2}}), M({{1, 1}})) == M({{2, 0, 0}, {0, 1, 1}}));
  auto x = M({{1, 2}, {0, 3}});
  CHECK(direct_sum(ContingencyMatrix{}, x) == x);
  CHECK(direct_sum(x, ContingencyMatrix{}) == x);
  CHECK(direct_sum(x, M({{4}})).weight() == x.weight() + 4);
  CHECK(exchange(M({{1, 0}, {0, 1}}), Axis::Vertical, 1) == M({{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(exchange(M({{1, 1}}), Axis::Horizontal, 1), NotDisjoint);
  CHECK_THROWS_AS(exchange(M({{1, 0}, {0, 1}}), Axis::Vertical, 2),
                  IndexOutOfRange);
  // Moving the block of [[2]] past the rows of [[1],[1]] by single swaps
  // realizes the block permutation.
  auto s = direct_sum(M({{2}}), M({{1}, {1}}));
  s = exchange(s, Axis::Vertical, 1);
  s = exchange(s, Axis::Vertical, 2);
  CHECK(s == M({{0, 1}, {0, 1}, {2, 0}}));
}

TEST_CASE("enumeration counts from two strategies") {
  std::vector<std::size_t> want{1, 1, 5, 33, 281, 2961};
  for (int n = 0; n <= 5; ++n) {
    auto a = enumerate(n);
    CHECK(a.size() == want[n]);
    CHECK(a == margins::enumerate_by_margins(n));
    CHECK(std::is_sorted(a.begin(), a.end()));
    CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
  }
  auto shaped = enumerate(3, std::make_pair(std::size_t{2}, std::size_t{2}));
  for (const auto& m : shaped) CHECK((m.rows() == 2 && m.cols() == 2));
}

TEST_CASE("entry partition and anodyne classes") {
  CHECK(entry_partition(M({{1, 0, 2}, {0, 4, 3}})).parts ==
        std::vector<int>{4, 3, 2, 1});
  CHECK(entry_partition(M({{5}})).parts == std::vector<int>{5});
  std::vector<std::size_t> p{1, 2, 3, 5, 7};
  for (int n = 1; n <= 5; ++n) {
    auto classes = anodyne_classes(n);
    CHECK(classes.size() == p[n - 1]);
    CHECK(partitions(n).size() == p[n - 1]);
    std::set<IntegerPartition> seen;
    std::size_t total = 0;
    for (const auto& cls : classes) {
      total += cls.size();
      auto part = entry_partition(cls.front());
      for (const auto& m : cls) CHECK(entry_partition(m) == part);
      CHECK(seen.insert(part).second);
      std::size_t diag = 0;
      for (const auto& m : cls)
        if (m == diagonal(part.parts)) ++diag;
      CHECK(diag == 1);
    }
    CHECK(total == enumerate(n).size());
    for (const auto& m : enumerate(n))
      for (Axis axis : {Axis::Horizontal, Axis::Vertical})
        for (std::size_t k = 1; k < m.lines(axis); ++k)
          if (is_anodyne_step(m, axis, k)) {
            CHECK(entry_partition(exchange(m, axis, k)) == entry_partition(m));
            CHECK(entry_partition(contract(m, axis, k)) == entry_partition(m));
          }
  }
  auto two = anodyne_classes(2);
  CHECK(two[0] == std::vector<ContingencyMatrix>{M({{2}})});
  CHECK(two[1].size() == 4);
}

TEST_CASE("poset export") {
  auto dot = poset_dot(2, Axis::Horizontal);
  CHECK(dot.find("digraph horizontal_w2") != std::string::npos);
  CHECK(dot.find("style=solid") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("label=\"1 1\"") != std::string::npos);
}
