// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "cmprob/quiver.hpp"
#include "cmprob/taxicab.hpp"
#include "cmprob/verify.hpp"
#include "margin_enumeration.hpp"

using namespace cmprob;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
  // Folds a report in and notes its size.
  void require(const Report& r, const std::string& what) {
    detail << ' ' << what << '=' << r.passed() << '/' << r.results().size();
    if (!r.ok()) {
      pass = false;
      for (const auto& c : r.results())
        if (!c.pass) {
          detail << " [first failure: " << c.suite << ' ' << c.instance << "]";
          break;
        }
    }
  }
};

bool run_criterion(int id, const char* title, const std::function<void(Verdict&)>& body) {
  Verdict v;
  auto start = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail << " [exception: " << e.what() << "]";
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s criterion %d: %s;%s (%.1fs)\n", v.pass ? "PASS" : "FAIL", id, title,
              v.detail.str().c_str(), secs);
  std::fflush(stdout);
  return v.pass;
}

Laurent scalar(const LinearMap& f) {
  if (f.matrix.rows() != 1 || f.matrix.cols() != 1) throw DomainMismatch("not a scalar");
  return f.matrix(0, 0);
}

void enumeration(Verdict& v) {
  const std::vector<std::size_t> counts{1, 1, 5, 33};
  for (int n = 1; n <= 3; ++n)
    v.require(enumerate(n).size() == counts[n], "|CM_" + std::to_string(n) + "|");
  for (int n = 0; n <= 5; ++n)
    v.require(enumerate(n) == margins::enumerate_by_margins(n),
              "two enumerations of CM_" + std::to_string(n));
  const std::vector<std::size_t> p{1, 2, 3, 5, 7};
  for (int n = 1; n <= 5; ++n) {
    auto classes = anodyne_classes(n);
    v.require(classes.size() == p[n - 1], "class count " + std::to_string(n));
    std::map<IntegerPartition, std::set<ContingencyMatrix>> fibers;
    for (const auto& m : enumerate(n)) fibers[entry_partition(m)].insert(m);
    std::set<std::set<ContingencyMatrix>> a, b;
    for (const auto& c : classes) a.insert({c.begin(), c.end()});
    for (const auto& [part, f] : fibers) b.insert(f);
    v.require(a == b, "class fibers at weight " + std::to_string(n));
  }
  v.detail << " |CM_n| n=1..5 agree by two strategies";
}

void base_change(Verdict& v) {
  Evaluator sym(rank1_oracle());
  ContingencyMatrix col = validate({{1}, {1}}), row = validate({{1, 1}});
  CheckResult step1 = verify_cm2(col, point(2), row, sym);
  Laurent one_plus_q = Laurent(1) + Laurent::q();
  v.require(step1.pass && laurent_from_json(step1.lhs) == one_plus_q &&
                laurent_from_json(step1.rhs) == one_plus_q,
            "n=2 instance equals 1+q on both sides");
  v.require(verify_cm2_all(sym, 5), "rank1-w5");
  v.require(verify_cm2_all(Evaluator(shuffle_oracle(2, Rational(2))), 4), "shuffle-w4");
}

void coherence(Verdict& v) {
  v.require(verify_coherence(Evaluator(rank1_oracle()), 4), "rank1-w4");
  v.require(verify_coherence(Evaluator(shuffle_oracle(2, Rational(2))), 4), "shuffle-w4");
  auto o = rank1_oracle();
  int checked = 0;
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; m + n <= 6; ++n, ++checked)
      v.require(scalar(evaluate(braiding_word(point(m), point(n)), *o)) == Laurent::q(m * n),
                "R_[" + std::to_string(m) + "],[" + std::to_string(n) + "] = q^mn");
  v.detail << " q^mn=" << checked << " pairs";
}

void bialgebra(Verdict& v) {
  Report sym = verify_a_bialgebra(Evaluator(rank1_oracle()), 5);
  v.require(sym, "rank1-w5");
  std::size_t classical = 0;
  for (const auto& c : sym.results())
    if (c.suite == "classical-limit" && c.pass) ++classical;
  v.require(classical > 0, "classical multinomials at q=1");
  v.detail << " classical=" << classical;
  v.require(verify_a_bialgebra(Evaluator(shuffle_oracle(2, Rational(2))), 4), "shuffle-w4");
}

QMatrix random_q(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      Rational x(num(rng), den(rng));
      x.canonicalize();
      m(i, j) = x;
    }
  return m;
}

// Passing representation iff det(Id - ab) != 0, in both directions.
bool equivalence_holds(const PhiPsiDiagram& d) {
  bool regular = determinant(t_psi(d)) != 0;
  try {
    Representation rep = from_phi_psi(d);
    return regular && check_representation(rep).ok() && to_phi_psi(rep) == d;
  } catch (const SingularT&) {
    return !regular;
  }
}

void phi_psi(Verdict& v) {
  std::mt19937_64 rng(2);
  int regular = 0, singular = 0;
  for (int s = 0; s < 100; ++s) {
    PhiPsiDiagram d{3, 3, random_q(rng, 3, 3), random_q(rng, 3, 3)};
    // Some samples are made singular on purpose: b = a^-1 (Id + e11).
    if (s % 5 == 4) {
      QMatrix a;
      do a = random_q(rng, 3, 3);
      while (determinant(a) == 0);
      QMatrix shift = QMatrix::identity(3);
      shift(0, 0) = Rational(2);
      d.a = a;
      d.b = inverse(a) * shift;
    }
    (determinant(t_psi(d)) != 0 ? regular : singular)++;
    v.require(equivalence_holds(d), "sample " + std::to_string(s));
  }
  v.detail << " samples regular=" << regular << " singular=" << singular;
  v.require(singular > 0 && regular > 0, "both kinds of sample occur");

  PhiPsiDiagram zero{3, 3, QMatrix(3, 3), QMatrix(3, 3)};
  v.require(equivalence_holds(zero), "a=b=0 passes");
  PhiPsiDiagram ones{1, 1, QMatrix::scalar(1), QMatrix::scalar(1)};
  bool threw = false;
  try {
    from_phi_psi(ones);
  } catch (const SingularT&) {
    threw = true;
  }
  v.require(threw, "a=b=1 is SingularT");
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion(1, "enumeration and anodyne classes", enumeration);
  ok &= run_criterion(2, "chain independence, rank1 symbolic, weight <= 5", [](Verdict& v) {
    v.require(verify_chain_independence(Evaluator(rank1_oracle()), 5), "rank1-w5");
  });
  ok &= run_criterion(3, "base change relation", base_change);
  ok &= run_criterion(4, "path independence of gamma-chain sums, weight <= 4", [](Verdict& v) {
    v.require(verify_path_independence_all(Evaluator(rank1_oracle()), 4), "rank1-w4");
    v.require(verify_path_independence_all(Evaluator(shuffle_oracle(2, Rational(2))), 4),
              "shuffle-w4");
  });
  ok &= run_criterion(5, "coherence of exchanges and braidings", coherence);
  ok &= run_criterion(6, "bialgebra of single-entry matrices", bialgebra);
  ok &= run_criterion(7, "weight-2 (Phi, Psi) equivalence", phi_psi);
  ok &= run_criterion(8, "functoriality on 200 random word pairs, weight <= 4", [](Verdict& v) {
    v.require(verify_functoriality(Evaluator(rank1_oracle()), 4, 200, 1), "rank1");
    v.require(verify_functoriality(Evaluator(shuffle_oracle(2, Rational(2))), 4, 200, 2),
              "shuffle");
  });
  return ok ? 0 : 1;
}
