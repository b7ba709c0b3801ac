#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cmprob/json_io.hpp"
#include "cmprob/morphism.hpp"

namespace cmprob {

// One evaluated identity. lhs/rhs hold the compared values: always for
// scalars, and for larger maps only when the check fails.
struct CheckResult {
  std::string suite;
  std::string instance;
  bool pass = true;
  Json lhs;
  Json rhs;
  std::string note;
};

class Report {
 public:
  void add(CheckResult r) { results_.push_back(std::move(r)); }
  void merge(Report other);
  // Orders results by (suite, instance).
  void sort();

  const std::vector<CheckResult>& results() const { return results_; }
  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }

  // Array of {suite, instance, status, lhs, rhs[, note]}.
  Json to_json() const;
  // One line per suite with pass/fail counts, then one line per failure.
  std::string summary() const;

 private:
  std::vector<CheckResult> results_;
};

// Compares two parallel maps.
CheckResult compare_maps(std::string suite, std::string instance,
                         const LinearMap& lhs, const LinearMap& rhs);

// Worker count from CMPROB_THREADS, else the hardware concurrency.
std::size_t worker_count();
// Runs task(0..n-1) on worker_count() threads. Each task fills its own
// report; an escaping Error becomes a failed result. The merged report is
// sorted.
Report run_parallel(std::size_t n, const std::string& suite,
                    const std::function<void(std::size_t, Report&)>& task);

// All elementary chains between each comparable pair evaluate equal.
Report verify_chain_independence(const Evaluator& ev, int max_weight);
// chain(L, N) = chain(M, N) o chain(L, M) for L <= M <= N.
Report verify_transitivity(const Evaluator& ev, int max_weight);
// Base change for M >='' N <=' L: mu then Delta through N equals the sum
// over O in Sup(M, L) of Delta then mu through O.
CheckResult verify_cm2(const ContingencyMatrix& m, const ContingencyMatrix& n,
                       const ContingencyMatrix& l, const Evaluator& ev);
Report verify_cm2_all(const Evaluator& ev, int max_weight);
// Every anodyne generator evaluates to an invertible map.
Report verify_anodyne_invertibility(const Evaluator& ev, int max_weight);
// The four suites above.
Report verify_relations(const Evaluator& ev, int max_weight);

// gamma-chain sums agree over all taxicab paths; also checks that the
// lowest path carries one chain and the highest path's corners are Sup.
Report verify_path_independence(const ContingencyMatrix& m,
                                const ContingencyMatrix& l, const Evaluator& ev);
Report verify_path_independence_all(const Evaluator& ev, int max_weight);

// Exchange hexagons and diamonds, commuting exchanges, naturality of the
// braiding, braiding triangles, compatibility with the tensor product of
// the target, and independence of the exchange interleaving.
Report verify_coherence(const Evaluator& ev, int max_weight);

// Associativity, coassociativity and compatibility of the bialgebra of
// single-entry matrices, its structure maps against the oracle, and for
// symbolic rank-1 the classical limit q = 1.
Report verify_a_bialgebra(const Evaluator& ev, int max_weight);

// evaluate(compose(w1, w2)) = evaluate(w2) o evaluate(w1) on random words.
Report verify_functoriality(const Evaluator& ev, int max_weight,
                            std::size_t samples, std::uint64_t seed);

// A random word of the given length from x along steps_from.
MorphismWord random_word(const ContingencyMatrix& x, std::size_t length,
                         std::mt19937_64& rng);

}  // namespace cmprob
