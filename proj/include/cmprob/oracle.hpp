#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

#include "cmprob/laurent.hpp"
#include "cmprob/matrix.hpp"

namespace cmprob {

using LMatrix = Matrix<Laurent>;

// A braided graded bialgebra with finite-dimensional components, given by
// its structure matrices on A_n. Degree-0 components are the unit and are
// never materialized. Results are memoized, so an oracle may be shared
// between threads.
class BialgebraOracle {
 public:
  virtual ~BialgebraOracle() = default;

  virtual std::string name() const = 0;
  virtual std::size_t dim(int n) const = 0;
  // The specialized value of q, or nothing in symbolic mode.
  virtual std::optional<Rational> q_value() const = 0;

  // A_p (x) A_q -> A_{p+q}.
  const LMatrix& mu(int p, int q) const;
  // A_{p+q} -> A_p (x) A_q.
  const LMatrix& delta(int p, int q) const;
  // A_m (x) A_n -> A_n (x) A_m.
  const LMatrix& braid(int m, int n) const;
  // A_n (x) A_m -> A_m (x) A_n, the inverse of braid(m, n).
  const LMatrix& braid_inverse(int m, int n) const;

  // q^e, or its value when q is specialized.
  Laurent q_power(int e) const;

 protected:
  virtual LMatrix compute_mu(int p, int q) const = 0;
  virtual LMatrix compute_delta(int p, int q) const = 0;
  virtual LMatrix compute_braid(int m, int n) const = 0;
  virtual LMatrix compute_braid_inverse(int m, int n) const = 0;

 private:
  const LMatrix& cached(char kind, int a, int b) const;

  mutable std::mutex mutex_;
  mutable std::map<std::tuple<char, int, int>, LMatrix> cache_;
};

// One-dimensional components: mu = 1, delta(p,q) = [p+q choose p]_q,
// braid(m,n) = q^(mn).
std::shared_ptr<const BialgebraOracle> rank1_oracle(
    std::optional<Rational> q = std::nullopt);

// Braided tensor bialgebra on a d-dimensional degree-1 space: words of
// length n, concatenation product, degree-1 letters primitive, and
// braid(m,n) = q^(mn) times the block swap.
std::shared_ptr<const BialgebraOracle> shuffle_oracle(
    int d, std::optional<Rational> q = Rational(2));

}  // namespace cmprob
