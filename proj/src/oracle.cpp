#include "cmprob/oracle.hpp"

#include <vector>

#include "cmprob/errors.hpp"

namespace cmprob {

const LMatrix& BialgebraOracle::cached(char kind, int a, int b) const {
  if (a < 0 || b < 0) throw InvalidParameter("negative degree");
  std::lock_guard<std::mutex> lock(mutex_);
  auto key = std::make_tuple(kind, a, b);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  LMatrix m;
  if ((kind == 'm' || kind == 'd') && (a == 0 || b == 0)) {
    m = LMatrix::identity(dim(a + b));
  } else if ((kind == 'b' || kind == 'i') && (a == 0 || b == 0)) {
    m = LMatrix::identity(dim(a) * dim(b));
  } else {
    switch (kind) {
      case 'm': m = compute_mu(a, b); break;
      case 'd': m = compute_delta(a, b); break;
      case 'b': m = compute_braid(a, b); break;
      default: m = compute_braid_inverse(a, b); break;
    }
  }
  return cache_.emplace(key, std::move(m)).first->second;
}

const LMatrix& BialgebraOracle::mu(int p, int q) const { return cached('m', p, q); }
const LMatrix& BialgebraOracle::delta(int p, int q) const { return cached('d', p, q); }
const LMatrix& BialgebraOracle::braid(int m, int n) const { return cached('b', m, n); }
const LMatrix& BialgebraOracle::braid_inverse(int m, int n) const {
  return cached('i', m, n);
}

Laurent BialgebraOracle::q_power(int e) const {
  auto q = q_value();
  if (!q) return Laurent::q(e);
  Rational r = 1;
  Rational base = e < 0 ? Rational(1) / *q : *q;
  for (int i = 0; i < std::abs(e); ++i) r *= base;
  return Laurent(r);
}

namespace {

void check_q(const std::optional<Rational>& q) {
  if (q && (*q == 0 || *q == 1 || *q == -1))
    throw InvalidParameter("q must avoid 0 and +-1, got " + q->get_str());
}

class Rank1Oracle final : public BialgebraOracle {
 public:
  explicit Rank1Oracle(std::optional<Rational> q) : q_(std::move(q)) {
    check_q(q_);
  }
  std::string name() const override {
    return "rank1(q=" + (q_ ? q_->get_str() : std::string("symbolic")) + ")";
  }
  std::size_t dim(int) const override { return 1; }
  std::optional<Rational> q_value() const override { return q_; }

 protected:
  LMatrix compute_mu(int, int) const override { return LMatrix::scalar(1); }
  LMatrix compute_delta(int p, int q) const override {
    Laurent g = gaussian_binomial(p + q, p);
    if (q_) g = Laurent(g.evaluate(*q_));
    return LMatrix::scalar(g);
  }
  LMatrix compute_braid(int m, int n) const override {
    return LMatrix::scalar(q_power(m * n));
  }
  LMatrix compute_braid_inverse(int m, int n) const override {
    return LMatrix::scalar(q_power(-m * n));
  }

 private:
  std::optional<Rational> q_;
};

class ShuffleOracle final : public BialgebraOracle {
 public:
  ShuffleOracle(int d, std::optional<Rational> q) : d_(d), q_(std::move(q)) {
    if (d < 1) throw InvalidParameter("shuffle dimension must be >= 1");
    if (q_ && *q_ == 0) throw InvalidParameter("q must be nonzero");
    check_q(q_);
  }
  std::string name() const override {
    return "shuffle(d=" + std::to_string(d_) +
           ",q=" + (q_ ? q_->get_str() : std::string("symbolic")) + ")";
  }
  std::size_t dim(int n) const override {
    std::size_t r = 1;
    for (int i = 0; i < n; ++i) r *= static_cast<std::size_t>(d_);
    return r;
  }
  std::optional<Rational> q_value() const override { return q_; }

 protected:
  // Word indices are base-d with the first letter most significant, so
  // concatenation of u and v has index idx(u) * d^|v| + idx(v).
  LMatrix compute_mu(int p, int q) const override {
    return LMatrix::identity(dim(p + q));
  }

  // Delta_{p,n-p}(w) = sum over p-subsets S of positions of
  // q^{#(a not in S, b in S, a < b)} w_S (x) w_{S^c}.
  LMatrix compute_delta(int p, int q) const override {
    int n = p + q;
    std::size_t dn = dim(n);
    LMatrix m(dim(p) * dim(q), dn);
    std::vector<int> letters(static_cast<std::size_t>(n));
    for (std::size_t w = 0; w < dn; ++w) {
      std::size_t x = w;
      for (int i = n - 1; i >= 0; --i) {
        letters[static_cast<std::size_t>(i)] = static_cast<int>(x % d_);
        x /= d_;
      }
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != p) continue;
        std::size_t left = 0, right = 0;
        int inv = 0, outside_seen = 0;
        for (int i = 0; i < n; ++i) {
          if (mask >> i & 1u) {
            left = left * d_ + letters[i];
            inv += outside_seen;
          } else {
            right = right * d_ + letters[i];
            ++outside_seen;
          }
        }
        m(left * dim(q) + right, w) += q_power(inv);
      }
    }
    return m;
  }

  LMatrix compute_braid(int m, int n) const override {
    std::size_t dm = dim(m), dn = dim(n);
    LMatrix r(dn * dm, dm * dn);
    Laurent c = q_power(m * n);
    for (std::size_t u = 0; u < dm; ++u)
      for (std::size_t v = 0; v < dn; ++v) r(v * dm + u, u * dn + v) = c;
    return r;
  }

  LMatrix compute_braid_inverse(int m, int n) const override {
    std::size_t dm = dim(m), dn = dim(n);
    LMatrix r(dm * dn, dn * dm);
    Laurent c = q_power(-m * n);
    for (std::size_t u = 0; u < dm; ++u)
      for (std::size_t v = 0; v < dn; ++v) r(u * dn + v, v * dm + u) = c;
    return r;
  }

 private:
  int d_;
  std::optional<Rational> q_;
};

}  // namespace

std::shared_ptr<const BialgebraOracle> rank1_oracle(std::optional<Rational> q) {
  return std::make_shared<Rank1Oracle>(std::move(q));
}

std::shared_ptr<const BialgebraOracle> shuffle_oracle(int d,
                                                      std::optional<Rational> q) {
  return std::make_shared<ShuffleOracle>(d, std::move(q));
}

}  // namespace cmprob
