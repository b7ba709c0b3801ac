#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmprob/rational.hpp"

namespace cmprob {

// Laurent polynomial in q with rational coefficients. Terms are sorted by
// exponent and never carry a zero coefficient, so equality is structural.
class Laurent {
 public:
  using Term = std::pair<int, Rational>;

  Laurent() = default;
  Laurent(long c);  // NOLINT(google-explicit-constructor)
  Laurent(const Rational& c);  // NOLINT(google-explicit-constructor)

  static Laurent monomial(const Rational& c, int exp);
  static Laurent q(int exp = 1) { return monomial(1, exp); }
  static Laurent from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
  }
  std::optional<Rational> as_constant() const;
  // Units of the Laurent ring are the nonzero monomials.
  bool is_unit() const { return terms_.size() == 1; }
  Laurent unit_inverse() const;

  int min_exponent() const { return terms_.front().first; }
  int max_exponent() const { return terms_.back().first; }
  Rational coefficient(int exp) const;

  Rational evaluate(const Rational& q) const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.terms_ == b.terms_;
  }

  // Human-readable form such as "1 + q" or "-1/2*q^-1".
  std::string str() const;

 private:
  std::vector<Term> terms_;
};

// a / b when b divides a in the Laurent ring; throws otherwise.
Laurent exact_div(const Laurent& a, const Laurent& b);

// [n]_q = 1 + q + ... + q^(n-1), and the Gaussian binomial built from it.
Laurent q_integer(int n);
Laurent q_factorial(int n);
Laurent gaussian_binomial(int n, int k);

}  // namespace cmprob
