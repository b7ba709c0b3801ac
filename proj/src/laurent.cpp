#include "cmprob/laurent.hpp"

#include <algorithm>
#include <map>

#include "cmprob/errors.hpp"

namespace cmprob {

Laurent::Laurent(long c) {
  if (c != 0) terms_.emplace_back(0, Rational(c));
}

Laurent::Laurent(const Rational& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

Laurent Laurent::monomial(const Rational& c, int exp) {
  Laurent r;
  if (c != 0) r.terms_.emplace_back(exp, c);
  return r;
}

Laurent Laurent::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  Laurent r;
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first)
      r.terms_.back().second += t.second;
    else
      r.terms_.push_back(std::move(t));
    if (r.terms_.back().second == 0) r.terms_.pop_back();
  }
  return r;
}

std::optional<Rational> Laurent::as_constant() const {
  if (!is_constant()) return std::nullopt;
  return terms_.empty() ? Rational(0) : terms_[0].second;
}

Laurent Laurent::unit_inverse() const {
  if (!is_unit()) throw SingularInverse("not a unit: " + str());
  return monomial(Rational(1) / terms_[0].second, -terms_[0].first);
}

Rational Laurent::coefficient(int exp) const {
  for (const auto& [e, c] : terms_)
    if (e == exp) return c;
  return 0;
}

Rational Laurent::evaluate(const Rational& q) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    if (e < 0 && q == 0) throw InvalidParameter("negative power of q = 0");
    Rational p = 1;
    Rational base = e < 0 ? Rational(1) / q : q;
    for (int i = 0; i < std::abs(e); ++i) p *= base;
    acc += c * p;
  }
  return acc;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  if (terms_.size() == 1 && o.terms_.size() == 1 &&
      terms_[0].first == o.terms_[0].first) {
    terms_[0].second += o.terms_[0].second;
    if (terms_[0].second == 0) terms_.clear();
    return *this;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational s = a->second + b->second;
      if (s != 0) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1 && b.terms_.size() == 1)
    return Laurent::monomial(a.terms_[0].second * b.terms_[0].second,
                             a.terms_[0].first + b.terms_[0].first);
  int lo = a.min_exponent() + b.min_exponent();
  int hi = a.max_exponent() + b.max_exponent();
  std::vector<Rational> acc(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb - lo] += ca * cb;
  Laurent r;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) r.terms_.emplace_back(lo + static_cast<int>(i), acc[i]);
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      s += mag.get_str();
      continue;
    }
    if (mag != 1) s += mag.get_str() + "*";
    s += "q";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

Laurent exact_div(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw SingularInverse("division by zero");
  if (a.is_zero()) return {};
  if (b.is_unit()) return a * b.unit_inverse();
  // Shift both to polynomials with nonzero constant term, then long-divide.
  int sa = a.min_exponent(), sb = b.min_exponent();
  std::vector<Rational> num(a.max_exponent() - sa + 1);
  std::vector<Rational> den(b.max_exponent() - sb + 1);
  for (const auto& [e, c] : a.terms()) num[e - sa] = c;
  for (const auto& [e, c] : b.terms()) den[e - sb] = c;
  if (num.size() < den.size())
    throw Error("inexact Laurent division: " + a.str() + " / " + b.str());
  std::vector<Rational> quo(num.size() - den.size() + 1);
  for (std::size_t i = quo.size(); i-- > 0;) {
    Rational c = num[i + den.size() - 1] / den.back();
    quo[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (const auto& r : num)
    if (r != 0)
      throw Error("inexact Laurent division: " + a.str() + " / " + b.str());
  std::vector<Laurent::Term> t;
  for (std::size_t i = 0; i < quo.size(); ++i)
    if (quo[i] != 0) t.emplace_back(static_cast<int>(i) + sa - sb, quo[i]);
  return Laurent::from_terms(std::move(t));
}

Laurent q_integer(int n) {
  std::vector<Laurent::Term> t;
  for (int i = 0; i < n; ++i) t.emplace_back(i, Rational(1));
  return Laurent::from_terms(std::move(t));
}

Laurent q_factorial(int n) {
  Laurent r(1);
  for (int i = 2; i <= n; ++i) r *= q_integer(i);
  return r;
}

Laurent gaussian_binomial(int n, int k) {
  if (k < 0 || k > n) return {};
  // q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k].
  std::vector<Laurent> row{Laurent(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<Laurent> next(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
      if (j >= 1) next[j] += row[j - 1];
      if (j < m) next[j] += Laurent::q(j) * row[j];
    }
    row = std::move(next);
  }
  return row[k];
}

}  // namespace cmprob
