#pragma once

#include <gmpxx.h>

#include <string>

namespace cmprob {

using Rational = mpq_class;

// "p/q", or "p" for integers.
std::string to_string(const Rational& r);
// Accepts "p", "p/q" and signed forms; throws ParseError otherwise.
Rational parse_rational(const std::string& s);

}  // namespace cmprob
