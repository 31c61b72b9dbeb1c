#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nilgraph {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Accepts "p", "-p", "p/q". Throws nilgraph::Error on malformed input or a
// zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace nilgraph
