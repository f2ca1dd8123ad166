#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace couples {

/// Exact rational backed by GMP. Values are kept canonical (lowest terms,
/// positive denominator) by every routine in this library.
using Rational = mpq_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& value);

/// Accepts "p", "-p", "p/q", "-p/q" with decimal digits; q must be nonzero.
/// The result is canonicalized, so "2/4" parses to 1/2.
Rational parse_rational(std::string_view text);

}  // namespace couples
