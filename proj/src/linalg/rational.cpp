#include "couples/linalg/rational.hpp"

#include <cctype>

namespace couples {

std::string to_string(const Rational& value) {
  Rational copy = value;
  copy.canonicalize();
  return copy.get_str(10);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num), 10);
  if (text.front() == '-') n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace couples
