#include "nset/rational.hpp"

#include "nset/error.hpp"

#include <cctype>

namespace nset {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw Error(ErrorKind::SchemaViolation, "zero denominator");
  }
  // Division normalizes sign and reduces to lowest terms.
  return Rational(num) / Rational(den);
}

Integer floor_int(const Rational& x) {
  Integer q = numerator(x) / denominator(x);  // truncates toward zero
  if (numerator(x) < 0 && q * denominator(x) != numerator(x)) {
    --q;
  }
  return q;
}

Integer ceil_int(const Rational& x) { return -floor_int(-x); }

Rational frac_part(const Rational& x) { return x - Rational(floor_int(x)); }

Integer gcd_all(const std::vector<Integer>& values) {
  Integer g = 0;
  for (const Integer& v : values) {
    g = boost::multiprecision::gcd(g, v);
  }
  return g;
}

std::string format_rational(const Rational& x) {
  if (denominator(x) == 1) {
    return numerator(x).str();
  }
  return numerator(x).str() + "/" + denominator(x).str();
}

std::string format_integer(const Integer& x) { return x.str(); }

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.erase(body.begin());
  }
  std::string num = body;
  std::string den = "1";
  if (auto slash = body.find('/'); slash != std::string::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::SchemaViolation,
                "not a rational in p/q form: \"" + text + "\"");
  }
  Integer n(num);
  Integer d(den);
  if (d == 0) {
    throw Error(ErrorKind::SchemaViolation,
                "zero denominator: \"" + text + "\"");
  }
  if (negative) n = -n;
  return make_rational(n, d);
}

Integer parse_integer(const std::string& text) {
  Rational r = parse_rational(text);
  if (denominator(r) != 1) {
    throw Error(ErrorKind::SchemaViolation,
                "expected an integer, got \"" + text + "\"");
  }
  return numerator(r);
}

}  // namespace nset
