#include "polyreg/rational.hpp"

#include <cctype>

#include "polyreg/errors.hpp"

namespace polyreg {

namespace {

std::string describe(std::string_view text, std::size_t at) {
  if (at >= text.size()) return "end of input";
  return std::string("'") + text[at] + "'";
}

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out += ", ";
    out += expected[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : Error("parse error at offset " + std::to_string(offset) + ": expected " + join_expected(expected) +
            ", found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t from) {
    std::size_t end = from;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    return end;
  };
  std::size_t end = digits(pos);
  if (end == pos) throw ParseError(pos, {"digit"}, describe(text, pos));
  mpz_class num(std::string(text.substr(pos, end - pos)));
  mpz_class den = 1;
  pos = end;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    end = digits(pos);
    if (end == pos) throw ParseError(pos, {"digit"}, describe(text, pos));
    den = mpz_class(std::string(text.substr(pos, end - pos)));
    if (den == 0) throw ParseError(pos, {"nonzero denominator"}, "0");
    pos = end;
  }
  if (pos != text.size()) throw ParseError(pos, {"end of input"}, describe(text, pos));
  Rational r(num, den);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(out);
}

Rational falling_factorial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class out = 1;
  for (unsigned i = 0; i < k; ++i) out *= n - i;
  return Rational(out);
}

Rational factorial(unsigned n) { return falling_factorial(n, n); }

}  // namespace polyreg
