#include "polyreg/expr.hpp"

#include <cctype>
#include <map>

#include "polyreg/errors.hpp"

namespace polyreg {

// ---------------------------------------------------------------------------
// Construction

Expr Expr::var() { return Expr(Kind::Var); }

Expr Expr::var_bar() { return Expr(Kind::VarBar); }

Expr Expr::constant(Quaternion c) {
  Expr e(Kind::Const);
  e.value_ = std::move(c);
  return e;
}

Expr Expr::sum(std::vector<Expr> terms) {
  if (terms.empty()) throw InvalidArgument("empty Sum");
  Expr e(Kind::Sum);
  e.children_ = std::move(terms);
  return e;
}

Expr Expr::product(std::vector<Expr> factors) {
  if (factors.empty()) throw InvalidArgument("empty Product");
  Expr e(Kind::Product);
  e.children_ = std::move(factors);
  return e;
}

Expr Expr::power(Expr base, unsigned exponent) {
  Expr e(Kind::Power);
  e.children_.push_back(std::move(base));
  e.first_ = exponent;
  return e;
}

Expr Expr::generic(unsigned n, unsigned m, Quaternion alpha) {
  Expr e(Kind::Generic);
  e.value_ = std::move(alpha);
  e.first_ = n;
  e.second_ = m;
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  return a.kind_ == b.kind_ && a.value_ == b.value_ && a.first_ == b.first_ && a.second_ == b.second_ &&
         a.children_ == b.children_;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = parse_sum();
    skip_ws();
    if (!at_end()) fail({"'+'", "'-'", "'*'", "'^'", "end of input"});
    return e;
  }

  Quaternion parse_quaternion_all() {
    Quaternion q = parse_quat_literal();
    skip_ws();
    if (!at_end()) fail({"quaternion component", "end of input"});
    return q;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string found = at_end() ? "end of input" : std::string("'") + text_[pos_] + "'";
    throw ParseError(pos_, std::move(expected), found);
  }

  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail({std::string("'") + c + "'"});
  }

  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
  static bool is_unit(char c) { return c == 'i' || c == 'j' || c == 'k'; }

  unsigned parse_nat() {
    skip_ws();
    if (!is_digit(peek())) fail({"natural number"});
    unsigned long value = 0;
    while (is_digit(peek())) {
      value = value * 10 + static_cast<unsigned long>(peek() - '0');
      if (value > 1'000'000) fail({"natural number <= 1000000"});
      ++pos_;
    }
    return static_cast<unsigned>(value);
  }

  bool component_starts() const {
    char c = peek();
    return is_digit(c) || is_unit(c);
  }

  /// One unsigned component `r`, `ru` or `u` where r is p or p/q and u in {i,j,k}.
  Quaternion parse_component() {
    skip_ws();
    if (!component_starts()) fail({"digit", "'i'", "'j'", "'k'"});
    Rational coeff = 1;
    if (is_digit(peek())) {
      std::size_t start = pos_;
      while (is_digit(peek())) ++pos_;
      std::size_t stop = pos_;
      std::size_t save = pos_;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        if (!is_digit(peek())) fail({"digit"});
        std::size_t dstart = pos_;
        while (is_digit(peek())) ++pos_;
        mpz_class den(std::string(text_.substr(dstart, pos_ - dstart)));
        if (den == 0) {
          pos_ = dstart;
          fail({"nonzero denominator"});
        }
        coeff = Rational(mpz_class(std::string(text_.substr(start, stop - start))), den);
        coeff.canonicalize();
      } else {
        pos_ = save;
        coeff = Rational(mpz_class(std::string(text_.substr(start, stop - start))));
      }
      std::size_t before_unit = pos_;
      skip_ws();
      if (!is_unit(peek()) || identifier_continues(pos_ + 1)) {
        pos_ = before_unit;
        return Quaternion(coeff);
      }
    }
    Quaternion out;
    switch (peek()) {
      case 'i': out.x = coeff; break;
      case 'j': out.y = coeff; break;
      default: out.z = coeff; break;
    }
    ++pos_;
    return out;
  }

  bool identifier_continues(std::size_t at) const {
    return at < text_.size() && std::isalpha(static_cast<unsigned char>(text_[at]));
  }

  /// Optional sign followed by a single component.
  Quaternion parse_signed_component() {
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    Quaternion c = parse_component();
    return negative ? -c : c;
  }

  /// Full literal: signed components joined by + or -.
  Quaternion parse_quat_literal() {
    Quaternion q = parse_signed_component();
    for (;;) {
      std::size_t save = pos_;
      skip_ws();
      if (peek() != '+' && peek() != '-') {
        pos_ = save;
        break;
      }
      bool negative = peek() == '-';
      ++pos_;
      Quaternion c = parse_component();
      q += negative ? -c : c;
    }
    return q;
  }

  static Expr negate(Expr e) {
    if (e.kind() == Expr::Kind::Const) return Expr::constant(-e.value());
    return Expr::product({Expr::constant(Quaternion(-1)), std::move(e)});
  }

  Expr parse_sum() {
    std::vector<Expr> terms;
    terms.push_back(parse_term());
    for (;;) {
      skip_ws();
      if (accept('+')) {
        terms.push_back(parse_term());
      } else if (accept('-')) {
        terms.push_back(negate(parse_term()));
      } else {
        break;
      }
    }
    if (terms.size() == 1) return std::move(terms.front());
    return Expr::sum(std::move(terms));
  }

  Expr parse_term() {
    std::vector<Expr> factors;
    factors.push_back(parse_factor());
    while (accept('*')) factors.push_back(parse_factor());
    if (factors.size() == 1) return std::move(factors.front());
    return Expr::product(std::move(factors));
  }

  Expr parse_factor() {
    Expr base = parse_atom();
    if (accept('^')) return Expr::power(std::move(base), parse_nat());
    return base;
  }

  Expr parse_atom() {
    skip_ws();
    if (text_.substr(pos_, 4) == "qbar" && !identifier_continues(pos_ + 4)) {
      pos_ += 4;
      return Expr::var_bar();
    }
    if (peek() == 'q' && !identifier_continues(pos_ + 1)) {
      ++pos_;
      return Expr::var();
    }
    if (peek() == 'A') {
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (peek() == '(') {
        ++pos_;
        unsigned n = parse_nat();
        expect(',');
        unsigned m = parse_nat();
        expect('|');
        Quaternion alpha = parse_quat_literal();
        expect(')');
        return Expr::generic(n, m, std::move(alpha));
      }
      pos_ = save;
    }
    if (accept('(')) {
      Expr inner = parse_sum();
      expect(')');
      return inner;
    }
    char c = peek();
    if (c == '+' || c == '-' || component_starts()) return Expr::constant(parse_signed_component());
    fail({"'q'", "'qbar'", "'('", "'A('", "quaternion literal"});
  }
};

}  // namespace

Quaternion parse_quaternion(std::string_view text) { return Parser(text).parse_quaternion_all(); }

Expr parse_expr(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Printing

namespace {

int nonzero_components(const Quaternion& q) {
  return (sgn(q.w) != 0) + (sgn(q.x) != 0) + (sgn(q.y) != 0) + (sgn(q.z) != 0);
}

bool is_negative_literal(const Quaternion& q) {
  if (nonzero_components(q) != 1) return false;
  return sgn(q.w) < 0 || sgn(q.x) < 0 || sgn(q.y) < 0 || sgn(q.z) < 0;
}

std::string print_const(const Quaternion& c) {
  if (nonzero_components(c) > 1) return "(" + to_string(c) + ")";
  return to_string(c);
}

bool is_negation(const Expr& e) {
  return e.kind() == Expr::Kind::Product && e.children().size() == 2 &&
         e.children()[0].kind() == Expr::Kind::Const && e.children()[0].value() == Quaternion(-1) &&
         e.children()[1].kind() != Expr::Kind::Const;
}

std::string print_node(const Expr& e);

std::string parenthesize(const Expr& e) { return "(" + print_node(e) + ")"; }

std::string print_factor(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Sum:
    case Expr::Kind::Product:
      return parenthesize(e);
    default:
      return print_node(e);
  }
}

std::string print_term(const Expr& e) {
  if (e.kind() == Expr::Kind::Sum) return parenthesize(e);
  return print_node(e);
}

std::string print_node(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Var:
      return "q";
    case Expr::Kind::VarBar:
      return "qbar";
    case Expr::Kind::Const:
      return print_const(e.value());
    case Expr::Kind::Generic:
      return "A(" + std::to_string(e.left_power()) + "," + std::to_string(e.right_power()) + "|" +
             to_string(e.value()) + ")";
    case Expr::Kind::Power: {
      const Expr& b = e.base();
      bool bare = b.kind() == Expr::Kind::Var || b.kind() == Expr::Kind::VarBar ||
                  b.kind() == Expr::Kind::Generic ||
                  (b.kind() == Expr::Kind::Const && nonzero_components(b.value()) <= 1 &&
                   !is_negative_literal(b.value()));
      return (bare ? print_node(b) : parenthesize(b)) + "^" + std::to_string(e.exponent());
    }
    case Expr::Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < e.children().size(); ++i) {
        if (i) out += " * ";
        out += print_factor(e.children()[i]);
      }
      return out;
    }
    case Expr::Kind::Sum: {
      std::string out = print_term(e.children().front());
      for (std::size_t i = 1; i < e.children().size(); ++i) {
        const Expr& t = e.children()[i];
        if (t.kind() == Expr::Kind::Const && is_negative_literal(t.value())) {
          out += " - " + to_string(-t.value());
        } else if (is_negation(t)) {
          out += " - " + print_term(t.children()[1]);
        } else {
          out += " + " + print_term(t);
        }
      }
      return out;
    }
  }
  return {};
}

}  // namespace

std::string print_expr(const Expr& e) { return print_node(e); }

// ---------------------------------------------------------------------------
// Evaluation

Quaternion eval_expr(const Expr& e, const Quaternion& q) {
  switch (e.kind()) {
    case Expr::Kind::Var:
      return q;
    case Expr::Kind::VarBar:
      return q.conj();
    case Expr::Kind::Const:
      return e.value();
    case Expr::Kind::Sum: {
      Quaternion acc;
      for (const Expr& t : e.children()) acc += eval_expr(t, q);
      return acc;
    }
    case Expr::Kind::Product: {
      Quaternion acc(1);
      for (const Expr& f : e.children()) acc = acc * eval_expr(f, q);
      return acc;
    }
    case Expr::Kind::Power:
      return power(eval_expr(e.base(), q), e.exponent());
    case Expr::Kind::Generic:
      return power(q, e.left_power()) * e.value() * power(q, e.right_power());
  }
  return {};
}

// ---------------------------------------------------------------------------
// SRPoly

namespace {

std::vector<Quaternion> trimmed(std::vector<Quaternion> c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  return c;
}

}  // namespace

SRPoly::SRPoly(std::vector<Quaternion> coeffs) : coeffs_(trimmed(std::move(coeffs))) {}

bool SRPoly::has_real_coefficients() const {
  for (const Quaternion& c : coeffs_)
    if (!c.is_real()) return false;
  return true;
}

Quaternion SRPoly::eval(const Quaternion& q) const {
  // Horner with right coefficients: a_0 + q (a_1 + q (a_2 + ...)).
  Quaternion acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = q * acc + *it;
  return acc;
}

SRPoly operator+(const SRPoly& a, const SRPoly& b) {
  std::vector<Quaternion> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = a.coeff(static_cast<unsigned>(n)) + b.coeff(static_cast<unsigned>(n));
  return SRPoly(std::move(out));
}

SRPoly operator*(const SRPoly& a, const Rational& s) {
  std::vector<Quaternion> out = a.coeffs_;
  for (Quaternion& c : out) c *= s;
  return SRPoly(std::move(out));
}

Expr srpoly_to_expr(const SRPoly& p) {
  if (p.is_zero()) return Expr::constant(Quaternion{});
  std::vector<Expr> terms;
  for (unsigned n = 0; n < p.coeffs().size(); ++n) {
    const Quaternion& a = p.coeffs()[n];
    if (a.is_zero()) continue;
    if (n == 0) {
      terms.push_back(Expr::constant(a));
      continue;
    }
    Expr qn = n == 1 ? Expr::var() : Expr::power(Expr::var(), n);
    if (a == Quaternion(1))
      terms.push_back(std::move(qn));
    else
      terms.push_back(Expr::product({std::move(qn), Expr::constant(a)}));
  }
  if (terms.size() == 1) return std::move(terms.front());
  return Expr::sum(std::move(terms));
}

std::string to_string(const SRPoly& p) { return print_expr(srpoly_to_expr(p)); }

// expr_to_srpoly works in the free algebra on the letters q, qbar and the basis units
// i, j, k. Adjacent units are multiplied out with the quaternion table, real scalars
// float freely to the coefficient, and identical words are collected. A word survives
// into the slice-regular form only as q^n u with u in {1, i, j, k}.
namespace {

enum Symbol : unsigned char { kI = 1, kJ = 2, kK = 3, kQ = 4, kQBar = 5 };

using Word = std::vector<unsigned char>;
using FreePoly = std::map<Word, Rational>;

bool is_unit_symbol(unsigned char s) { return s >= kI && s <= kK; }

/// u * v for basis units, returned as (sign, unit) with unit 0 meaning the real 1.
std::pair<int, unsigned char> unit_product(unsigned char u, unsigned char v) {
  if (u == v) return {-1, 0};
  unsigned char w = static_cast<unsigned char>(6 - u - v);
  bool cyclic = (u == kI && v == kJ) || (u == kJ && v == kK) || (u == kK && v == kI);
  return {cyclic ? 1 : -1, w};
}

void add_term(FreePoly& p, Word w, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = p.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) p.erase(it);
  }
}

FreePoly multiply(const FreePoly& a, const FreePoly& b) {
  FreePoly out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      Rational c = ca * cb;
      for (unsigned char s : wb) {
        if (is_unit_symbol(s) && !w.empty() && is_unit_symbol(w.back())) {
          auto [sign, u] = unit_product(w.back(), s);
          w.pop_back();
          if (sign < 0) c = -c;
          if (u) w.push_back(u);
        } else {
          w.push_back(s);
        }
      }
      add_term(out, std::move(w), c);
    }
  }
  return out;
}

FreePoly constant_poly(const Quaternion& c) {
  FreePoly p;
  add_term(p, {}, c.w);
  add_term(p, {kI}, c.x);
  add_term(p, {kJ}, c.y);
  add_term(p, {kK}, c.z);
  return p;
}

FreePoly letter(unsigned char s) { return FreePoly{{Word{s}, Rational(1)}}; }

FreePoly power_of(const FreePoly& base, unsigned n) {
  FreePoly out{{Word{}, Rational(1)}};
  for (unsigned i = 0; i < n; ++i) out = multiply(out, base);
  return out;
}

FreePoly to_free(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Var:
      return letter(kQ);
    case Expr::Kind::VarBar:
      return letter(kQBar);
    case Expr::Kind::Const:
      return constant_poly(e.value());
    case Expr::Kind::Sum: {
      FreePoly acc;
      for (const Expr& t : e.children())
        for (auto& [w, c] : to_free(t)) add_term(acc, w, c);
      return acc;
    }
    case Expr::Kind::Product: {
      FreePoly acc{{Word{}, Rational(1)}};
      for (const Expr& f : e.children()) acc = multiply(acc, to_free(f));
      return acc;
    }
    case Expr::Kind::Power:
      return power_of(to_free(e.base()), e.exponent());
    case Expr::Kind::Generic: {
      FreePoly q = letter(kQ);
      return multiply(multiply(power_of(q, e.left_power()), constant_poly(e.value())),
                      power_of(q, e.right_power()));
    }
  }
  return {};
}

}  // namespace

SRPoly expr_to_srpoly(const Expr& e) {
  std::vector<Quaternion> coeffs;
  for (const auto& [word, c] : to_free(e)) {
    std::size_t n = 0;
    while (n < word.size() && word[n] == kQ) ++n;
    Quaternion unit(1);
    if (n + 1 == word.size() && is_unit_symbol(word[n])) {
      unit = word[n] == kI ? Quaternion::unit_i() : word[n] == kJ ? Quaternion::unit_j() : Quaternion::unit_k();
    } else if (n != word.size()) {
      bool has_bar = false;
      for (unsigned char s : word) has_bar = has_bar || s == kQBar;
      throw NotSliceRegularForm(has_bar ? "expression depends on qbar"
                                        : "nonreal constant sandwiched between powers of q");
    }
    if (coeffs.size() <= n) coeffs.resize(n + 1);
    coeffs[n] += unit * c;
  }
  return SRPoly(std::move(coeffs));
}

}  // namespace polyreg
