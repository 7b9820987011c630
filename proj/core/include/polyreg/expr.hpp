#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polyreg/quaternion.hpp"

namespace polyreg {

/// Expression tree for noncommutative polynomial functions of q and qbar.
///
/// Products are ordered. `Generic(n, m, alpha)` stands for the sandwich
/// monomial q^n alpha q^m and evaluates exactly like the corresponding
/// product of powers and a constant.
class Expr {
 public:
  enum class Kind { Var, VarBar, Const, Sum, Product, Power, Generic };

  static Expr var();
  static Expr var_bar();
  static Expr constant(Quaternion c);
  /// Throws InvalidArgument on an empty term list.
  static Expr sum(std::vector<Expr> terms);
  /// Throws InvalidArgument on an empty factor list.
  static Expr product(std::vector<Expr> factors);
  static Expr power(Expr base, unsigned exponent);
  static Expr generic(unsigned n, unsigned m, Quaternion alpha);

  Kind kind() const noexcept { return kind_; }
  /// Constant value of a Const node, or alpha of a Generic node.
  const Quaternion& value() const noexcept { return value_; }
  /// Terms of a Sum, factors of a Product, or the single base of a Power.
  const std::vector<Expr>& children() const noexcept { return children_; }
  const Expr& base() const { return children_.front(); }
  unsigned exponent() const noexcept { return first_; }
  unsigned left_power() const noexcept { return first_; }
  unsigned right_power() const noexcept { return second_; }

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  Expr(Kind kind) : kind_(kind) {}

  Kind kind_;
  Quaternion value_;
  std::vector<Expr> children_;
  unsigned first_ = 0;
  unsigned second_ = 0;
};

/// Quaternion literal such as `1+2i-3/4j+k`; whitespace is ignored.
Quaternion parse_quaternion(std::string_view text);

/// Parses the expression grammar
///
///     expr   := term (('+' | '-') term)*
///     term   := factor ('*' factor)*
///     factor := atom ('^' NAT)?
///     atom   := 'q' | 'qbar' | LIT | '(' expr ')' | 'A(' NAT ',' NAT '|' QUAT ')'
///
/// where LIT is one signed rational component with optional unit suffix and QUAT is a
/// full quaternion literal. `a - b` yields Sum[a, -b], folding the sign into b when b is a
/// constant and wrapping it as Product[Const(-1), b] otherwise.
Expr parse_expr(std::string_view text);

/// Canonical text; parse_expr(print_expr(e)) == e for every tree whose constants have a
/// single nonzero component (the shape the parser produces).
std::string print_expr(const Expr& e);

/// Pointwise value with qbar bound to conj(q); products evaluate left to right.
Quaternion eval_expr(const Expr& e, const Quaternion& q);

/// Right slice-regular polynomial sum_n q^n a_n, coefficients stored a_0..a_N.
class SRPoly {
 public:
  SRPoly() = default;
  explicit SRPoly(std::vector<Quaternion> coeffs);

  const std::vector<Quaternion>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree of a nonzero polynomial; 0 for the zero polynomial.
  unsigned degree() const noexcept { return coeffs_.empty() ? 0 : static_cast<unsigned>(coeffs_.size() - 1); }
  Quaternion coeff(unsigned n) const { return n < coeffs_.size() ? coeffs_[n] : Quaternion{}; }
  bool has_real_coefficients() const;

  Quaternion eval(const Quaternion& q) const;

  friend SRPoly operator+(const SRPoly& a, const SRPoly& b);
  friend SRPoly operator*(const SRPoly& a, const Rational& s);
  friend bool operator==(const SRPoly&, const SRPoly&) = default;

 private:
  std::vector<Quaternion> coeffs_;
};

Expr srpoly_to_expr(const SRPoly& p);

/// print_expr(srpoly_to_expr(p))
std::string to_string(const SRPoly& p);

/// Normalises e into sum_n q^n a_n without moving any nonreal constant past a q.
/// Throws NotSliceRegularForm if e mentions qbar or keeps a nonreal constant between
/// two powers of q after normalisation.
SRPoly expr_to_srpoly(const Expr& e);

}  // namespace polyreg
