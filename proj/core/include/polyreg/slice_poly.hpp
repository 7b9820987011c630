#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "polyreg/quaternion.hpp"

namespace polyreg {

/// Exponent pair of the real monomial x^a y^b.
struct Bidegree {
  unsigned a = 0;
  unsigned b = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// Orders by total degree, then by the x exponent.
struct BidegreeOrder {
  bool operator()(const Bidegree& l, const Bidegree& r) const {
    if (l.a + l.b != r.a + r.b) return l.a + l.b < r.a + r.b;
    return l.a < r.a;
  }
};

/// sum c_ab x^a y^b on the slice q = x + I y. x and y are real, so each coefficient can be
/// read as acting from the left; zero coefficients are never stored.
class SlicePoly {
 public:
  using Terms = std::map<Bidegree, Quaternion, BidegreeOrder>;

  explicit SlicePoly(ImagUnit I) : unit_(std::move(I)) {}
  static SlicePoly constant(const ImagUnit& I, const Quaternion& c);
  /// x + I y
  static SlicePoly variable(const ImagUnit& I);
  /// x - I y
  static SlicePoly conj_variable(const ImagUnit& I);

  const ImagUnit& unit() const noexcept { return unit_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Quaternion coeff(unsigned a, unsigned b) const;
  void add_term(unsigned a, unsigned b, const Quaternion& c);

  unsigned max_y_degree() const;
  unsigned total_degree() const;

  Quaternion eval(const Rational& x, const Rational& y) const;

  SlicePoly& operator+=(const SlicePoly& o);
  SlicePoly& operator-=(const SlicePoly& o);
  friend SlicePoly operator+(SlicePoly a, const SlicePoly& b) { return a += b; }
  friend SlicePoly operator-(SlicePoly a, const SlicePoly& b) { return a -= b; }
  friend SlicePoly operator-(const SlicePoly& a);
  /// Pointwise product; throws SliceMismatch when the slices differ.
  friend SlicePoly operator*(const SlicePoly& a, const SlicePoly& b);
  friend SlicePoly operator*(const Quaternion& c, const SlicePoly& p);
  friend SlicePoly operator*(const SlicePoly& p, const Quaternion& c);
  friend bool operator==(const SlicePoly& a, const SlicePoly& b);

  SlicePoly d_dx() const;
  SlicePoly d_dy() const;

 private:
  ImagUnit unit_;
  Terms terms_;
};

SlicePoly pow(const SlicePoly& p, unsigned n);

/// `{I=i; (2,0):1, (1,1):2i}`; terms in map order.
std::string to_string(const SlicePoly& p);

/// Throws SliceMismatch unless both polynomials live on the same slice.
void require_same_slice(const SlicePoly& a, const SlicePoly& b);

/// Exact polyregularity level on a slice. ZeroFunction orders below Lev(0).
class Level {
 public:
  static Level zero_function() { return Level(); }
  static Level of(unsigned k) { return Level(k); }

  bool is_zero_function() const noexcept { return !k_.has_value(); }
  /// Throws InvalidArgument for ZeroFunction.
  unsigned value() const;

  friend auto operator<=>(const Level&, const Level&) = default;
  friend bool operator==(const Level&, const Level&) = default;

 private:
  Level() = default;
  explicit Level(unsigned k) : k_(k) {}
  std::optional<unsigned> k_;
};

/// "ZeroFunction" or "Lev(k)".
std::string to_string(const Level& level);

}  // namespace polyreg
