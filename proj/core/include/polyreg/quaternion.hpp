#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polyreg/rational.hpp"

namespace polyreg {

/// Exact quaternion w + x i + y j + z k over the rationals.
struct Quaternion {
  Rational w, x, y, z;

  Quaternion() = default;
  Quaternion(Rational w_, Rational x_ = 0, Rational y_ = 0, Rational z_ = 0)
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
  Quaternion(int real) : w(real) {}

  static Quaternion unit_i() { return {0, 1, 0, 0}; }
  static Quaternion unit_j() { return {0, 0, 1, 0}; }
  static Quaternion unit_k() { return {0, 0, 0, 1}; }

  bool is_zero() const { return sgn(w) == 0 && is_real(); }
  bool is_real() const { return sgn(x) == 0 && sgn(y) == 0 && sgn(z) == 0; }
  /// Pure-imaginary part, w dropped.
  Quaternion vector_part() const { return {0, x, y, z}; }

  Quaternion conj() const { return {w, -x, -y, -z}; }
  Rational norm_sq() const { return w * w + x * x + y * y + z * z; }
  /// Throws InvalidArgument on zero.
  Quaternion inverse() const;

  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(const Rational& s);

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
  /// Hamilton product.
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator*(Quaternion a, const Rational& s) { return a *= s; }
  friend Quaternion operator*(const Rational& s, Quaternion a) { return a *= s; }
  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

Quaternion quat_mul(const Quaternion& a, const Quaternion& b);
/// (conjugate, squared norm)
std::pair<Quaternion, Rational> quat_conj_norm(const Quaternion& a);
Quaternion power(const Quaternion& a, unsigned n);
/// Euclidean dot product of the vector parts.
Rational vector_dot(const Quaternion& a, const Quaternion& b);

/// Canonical literal: lowest terms, zero components omitted, unit coefficient 1 elided
/// (`1+2i-3/4j+k`, `-5/2`, `0`, `-i`).
std::string to_string(const Quaternion& q);

/// A rational point of the unit sphere of imaginary quaternions: value^2 = -1 exactly.
class ImagUnit {
 public:
  /// Throws InvalidArgument unless q is purely imaginary with unit norm.
  static ImagUnit from_quaternion(const Quaternion& q);

  const Quaternion& value() const noexcept { return value_; }
  friend bool operator==(const ImagUnit&, const ImagUnit&) = default;

 private:
  explicit ImagUnit(Quaternion q) : value_(std::move(q)) {}
  Quaternion value_;
};

/// Stereographic parametrisation (2a i + 2b j + (1-a^2-b^2) k) / (1+a^2+b^2).
ImagUnit make_imag_unit(const Rational& a, const Rational& b);

/// Orthogonal frame (I, J, K = I J) used by the splitting machinery.
struct ProbePair {
  ImagUnit I;
  ImagUnit J;
  Quaternion K;
};

/// Throws NotOrthogonal when I J + J I != 0.
ProbePair validate_probe_pair(const ImagUnit& I, const ImagUnit& J);

struct PerpSplit {
  Quaternion parallel;  ///< commutes with I
  Quaternion perp;      ///< anticommutes with I
};

/// parallel = (alpha - I alpha I)/2, perp = (alpha + I alpha I)/2.
PerpSplit perp_decompose(const Quaternion& alpha, const ImagUnit& I);

/// k-fold iterated commutator [...[[v, I], I]..., I] with [v, I] = vI - Iv. Throws for k = 0.
Quaternion commutator_iter(const Quaternion& v, const ImagUnit& I, unsigned k);

/// The eight curated (I, J) pairs used wherever "for every I" is probed.
const std::vector<ProbePair>& default_probes();

}  // namespace polyreg
