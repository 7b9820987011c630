#include "polyreg/quaternion.hpp"

#include "polyreg/errors.hpp"

namespace polyreg {

Quaternion Quaternion::inverse() const {
  Rational n = norm_sq();
  if (sgn(n) == 0) throw InvalidArgument("inverse of zero quaternion");
  Quaternion c = conj();
  c *= Rational(1) / n;
  return c;
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  w += o.w;
  x += o.x;
  y += o.y;
  z += o.z;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  w -= o.w;
  x -= o.x;
  y -= o.y;
  z -= o.z;
  return *this;
}

Quaternion& Quaternion::operator*=(const Rational& s) {
  w *= s;
  x *= s;
  y *= s;
  z *= s;
  return *this;
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Quaternion quat_mul(const Quaternion& a, const Quaternion& b) { return a * b; }

std::pair<Quaternion, Rational> quat_conj_norm(const Quaternion& a) { return {a.conj(), a.norm_sq()}; }

Quaternion power(const Quaternion& a, unsigned n) {
  Quaternion out(1);
  Quaternion base = a;
  while (n) {
    if (n & 1u) out = out * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return out;
}

Rational vector_dot(const Quaternion& a, const Quaternion& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

std::string to_string(const Quaternion& q) {
  std::string out;
  auto emit = [&](const Rational& c, const char* unit) {
    if (sgn(c) == 0) return;
    Rational mag = abs(c);
    if (sgn(c) < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (*unit == '\0' || mag != 1) out += to_string(mag);
    out += unit;
  };
  emit(q.w, "");
  emit(q.x, "i");
  emit(q.y, "j");
  emit(q.z, "k");
  return out.empty() ? "0" : out;
}

ImagUnit ImagUnit::from_quaternion(const Quaternion& q) {
  if (sgn(q.w) != 0 || q.norm_sq() != 1)
    throw InvalidArgument("not a rational imaginary unit: " + to_string(q));
  return ImagUnit(q);
}

ImagUnit make_imag_unit(const Rational& a, const Rational& b) {
  Rational s = 1 + a * a + b * b;
  Quaternion v(0, 2 * a / s, 2 * b / s, (1 - a * a - b * b) / s);
  return ImagUnit::from_quaternion(v);
}

ProbePair validate_probe_pair(const ImagUnit& I, const ImagUnit& J) {
  const Quaternion& i = I.value();
  const Quaternion& j = J.value();
  if (!(i * j + j * i).is_zero())
    throw NotOrthogonal("imaginary units do not anticommute: " + to_string(i) + ", " + to_string(j));
  return {I, J, i * j};
}

PerpSplit perp_decompose(const Quaternion& alpha, const ImagUnit& I) {
  const Quaternion& u = I.value();
  Quaternion sandwich = u * alpha * u;
  Rational half(1, 2);
  return {(alpha - sandwich) * half, (alpha + sandwich) * half};
}

Quaternion commutator_iter(const Quaternion& v, const ImagUnit& I, unsigned k) {
  if (k == 0) throw InvalidArgument("commutator_iter requires k >= 1");
  const Quaternion& u = I.value();
  Quaternion c = v;
  for (unsigned step = 0; step < k; ++step) c = c * u - u * c;
  return c;
}

const std::vector<ProbePair>& default_probes() {
  static const std::vector<ProbePair> probes = [] {
    auto unit = [](int x, int y, int z, int d) {
      return ImagUnit::from_quaternion({0, Rational(x) / d, Rational(y) / d, Rational(z) / d});
    };
    std::vector<ProbePair> out;
    out.push_back(validate_probe_pair(unit(1, 0, 0, 1), unit(0, 1, 0, 1)));
    out.push_back(validate_probe_pair(unit(0, 1, 0, 1), unit(0, 0, 1, 1)));
    out.push_back(validate_probe_pair(unit(0, 0, 1, 1), unit(1, 0, 0, 1)));
    out.push_back(validate_probe_pair(unit(3, 4, 0, 5), unit(0, 0, 1, 1)));
    out.push_back(validate_probe_pair(unit(2, 2, -1, 3), unit(1, -2, -2, 3)));
    out.push_back(validate_probe_pair(unit(2, -2, 1, 3), unit(1, 2, 2, 3)));
    out.push_back(validate_probe_pair(unit(6, 2, 3, 7), unit(3, -6, -2, 7)));
    out.push_back(validate_probe_pair(unit(2, 3, 6, 7), unit(3, -6, 2, 7)));
    return out;
  }();
  return probes;
}

}  // namespace polyreg
