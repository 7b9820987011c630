#include "polyreg/slice_poly.hpp"

#include <algorithm>

#include "polyreg/errors.hpp"

namespace polyreg {

SlicePoly SlicePoly::constant(const ImagUnit& I, const Quaternion& c) {
  SlicePoly p(I);
  p.add_term(0, 0, c);
  return p;
}

SlicePoly SlicePoly::variable(const ImagUnit& I) {
  SlicePoly p(I);
  p.add_term(1, 0, Quaternion(1));
  p.add_term(0, 1, I.value());
  return p;
}

SlicePoly SlicePoly::conj_variable(const ImagUnit& I) {
  SlicePoly p(I);
  p.add_term(1, 0, Quaternion(1));
  p.add_term(0, 1, -I.value());
  return p;
}

Quaternion SlicePoly::coeff(unsigned a, unsigned b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Quaternion{} : it->second;
}

void SlicePoly::add_term(unsigned a, unsigned b, const Quaternion& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

unsigned SlicePoly::max_y_degree() const {
  unsigned d = 0;
  for (const auto& [bd, c] : terms_) d = std::max(d, bd.b);
  return d;
}

unsigned SlicePoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [bd, c] : terms_) d = std::max(d, bd.a + bd.b);
  return d;
}

Quaternion SlicePoly::eval(const Rational& x, const Rational& y) const {
  Quaternion acc;
  for (const auto& [bd, c] : terms_) {
    Rational m = 1;
    for (unsigned i = 0; i < bd.a; ++i) m *= x;
    for (unsigned i = 0; i < bd.b; ++i) m *= y;
    acc += c * m;
  }
  return acc;
}

void require_same_slice(const SlicePoly& a, const SlicePoly& b) {
  if (!(a.unit() == b.unit()))
    throw SliceMismatch("slice polynomials live on different slices: " + to_string(a.unit().value()) + " vs " +
                        to_string(b.unit().value()));
}

SlicePoly& SlicePoly::operator+=(const SlicePoly& o) {
  require_same_slice(*this, o);
  for (const auto& [bd, c] : o.terms_) add_term(bd.a, bd.b, c);
  return *this;
}

SlicePoly& SlicePoly::operator-=(const SlicePoly& o) {
  require_same_slice(*this, o);
  for (const auto& [bd, c] : o.terms_) add_term(bd.a, bd.b, -c);
  return *this;
}

SlicePoly operator-(const SlicePoly& a) {
  SlicePoly out(a.unit_);
  for (const auto& [bd, c] : a.terms_) out.terms_.emplace(bd, -c);
  return out;
}

SlicePoly operator*(const SlicePoly& a, const SlicePoly& b) {
  require_same_slice(a, b);
  SlicePoly out(a.unit_);
  for (const auto& [ba, ca] : a.terms_)
    for (const auto& [bb, cb] : b.terms_) out.add_term(ba.a + bb.a, ba.b + bb.b, ca * cb);
  return out;
}

SlicePoly operator*(const Quaternion& c, const SlicePoly& p) {
  SlicePoly out(p.unit_);
  for (const auto& [bd, v] : p.terms_) out.add_term(bd.a, bd.b, c * v);
  return out;
}

SlicePoly operator*(const SlicePoly& p, const Quaternion& c) {
  SlicePoly out(p.unit_);
  for (const auto& [bd, v] : p.terms_) out.add_term(bd.a, bd.b, v * c);
  return out;
}

bool operator==(const SlicePoly& a, const SlicePoly& b) { return a.unit_ == b.unit_ && a.terms_ == b.terms_; }

SlicePoly SlicePoly::d_dx() const {
  SlicePoly out(unit_);
  for (const auto& [bd, c] : terms_)
    if (bd.a > 0) out.add_term(bd.a - 1, bd.b, c * Rational(bd.a));
  return out;
}

SlicePoly SlicePoly::d_dy() const {
  SlicePoly out(unit_);
  for (const auto& [bd, c] : terms_)
    if (bd.b > 0) out.add_term(bd.a, bd.b - 1, c * Rational(bd.b));
  return out;
}

SlicePoly pow(const SlicePoly& p, unsigned n) {
  SlicePoly out = SlicePoly::constant(p.unit(), Quaternion(1));
  for (unsigned i = 0; i < n; ++i) out = out * p;
  return out;
}

std::string to_string(const SlicePoly& p) {
  std::string out = "{I=" + to_string(p.unit().value()) + ";";
  bool first = true;
  for (const auto& [bd, c] : p.terms()) {
    out += first ? " " : ", ";
    first = false;
    out += "(" + std::to_string(bd.a) + "," + std::to_string(bd.b) + "):" + to_string(c);
  }
  return out + "}";
}

unsigned Level::value() const {
  if (!k_) throw InvalidArgument("ZeroFunction has no numeric level");
  return *k_;
}

std::string to_string(const Level& level) {
  return level.is_zero_function() ? "ZeroFunction" : "Lev(" + std::to_string(level.value()) + ")";
}

}  // namespace polyreg
