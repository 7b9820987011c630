#include "polyreg/slice_calc.hpp"

#include "polyreg/errors.hpp"

namespace polyreg {

SlicePoly restrict(const Expr& e, const ImagUnit& I) {
  switch (e.kind()) {
    case Expr::Kind::Var:
      return SlicePoly::variable(I);
    case Expr::Kind::VarBar:
      return SlicePoly::conj_variable(I);
    case Expr::Kind::Const:
      return SlicePoly::constant(I, e.value());
    case Expr::Kind::Sum: {
      SlicePoly acc(I);
      for (const Expr& t : e.children()) acc += restrict(t, I);
      return acc;
    }
    case Expr::Kind::Product: {
      SlicePoly acc = SlicePoly::constant(I, Quaternion(1));
      for (const Expr& f : e.children()) acc = acc * restrict(f, I);
      return acc;
    }
    case Expr::Kind::Power:
      return pow(restrict(e.base(), I), e.exponent());
    case Expr::Kind::Generic: {
      SlicePoly z = SlicePoly::variable(I);
      return pow(z, e.left_power()) * e.value() * pow(z, e.right_power());
    }
  }
  return SlicePoly(I);
}

SlicePoly restrict(const SRPoly& p, const ImagUnit& I) {
  // (x + I y)^n a = sum_j C(n,j) x^(n-j) y^j I^j a, with I^j cycling through 1, I, -1, -I.
  SlicePoly acc(I);
  for (unsigned n = 0; n < p.coeffs().size(); ++n) {
    const Quaternion& a = p.coeffs()[n];
    if (a.is_zero()) continue;
    const Quaternion Ia = I.value() * a;
    for (unsigned j = 0; j <= n; ++j) {
      Rational c = binomial(n, j);
      if (j % 4 >= 2) c = -c;
      acc.add_term(n - j, j, (j % 2 ? Ia : a) * c);
    }
  }
  return acc;
}

namespace {

// (d/dx + sign * I d/dy) / 2
SlicePoly cauchy_riemann(const SlicePoly& p, int sign) {
  SlicePoly out(p.unit());
  const Quaternion& u = p.unit().value();
  Rational half(1, 2);
  for (const auto& [bd, c] : p.terms()) {
    if (bd.a > 0) out.add_term(bd.a - 1, bd.b, c * Rational(bd.a * half));
    if (bd.b > 0) {
      Quaternion t = u * c * Rational(bd.b * half);
      out.add_term(bd.a, bd.b - 1, sign > 0 ? t : -t);
    }
  }
  return out;
}

}  // namespace

SlicePoly dbar(const SlicePoly& p) { return cauchy_riemann(p, +1); }

SlicePoly dbar_power(const SlicePoly& p, unsigned k) {
  SlicePoly out = p;
  for (unsigned i = 0; i < k && !out.is_zero(); ++i) out = dbar(out);
  return out;
}

SlicePoly dslice(const SlicePoly& p) { return cauchy_riemann(p, -1); }

Level level_on_slice(const SlicePoly& p) {
  if (p.is_zero()) return Level::zero_function();
  // Each application lowers the total degree by one.
  const unsigned bound = 1 + p.total_degree();
  SlicePoly cur = p;
  for (unsigned k = 0; k < bound; ++k) {
    SlicePoly next = dbar(cur);
    if (next.is_zero()) return Level::of(k);
    cur = std::move(next);
  }
  throw InvariantViolation("level_on_slice exceeded its degree bound");
}

Level global_level(const Expr& e, std::span<const ProbePair> probes) {
  if (probes.empty()) throw EmptyProbeSet();
  Level best = Level::zero_function();
  for (const ProbePair& pr : probes) best = std::max(best, level_on_slice(restrict(e, pr.I)));
  return best;
}

// ---------------------------------------------------------------------------
// Right (qbar, q) form

namespace {

// Polynomials in (qbar, q) with C_I coefficients; C_I is commutative so ordering is free.
using CPoly = std::map<std::pair<unsigned, unsigned>, SliceComplex>;

SliceComplex operator*(const SliceComplex& a, const SliceComplex& b) {
  return {a.s * b.s - a.t * b.t, a.s * b.t + a.t * b.s};
}

void accumulate(CPoly& p, std::pair<unsigned, unsigned> key, const SliceComplex& c) {
  auto [it, inserted] = p.try_emplace(key, c);
  if (!inserted) {
    it->second.s += c.s;
    it->second.t += c.t;
  }
}

CPoly cmul(const CPoly& a, const CPoly& b) {
  CPoly out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) accumulate(out, {ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return out;
}

// x = (qbar + q)/2 and y = (I qbar - I q)/2, keyed (qbar power, q power).
const CPoly& x_poly() {
  static const CPoly p{{{1, 0}, {Rational(1, 2), 0}}, {{0, 1}, {Rational(1, 2), 0}}};
  return p;
}

const CPoly& y_poly() {
  static const CPoly p{{{1, 0}, {0, Rational(1, 2)}}, {{0, 1}, {0, Rational(-1, 2)}}};
  return p;
}

CPoly monomial_expansion(unsigned a, unsigned b) {
  CPoly out{{{0, 0}, {1, 0}}};
  for (unsigned i = 0; i < a; ++i) out = cmul(out, x_poly());
  for (unsigned i = 0; i < b; ++i) out = cmul(out, y_poly());
  return out;
}

}  // namespace

Quaternion to_quaternion(const SliceComplex& z, const ImagUnit& I) {
  Quaternion out = I.value() * z.t;
  out.w = z.s;
  return out;
}

SliceComplex to_slice_complex(const Quaternion& c, const ImagUnit& I) {
  SliceComplex z{c.w, vector_dot(c, I.value())};
  if (!(to_quaternion(z, I) == c)) throw InvalidArgument("value does not lie in C_I: " + to_string(c));
  return z;
}

RightForm to_right_form(const SlicePoly& p) {
  const ImagUnit& I = p.unit();
  RightForm out;
  auto add = [&out](std::pair<unsigned, unsigned> key, const Quaternion& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = out.try_emplace(key, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (const auto& [bd, c] : p.terms()) {
    PerpSplit cs = perp_decompose(c, I);
    for (const auto& [key, d] : monomial_expansion(bd.a, bd.b)) {
      auto [j, k] = key;
      // c_par commutes with C_I; c_perp conjugates it while moving right.
      add({j, k}, to_quaternion(d, I) * cs.parallel);
      add({k, j}, to_quaternion({d.s, -d.t}, I) * cs.perp);
    }
  }
  return out;
}

SRPoly read_slice_regular(const SlicePoly& p) {
  std::vector<Quaternion> coeffs;
  for (const auto& [key, e] : to_right_form(p)) {
    if (key.first != 0) throw NotReducible("slice polynomial depends on qbar");
    if (coeffs.size() <= key.second) coeffs.resize(key.second + 1);
    coeffs[key.second] = e;
  }
  return SRPoly(std::move(coeffs));
}

namespace {

SlicePoly restrict_qbar_times(unsigned k, const SRPoly& phi, const ImagUnit& I) {
  return pow(SlicePoly::conj_variable(I), k) * restrict(phi, I);
}

}  // namespace

QbarDecomp qbar_taylor(const SlicePoly& p) {
  QbarDecomp out{p.unit(), {}};
  Level lev = level_on_slice(p);
  if (lev.is_zero_function()) return out;
  const unsigned top = lev.value();
  out.parts.resize(top + 1);
  SlicePoly rest = p;
  for (unsigned n = top + 1; n-- > 0;) {
    SlicePoly d = dbar_power(rest, n);
    if (!dbar(d).is_zero()) throw NotReducible("residual level exceeds the peeled degree");
    SRPoly phi = read_slice_regular(d) * (Rational(1) / factorial(n));
    rest -= restrict_qbar_times(n, phi, p.unit());
    out.parts[n] = std::move(phi);
  }
  check_invariant(rest.is_zero(), "qbar_taylor left a nonzero residual");
  return out;
}

SlicePoly reassemble(const QbarDecomp& d) {
  SlicePoly acc(d.I);
  for (unsigned k = 0; k < d.parts.size(); ++k) acc += restrict_qbar_times(k, d.parts[k], d.I);
  return acc;
}

Quaternion eval_decomp(const QbarDecomp& d, const Quaternion& q) {
  Quaternion acc;
  Quaternion qbar_k(1);
  for (const SRPoly& phi : d.parts) {
    acc += qbar_k * phi.eval(q);
    qbar_k = qbar_k * q.conj();
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Splitting

SplitPair split_poly(const SlicePoly& p, const ProbePair& pair) {
  if (!(pair.I == p.unit()))
    throw SliceMismatch("probe pair unit " + to_string(pair.I.value()) + " differs from slice " +
                        to_string(p.unit().value()));
  const ImagUnit& I = pair.I;
  const Quaternion& J = pair.J.value();
  SplitPair out{I, pair.J, {}, {}};
  for (const auto& [bd, c] : p.terms()) {
    PerpSplit cs = perp_decompose(c, I);
    SliceComplex f = to_slice_complex(cs.parallel, I);
    SliceComplex g = to_slice_complex(-(cs.perp * J), I);
    if (sgn(f.s) != 0 || sgn(f.t) != 0) out.F.emplace(bd, f);
    if (sgn(g.s) != 0 || sgn(g.t) != 0) out.G.emplace(bd, g);
  }
  return out;
}

SlicePoly component_poly(const std::map<Bidegree, SliceComplex, BidegreeOrder>& part, const ImagUnit& I) {
  SlicePoly out(I);
  for (const auto& [bd, z] : part) out.add_term(bd.a, bd.b, to_quaternion(z, I));
  return out;
}

SlicePoly reassemble(const SplitPair& s) {
  return component_poly(s.F, s.I) + component_poly(s.G, s.I) * s.J.value();
}

SlicePoly hermite_H(const SRPoly& F, unsigned k, const ImagUnit& I) {
  SlicePoly g = restrict(F, I);
  SlicePoly qbar = SlicePoly::conj_variable(I);
  for (unsigned i = 0; i < k; ++i) g = qbar * g - dslice(g);
  return g;
}

}  // namespace polyreg
