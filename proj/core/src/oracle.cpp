#include "polyreg/oracle.hpp"

#include "polyreg/errors.hpp"

namespace polyreg::oracle {

RandomSpec RandomSpec::defaults_for(std::string_view suite) {
  RandomSpec spec;
  if (suite == "lemS" || suite == "parser") spec.trials = 500;
  return spec;
}

InstanceGenerator::InstanceGenerator(const RandomSpec& spec) : spec_(spec), engine_(spec.seed) {}

std::uint64_t InstanceGenerator::below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }

Rational InstanceGenerator::rational() {
  const long bound = static_cast<long>(spec_.coeff_bound);
  long num = static_cast<long>(below(2 * bound + 1)) - bound;
  long den = static_cast<long>(below(bound)) + 1;
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

Rational InstanceGenerator::nonzero_rational() {
  for (;;) {
    Rational r = rational();
    if (sgn(r) != 0) return r;
  }
}

const ProbePair& InstanceGenerator::probe() {
  const auto& probes = default_probes();
  return probes[below(probes.size())];
}

Quaternion InstanceGenerator::slice_valued(const ImagUnit& I) {
  Rational s = rational();
  Rational t = rational();
  return Quaternion(s) + I.value() * t;
}

Quaternion InstanceGenerator::quaternion(const ImagUnit& I, DrawClass* cls) {
  std::uint64_t roll = below(10);
  DrawClass c = roll == 0 ? DrawClass::Zero : roll == 1 ? DrawClass::Real : roll == 2 ? DrawClass::SliceValued : DrawClass::Generic;
  if (cls) *cls = c;
  switch (c) {
    case DrawClass::Zero: return {};
    case DrawClass::Real: return Quaternion(rational());
    case DrawClass::SliceValued: return slice_valued(I);
    case DrawClass::Generic: break;
  }
  Rational w = rational(), x = rational(), y = rational(), z = rational();
  return {w, x, y, z};
}

Quaternion InstanceGenerator::quaternion() { return quaternion(probe().I); }

SRPoly InstanceGenerator::srpoly(const ImagUnit& I, DrawClass* cls, unsigned max_degree) {
  if (max_degree == 0) max_degree = spec_.max_degree;
  std::uint64_t roll = below(10);
  DrawClass c = roll == 0 ? DrawClass::Zero : roll == 1 ? DrawClass::Real : roll == 2 ? DrawClass::SliceValued : DrawClass::Generic;
  if (cls) *cls = c;
  if (c == DrawClass::Zero) return {};
  unsigned degree = static_cast<unsigned>(below(max_degree + 1));
  std::vector<Quaternion> coeffs(degree + 1);
  for (unsigned n = 0; n <= degree; ++n) {
    bool leading = n == degree;
    do {
      switch (c) {
        case DrawClass::Real: coeffs[n] = Quaternion(rational()); break;
        case DrawClass::SliceValued: coeffs[n] = slice_valued(I); break;
        default: {
          Rational w = rational(), x = rational(), y = rational(), z = rational();
          coeffs[n] = {w, x, y, z};
        }
      }
    } while (leading && coeffs[n].is_zero());
  }
  return SRPoly(std::move(coeffs));
}

SRPoly InstanceGenerator::nonzero_srpoly(const ImagUnit& I, DrawClass* cls, unsigned max_degree) {
  for (;;) {
    SRPoly p = srpoly(I, cls, max_degree);
    if (!p.is_zero()) return p;
  }
}

SRPoly InstanceGenerator::real_srpoly(unsigned max_degree) {
  if (max_degree == 0) max_degree = spec_.max_degree;
  unsigned degree = static_cast<unsigned>(below(max_degree + 1));
  std::vector<Quaternion> coeffs(degree + 1);
  for (unsigned n = 0; n < degree; ++n) coeffs[n] = Quaternion(rational());
  coeffs[degree] = Quaternion(nonzero_rational());
  return SRPoly(std::move(coeffs));
}

SRPoly InstanceGenerator::slice_valued_srpoly(const ImagUnit& I, unsigned degree) {
  std::vector<Quaternion> coeffs(degree + 1);
  for (unsigned n = 0; n < degree; ++n) coeffs[n] = slice_valued(I);
  do {
    coeffs[degree] = slice_valued(I);
  } while (coeffs[degree].is_zero());
  return SRPoly(std::move(coeffs));
}

GenericInstance InstanceGenerator::generic(const ImagUnit& I) {
  GenericInstance g;
  g.n = static_cast<unsigned>(below(spec_.max_power + 1));
  g.m = static_cast<unsigned>(below(spec_.max_power + 1));
  g.alpha = quaternion(I);
  return g;
}

SlicePoly InstanceGenerator::slice_poly(const ImagUnit& I) {
  SlicePoly p(I);
  if (below(10) == 0) return p;
  bool real_only = below(10) == 0;
  unsigned terms = 1 + static_cast<unsigned>(below(6));
  for (unsigned t = 0; t < terms; ++t) {
    unsigned total = static_cast<unsigned>(below(spec_.max_degree + 1));
    unsigned a = static_cast<unsigned>(below(total + 1));
    p.add_term(a, total - a, real_only ? Quaternion(rational()) : quaternion(I));
  }
  return p;
}

Expr InstanceGenerator::expr(unsigned depth) {
  auto single_component = [this] {
    Quaternion c;
    Rational r = rational();
    switch (below(4)) {
      case 0: c.w = r; break;
      case 1: c.x = r; break;
      case 2: c.y = r; break;
      default: c.z = r; break;
    }
    return c;
  };
  std::uint64_t roll = below(depth == 0 ? 4 : 7);
  switch (roll) {
    case 0: return Expr::var();
    case 1: return Expr::var_bar();
    case 2: return Expr::constant(single_component());
    case 3: {
      Quaternion alpha = quaternion();
      unsigned n = static_cast<unsigned>(below(3));
      unsigned m = static_cast<unsigned>(below(3));
      return Expr::generic(n, m, alpha);
    }
    case 4:
    case 5: {
      std::vector<Expr> kids;
      unsigned count = 2 + static_cast<unsigned>(below(2));
      for (unsigned i = 0; i < count; ++i) kids.push_back(expr(depth - 1));
      return roll == 4 ? Expr::sum(std::move(kids)) : Expr::product(std::move(kids));
    }
    default: return Expr::power(expr(depth - 1), static_cast<unsigned>(below(4)));
  }
}

Instance random_instance(const RandomSpec& spec, InstanceKind kind) {
  InstanceGenerator gen(spec);
  switch (kind) {
    case InstanceKind::Quat: return gen.quaternion();
    case InstanceKind::ImagUnitChoice: return gen.probe();
    case InstanceKind::SRPolyKind: return gen.srpoly(gen.probe().I);
    case InstanceKind::GenericKind: return gen.generic(gen.probe().I);
  }
  return Quaternion{};
}

Level brute_level(const SlicePoly& p) {
  if (p.is_zero()) return Level::zero_function();
  SlicePoly cur = dbar(p);
  unsigned count = 0;
  while (!cur.is_zero()) {
    cur = dbar(cur);
    ++count;
  }
  return Level::of(count);
}

Level brute_level(const Expr& e, const ImagUnit& I) { return brute_level(restrict(e, I)); }

SlicePoly brute_dbar(const SlicePoly& p, unsigned k) {
  SlicePoly cur = p;
  for (unsigned i = 0; i < k; ++i) cur = dbar(cur);
  return cur;
}

Quaternion brute_s(const ImagUnit& I, const Quaternion& alpha, unsigned k) {
  Quaternion sum;
  for (unsigned j = 0; j <= k; ++j) {
    Quaternion ij = power(I.value(), j);
    sum += ij * alpha * ij * binomial(k, j);
  }
  return sum;
}

SlicePoly gaussian_hermite(const SRPoly& F, unsigned k, const ImagUnit& I) {
  // P stands for P(x, y) e^{-(x^2+y^2)}; the Gaussian contributes -2x P and -2y P.
  SlicePoly x(I), y(I);
  x.add_term(1, 0, Quaternion(1));
  y.add_term(0, 1, Quaternion(1));
  SlicePoly P = restrict(F, I);
  const Quaternion& u = I.value();
  for (unsigned step = 0; step < k; ++step) {
    SlicePoly px = P.d_dx() - x * P * Quaternion(2);
    SlicePoly py = P.d_dy() - y * P * Quaternion(2);
    P = (px - u * py) * Quaternion(Rational(1, 2));
  }
  return k % 2 ? -P : P;
}

}  // namespace polyreg::oracle
