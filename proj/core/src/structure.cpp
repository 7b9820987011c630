#include "polyreg/structure.hpp"

#include <algorithm>

#include "polyreg/errors.hpp"

namespace polyreg {

Quaternion s_func(const ImagUnit& I, const Quaternion& alpha, unsigned k) {
  const Quaternion& u = I.value();
  Quaternion sum;
  Quaternion left(1);   // I^j
  Quaternion right(1);  // I^j
  for (unsigned j = 0; j <= k; ++j) {
    sum += (left * alpha * right) * binomial(k, j);
    left = u * left;
    right = right * u;
  }
  check_invariant(sum == s_closed_form(I, alpha, k), "S_k disagrees with 2^k times the perpendicular part");
  return sum;
}

Quaternion s_closed_form(const ImagUnit& I, const Quaternion& alpha, unsigned k) {
  if (k == 0) return alpha;
  mpz_class two_k;
  mpz_ui_pow_ui(two_k.get_mpz_t(), 2, k);
  return perp_decompose(alpha, I).perp * Rational(two_k);
}

Quaternion s_binomial_step(const ImagUnit& I, const Quaternion& alpha, unsigned k) {
  Quaternion sk = s_func(I, alpha, k);
  Quaternion step = sk + I.value() * sk * I.value();
  check_invariant(step == s_func(I, alpha, k + 1), "S_k + I S_k I differs from S_{k+1}");
  return step;
}

AlephClass aleph_classify(const ImagUnit& I, const Quaternion& alpha) {
  if (alpha.is_zero()) return AlephClass::AllK;
  if (perp_decompose(alpha, I).perp.is_zero()) return AlephClass::FromOne;
  return AlephClass::Never;
}

const char* to_string(AlephClass c) {
  switch (c) {
    case AlephClass::AllK: return "AllK";
    case AlephClass::FromOne: return "FromOne";
    case AlephClass::Never: return "Never";
  }
  return "?";
}

unsigned literal_rho(const ImagUnit& I, const Quaternion& alpha, unsigned m) {
  switch (aleph_classify(I, alpha)) {
    case AlephClass::AllK: return 0;
    case AlephClass::FromOne: return std::min(m, 1u);
    case AlephClass::Never: return m;
  }
  return m;
}

namespace {

Level generic_slice_level(const ImagUnit& I, const Quaternion& alpha, unsigned m) {
  if (alpha.is_zero()) return Level::zero_function();
  for (unsigned k = m + 1; k-- > 0;)
    if (!s_func(I, alpha, k).is_zero()) return Level::of(k);
  return Level::zero_function();
}

}  // namespace

IndexReport generic_index(const Quaternion& alpha, unsigned m, std::span<const ProbePair> probes) {
  if (probes.empty()) throw EmptyProbeSet();
  IndexReport report;
  for (const ProbePair& pr : probes) {
    Level lev = generic_slice_level(pr.I, alpha, m);
    report.per_slice.push_back({pr.I, lev});
    report.global = std::max(report.global, lev);
    unsigned rho = literal_rho(pr.I, alpha, m);
    report.literal_rho.push_back(rho);
    report.literal_varrho = std::max(report.literal_varrho, rho);
  }
  return report;
}

Level generic_sphere_level(const Quaternion& alpha, unsigned m) {
  if (alpha.is_zero()) return Level::zero_function();
  if (alpha.is_real() || m == 0) return Level::of(0);
  return Level::of(m);
}

SlicePoly generic_dbar(unsigned n, unsigned m, const Quaternion& alpha, const ImagUnit& I, unsigned k) {
  if (k > m) throw InvalidArgument("generic_dbar requires k <= m");
  mpz_class two_k;
  mpz_ui_pow_ui(two_k.get_mpz_t(), 2, k);
  Rational scale = falling_factorial(m, k) / Rational(two_k);
  return restrict(Expr::generic(n, m - k, s_func(I, alpha, k) * scale), I);
}

PolyDecomp linearize_generic(unsigned n, unsigned m, const Quaternion& alpha, const ImagUnit& I) {
  PolyDecomp d = qbar_taylor(restrict(Expr::generic(n, m, alpha), I));
  check_invariant(d.parts.size() <= m + 1, "generic element linearised into more than m + 1 parts");
  return d;
}

unsigned predicted_product_bound(const SRPoly& f, const SRPoly& g, const ImagUnit& I) {
  bool leaves_slice = false;
  for (const Quaternion& a : f.coeffs()) leaves_slice = leaves_slice || !perp_decompose(a, I).perp.is_zero();
  if (!leaves_slice) return 0;
  const unsigned deg_g = g.degree();
  for (unsigned k = deg_g + 1; k-- > 0;) {
    for (unsigned m = std::max(k, 1u); m <= deg_g; ++m)
      if (!g.coeff(m).is_zero()) return k;
  }
  return 0;
}

IndexReport product_level(const SRPoly& f, const SRPoly& g, std::span<const ProbePair> probes) {
  if (g.is_zero()) throw ZeroPolynomial("product_level requires a nonzero g");
  if (probes.empty()) throw EmptyProbeSet();
  IndexReport report;
  unsigned predicted = 0;
  for (const ProbePair& pr : probes) {
    Level lev = level_on_slice(restrict(f, pr.I) * restrict(g, pr.I));
    report.per_slice.push_back({pr.I, lev});
    report.global = std::max(report.global, lev);
    unsigned bound = predicted_product_bound(f, g, pr.I);
    report.predicted_per_slice.push_back(bound);
    predicted = std::max(predicted, bound);
  }
  report.predicted_bound = predicted;
  unsigned exact = report.global.is_zero_function() ? 0 : report.global.value();
  report.bound_tight = exact == predicted;
  return report;
}

Expr dot_product_expr(const Expr& f, const Expr& g) { return Expr::product({f, g}); }

SRPoly star_product(const SRPoly& f, const SRPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Quaternion> out(f.coeffs().size() + g.coeffs().size() - 1);
  for (std::size_t a = 0; a < f.coeffs().size(); ++a)
    for (std::size_t b = 0; b < g.coeffs().size(); ++b) out[a + b] += f.coeffs()[a] * g.coeffs()[b];
  return SRPoly(std::move(out));
}

SlicePoly osp_product(std::span<const SRPoly> fparts, std::span<const SRPoly> gparts, const ImagUnit& I) {
  SlicePoly acc(I);
  SlicePoly qbar = SlicePoly::conj_variable(I);
  std::vector<SlicePoly> gs;
  for (const SRPoly& psi : gparts) gs.push_back(restrict(psi, I));
  for (std::size_t j = 0; j < fparts.size(); ++j) {
    SlicePoly phi = restrict(fparts[j], I);
    for (std::size_t k = 0; k < gs.size(); ++k)
      acc += pow(qbar, static_cast<unsigned>(j + k)) * (phi * gs[k]);
  }
  return acc;
}

SlicePoly splitting_g(const SRPoly& f, const ProbePair& pair) {
  return component_poly(split_poly(restrict(f, pair.I), pair).G, pair.I);
}

namespace {

SlicePoly nth(SlicePoly p, unsigned k, SlicePoly (SlicePoly::*d)() const) {
  for (unsigned i = 0; i < k; ++i) p = (p.*d)();
  return p;
}

}  // namespace

std::pair<SlicePoly, SlicePoly> actionk_rhs(const SRPoly& f, const SRPoly& g, const ProbePair& pair, unsigned k) {
  if (k == 0) throw InvalidArgument("actionk_rhs requires k >= 1");
  SlicePoly G = splitting_g(f, pair);
  SlicePoly gI = restrict(g, pair.I);
  const Quaternion& J = pair.J.value();
  SlicePoly via_y = (power(pair.I.value(), k) * G) * J * nth(gI, k, &SlicePoly::d_dy);
  SlicePoly via_x = G * J * nth(gI, k, &SlicePoly::d_dx);
  return {std::move(via_y), std::move(via_x)};
}

namespace {

bool spans_two_directions(std::span<const ProbePair> probes) {
  for (const ProbePair& a : probes)
    for (const ProbePair& b : probes) {
      const Quaternion& u = a.I.value();
      const Quaternion& v = b.I.value();
      if (!(u == v) && !(u == -v)) return true;
    }
  return false;
}

}  // namespace

bool char_sliceregular(const SRPoly& f, std::span<const ProbePair> probes) {
  bool all_zero = true;
  for (const ProbePair& pr : probes) all_zero = all_zero && splitting_g(f, pr).is_zero();
  if (spans_two_directions(probes))
    check_invariant(all_zero == f.has_real_coefficients(),
                    "vanishing splitting component disagrees with real coefficients");
  return all_zero;
}

PolyregularConditions polyregular_conditions(const SRPoly& f, const SRPoly& g, unsigned k0, const ProbePair& pair) {
  if (k0 == 0) throw InvalidArgument("k0 must be positive");
  SlicePoly G = splitting_g(f, pair);
  SlicePoly D = nth(restrict(g, pair.I), k0, &SlicePoly::d_dy);
  return {G.is_zero() || D.is_zero(), (G * pair.J.value() * D).is_zero()};
}

bool char_polyregular(const SRPoly& f, const SRPoly& g, unsigned k0, std::span<const ProbePair> probes) {
  if (k0 == 0) throw InvalidArgument("k0 must be positive");
  bool holds = true;
  for (const ProbePair& pr : probes) {
    PolyregularConditions c = polyregular_conditions(f, g, k0, pr);
    check_invariant(c.zero_sets_cover == c.product_vanishes, "zero-set and product conditions disagree");
    bool reduced = splitting_g(f, pr).is_zero() || g.is_zero() || g.degree() < k0;
    check_invariant(reduced == c.product_vanishes, "condition does not reduce to G_f = 0 or deg g < k0");
    holds = holds && c.product_vanishes;
  }
  return holds;
}

}  // namespace polyreg
