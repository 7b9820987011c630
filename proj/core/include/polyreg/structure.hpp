#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polyreg/slice_calc.hpp"

namespace polyreg {

/// Binomial sandwich sum_{j<=k} C(k,j) I^j alpha I^j, evaluated term by term and checked
/// against the closed form.
Quaternion s_func(const ImagUnit& I, const Quaternion& alpha, unsigned k);

/// alpha for k = 0, 2^k times the I-perpendicular part of alpha for k >= 1.
Quaternion s_closed_form(const ImagUnit& I, const Quaternion& alpha, unsigned k);

/// S_k + I S_k I, asserted equal to S_{k+1}.
Quaternion s_binomial_step(const ImagUnit& I, const Quaternion& alpha, unsigned k);

/// Shape of the vanishing set {k : S_k(I, alpha) = 0}.
enum class AlephClass {
  AllK,     ///< alpha = 0
  FromOne,  ///< alpha in C_I, alpha != 0: vanishes exactly from k = 1 on
  Never,    ///< alpha has a nonzero I-perpendicular part
};

AlephClass aleph_classify(const ImagUnit& I, const Quaternion& alpha);
const char* to_string(AlephClass c);

/// min{m, min aleph} (or m when aleph is empty), exactly as the index is literally defined.
unsigned literal_rho(const ImagUnit& I, const Quaternion& alpha, unsigned m);

struct SliceLevel {
  ImagUnit I;
  Level level;
};

struct IndexReport {
  std::vector<SliceLevel> per_slice;
  Level global = Level::zero_function();
  std::vector<unsigned> literal_rho;  ///< one per slice, same order as per_slice
  unsigned literal_varrho = 0;
  /// Upper bound predicted from the coefficients, when the operation has one.
  std::optional<unsigned> predicted_bound;
  std::vector<unsigned> predicted_per_slice;
  std::optional<bool> bound_tight;
};

/// Exact level of A^{n,m}(.|alpha) on each probe slice from the vanishing pattern of S_k.
IndexReport generic_index(const Quaternion& alpha, unsigned m, std::span<const ProbePair> probes);

/// Level over the whole sphere: ZeroFunction for alpha = 0, Lev(0) for real alpha or m = 0,
/// Lev(m) otherwise.
Level generic_sphere_level(const Quaternion& alpha, unsigned m);

/// (1/2)^k m!/(m-k)! A^{n,m-k}(q | S_k(I, alpha)) restricted to C_I. Throws for k > m.
SlicePoly generic_dbar(unsigned n, unsigned m, const Quaternion& alpha, const ImagUnit& I, unsigned k);

using PolyDecomp = QbarDecomp;

/// qbar-linearisation of A^{n,m}(.|alpha) on C_I; at most m + 1 parts.
PolyDecomp linearize_generic(unsigned n, unsigned m, const Quaternion& alpha, const ImagUnit& I);

/// Coefficient bound on the level of f.g on C_I: deg g when some coefficient of f leaves C_I
/// and deg g >= 1, else 0.
unsigned predicted_product_bound(const SRPoly& f, const SRPoly& g, const ImagUnit& I);

/// Exact per-slice levels of the pointwise product f.g with the predicted bound alongside.
/// Throws ZeroPolynomial when g = 0 and EmptyProbeSet for no probes.
IndexReport product_level(const SRPoly& f, const SRPoly& g, std::span<const ProbePair> probes);

/// Pointwise product node.
Expr dot_product_expr(const Expr& f, const Expr& g);

/// Coefficient convolution (f * g)_n = sum_k a_k b_{n-k}.
SRPoly star_product(const SRPoly& f, const SRPoly& g);

/// sum_{j,k} restrict(qbar^{j+k} (phi_j . psi_k), I)
SlicePoly osp_product(std::span<const SRPoly> fparts, std::span<const SRPoly> gparts, const ImagUnit& I);

/// (I^k G_f J d^k g_I/dy^k, G_f J d^k g_I/dx^k) on pair.I. Throws for k = 0.
std::pair<SlicePoly, SlicePoly> actionk_rhs(const SRPoly& f, const SRPoly& g, const ProbePair& pair, unsigned k);

/// G_f of the splitting of f on pair.I, as a slice polynomial.
SlicePoly splitting_g(const SRPoly& f, const ProbePair& pair);

/// True iff G_f = 0 on every probe. When the probes contain two non-parallel units this
/// is asserted equivalent to f having real coefficients.
bool char_sliceregular(const SRPoly& f, std::span<const ProbePair> probes);

/// Both sides of the product characterisation on one slice.
struct PolyregularConditions {
  bool zero_sets_cover;  ///< Z(G_f) u Z(d^k0 g_I/dy^k0) = C_I
  bool product_vanishes;  ///< G_f J d^k0 g_I/dy^k0 = 0
};

PolyregularConditions polyregular_conditions(const SRPoly& f, const SRPoly& g, unsigned k0, const ProbePair& pair);

/// True iff G_f J d^k0 g_I/dy^k0 vanishes identically on every probe. Throws for k0 = 0.
bool char_polyregular(const SRPoly& f, const SRPoly& g, unsigned k0, std::span<const ProbePair> probes);

}  // namespace polyreg
