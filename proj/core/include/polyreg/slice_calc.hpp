#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "polyreg/expr.hpp"
#include "polyreg/slice_poly.hpp"

namespace polyreg {

/// Restriction of e to the slice C_I: q -> x + I y, qbar -> x - I y. Exact.
SlicePoly restrict(const Expr& e, const ImagUnit& I);
SlicePoly restrict(const SRPoly& p, const ImagUnit& I);

/// Left slice Cauchy-Riemann operator (d/dx + I d/dy) / 2, I multiplying on the left.
SlicePoly dbar(const SlicePoly& p);
SlicePoly dbar_power(const SlicePoly& p, unsigned k);

/// Conjugate operator (d/dx - I d/dy) / 2, I multiplying on the left.
SlicePoly dslice(const SlicePoly& p);

/// ZeroFunction, or the largest k with dbar^k(p) != 0. Iterates at most 1 + total_degree times.
Level level_on_slice(const SlicePoly& p);

/// Maximum of level_on_slice over the probes: a certified lower bound for the level over
/// the whole sphere. Throws EmptyProbeSet.
Level global_level(const Expr& e, std::span<const ProbePair> probes);

/// Coefficients e_jk of p(x, y) = sum conj(q)^j q^k e_jk, keyed by (j, k).
using RightForm = std::map<std::pair<unsigned, unsigned>, Quaternion>;
RightForm to_right_form(const SlicePoly& p);

/// Reads a slice-regular slice polynomial back as sum q^n a_n. Throws NotReducible
/// when p is not annihilated by dbar.
SRPoly read_slice_regular(const SlicePoly& p);

/// Decomposition p = sum_k conj(q)^k phi_k(q) on one slice.
struct QbarDecomp {
  ImagUnit I;
  std::vector<SRPoly> parts;  ///< phi_0 .. phi_n; empty for the zero function
};

/// Peels phi_n = dbar^n(p) / n! from the top level down. Throws NotReducible on an
/// unreadable component (impossible for polynomial input; treated as a bug signal).
QbarDecomp qbar_taylor(const SlicePoly& p);

/// sum_k restrict(qbar^k phi_k) on the decomposition's slice.
SlicePoly reassemble(const QbarDecomp& d);

/// Pointwise value of sum_k conj(q)^k phi_k(q).
Quaternion eval_decomp(const QbarDecomp& d, const Quaternion& q);

/// s + t I, an element of C_I.
struct SliceComplex {
  Rational s;
  Rational t;
  friend bool operator==(const SliceComplex&, const SliceComplex&) = default;
};

Quaternion to_quaternion(const SliceComplex& z, const ImagUnit& I);
/// Throws InvalidArgument unless c lies in C_I.
SliceComplex to_slice_complex(const Quaternion& c, const ImagUnit& I);

/// f_I = F + G J with F, G valued in C_I.
struct SplitPair {
  ImagUnit I;
  ImagUnit J;
  std::map<Bidegree, SliceComplex, BidegreeOrder> F;
  std::map<Bidegree, SliceComplex, BidegreeOrder> G;
};

/// Throws SliceMismatch unless pair.I is p's slice.
SplitPair split_poly(const SlicePoly& p, const ProbePair& pair);

/// sum (F_ab + G_ab J) x^a y^b
SlicePoly reassemble(const SplitPair& s);

/// F or G of a split as a slice polynomial with C_I-valued coefficients.
SlicePoly component_poly(const std::map<Bidegree, SliceComplex, BidegreeOrder>& part, const ImagUnit& I);

/// H_k(F) computed as the k-fold application of G -> qbar G - dslice(G).
SlicePoly hermite_H(const SRPoly& F, unsigned k, const ImagUnit& I);

}  // namespace polyreg
