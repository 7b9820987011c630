#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polyreg/slice_calc.hpp"

// Ground truth for the verification suites. Nothing in this header's implementation
// consults the closed forms of structure.hpp; the suites call those only as the subject
// under test.
namespace polyreg::oracle {

struct RandomSpec {
  std::uint64_t seed = 0xC0FFEE;
  unsigned max_degree = 6;
  unsigned max_power = 5;
  unsigned coeff_bound = 9;
  unsigned trials = 200;

  /// Defaults for a suite: 500 trials for lemS and parser, 200 otherwise.
  static RandomSpec defaults_for(std::string_view suite);
};

/// Which of the fixed-rate draw classes produced a value.
enum class DrawClass { Generic, Zero, Real, SliceValued };

struct GenericInstance {
  unsigned n = 0;
  unsigned m = 0;
  Quaternion alpha;
};

/// Deterministic instance stream. Bounded draws reduce mt19937_64 output modulo the range,
/// so a seed reproduces the same stream on every platform.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(const RandomSpec& spec);

  std::uint64_t below(std::uint64_t n);
  Rational rational();
  Rational nonzero_rational();
  const ProbePair& probe();
  /// 10% zero, 10% real, 10% C_I-valued for the given unit, the rest unrestricted.
  Quaternion quaternion(const ImagUnit& I, DrawClass* cls = nullptr);
  Quaternion quaternion();
  Quaternion slice_valued(const ImagUnit& I);
  /// Same class rates as quaternion(); degree uniform in [0, max_degree].
  SRPoly srpoly(const ImagUnit& I, DrawClass* cls = nullptr, unsigned max_degree = 0);
  SRPoly nonzero_srpoly(const ImagUnit& I, DrawClass* cls = nullptr, unsigned max_degree = 0);
  SRPoly real_srpoly(unsigned max_degree = 0);
  SRPoly slice_valued_srpoly(const ImagUnit& I, unsigned degree);
  GenericInstance generic(const ImagUnit& I);
  /// Random slice polynomial with up to six terms of total degree <= max_degree.
  SlicePoly slice_poly(const ImagUnit& I);
  /// Random tree whose constants have one nonzero component.
  Expr expr(unsigned depth);

  const RandomSpec& spec() const noexcept { return spec_; }

 private:
  RandomSpec spec_;
  std::mt19937_64 engine_;
};

enum class InstanceKind { Quat, ImagUnitChoice, SRPolyKind, GenericKind };
using Instance = std::variant<Quaternion, ProbePair, SRPoly, GenericInstance>;

/// First draw of the given kind from a fresh stream seeded by spec.seed.
Instance random_instance(const RandomSpec& spec, InstanceKind kind);

/// Level by literal repeated differentiation until the restriction vanishes.
Level brute_level(const Expr& e, const ImagUnit& I);
Level brute_level(const SlicePoly& p);

/// dbar applied k times, one application at a time.
SlicePoly brute_dbar(const SlicePoly& p, unsigned k);

/// sum_j C(k,j) I^j alpha I^j with powers of I taken directly.
Quaternion brute_s(const ImagUnit& I, const Quaternion& alpha, unsigned k);

/// (-1)^k e^{|q|^2} d_I^k (e^{-|q|^2} F) computed on polynomial-times-Gaussian functions,
/// differentiating the Gaussian factor explicitly.
SlicePoly gaussian_hermite(const SRPoly& F, unsigned k, const ImagUnit& I);

struct Failure {
  std::string instance;
  std::string expected;
  std::string actual;
};

struct SuiteReport {
  std::string suite;
  unsigned trials = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;

  bool passed() const noexcept { return failures.empty(); }
};

/// Registered suite names in canonical order.
const std::vector<std::string>& suite_names();

/// Runs one suite; throws UnknownSuite.
SuiteReport run_suite(std::string_view name, const RandomSpec& spec);

/// Every registered suite, in suite_names() order. Suites run concurrently; each keeps its own
/// sequential instance stream. seed and trials override the per-suite defaults when set.
std::vector<SuiteReport> run_all_suites(const std::optional<std::uint64_t>& seed = std::nullopt,
                                        const std::optional<unsigned>& trials = std::nullopt);

}  // namespace polyreg::oracle
