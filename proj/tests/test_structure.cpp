#include <doctest.h>

#include "helpers.hpp"
#include "polyreg/errors.hpp"
#include "polyreg/oracle.hpp"
#include "polyreg/structure.hpp"

using namespace polyreg;
using test::P;
using test::Q;
using test::R;
using test::U;

TEST_CASE("S_k values") {
  CHECK(s_func(U("i"), Q("5"), 2).is_zero());
  CHECK(s_func(U("i"), Q("j"), 1) == Q("2j"));
  for (const ProbePair& pr : default_probes()) CHECK(s_func(pr.I, Q("1-2i+3k"), 0) == Q("1-2i+3k"));
  CHECK(s_closed_form(U("i"), Q("1+2i+3j+4k"), 3) == Q("24j+32k"));
  CHECK(s_func(U("i"), Q("1+2i+3j+4k"), 3) == Q("24j+32k"));
}

TEST_CASE("S_k binomial step") {
  CHECK(s_binomial_step(U("i"), Q("j"), 1) == Q("4j"));
  CHECK(s_binomial_step(U("i"), Q("j"), 1) == s_func(U("i"), Q("j"), 2));
  for (const ProbePair& pr : default_probes()) {
    CHECK(s_binomial_step(pr.I, Q("3"), 1).is_zero());
    CHECK(s_binomial_step(pr.I, Q("0"), 4).is_zero());
  }
}

TEST_CASE("S_k on an orthogonal pair") {
  // For K orthogonal to J, S_k(K, J) = 2^k J.
  for (const ProbePair& pr : default_probes())
    for (unsigned k = 1; k <= 5; ++k) CHECK(s_func(pr.I, pr.J.value(), k) == pr.J.value() * Rational(1u << k));
}

TEST_CASE("aleph classes") {
  CHECK(aleph_classify(U("i"), Q("7")) == AlephClass::FromOne);
  CHECK(aleph_classify(U("i"), Q("j")) == AlephClass::Never);
  CHECK(aleph_classify(U("i"), Q("3-2i")) == AlephClass::FromOne);
  for (const ProbePair& pr : default_probes()) CHECK(aleph_classify(pr.I, Q("0")) == AlephClass::AllK);
  for (unsigned k = 1; k <= 10; ++k) CHECK_FALSE(oracle::brute_s(U("i"), Q("j"), k).is_zero());
  CHECK(std::string(to_string(AlephClass::Never)) == "Never");
}

TEST_CASE("literal index") {
  CHECK(literal_rho(U("i"), Q("0"), 4) == 0);
  CHECK(literal_rho(U("i"), Q("7"), 4) == 1);
  CHECK(literal_rho(U("i"), Q("7"), 0) == 0);
  CHECK(literal_rho(U("i"), Q("j"), 4) == 4);
}

TEST_CASE("generic element index") {
  const auto& probes = default_probes();
  CHECK(generic_index(Q("3+4j"), 5, probes).global == Level::of(5));
  CHECK(generic_index(Q("7"), 5, probes).global == Level::of(0));
  IndexReport r = generic_index(Q("i"), 1, probes);
  CHECK(r.per_slice[0].level == Level::of(0));
  CHECK(r.per_slice[1].level == Level::of(1));
  CHECK(r.global == Level::of(1));
  CHECK(r.literal_rho.size() == probes.size());
  CHECK(generic_index(Q("0"), 3, probes).global == Level::zero_function());

  // Real alpha: the literal index says 1, the exact level is 0.
  IndexReport real = generic_index(Q("7"), 5, probes);
  CHECK(real.literal_varrho == 1);

  for (const char* e : {"A(0,1|i)", "A(1,1|i)"}) {
    Expr g = parse_expr(e);
    for (std::size_t s = 0; s < probes.size(); ++s)
      CHECK(oracle::brute_level(g, probes[s].I) == r.per_slice[s].level);
  }
}

TEST_CASE("sphere level closed form") {
  CHECK(generic_sphere_level(Q("0"), 3) == Level::zero_function());
  CHECK(generic_sphere_level(Q("-2"), 3) == Level::of(0));
  CHECK(generic_sphere_level(Q("i"), 0) == Level::of(0));
  CHECK(generic_sphere_level(Q("1+i"), 4) == Level::of(4));
}

TEST_CASE("derivatives of generic elements") {
  for (const ProbePair& pr : default_probes()) {
    Quaternion alpha = Q("1+2i-j+1/2k");
    SlicePoly want = restrict(Expr::generic(1, 0, alpha + pr.I.value() * alpha * pr.I.value()), pr.I) * Q("1/2");
    CHECK(generic_dbar(1, 1, alpha, pr.I, 1) == want);
    CHECK(generic_dbar(2, 3, Q("5"), pr.I, 1).is_zero());
  }
  CHECK(generic_dbar(0, 2, Q("j"), U("i"), 2) == SlicePoly::constant(U("i"), Q("2j")));
  CHECK(oracle::brute_dbar(R("A(0,2|j)", U("i")), 2) == SlicePoly::constant(U("i"), Q("2j")));
  CHECK_THROWS_AS(generic_dbar(0, 2, Q("j"), U("i"), 3), InvalidArgument);
}

TEST_CASE("linearisation of generic elements") {
  PolyDecomp dj = linearize_generic(1, 1, Q("i"), U("j"));
  REQUIRE(dj.parts.size() == 2);
  CHECK(dj.parts[0].is_zero());
  CHECK(dj.parts[1] == P({"0", "i"}));

  PolyDecomp di = linearize_generic(1, 1, Q("i"), U("i"));
  REQUIRE(di.parts.size() == 1);
  CHECK(di.parts[0] == P({"0", "0", "i"}));

  PolyDecomp d0 = linearize_generic(2, 0, Q("1-k"), U("j"));
  REQUIRE(d0.parts.size() == 1);
  CHECK(d0.parts[0] == P({"0", "0", "1-k"}));
}

TEST_CASE("product levels") {
  const auto& probes = default_probes();
  IndexReport a = product_level(P({"0", "i"}), P({"0", "0", "1"}), probes);
  CHECK(a.global == Level::of(2));
  CHECK(a.predicted_bound == 2u);
  CHECK(a.bound_tight == true);
  CHECK(global_level(parse_expr("A(1,2|i)"), probes) == Level::of(2));

  CHECK(product_level(P({"1"}), P({"i", "j", "k"}), probes).global == Level::of(0));

  IndexReport c = product_level(P({"5", "7"}), P({"0", "j"}), probes);
  for (const SliceLevel& s : c.per_slice) CHECK(s.level == Level::of(0));
  CHECK(c.predicted_bound == 0u);

  CHECK(predicted_product_bound(P({"0", "j"}), P({"1"}), U("i")) == 0);
  CHECK(predicted_product_bound(P({"0", "j"}), P({"1", "1", "1"}), U("i")) == 2);
  CHECK(predicted_product_bound(P({"0", "i"}), P({"1", "1", "1"}), U("i")) == 0);

  CHECK_THROWS_AS(product_level(P({"1"}), SRPoly(), probes), ZeroPolynomial);
  CHECK_THROWS_AS(product_level(P({"1"}), P({"1"}), std::vector<ProbePair>{}), EmptyProbeSet);
}

TEST_CASE("dot product expression") {
  Expr e = dot_product_expr(parse_expr("q - i"), parse_expr("q"));
  CHECK(print_expr(e) == "(q - i) * q");
  Quaternion at = Q("1+j-k");
  CHECK(eval_expr(dot_product_expr(parse_expr("q"), parse_expr("q")), at) == at * at);
  CHECK(eval_expr(dot_product_expr(parse_expr("1"), parse_expr("q * j")), at) == at * Q("j"));
}

TEST_CASE("star product") {
  CHECK(star_product(P({"0", "i"}), P({"0", "j"})) == P({"0", "0", "k"}));
  SRPoly f = P({"1-i", "j", "2k"});
  CHECK(star_product(f, P({"1"})) == f);
  CHECK(star_product(P({"-i", "1"}), P({"i", "1"})) == P({"1", "0", "1"}));
  // Pointwise (q - i)(q + i) differs from q^2 + 1 off C_i.
  CHECK(R("(q - i) * (q + i)", U("j")) != R("q^2 + 1", U("j")));
  CHECK(R("(q - i) * (q + i)", U("i")) == R("q^2 + 1", U("i")));
}

TEST_CASE("osp product") {
  const ImagUnit& I = default_probes()[3].I;
  SRPoly f = P({"1", "j"}), g = P({"i", "0", "k"});
  std::vector<SRPoly> fs{f}, gs{g};
  CHECK(osp_product(fs, gs, I) == restrict(f, I) * restrict(g, I));

  SRPoly phi = P({"2", "j"}), psi = P({"k", "1"});
  std::vector<SRPoly> fp{SRPoly(), phi}, gp{psi};
  CHECK(osp_product(fp, gp, I) == R("qbar", I) * restrict(phi, I) * restrict(psi, I));

  std::vector<SRPoly> a{P({"1", "2"}), P({"0", "1"}), P({"3"})};
  std::vector<SRPoly> b{P({"1"}), P({"2"}), P({"0", "1"}), P({"1", "0", "1"})};
  for (const ProbePair& pr : default_probes()) CHECK(level_on_slice(osp_product(a, b, pr.I)) == Level::of(5));
}

TEST_CASE("action of dbar^k on products") {
  ProbePair ijk = validate_probe_pair(U("i"), U("j"));
  auto [via_y, via_x] = actionk_rhs(P({"0", "j"}), P({"0", "0", "1"}), ijk, 2);
  SlicePoly want = R("q * j", U("i")) * Q("2");
  CHECK(via_y == want);
  CHECK(via_x == want);
  CHECK(oracle::brute_dbar(R("q * j * q^2", U("i")), 2) == want);

  for (const ProbePair& pr : default_probes()) {
    auto [ry, rx] = actionk_rhs(P({"1", "-3", "2"}), P({"i", "j", "k"}), pr, 3);
    CHECK(ry.is_zero());
    CHECK(rx.is_zero());
    auto [cy, cx] = actionk_rhs(P({"j", "i"}), P({"1+k"}), pr, 1);
    CHECK(cy.is_zero());
    CHECK(cx.is_zero());
  }
  CHECK_THROWS_AS(actionk_rhs(P({"j"}), P({"1"}), ijk, 0), InvalidArgument);
}

TEST_CASE("slice regular characterisation") {
  const auto& probes = default_probes();
  CHECK(char_sliceregular(P({"1", "0", "1"}), probes));
  CHECK_FALSE(char_sliceregular(P({"0", "j"}), probes));
  CHECK_FALSE(char_sliceregular(P({"i"}), probes));
  CHECK(splitting_g(P({"0", "j"}), validate_probe_pair(U("i"), U("j"))) == R("q", U("i")));
}

TEST_CASE("polyregular characterisation") {
  const auto& probes = default_probes();
  CHECK(char_polyregular(P({"j", "i", "k"}), P({"1", "2", "3", "4"}), 4, probes));
  CHECK_FALSE(char_polyregular(P({"0", "j"}), P({"0", "0", "1"}), 2, probes));
  CHECK(char_polyregular(P({"2", "-1"}), P({"j", "i", "k"}), 1, probes));
  CHECK_THROWS_AS(char_polyregular(P({"1"}), P({"1"}), 0, probes), InvalidArgument);

  PolyregularConditions c = polyregular_conditions(P({"0", "j"}), P({"0", "0", "1"}), 2, probes[0]);
  CHECK_FALSE(c.zero_sets_cover);
  CHECK_FALSE(c.product_vanishes);
}
