#include <doctest.h>

#include "helpers.hpp"
#include "polyreg/errors.hpp"

using namespace polyreg;
using test::Q;
using test::U;

TEST_CASE("hamilton product on the basis") {
  CHECK(quat_mul(Q("i"), Q("j")) == Q("k"));
  CHECK(quat_mul(Q("j"), Q("i")) == Q("-k"));
  CHECK(quat_mul(Q("k"), Q("k")) == Q("-1"));
  CHECK(quat_mul(Q("1+i"), Q("1+j")) == Q("1+i+j+k"));
}

TEST_CASE("inverse and conjugate norm") {
  Quaternion q = Q("2+3i-j");
  CHECK(quat_mul(q, q.inverse()) == Q("1"));
  CHECK_THROWS_AS(Q("0").inverse(), InvalidArgument);

  auto [c, n] = quat_conj_norm(Q("1+2i+3j+4k"));
  CHECK(c == Q("1-2i-3j-4k"));
  CHECK(n == 30);
  CHECK(quat_conj_norm(Q("0")) == std::pair<Quaternion, Rational>{Q("0"), 0});
  CHECK(quat_conj_norm(Q("i")).first == Q("-i"));
  CHECK(quat_conj_norm(Q("i")).second == 1);
}

TEST_CASE("canonical printing") {
  CHECK(to_string(Q("1+2i-3/4j+k")) == "1+2i-3/4j+k");
  CHECK(to_string(Q("-5/2")) == "-5/2");
  CHECK(to_string(Q("0")) == "0");
  CHECK(to_string(Q("1i")) == "i");
  CHECK(to_string(Q("-1k")) == "-k");
  CHECK(to_string(Q("2/4j")) == "1/2j");
}

TEST_CASE("stereographic imaginary units") {
  CHECK(make_imag_unit(0, 0).value() == Q("k"));
  CHECK(make_imag_unit(1, 0).value() == Q("i"));
  CHECK(make_imag_unit(1, 1).value() == Q("2/3i+2/3j-1/3k"));
  for (int a = -3; a <= 3; ++a)
    for (int b = -2; b <= 2; ++b) {
      Quaternion I = make_imag_unit(Rational(a) / 2, Rational(b) / 3).value();
      CHECK(I * I == Q("-1"));
    }
}

TEST_CASE("imaginary unit validation") {
  CHECK_THROWS_AS(U("1+i"), InvalidArgument);
  CHECK_THROWS_AS(U("2i"), InvalidArgument);
  CHECK_THROWS_AS(U("i+j"), InvalidArgument);
  CHECK(U("3/5i+4/5k").value() == Q("3/5i+4/5k"));
}

TEST_CASE("probe pairs") {
  ProbePair p = validate_probe_pair(U("i"), U("j"));
  CHECK(p.K == Q("k"));

  ProbePair q = validate_probe_pair(U("3/5i+4/5j"), U("k"));
  CHECK(q.K == Q("3/5i+4/5j") * Q("k"));
  CHECK(q.K * q.K == Q("-1"));

  CHECK_THROWS_AS(validate_probe_pair(U("i"), U("i")), NotOrthogonal);

  const auto& probes = default_probes();
  REQUIRE(probes.size() == 8);
  for (const ProbePair& pr : probes) {
    CHECK(pr.I.value() * pr.J.value() + pr.J.value() * pr.I.value() == Q("0"));
    CHECK(pr.K * pr.K == Q("-1"));
  }
  CHECK(probes[3].I.value() == Q("3/5i+4/5j"));
  CHECK(probes[7].I.value() == Q("2/7i+3/7j+6/7k"));
}

TEST_CASE("perpendicular decomposition") {
  PerpSplit s = perp_decompose(Q("1+2i+3j+4k"), U("i"));
  CHECK(s.parallel == Q("1+2i"));
  CHECK(s.perp == Q("3j+4k"));

  for (const ProbePair& pr : default_probes()) {
    PerpSplit r = perp_decompose(Q("5"), pr.I);
    CHECK(r.parallel == Q("5"));
    CHECK(r.perp.is_zero());
  }

  PerpSplit t = perp_decompose(Q("j"), U("i"));
  CHECK(t.parallel.is_zero());
  CHECK(t.perp == Q("j"));

  const ImagUnit& I = default_probes()[6].I;
  Quaternion alpha = Q("1/2-3i+5/7j+2k");
  PerpSplit g = perp_decompose(alpha, I);
  CHECK(g.parallel + g.perp == alpha);
  CHECK(g.parallel * I.value() == I.value() * g.parallel);
  CHECK(g.perp * I.value() == -(I.value() * g.perp));
}

TEST_CASE("iterated commutator") {
  CHECK(commutator_iter(Q("j"), U("i"), 1) == Q("-2k"));
  CHECK(commutator_iter(Q("j"), U("i"), 2) == quat_mul(Q("-2i"), commutator_iter(Q("j"), U("i"), 1)));
  for (unsigned k = 1; k <= 5; ++k)
    for (const ProbePair& pr : default_probes()) CHECK(commutator_iter(Q("7"), pr.I, k).is_zero());
  CHECK_THROWS_AS(commutator_iter(Q("j"), U("i"), 0), InvalidArgument);
}

TEST_CASE("ring identities") {
  Quaternion a = Q("1/2-i+3j"), b = Q("2+5/3k"), c = Q("-1+i+j+k");
  CHECK((a * b) * c == a * (b * c));
  CHECK((a * b).conj() == b.conj() * a.conj());
  CHECK((a * b).norm_sq() == a.norm_sq() * b.norm_sq());
  CHECK(power(Q("i"), 4) == Q("1"));
  CHECK(power(Q("1+i"), 0) == Q("1"));
  CHECK(power(Q("1+i"), 2) == Q("2i"));
  CHECK(vector_dot(Q("1+2i+3j"), Q("5+i-j+k")) == -1);
}

TEST_CASE("rational helpers") {
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(3, 5) == 0);
  CHECK(falling_factorial(5, 2) == 20);
  CHECK(factorial(6) == 720);
  CHECK(parse_rational("-6/4") == Rational(-3) / 2);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}
