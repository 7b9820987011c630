#include <doctest.h>

#include "helpers.hpp"
#include "polyreg/errors.hpp"
#include "polyreg/oracle.hpp"

using namespace polyreg;
using test::Q;

namespace {

std::size_t error_offset(const std::string& text) {
  try {
    parse_expr(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("expected a parse error for '" << text << "'");
  return 0;
}

}  // namespace

TEST_CASE("parse the worked example") {
  Expr e = parse_expr("(q - i) * q");
  Expr want = Expr::product({Expr::sum({Expr::var(), Expr::constant(Q("-i"))}), Expr::var()});
  CHECK(e == want);
}

TEST_CASE("parse generic element and literals") {
  CHECK(parse_expr("A(2,3|1+2i)") == Expr::generic(2, 3, Q("1+2i")));
  CHECK(parse_expr("A( 0 , 1 | -3/4j )") == Expr::generic(0, 1, Q("-3/4j")));
  CHECK(parse_expr("qbar") == Expr::var_bar());
  CHECK(parse_expr("2i") == Expr::constant(Q("2i")));
  CHECK(parse_expr("-3/4") == Expr::constant(Q("-3/4")));
  CHECK(parse_expr("q^0") == Expr::power(Expr::var(), 0));
}

TEST_CASE("subtraction of non-constants wraps a -1 factor") {
  Expr e = parse_expr("q - qbar * q");
  Expr want = Expr::sum(
      {Expr::var(), Expr::product({Expr::constant(Q("-1")), Expr::product({Expr::var_bar(), Expr::var()})})});
  CHECK(e == want);
}

TEST_CASE("precedence and associativity") {
  CHECK(parse_expr("q + i * q^2") ==
        Expr::sum({Expr::var(), Expr::product({Expr::constant(Q("i")), Expr::power(Expr::var(), 2)})}));
  CHECK(parse_expr("q * j * q") == Expr::product({Expr::var(), Expr::constant(Q("j")), Expr::var()}));
}

TEST_CASE("parse errors carry offsets and expectations") {
  CHECK(error_offset("q^") == 2);
  // The offset points at the place the exponent was expected.
  CHECK(error_offset("q ^") == 3);
  CHECK(error_offset("") == 0);
  CHECK(error_offset("q +") == 3);
  CHECK(error_offset("(q") == 2);
  CHECK(error_offset("q q") == 2);
  CHECK(error_offset("A(1,|i)") == 4);
  CHECK(error_offset("q * x") == 4);
  try {
    parse_expr("q^");
  } catch (const ParseError& e) {
    CHECK_FALSE(e.expected().empty());
  }
  CHECK_THROWS_AS(parse_quaternion("1+2x"), ParseError);
  CHECK_THROWS_AS(parse_quaternion(""), ParseError);
}

TEST_CASE("printing") {
  CHECK(print_expr(Expr::generic(1, 1, Q("i"))) == "A(1,1|i)");
  CHECK(print_expr(Expr::product({Expr::var(), Expr::constant(Q("j")), Expr::var()})) == "q * j * q");
  CHECK(print_expr(Expr::sum({Expr::power(Expr::var(), 2), Expr::constant(Q("1"))})) == "q^2 + 1");
  CHECK(print_expr(parse_expr("(q - i) * q")) == "(q - i) * q");
  CHECK(print_expr(parse_expr("q - qbar")) == "q - qbar");
}

TEST_CASE("round trip on fixed trees") {
  for (const char* text : {"A(1,1|i)", "q * j * q", "q^2 + 1", "(q - i) * q", "(q + 2j)^3 * qbar", "-k * q^2",
                           "q - 3/4 - qbar * i", "((q))"}) {
    Expr e = parse_expr(text);
    CHECK(parse_expr(print_expr(e)) == e);
  }
}

TEST_CASE("round trip on random trees") {
  oracle::RandomSpec spec;
  spec.seed = 99;
  oracle::InstanceGenerator gen(spec);
  for (int t = 0; t < 300; ++t) {
    Expr e = gen.expr(3);
    CHECK(parse_expr(print_expr(e)) == e);
  }
}

TEST_CASE("evaluation") {
  CHECK(eval_expr(Expr::generic(1, 1, Q("i")), Q("j")) == Q("i"));
  CHECK(eval_expr(Expr::var_bar(), Q("1+2i")) == Q("1-2i"));
  CHECK(eval_expr(parse_expr("(q - i) * q"), Q("i")) == Q("0"));
  CHECK(eval_expr(parse_expr("q * j"), Q("i")) == Q("k"));
  CHECK(eval_expr(parse_expr("j * q"), Q("i")) == Q("-k"));
  Quaternion at = Q("1/2-i+2k");
  CHECK(eval_expr(parse_expr("A(2,1|j)"), at) == at * at * Q("j") * at);
  CHECK(eval_expr(parse_expr("q^3"), at) == at * at * at);
}

TEST_CASE("expression constructors reject empty lists") {
  CHECK_THROWS_AS(Expr::sum({}), InvalidArgument);
  CHECK_THROWS_AS(Expr::product({}), InvalidArgument);
}

TEST_CASE("SRPoly conversions") {
  SRPoly p = expr_to_srpoly(parse_expr("q^2*i + q*j + 1"));
  CHECK(p == test::P({"1", "j", "i"}));
  CHECK(print_expr(srpoly_to_expr(test::P({"0", "i"}))) == "q * i");
  CHECK(expr_to_srpoly(parse_expr("A(3,0|k)")) == test::P({"0", "0", "0", "k"}));
  CHECK(expr_to_srpoly(parse_expr("A(1,2|5)")) == test::P({"0", "0", "0", "5"}));
  CHECK(expr_to_srpoly(parse_expr("(q + 1) * (q - 1)")) == test::P({"-1", "0", "1"}));
  // i q and q i differ, so the pointwise product keeps a sandwich.
  CHECK_THROWS_AS(expr_to_srpoly(parse_expr("(q + i) * (q - i)")), NotSliceRegularForm);
  CHECK(expr_to_srpoly(parse_expr("q * i - q * i")).is_zero());
  CHECK_THROWS_AS(expr_to_srpoly(parse_expr("A(1,1|i)")), NotSliceRegularForm);
  CHECK_THROWS_AS(expr_to_srpoly(parse_expr("qbar")), NotSliceRegularForm);
  CHECK_THROWS_AS(expr_to_srpoly(parse_expr("i * q")), NotSliceRegularForm);

  SRPoly r = test::P({"1", "j", "i"});
  CHECK(expr_to_srpoly(srpoly_to_expr(r)) == r);
  Quaternion at = Q("2-i+k");
  CHECK(r.eval(at) == eval_expr(srpoly_to_expr(r), at));
}

TEST_CASE("SRPoly normal form") {
  SRPoly p(std::vector<Quaternion>{Q("1"), Q("0"), Q("0")});
  CHECK(p.degree() == 0);
  CHECK(SRPoly(std::vector<Quaternion>{Q("0")}).is_zero());
  CHECK(test::P({"1", "2"}).has_real_coefficients());
  CHECK_FALSE(test::P({"1", "2i"}).has_real_coefficients());
  CHECK(test::P({"1", "i"}) + test::P({"-1", "-i"}) == SRPoly());
}
