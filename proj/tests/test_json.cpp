#include <doctest.h>

#include "helpers.hpp"
#include "polyreg/errors.hpp"
#include "polyreg/json_io.hpp"

using namespace polyreg;
using nlohmann::json;
using test::Q;
using test::U;

TEST_CASE("slice polynomial wire format") {
  json j = to_json(test::R("q^2 + 1", U("i")));
  CHECK(j["I"] == "i");
  json want = json::array({{{"a", 0}, {"b", 0}, {"c", "1"}},
                           {{"a", 0}, {"b", 2}, {"c", "-1"}},
                           {{"a", 1}, {"b", 1}, {"c", "2i"}},
                           {{"a", 2}, {"b", 0}, {"c", "1"}}});
  CHECK(j["terms"] == want);
}

TEST_CASE("slice polynomial term order is (a+b, a)") {
  json j = to_json(test::R("qbar^2 * q * j + k * q + 3", default_probes()[6].I));
  unsigned prev_total = 0, prev_a = 0;
  bool first = true;
  for (const json& t : j["terms"]) {
    unsigned a = t["a"], b = t["b"];
    if (!first) CHECK((a + b > prev_total || (a + b == prev_total && a > prev_a)));
    first = false;
    prev_total = a + b;
    prev_a = a;
  }
}

TEST_CASE("slice polynomial JSON round trip") {
  SlicePoly p = test::R("A(2,1|1-j) + qbar * k", default_probes()[4].I);
  CHECK(slice_poly_from_json(to_json(p)) == p);
  CHECK(slice_poly_from_json(json::parse(to_json(p).dump())) == p);
  CHECK_THROWS_AS(slice_poly_from_json(json{{"terms", json::array()}}), InvalidArgument);
  CHECK_THROWS_AS(slice_poly_from_json(json{{"I", "2i"}, {"terms", json::array()}}), InvalidArgument);
}

TEST_CASE("index report wire format") {
  IndexReport r = generic_index(Q("i"), 1, default_probes());
  json j = to_json(r);
  CHECK(j["global"] == json{{"level", 1}});
  CHECK(j["per_slice"][0] == json{{"I", "i"}, {"level", 0}});
  CHECK(j["per_slice"].size() == 8);
  CHECK(j["paper_rho"].size() == 8);
  CHECK_FALSE(j.contains("predicted_bound"));

  IndexReport p = product_level(test::P({"0", "i"}), test::P({"0", "0", "1"}), default_probes());
  json k = to_json(p);
  CHECK(k["predicted_bound"] == 2);
  CHECK(k["bound_tight"] == true);

  CHECK(to_json(Level::zero_function()) == json{{"level", nullptr}});
}

TEST_CASE("suite report wire format") {
  oracle::SuiteReport r;
  r.suite = "lemS";
  r.trials = 500;
  r.notes.push_back("a note");
  json j = to_json(r);
  CHECK(j == json{{"suite", "lemS"}, {"trials", 500}, {"failures", json::array()}, {"notes", {"a note"}}});
  r.failures.push_back({"x", "1", "2"});
  CHECK(to_json(r)["failures"][0] == json{{"instance", "x"}, {"expected", "1"}, {"actual", "2"}});
}

TEST_CASE("decomposition and split wire formats") {
  json d = to_json(qbar_taylor(test::R("A(1,1|i)", U("j"))));
  CHECK(d["I"] == "j");
  CHECK(d["parts"].size() == 2);
  CHECK(d["parts"][1]["coeffs"] == json::array({"0", "i"}));

  json s = to_json(split_poly(test::R("1+2i+3j+4k", U("i")), validate_probe_pair(U("i"), U("j"))));
  CHECK(s["F"][0]["c"] == "1+2i");
  CHECK(s["G"][0]["c"] == "3+4i");
}
