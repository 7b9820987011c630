#include "polyreg/json_io.hpp"

#include "polyreg/errors.hpp"

namespace polyreg {

using nlohmann::json;

namespace {

json level_value(const Level& level) {
  if (level.is_zero_function()) return nullptr;
  return level.value();
}

json complex_terms(const std::map<Bidegree, SliceComplex, BidegreeOrder>& part, const ImagUnit& I) {
  json out = json::array();
  for (const auto& [bd, z] : part) out.push_back({{"a", bd.a}, {"b", bd.b}, {"c", to_string(to_quaternion(z, I))}});
  return out;
}

}  // namespace

json to_json(const Level& level) { return {{"level", level_value(level)}}; }

json to_json(const SlicePoly& p) {
  json terms = json::array();
  for (const auto& [bd, c] : p.terms()) terms.push_back({{"a", bd.a}, {"b", bd.b}, {"c", to_string(c)}});
  return {{"I", to_string(p.unit().value())}, {"terms", std::move(terms)}};
}

SlicePoly slice_poly_from_json(const json& j) {
  try {
    SlicePoly p(ImagUnit::from_quaternion(parse_quaternion(j.at("I").get<std::string>())));
    for (const json& t : j.at("terms"))
      p.add_term(t.at("a").get<unsigned>(), t.at("b").get<unsigned>(), parse_quaternion(t.at("c").get<std::string>()));
    return p;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed SlicePoly JSON: ") + e.what());
  }
}

json to_json(const SRPoly& p) {
  json out = json::array();
  for (const Quaternion& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

json to_json(const QbarDecomp& d) {
  json parts = json::array();
  for (const SRPoly& phi : d.parts) parts.push_back({{"coeffs", to_json(phi)}, {"text", to_string(phi)}});
  return {{"I", to_string(d.I.value())}, {"parts", std::move(parts)}};
}

json to_json(const SplitPair& s) {
  return {{"I", to_string(s.I.value())},
          {"J", to_string(s.J.value())},
          {"F", complex_terms(s.F, s.I)},
          {"G", complex_terms(s.G, s.I)}};
}

json to_json(const IndexReport& r) {
  json per_slice = json::array();
  for (const SliceLevel& s : r.per_slice)
    per_slice.push_back({{"I", to_string(s.I.value())}, {"level", level_value(s.level)}});
  json out = {{"global", to_json(r.global)}, {"per_slice", std::move(per_slice)}, {"paper_rho", r.literal_rho}};
  if (r.predicted_bound) out["predicted_bound"] = *r.predicted_bound;
  if (r.bound_tight) out["bound_tight"] = *r.bound_tight;
  return out;
}

json to_json(const oracle::SuiteReport& r) {
  json failures = json::array();
  for (const oracle::Failure& f : r.failures)
    failures.push_back({{"instance", f.instance}, {"expected", f.expected}, {"actual", f.actual}});
  return {{"suite", r.suite}, {"trials", r.trials}, {"failures", std::move(failures)}, {"notes", r.notes}};
}

}  // namespace polyreg
