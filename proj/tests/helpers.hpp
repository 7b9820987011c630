#pragma once

#include <string>

#include "polyreg/slice_calc.hpp"

namespace test {

inline polyreg::Quaternion Q(const std::string& s) { return polyreg::parse_quaternion(s); }
inline polyreg::ImagUnit U(const std::string& s) { return polyreg::ImagUnit::from_quaternion(Q(s)); }
inline polyreg::SlicePoly R(const std::string& e, const polyreg::ImagUnit& I) {
  return polyreg::restrict(polyreg::parse_expr(e), I);
}
inline polyreg::SRPoly P(std::initializer_list<const char*> coeffs) {
  std::vector<polyreg::Quaternion> v;
  for (const char* c : coeffs) v.push_back(Q(c));
  return polyreg::SRPoly(std::move(v));
}

}  // namespace test
