#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace wheelzeta {

/// Exact non-negative counts (class sizes, Catalan numbers, binomials).
using BigCount = boost::multiprecision::cpp_int;

/// Exact rationals (Catalan sums, residue coefficients, Casimir values).
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigCount& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
  if (boost::multiprecision::denominator(v) == 1)
    return boost::multiprecision::numerator(v).str();
  return boost::multiprecision::numerator(v).str() + "/" +
         boost::multiprecision::denominator(v).str();
}

inline double to_double(const Rational& v) { return v.convert_to<double>(); }
inline double to_double(const BigCount& v) { return v.convert_to<double>(); }

}  // namespace wheelzeta
