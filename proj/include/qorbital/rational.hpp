#ifndef QORBITAL_RATIONAL_HPP
#define QORBITAL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "qorbital/common.hpp"

namespace qorbital {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_str(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "p", "-p", or "p/q" with q > 0 after normalisation.
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw domain_error("rational with zero denominator: " + s);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw usage_error("cannot parse rational: " + s);
  }
}

}  // namespace qorbital

#endif  // QORBITAL_RATIONAL_HPP
