#ifndef ZDG_NUMBERS_HPP
#define ZDG_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace zdg {

// Exact arithmetic types. Level sizes, degrees and multiplicities scale like
// p^(c-1), which exceeds int64 long before the closed-form path runs out of
// road, so everything ring-sized is kept exact.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int ipow(int64_t base, int64_t exp) {
  Int r = 1;
  Int b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

inline std::string to_string(const Int& v) { return v.str(); }

// Canonical "a/b" (or plain "a" when integral).
inline std::string to_string(const Rat& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

inline double to_double(const Int& v) { return v.convert_to<double>(); }
inline double to_double(const Rat& v) { return v.convert_to<double>(); }

inline bool fits_int64(const Int& v) {
  return v >= INT64_MIN && v <= INT64_MAX;
}

inline bool fits_uint64(const Int& v) {
  return v >= 0 && v <= Int(UINT64_MAX);
}

}  // namespace zdg

#endif
