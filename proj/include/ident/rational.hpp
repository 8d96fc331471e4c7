#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ident {

/// Exact arbitrary-precision rational scalar used for every symbolic
/// coefficient in the library.  Floating point never enters the symbolic
/// pipeline; doubles appear only in the numeric oracle / simulation layers.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline BigInt rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

inline std::string to_string(const Rat& q) { return q.str(); }

/// Parses "n", "n/d" or a plain decimal ("1.25") into an exact rational.
Rat parse_rat(const std::string& text);

/// 64-bit SplitMix step; used to derive independent RNG streams from a
/// master seed in a schedule-independent way.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace ident
