#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace linkhom {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an input lies outside an operation's domain (bad index, wrong rank, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal consistency check fails.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Int gcd_of(const std::vector<Int>& xs) {
  Int g = 0;
  for (const auto& x : xs) g = boost::multiprecision::gcd(g, x);
  return boost::multiprecision::abs(g);
}

inline bool is_odd(const Int& a) { return boost::multiprecision::bit_test(boost::multiprecision::abs(a), 0); }

inline Int binom2(const Int& a) { return a * (a - 1) / 2; }

inline std::string to_string(const Int& a) { return a.str(); }

inline Int parse_int(const std::string& s) { return Int(s); }

}  // namespace linkhom
