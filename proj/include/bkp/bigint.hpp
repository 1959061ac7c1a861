#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace bkp {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

}  // namespace bkp
