#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cycperm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(int n);
Int pow2(int n);

// Zero when k < 0 or k > n.
Int binomial(int n, int k);

// F(1) = F(2) = 1.
Int fibonacci(int n);

// binomial(2n, n) / (n + 1); the division is exact.
Int catalan(int n);

}  // namespace cycperm
