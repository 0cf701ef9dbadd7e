#include "cycperm/numbers.hpp"

#include "cycperm/errors.hpp"

namespace cycperm {

Int factorial(int n) {
    if (n < 0) throw InvalidInput("factorial of negative argument");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Int pow2(int n) {
    if (n < 0) throw InvalidInput("pow2 of negative argument");
    return Int(1) << n;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

Int fibonacci(int n) {
    if (n < 1) throw InvalidInput("fibonacci index must be positive");
    Int a = 1, b = 1;  // F(1), F(2)
    for (int i = 3; i <= n; ++i) {
        Int c = a + b;
        a = b;
        b = c;
    }
    return n == 1 ? a : b;
}

Int catalan(int n) {
    if (n < 0) throw InvalidInput("catalan of negative argument");
    return binomial(2 * n, n) / (n + 1);
}

}  // namespace cycperm
