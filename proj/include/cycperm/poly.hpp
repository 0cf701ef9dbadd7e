#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cycperm/numbers.hpp"

namespace cycperm {

// Dense integer polynomial in q.  Normalized: no trailing zero
// coefficients; the zero polynomial is the empty list.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial monomial(const Int& c, int exponent);
    static IntPolynomial one();

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    int low_degree() const;                                         // -1 for zero

    // Zero outside the stored range.
    const Int& coeff(int k) const;
    const std::vector<Int>& coeffs() const { return c_; }

    void add_term(int exponent, const Int& c);

    Int eval_at_one() const;

    // "q + 2q^2 + q^3" (ascending powers), "0" for zero.
    std::string str() const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::vector<Int> c_;
    void normalize();
};

IntPolynomial poly_pow(const IntPolynomial& f, int e);

// q^n f(1/q): coefficient of q^k moves to q^(n-k).  Throws InvalidInput
// when deg f > n.
IntPolynomial reverse_transform(const IntPolynomial& f, int n);

// Palindromic over its support span [low_degree, degree]; the zero
// polynomial counts as symmetric.
bool is_symmetric(const IntPolynomial& f);

// Sparse integer polynomial in q and t; no zero coefficients are stored.
class BivarPolynomial {
public:
    void add_term(int q_exp, int t_exp, const Int& c);

    // (q_exp, t_exp) -> coefficient, ordered by exponent pair.
    const std::map<std::pair<int, int>, Int>& terms() const { return c_; }

    IntPolynomial specialize_t_one() const;

    // "qt + 2q^2t^2" style, ascending exponent pairs; "0" when empty.
    std::string str() const;

    friend bool operator==(const BivarPolynomial&, const BivarPolynomial&) = default;

private:
    std::map<std::pair<int, int>, Int> c_;
};

}  // namespace cycperm
