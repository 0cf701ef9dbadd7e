#pragma once

#include <vector>

#include "cycperm/numbers.hpp"

namespace cycperm {

// A power series truncated at x^order, with exact rational coefficients
// in ordinary (non-factorial) form.
class RationalSeries {
public:
    // The zero series of the given order (order >= 0).
    explicit RationalSeries(int order);
    RationalSeries(int order, std::vector<Rat> coeffs);

    int order() const { return order_; }
    const Rat& coeff(int k) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    void set_coeff(int k, const Rat& v);

    bool is_zero() const;

    RationalSeries truncated(int new_order) const;

    // Order drops by one; requires order >= 1.
    RationalSeries derivative() const;

    friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
    friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

private:
    int order_ = 0;
    std::vector<Rat> c_;  // size order_ + 1
};

// exp(f) to the order of f.  Throws ConventionViolation when the constant
// term of f is nonzero (the result would need a factor of e^c).
RationalSeries series_exp(const RationalSeries& f);

// E'(x) - (E(x)^2 - E(x) + 1), truncated at order - 1.  Requires order >= 1.
RationalSeries ode_residual_quadratic(const RationalSeries& e);

// E'(x) - exp(E(x) - x^2/2), truncated at order - 1.  Requires order >= 1;
// throws ConventionViolation when E(0) - 0 != 0 makes the exponent
// constant-term nonzero.
RationalSeries ode_residual_exponential(const RationalSeries& e);

}  // namespace cycperm
