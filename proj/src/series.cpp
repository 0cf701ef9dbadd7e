#include "cycperm/series.hpp"

#include <algorithm>

#include "cycperm/errors.hpp"

namespace cycperm {

RationalSeries::RationalSeries(int order) : order_(order) {
    if (order < 0) throw InvalidInput("series order must be >= 0");
    c_.assign(static_cast<std::size_t>(order) + 1, Rat(0));
}

RationalSeries::RationalSeries(int order, std::vector<Rat> coeffs) : RationalSeries(order) {
    for (std::size_t k = 0; k < c_.size() && k < coeffs.size(); ++k) c_[k] = coeffs[k];
}

const Rat& RationalSeries::coeff(int k) const {
    static const Rat zero = 0;
    if (k < 0 || k > order_) return zero;
    return c_[static_cast<std::size_t>(k)];
}

void RationalSeries::set_coeff(int k, const Rat& v) {
    if (k < 0 || k > order_) throw InvalidInput("coefficient index out of range");
    c_[static_cast<std::size_t>(k)] = v;
}

bool RationalSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

RationalSeries RationalSeries::truncated(int new_order) const {
    if (new_order > order_) throw InvalidInput("cannot extend a truncated series");
    RationalSeries out(new_order);
    for (int k = 0; k <= new_order; ++k) out.c_[static_cast<std::size_t>(k)] = coeff(k);
    return out;
}

RationalSeries RationalSeries::derivative() const {
    if (order_ < 1) throw InvalidInput("derivative needs order >= 1");
    RationalSeries out(order_ - 1);
    for (int k = 1; k <= order_; ++k)
        out.c_[static_cast<std::size_t>(k - 1)] = Rat(k) * coeff(k);
    return out;
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
    RationalSeries out(std::min(a.order_, b.order_));
    for (int k = 0; k <= out.order_; ++k)
        out.c_[static_cast<std::size_t>(k)] = a.coeff(k) + b.coeff(k);
    return out;
}

RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
    RationalSeries out(std::min(a.order_, b.order_));
    for (int k = 0; k <= out.order_; ++k)
        out.c_[static_cast<std::size_t>(k)] = a.coeff(k) - b.coeff(k);
    return out;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
    RationalSeries out(std::min(a.order_, b.order_));
    for (int i = 0; i <= out.order_; ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; i + j <= out.order_; ++j)
            out.c_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return out;
}

RationalSeries series_exp(const RationalSeries& f) {
    if (f.coeff(0) != 0)
        throw ConventionViolation("series_exp needs zero constant term");
    // g = exp(f) from g' = f' g:  k g_k = sum_{j=1..k} j f_j g_{k-j}.
    RationalSeries g(f.order());
    g.set_coeff(0, 1);
    for (int k = 1; k <= f.order(); ++k) {
        Rat s = 0;
        for (int j = 1; j <= k; ++j) s += Rat(j) * f.coeff(j) * g.coeff(k - j);
        g.set_coeff(k, s / k);
    }
    return g;
}

RationalSeries ode_residual_quadratic(const RationalSeries& e) {
    if (e.order() < 1) throw InvalidInput("residual needs order >= 1");
    RationalSeries one(e.order());
    one.set_coeff(0, 1);
    RationalSeries rhs = e * e - e + one;
    return e.derivative() - rhs.truncated(e.order() - 1);
}

RationalSeries ode_residual_exponential(const RationalSeries& e) {
    if (e.order() < 1) throw InvalidInput("residual needs order >= 1");
    RationalSeries f = e;
    if (f.order() >= 2) f.set_coeff(2, f.coeff(2) - Rat(1, 2));  // subtract x^2/2
    RationalSeries g = series_exp(f);
    return e.derivative() - g.truncated(e.order() - 1);
}

}  // namespace cycperm
