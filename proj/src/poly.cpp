#include "cycperm/poly.hpp"

#include "cycperm/errors.hpp"

namespace cycperm {

namespace {

std::string coeff_term(const Int& c, const std::string& vars, bool first) {
    std::string out;
    Int a = c;
    if (a < 0) {
        out += first ? "-" : "- ";
        a = -a;
    } else if (!first) {
        out += "+ ";
    }
    if (a != 1 || vars.empty()) out += a.str();
    out += vars;
    return out;
}

std::string power(const std::string& var, int e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

void IntPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::monomial(const Int& c, int exponent) {
    if (exponent < 0) throw InvalidInput("negative exponent");
    IntPolynomial p;
    p.add_term(exponent, c);
    return p;
}

IntPolynomial IntPolynomial::one() { return monomial(1, 0); }

int IntPolynomial::low_degree() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) return static_cast<int>(k);
    return -1;
}

const Int& IntPolynomial::coeff(int k) const {
    static const Int zero = 0;
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(k)];
}

void IntPolynomial::add_term(int exponent, const Int& c) {
    if (exponent < 0) throw InvalidInput("negative exponent");
    if (c == 0) return;
    if (exponent >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(exponent) + 1, 0);
    c_[static_cast<std::size_t>(exponent)] += c;
    normalize();
}

Int IntPolynomial::eval_at_one() const {
    Int s = 0;
    for (const Int& c : c_) s += c;
    return s;
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        if (coeff(k) == 0) continue;
        if (!first) out += ' ';
        out += coeff_term(coeff(k), power("q", k), first);
        first = false;
    }
    return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k < a.c_.size()) c[k] += a.c_[k];
        if (k < b.c_.size()) c[k] += b.c_[k];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k < a.c_.size()) c[k] += a.c_[k];
        if (k < b.c_.size()) c[k] -= b.c_[k];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_pow(const IntPolynomial& f, int e) {
    if (e < 0) throw InvalidInput("negative power");
    IntPolynomial r = IntPolynomial::one();
    for (int i = 0; i < e; ++i) r = r * f;
    return r;
}

IntPolynomial reverse_transform(const IntPolynomial& f, int n) {
    if (f.degree() > n) throw InvalidInput("reverse_transform: degree exceeds n");
    if (f.is_zero()) return f;
    std::vector<Int> c(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k <= f.degree(); ++k) c[static_cast<std::size_t>(n - k)] = f.coeff(k);
    return IntPolynomial(std::move(c));
}

bool is_symmetric(const IntPolynomial& f) {
    if (f.is_zero()) return true;
    const int lo = f.low_degree(), hi = f.degree();
    for (int i = 0; lo + i < hi - i; ++i)
        if (f.coeff(lo + i) != f.coeff(hi - i)) return false;
    return true;
}

void BivarPolynomial::add_term(int q_exp, int t_exp, const Int& c) {
    if (q_exp < 0 || t_exp < 0) throw InvalidInput("negative exponent");
    if (c == 0) return;
    auto key = std::make_pair(q_exp, t_exp);
    auto it = c_.find(key);
    if (it == c_.end()) {
        c_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

IntPolynomial BivarPolynomial::specialize_t_one() const {
    IntPolynomial out;
    for (const auto& [key, c] : c_) out.add_term(key.first, c);
    return out;
}

std::string BivarPolynomial::str() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : c_) {
        if (!first) out += ' ';
        out += coeff_term(c, power("q", key.first) + power("t", key.second), first);
        first = false;
    }
    return out;
}

}  // namespace cycperm
