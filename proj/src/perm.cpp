#include "cycperm/perm.hpp"

#include <algorithm>
#include <numeric>

#include "cycperm/errors.hpp"

namespace cycperm {

namespace {

void check_one_line(const std::vector<int>& v) {
    const int n = static_cast<int>(v.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int x : v) {
        if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
            throw InvalidInput("not a permutation of {1..n}");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

std::vector<int> rotate_values(const std::vector<int>& v, int k) {
    const int n = static_cast<int>(v.size());
    std::vector<int> out;
    out.reserve(v.size());
    for (int i = 0; i < n; ++i) out.push_back(v[static_cast<std::size_t>((k + i) % n)]);
    return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : vals_(std::move(values)) {
    check_one_line(vals_);
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw InvalidInput("negative length");
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return unchecked(std::move(v));
}

Permutation Permutation::decreasing(int n) {
    if (n < 0) throw InvalidInput("negative length");
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
    return unchecked(std::move(v));
}

Permutation Permutation::unchecked(std::vector<int> values) {
    Permutation p;
    p.vals_ = std::move(values);
    return p;
}

Permutation Permutation::rotated(int k) const {
    if (empty()) return *this;
    return unchecked(rotate_values(vals_, ((k % size()) + size()) % size()));
}

std::string Permutation::str() const {
    std::string out;
    if (size() <= 9) {
        for (int x : vals_) out += static_cast<char>('0' + x);
        return out;
    }
    for (std::size_t i = 0; i < vals_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(vals_[i]);
    }
    return out;
}

CyclicPerm::CyclicPerm(const Permutation& p) {
    if (p.empty()) throw InvalidInput("cyclic permutation needs n >= 1");
    const auto& v = p.values();
    auto it = std::find(v.begin(), v.end(), 1);
    canon_ = p.rotated(static_cast<int>(it - v.begin()));
}

CyclicPerm CyclicPerm::from_canonical_unchecked(std::vector<int> values) {
    CyclicPerm c;
    c.canon_ = Permutation::unchecked(std::move(values));
    return c;
}

std::string CyclicPerm::str() const { return "[" + canon_.str() + "]"; }

Permutation standardize(std::span<const int> seq) {
    const int n = static_cast<int>(seq.size());
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return seq[static_cast<std::size_t>(a)] < seq[static_cast<std::size_t>(b)]; });
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        if (r > 0 && seq[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])] ==
                         seq[static_cast<std::size_t>(idx[static_cast<std::size_t>(r - 1)])])
            throw InvalidInput("standardize needs distinct values");
        out[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])] = r + 1;
    }
    return Permutation::unchecked(std::move(out));
}

std::vector<Permutation> rotations(const Permutation& p) {
    std::vector<Permutation> out;
    if (p.empty()) {
        out.push_back(p);
        return out;
    }
    out.reserve(static_cast<std::size_t>(p.size()));
    for (int k = 0; k < p.size(); ++k) out.push_back(p.rotated(k));
    return out;
}

CyclicPerm canonical(const Permutation& p) { return CyclicPerm(p); }

Permutation reversal(const Permutation& p) {
    std::vector<int> v(p.values().rbegin(), p.values().rend());
    return Permutation::unchecked(std::move(v));
}

Permutation complement(const Permutation& p) {
    const int n = p.size();
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int x : p.values()) v.push_back(n + 1 - x);
    return Permutation::unchecked(std::move(v));
}

Permutation reverse_complement(const Permutation& p) { return reversal(complement(p)); }

CyclicPerm reversal(const CyclicPerm& p) { return canonical(reversal(p.canon())); }
CyclicPerm complement(const CyclicPerm& p) { return canonical(complement(p.canon())); }
CyclicPerm reverse_complement(const CyclicPerm& p) {
    return canonical(reverse_complement(p.canon()));
}

Permutation inflate(const Permutation& p, const std::vector<Permutation>& parts) {
    const int n = p.size();
    if (static_cast<int>(parts.size()) != n)
        throw InvalidInput("inflate needs one part per entry");
    // Value offset of block i: total size of the blocks with smaller p-value.
    std::vector<int> offset(static_cast<std::size_t>(n), 0);
    std::vector<int> by_value(static_cast<std::size_t>(n), 0);  // position of value v
    for (int i = 0; i < n; ++i) by_value[static_cast<std::size_t>(p.at(i) - 1)] = i;
    int acc = 0;
    for (int v = 0; v < n; ++v) {
        const int i = by_value[static_cast<std::size_t>(v)];
        offset[static_cast<std::size_t>(i)] = acc;
        acc += parts[static_cast<std::size_t>(i)].size();
    }
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(acc));
    for (int i = 0; i < n; ++i)
        for (int x : parts[static_cast<std::size_t>(i)].values())
            out.push_back(offset[static_cast<std::size_t>(i)] + x);
    return Permutation::unchecked(std::move(out));
}

namespace {

void check_distinct(std::span<const int> s, const char* what) {
    std::vector<int> v(s.begin(), s.end());
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw InvalidInput(std::string(what) + " has repeated values");
}

void shuffle_rec(std::span<const int> a, std::span<const int> b, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
    if (a.empty() && b.empty()) {
        out.push_back(cur);
        return;
    }
    if (!a.empty()) {
        cur.push_back(a.front());
        shuffle_rec(a.subspan(1), b, cur, out);
        cur.pop_back();
    }
    if (!b.empty()) {
        cur.push_back(b.front());
        shuffle_rec(a, b.subspan(1), cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> shuffle_set(std::span<const int> rho, std::span<const int> tau) {
    check_distinct(rho, "left sequence");
    check_distinct(tau, "right sequence");
    std::vector<int> both(rho.begin(), rho.end());
    both.insert(both.end(), tau.begin(), tau.end());
    check_distinct(both, "value union");

    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    cur.reserve(both.size());
    shuffle_rec(rho, tau, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> arithmetic_decreasing(const DecreasingSpec& spec) {
    if (spec.length < 0) throw InvalidInput("negative length");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(spec.length));
    for (int i = spec.length - 1; i >= 0; --i)
        out.push_back(spec.smallest + i * spec.difference);
    return out;
}

}  // namespace cycperm
