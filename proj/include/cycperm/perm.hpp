#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace cycperm {

// A linear permutation of {1, ..., n} in one-line notation.  The empty
// permutation (n = 0) is valid.  Values are immutable after construction.
class Permutation {
public:
    Permutation() = default;

    // Throws InvalidInput unless `values` is a permutation of {1, ..., n}.
    explicit Permutation(std::vector<int> values);

    static Permutation identity(int n);    // 1 2 ... n
    static Permutation decreasing(int n);  // n ... 2 1

    // Caller guarantees `values` already is a permutation of {1, ..., n}.
    static Permutation unchecked(std::vector<int> values);

    int size() const { return static_cast<int>(vals_.size()); }
    bool empty() const { return vals_.empty(); }

    // 0-based position access; values are 1-based as usual.
    int at(int i) const { return vals_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& values() const { return vals_; }

    // The rotation that starts at 0-based position k.
    Permutation rotated(int k) const;

    // "42351" when n <= 9, comma-separated one-line notation otherwise.
    std::string str() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> vals_;
};

// A cyclic permutation: the equivalence class of a permutation under
// rotation, held by its unique representative that starts with 1.
// Requires n >= 1.
class CyclicPerm {
public:
    explicit CyclicPerm(const Permutation& p);

    // Caller guarantees `values` is a permutation of {1..n} starting with 1.
    static CyclicPerm from_canonical_unchecked(std::vector<int> values);

    const Permutation& canon() const { return canon_; }
    int size() const { return canon_.size(); }

    // "[14235]" style.
    std::string str() const;

    friend auto operator<=>(const CyclicPerm&, const CyclicPerm&) = default;

private:
    CyclicPerm() = default;
    Permutation canon_;
};

// Order-isomorphic copy of a sequence of distinct integers on {1, ..., k}.
Permutation standardize(std::span<const int> seq);

// All n rotations, starting with p itself; the empty permutation has the
// single rotation {p}.
std::vector<Permutation> rotations(const Permutation& p);

CyclicPerm canonical(const Permutation& p);

Permutation reversal(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation reverse_complement(const Permutation& p);

CyclicPerm reversal(const CyclicPerm& p);
CyclicPerm complement(const CyclicPerm& p);
CyclicPerm reverse_complement(const CyclicPerm& p);

// Replace the i-th entry of `p` by a block order-isomorphic to parts[i];
// blocks take consecutive value ranges ordered like the entries of `p`.
// Throws InvalidInput when |parts| != |p|.
Permutation inflate(const Permutation& p, const std::vector<Permutation>& parts);

// All interleavings of two sequences of distinct integers with disjoint
// value sets, sorted lexicographically.  Throws InvalidInput on repeated
// or overlapping values.
std::vector<std::vector<int>> shuffle_set(std::span<const int> rho,
                                          std::span<const int> tau);

// The arithmetic progression s + (n-1)d, s + (n-2)d, ..., s.
struct DecreasingSpec {
    int length = 0;      // n
    int difference = 0;  // d
    int smallest = 0;    // s
};

std::vector<int> arithmetic_decreasing(const DecreasingSpec& spec);

}  // namespace cycperm
