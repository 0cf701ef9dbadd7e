#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "cycperm/perm.hpp"

namespace cycperm {

// A pattern with optional adjacency bonds.  Bond i (1-based, i < length)
// forces the entries matched at pattern positions i and i+1 to sit next
// to each other in the subject.  A cyclic pattern is matched against
// every rotation of the subject, with the pattern's written form fixed.
//
// Cyclic patterns are normalized on construction to the lexicographically
// least rotation whose bonds stay inside the written word (rotating the
// subject makes those spellings interchangeable, so this is a pure
// change of representative).
class VincularPattern {
public:
    VincularPattern(Permutation base, std::vector<int> bonds, bool cyclic);

    static VincularPattern classical(Permutation base, bool cyclic);
    static VincularPattern classical(const CyclicPerm& p);

    const Permutation& base() const { return base_; }
    const std::vector<int>& bonds() const { return bonds_; }  // sorted, 1-based
    bool cyclic() const { return cyclic_; }
    int size() const { return base_.size(); }

    friend auto operator<=>(const VincularPattern&, const VincularPattern&) = default;

private:
    Permutation base_;
    std::vector<int> bonds_;
    bool cyclic_ = false;
};

VincularPattern reversal(const VincularPattern& p);
VincularPattern complement(const VincularPattern& p);
VincularPattern reverse_complement(const VincularPattern& p);

// A nonempty, deduplicated, sorted set of patterns that are all cyclic or
// all linear.
class PatternSet {
public:
    explicit PatternSet(std::vector<VincularPattern> patterns);

    static PatternSet cyclic_classical(const std::vector<CyclicPerm>& ps);
    static PatternSet linear_classical(const std::vector<Permutation>& ps);

    const std::vector<VincularPattern>& patterns() const { return pats_; }
    bool cyclic() const { return pats_.front().cyclic(); }
    std::size_t size() const { return pats_.size(); }

    friend auto operator<=>(const PatternSet&, const PatternSet&) = default;

private:
    std::vector<VincularPattern> pats_;
};

PatternSet reversal(const PatternSet& s);
PatternSet complement(const PatternSet& s);
PatternSet reverse_complement(const PatternSet& s);

// --- containment ---------------------------------------------------------

bool contains_linear(const Permutation& sigma, const Permutation& pat);
bool contains_cyclic(const CyclicPerm& sigma, const CyclicPerm& pat);

// Requires vp.cyclic() == false / true respectively.
bool contains_vincular_linear(const Permutation& sigma, const VincularPattern& vp);
bool contains_vincular_cyclic(const CyclicPerm& sigma, const VincularPattern& vp);

// All occurrences of a linear pattern: increasing 0-based index tuples in
// lexicographic order.
std::vector<std::vector<int>> occurrences(const Permutation& sigma, const VincularPattern& vp);

// True when no member of the (cyclic) set is contained in sigma.
bool avoids(const CyclicPerm& sigma, const PatternSet& set);

// --- scan-friendly core ---------------------------------------------------

// A pattern preprocessed for the backtracking matcher: for each position,
// the earlier position holding the closest smaller/larger pattern value
// (value-interval pruning), and whether the position is glued to its
// predecessor by a bond.
struct CompiledPattern {
    std::vector<int> vals;
    std::vector<int> pred;            // -1 when absent
    std::vector<int> succ;            // -1 when absent
    std::vector<unsigned char> glued;
};

CompiledPattern compile_pattern(const VincularPattern& vp);

bool word_contains(std::span<const int> word, const CompiledPattern& p);
bool word_contains_cyclic(std::span<const int> word, const CompiledPattern& p);

class CompiledPatternSet {
public:
    explicit CompiledPatternSet(const PatternSet& set);
    bool cyclic() const { return cyclic_; }
    // No member contained (cyclically when the set is cyclic).
    bool word_avoids(std::span<const int> word) const;

private:
    std::vector<CompiledPattern> pats_;
    bool cyclic_;
};

// Structural test equivalent to avoiding [1342]: split the canonical form
// as 1 rho n tau and check the three block conditions.
bool is_1342_avoider_characterized(const CyclicPerm& sigma);

}  // namespace cycperm
