#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "cycperm/numbers.hpp"
#include "cycperm/pattern.hpp"
#include "cycperm/perm.hpp"

namespace cycperm {

// Exhaustive scans walk (n-1)! class representatives, so lengths are
// capped hard regardless of configuration.
inline constexpr int kHardMaxN = 12;

struct ScanConfig {
    int max_n = kHardMaxN;  // soft cap, clamped to kHardMaxN
    int threads = 1;        // worker threads for scans
};

// Throws ResourceLimit unless 1 <= n <= min(cfg.max_n, kHardMaxN).
void check_scan_size(int n, const ScanConfig& cfg);

namespace detail {

// Visit block `block` of `nblocks` contiguous lexicographic blocks of
// the canonical words of length n (leading entry 1, the tail running
// through the permutations of {2, ..., n}).
void scan_block(int n, int block, int nblocks,
                const std::function<void(std::span<const int>)>& visit);

int scan_blocks(int n, const ScanConfig& cfg);

}  // namespace detail

// Fold a visitor over every canonical word of length n.  Each worker
// owns one State; the per-block states come back in lexicographic block
// order for the caller to combine (so any associative merge reproduces
// the single-threaded result).
template <class State>
std::vector<State> scan_fold(int n, const ScanConfig& cfg,
                             const std::function<void(State&, std::span<const int>)>& visit) {
    check_scan_size(n, cfg);
    const int nblocks = detail::scan_blocks(n, cfg);
    std::vector<State> states(static_cast<std::size_t>(nblocks));
    if (nblocks == 1) {
        detail::scan_block(n, 0, 1, [&](std::span<const int> w) { visit(states[0], w); });
        return states;
    }
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(nblocks));
    for (int b = 0; b < nblocks; ++b)
        workers.emplace_back([&visit, &states, n, b, nblocks] {
            detail::scan_block(n, b, nblocks, [&](std::span<const int> w) {
                visit(states[static_cast<std::size_t>(b)], w);
            });
        });
    for (auto& t : workers) t.join();
    return states;
}

Int count_avoiders(const PatternSet& set, int n, const ScanConfig& cfg = {});

// Sorted by canonical word.
std::vector<CyclicPerm> enumerate_class(const PatternSet& set, int n, const ScanConfig& cfg = {});
std::vector<CyclicPerm> all_classes(int n, const ScanConfig& cfg = {});

struct CountingTable {
    PatternSet set;
    int min_n = 1;
    std::vector<Int> counts;  // counts[i] = avoider count at n = min_n + i
};

CountingTable count_class(const PatternSet& set, int min_n, int max_n,
                          const ScanConfig& cfg = {});

// ---- generating tree ----
//
// Children of a class of size n arise by inserting the value n+1 right
// after one of the n positions of the canonical word (site i = after
// position i, 1-based); removing the largest value is the inverse, so
// every avoider of size >= 3 has a unique parent and the avoiders form a
// tree rooted at the size-2 class.

CyclicPerm insert_at_site(const CyclicPerm& p, int site);  // site in 1..n

// Sites whose child still avoids the set, in increasing order.
std::vector<int> active_sites(const CyclicPerm& p, const CompiledPatternSet& set);

struct TreeLevel {
    int level = 0;                     // class size on this level
    std::map<int, Int> degree_counts;  // #active sites -> number of nodes
    Int total() const;
};

// Levels 2..max_level of the generating tree for `set`.
std::vector<TreeLevel> build_tree_levels(const PatternSet& set, int max_level,
                                         const ScanConfig& cfg = {});

// A certified label grammar: every tree node gets a label, and the rule
// map fixes the sorted multiset of child labels each label produces.
struct ProductionRuleSet {
    std::string name;
    std::map<std::string, std::vector<std::string>> rules;
    std::function<std::string(const CyclicPerm&, int degree, bool is_root)> classify;
};

struct RuleCheckResult {
    bool ok = true;
    int max_level = 0;
    std::string message;  // first counterexample; empty when ok
};

RuleCheckResult verify_production_rules(const PatternSet& set, const ProductionRuleSet& rules,
                                        int max_level, const ScanConfig& cfg = {});

// nullptr when no grammar is registered for the set.
const ProductionRuleSet* registered_rules(const PatternSet& set);
std::vector<PatternSet> rule_catalogue_sets();

// ---- Wilf classification ----

// {s, reversal, complement, reverse-complement} without duplicates, in
// that order.
std::vector<PatternSet> symmetry_orbit(const PatternSet& set);

struct WilfGroup {
    std::vector<PatternSet> members;  // same avoider counts for n = 1..max_n
    std::vector<Int> counts;
    std::vector<int> orbit_of;  // symmetry-orbit index of each member
    bool nontrivial() const;    // members from at least two different orbits
};

// Group the sets by their avoider counts for n = 1..max_n, then split
// each group into reversal/complement orbits.
std::vector<WilfGroup> wilf_classify(const std::vector<PatternSet>& sets, int max_n,
                                     const ScanConfig& cfg = {});

}  // namespace cycperm
