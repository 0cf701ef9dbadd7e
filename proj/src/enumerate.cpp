#include "cycperm/enumerate.hpp"

#include <algorithm>
#include <utility>

#include "cycperm/errors.hpp"

namespace cycperm {

void check_scan_size(int n, const ScanConfig& cfg) {
    if (n < 1) throw ResourceLimit("scan length must be at least 1");
    const int cap = std::min(cfg.max_n, kHardMaxN);
    if (n > cap)
        throw ResourceLimit("scan of length " + std::to_string(n) + " exceeds the cap " +
                            std::to_string(cap));
}

namespace detail {

namespace {

long long factorial_ll(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Lexicographic unranking of the canonical word: leading 1, then the
// rank-th permutation of {2, ..., n} in factorial base.
std::vector<int> unrank_word(int n, long long rank) {
    std::vector<int> avail;
    avail.reserve(static_cast<std::size_t>(n - 1));
    for (int v = 2; v <= n; ++v) avail.push_back(v);
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    word.push_back(1);
    long long f = factorial_ll(n - 1);
    for (int m = n - 1; m >= 1; --m) {
        f /= m;
        const long long d = rank / f;
        rank %= f;
        word.push_back(avail[static_cast<std::size_t>(d)]);
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return word;
}

}  // namespace

int scan_blocks(int n, const ScanConfig& cfg) {
    if (cfg.threads <= 1) return 1;
    const long long total = factorial_ll(n - 1);
    const long long nb = std::min<long long>({cfg.threads, 64, total});
    return static_cast<int>(std::max<long long>(nb, 1));
}

void scan_block(int n, int block, int nblocks,
                const std::function<void(std::span<const int>)>& visit) {
    const long long total = factorial_ll(n - 1);
    const long long lo = total * block / nblocks;
    const long long hi = total * (block + 1) / nblocks;
    if (lo >= hi) return;
    std::vector<int> word = unrank_word(n, lo);
    visit(word);
    for (long long r = lo + 1; r < hi; ++r) {
        std::next_permutation(word.begin() + 1, word.end());
        visit(word);
    }
}

}  // namespace detail

Int count_avoiders(const PatternSet& set, int n, const ScanConfig& cfg) {
    if (!set.cyclic()) throw InvalidInput("class scans need a cyclic pattern set");
    const CompiledPatternSet cps(set);
    const auto parts = scan_fold<long long>(n, cfg, [&](long long& acc, std::span<const int> w) {
        if (cps.word_avoids(w)) ++acc;
    });
    Int total = 0;
    for (long long p : parts) total += p;
    return total;
}

std::vector<CyclicPerm> enumerate_class(const PatternSet& set, int n, const ScanConfig& cfg) {
    if (!set.cyclic()) throw InvalidInput("class scans need a cyclic pattern set");
    const CompiledPatternSet cps(set);
    auto parts = scan_fold<std::vector<CyclicPerm>>(
        n, cfg, [&](std::vector<CyclicPerm>& acc, std::span<const int> w) {
            if (cps.word_avoids(w))
                acc.push_back(CyclicPerm::from_canonical_unchecked({w.begin(), w.end()}));
        });
    std::vector<CyclicPerm> out;
    for (auto& p : parts)
        out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    return out;
}

std::vector<CyclicPerm> all_classes(int n, const ScanConfig& cfg) {
    auto parts = scan_fold<std::vector<CyclicPerm>>(
        n, cfg, [&](std::vector<CyclicPerm>& acc, std::span<const int> w) {
            acc.push_back(CyclicPerm::from_canonical_unchecked({w.begin(), w.end()}));
        });
    std::vector<CyclicPerm> out;
    for (auto& p : parts)
        out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    return out;
}

CountingTable count_class(const PatternSet& set, int min_n, int max_n, const ScanConfig& cfg) {
    if (min_n < 1 || min_n > max_n) throw InvalidInput("need 1 <= min_n <= max_n");
    CountingTable table{set, min_n, {}};
    table.counts.reserve(static_cast<std::size_t>(max_n - min_n + 1));
    for (int n = min_n; n <= max_n; ++n) table.counts.push_back(count_avoiders(set, n, cfg));
    return table;
}

CyclicPerm insert_at_site(const CyclicPerm& p, int site) {
    const int n = p.size();
    if (site < 1 || site > n) throw InvalidInput("site out of range");
    const auto& w = p.canon().values();
    std::vector<int> child;
    child.reserve(static_cast<std::size_t>(n + 1));
    child.insert(child.end(), w.begin(), w.begin() + site);
    child.push_back(n + 1);
    child.insert(child.end(), w.begin() + site, w.end());
    return CyclicPerm::from_canonical_unchecked(std::move(child));
}

std::vector<int> active_sites(const CyclicPerm& p, const CompiledPatternSet& set) {
    std::vector<int> sites;
    for (int site = 1; site <= p.size(); ++site) {
        if (set.word_avoids(insert_at_site(p, site).canon().values())) sites.push_back(site);
    }
    return sites;
}

Int TreeLevel::total() const {
    Int t = 0;
    for (const auto& [degree, count] : degree_counts) t += count;
    return t;
}

std::vector<TreeLevel> build_tree_levels(const PatternSet& set, int max_level,
                                         const ScanConfig& cfg) {
    if (!set.cyclic()) throw InvalidInput("generating trees need a cyclic pattern set");
    if (max_level < 2) throw InvalidInput("max_level must be at least 2");
    check_scan_size(max_level, cfg);
    const CompiledPatternSet cps(set);
    const CyclicPerm root = CyclicPerm::from_canonical_unchecked({1, 2});
    if (!cps.word_avoids(root.canon().values()))
        throw InvalidInput("the root class does not avoid the set");

    std::vector<TreeLevel> levels;
    std::vector<CyclicPerm> current{root};
    for (int level = 2; level <= max_level; ++level) {
        TreeLevel row{level, {}};
        std::vector<CyclicPerm> next;
        for (const auto& node : current) {
            const auto sites = active_sites(node, cps);
            row.degree_counts[static_cast<int>(sites.size())] += 1;
            if (level < max_level)
                for (int site : sites) next.push_back(insert_at_site(node, site));
        }
        levels.push_back(std::move(row));
        current = std::move(next);
    }
    return levels;
}

namespace {

std::string label_multiset_str(const std::vector<std::string>& labels) {
    std::string s;
    for (const auto& l : labels) {
        s += '(';
        s += l;
        s += ')';
    }
    return s.empty() ? "()" : s;
}

}  // namespace

RuleCheckResult verify_production_rules(const PatternSet& set, const ProductionRuleSet& rules,
                                        int max_level, const ScanConfig& cfg) {
    if (!set.cyclic()) throw InvalidInput("generating trees need a cyclic pattern set");
    if (max_level < 2) throw InvalidInput("max_level must be at least 2");
    check_scan_size(max_level, cfg);
    const CompiledPatternSet cps(set);

    struct Node {
        CyclicPerm perm;
        std::string label;
    };

    RuleCheckResult result{true, max_level, ""};
    const CyclicPerm root = CyclicPerm::from_canonical_unchecked({1, 2});
    if (!cps.word_avoids(root.canon().values())) {
        result.ok = false;
        result.message = "the root class does not avoid the set";
        return result;
    }

    const auto root_sites = active_sites(root, cps);
    std::vector<Node> current{{root, rules.classify(root, static_cast<int>(root_sites.size()), true)}};
    for (int level = 2; level < max_level; ++level) {
        std::vector<Node> next;
        for (const auto& node : current) {
            const auto it = rules.rules.find(node.label);
            if (it == rules.rules.end()) {
                result.ok = false;
                result.message =
                    "node " + node.perm.str() + " has unregistered label (" + node.label + ")";
                return result;
            }
            const auto sites = active_sites(node.perm, cps);
            std::vector<std::string> child_labels;
            std::vector<Node> children;
            for (int site : sites) {
                CyclicPerm child = insert_at_site(node.perm, site);
                const auto child_sites = active_sites(child, cps);
                std::string label =
                    rules.classify(child, static_cast<int>(child_sites.size()), false);
                child_labels.push_back(label);
                children.push_back({std::move(child), std::move(label)});
            }
            std::sort(child_labels.begin(), child_labels.end());
            std::vector<std::string> expected = it->second;
            std::sort(expected.begin(), expected.end());
            if (child_labels != expected) {
                result.ok = false;
                result.message = "node " + node.perm.str() + " labeled (" + node.label +
                                 ") produced " + label_multiset_str(child_labels) + ", expected " +
                                 label_multiset_str(expected);
                return result;
            }
            next.insert(next.end(), std::make_move_iterator(children.begin()),
                        std::make_move_iterator(children.end()));
        }
        current = std::move(next);
    }
    return result;
}

namespace {

CyclicPerm cp(std::vector<int> word) { return CyclicPerm::from_canonical_unchecked(std::move(word)); }

std::string degree_label(const CyclicPerm&, int degree, bool is_root) {
    return is_root ? "*" : std::to_string(degree);
}

// 1, n, n-1, ..., 2 — includes the root (n = 2).
bool is_descending_shape(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    for (int i = 1; i < n; ++i)
        if (w[static_cast<std::size_t>(i)] != n + 1 - i) return false;
    return true;
}

// 1, n-1, n, n-2, n-3, ..., 2 — needs n >= 3.
bool is_near_descending_shape(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    if (n < 3) return false;
    if (w[1] != n - 1 || w[2] != n) return false;
    for (int i = 3; i < n; ++i)
        if (w[static_cast<std::size_t>(i)] != n + 1 - i) return false;
    return true;
}

std::string shape_label(const CyclicPerm& p, int degree, bool) {
    const auto& w = p.canon().values();
    if (is_descending_shape(w)) return "D";
    if (is_near_descending_shape(w)) return "E";
    return std::to_string(degree);
}

struct RuleEntry {
    PatternSet set;
    ProductionRuleSet rules;
};

const std::vector<RuleEntry>& rule_registry() {
    static const std::vector<RuleEntry> registry = [] {
        std::vector<RuleEntry> r;
        r.push_back({PatternSet::cyclic_classical({cp({1, 2, 3, 4}), cp({1, 3, 4, 2})}),
                     {"pair-1234-1342",
                      {{"*", {"2", "2"}}, {"1", {"1"}}, {"2", {"1", "2"}}},
                      degree_label}});
        r.push_back({PatternSet::cyclic_classical({cp({1, 2, 3, 4}), cp({1, 3, 2, 4})}),
                     {"pair-1234-1324",
                      {{"D", {"D", "E"}}, {"E", {"1", "1"}}, {"1", {"1"}}},
                      shape_label}});
        r.push_back(
            {PatternSet::cyclic_classical({cp({1, 2, 3, 4}), cp({1, 3, 4, 2}), cp({1, 4, 2, 3})}),
             {"triple-1234-1342-1423",
              {{"*", {"1", "2"}}, {"1", {"1"}}, {"2", {"1", "2"}}},
              degree_label}});
        r.push_back(
            {PatternSet::cyclic_classical({cp({1, 2, 3, 4}), cp({1, 3, 2, 4}), cp({1, 4, 2, 3})}),
             {"triple-1234-1324-1423",
              {{"*", {"1", "2"}}, {"1", {"1"}}, {"2", {"1", "2"}}},
              degree_label}});
        return r;
    }();
    return registry;
}

}  // namespace

const ProductionRuleSet* registered_rules(const PatternSet& set) {
    for (const auto& entry : rule_registry())
        if (entry.set == set) return &entry.rules;
    return nullptr;
}

std::vector<PatternSet> rule_catalogue_sets() {
    std::vector<PatternSet> sets;
    for (const auto& entry : rule_registry()) sets.push_back(entry.set);
    return sets;
}

std::vector<PatternSet> symmetry_orbit(const PatternSet& set) {
    std::vector<PatternSet> orbit{set};
    for (const auto& image : {reversal(set), complement(set), reverse_complement(set)})
        if (std::find(orbit.begin(), orbit.end(), image) == orbit.end()) orbit.push_back(image);
    return orbit;
}

bool WilfGroup::nontrivial() const {
    for (int o : orbit_of)
        if (o != orbit_of.front()) return true;
    return false;
}

std::vector<WilfGroup> wilf_classify(const std::vector<PatternSet>& sets, int max_n,
                                     const ScanConfig& cfg) {
    if (sets.empty()) throw InvalidInput("no pattern sets given");
    std::vector<WilfGroup> groups;
    for (const auto& set : sets) {
        std::vector<Int> counts;
        counts.reserve(static_cast<std::size_t>(max_n));
        for (int n = 1; n <= max_n; ++n) counts.push_back(count_avoiders(set, n, cfg));
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const WilfGroup& g) { return g.counts == counts; });
        if (it == groups.end()) {
            groups.push_back({{set}, std::move(counts), {}});
        } else {
            it->members.push_back(set);
        }
    }
    for (auto& g : groups) {
        const int m = static_cast<int>(g.members.size());
        std::vector<int> parent(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) parent[static_cast<std::size_t>(i)] = i;
        std::function<int(int)> find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
            return x;
        };
        for (int i = 0; i < m; ++i) {
            const auto orbit = symmetry_orbit(g.members[static_cast<std::size_t>(i)]);
            for (int j = i + 1; j < m; ++j)
                if (std::find(orbit.begin(), orbit.end(), g.members[static_cast<std::size_t>(j)]) !=
                    orbit.end())
                    parent[static_cast<std::size_t>(find(j))] = find(i);
        }
        std::map<int, int> canon_id;
        for (int i = 0; i < m; ++i) {
            const int root = find(i);
            const auto [it, inserted] = canon_id.emplace(root, static_cast<int>(canon_id.size()));
            g.orbit_of.push_back(it->second);
        }
    }
    return groups;
}

}  // namespace cycperm
