#include "cycperm/pattern.hpp"

#include <algorithm>
#include <array>

#include "cycperm/errors.hpp"

namespace cycperm {

namespace {

// Lexicographically least rotation of (word, bonds) among the rotations
// where no bond wraps around the end of the word.  The written form
// itself never wraps, so a candidate always exists.
void canonicalize_cyclic(std::vector<int>& word, std::vector<int>& bonds) {
    const int n = static_cast<int>(word.size());
    if (n == 0) return;
    std::vector<int> best_word = word, best_bonds = bonds;
    std::vector<int> rot(word.begin(), word.end());
    for (int r = 1; r < n; ++r) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        std::vector<int> moved;
        bool wraps = false;
        for (int b : bonds) {
            int p = ((b - 1 - r) % n + n) % n;  // 0-based new position of the pair
            if (p == n - 1) {
                wraps = true;
                break;
            }
            moved.push_back(p + 1);
        }
        if (wraps) continue;
        std::sort(moved.begin(), moved.end());
        if (rot < best_word) {
            best_word = rot;
            best_bonds = std::move(moved);
        }
    }
    word = std::move(best_word);
    bonds = std::move(best_bonds);
}

}  // namespace

VincularPattern::VincularPattern(Permutation base, std::vector<int> bonds, bool cyclic)
    : base_(std::move(base)), bonds_(std::move(bonds)), cyclic_(cyclic) {
    std::sort(bonds_.begin(), bonds_.end());
    bonds_.erase(std::unique(bonds_.begin(), bonds_.end()), bonds_.end());
    for (int b : bonds_)
        if (b < 1 || b >= base_.size())
            throw InvalidInput("bond position out of range");
    if (cyclic_ && base_.empty()) throw InvalidInput("cyclic pattern needs n >= 1");
    if (cyclic_ && !bonds_.empty()) {
        std::vector<int> word = base_.values();
        canonicalize_cyclic(word, bonds_);
        base_ = Permutation::unchecked(std::move(word));
    } else if (cyclic_) {
        base_ = CyclicPerm(base_).canon();
    }
}

VincularPattern VincularPattern::classical(Permutation base, bool cyclic) {
    return VincularPattern(std::move(base), {}, cyclic);
}

VincularPattern VincularPattern::classical(const CyclicPerm& p) {
    return VincularPattern(p.canon(), {}, true);
}

VincularPattern reversal(const VincularPattern& p) {
    const int n = p.size();
    std::vector<int> bonds;
    for (int b : p.bonds()) bonds.push_back(n - b);
    return VincularPattern(reversal(p.base()), std::move(bonds), p.cyclic());
}

VincularPattern complement(const VincularPattern& p) {
    return VincularPattern(complement(p.base()), p.bonds(), p.cyclic());
}

VincularPattern reverse_complement(const VincularPattern& p) {
    return reversal(complement(p));
}

PatternSet::PatternSet(std::vector<VincularPattern> patterns) : pats_(std::move(patterns)) {
    if (pats_.empty()) throw InvalidInput("pattern set must be nonempty");
    for (const auto& p : pats_)
        if (p.cyclic() != pats_.front().cyclic())
            throw InvalidInput("pattern set mixes cyclic and linear patterns");
    std::sort(pats_.begin(), pats_.end());
    pats_.erase(std::unique(pats_.begin(), pats_.end()), pats_.end());
}

PatternSet PatternSet::cyclic_classical(const std::vector<CyclicPerm>& ps) {
    std::vector<VincularPattern> v;
    v.reserve(ps.size());
    for (const auto& p : ps) v.push_back(VincularPattern::classical(p));
    return PatternSet(std::move(v));
}

PatternSet PatternSet::linear_classical(const std::vector<Permutation>& ps) {
    std::vector<VincularPattern> v;
    v.reserve(ps.size());
    for (const auto& p : ps) v.push_back(VincularPattern::classical(p, false));
    return PatternSet(std::move(v));
}

namespace {

PatternSet map_set(const PatternSet& s, VincularPattern (*op)(const VincularPattern&)) {
    std::vector<VincularPattern> v;
    v.reserve(s.size());
    for (const auto& p : s.patterns()) v.push_back(op(p));
    return PatternSet(std::move(v));
}

}  // namespace

PatternSet reversal(const PatternSet& s) { return map_set(s, reversal); }
PatternSet complement(const PatternSet& s) { return map_set(s, complement); }
PatternSet reverse_complement(const PatternSet& s) { return map_set(s, reverse_complement); }

CompiledPattern compile_pattern(const VincularPattern& vp) {
    const auto& v = vp.base().values();
    const int k = static_cast<int>(v.size());
    CompiledPattern p;
    p.vals = v;
    p.pred.assign(static_cast<std::size_t>(k), -1);
    p.succ.assign(static_cast<std::size_t>(k), -1);
    p.glued.assign(static_cast<std::size_t>(k), 0);
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < j; ++i) {
            if (v[static_cast<std::size_t>(i)] < v[static_cast<std::size_t>(j)]) {
                if (p.pred[static_cast<std::size_t>(j)] < 0 ||
                    v[static_cast<std::size_t>(i)] >
                        v[static_cast<std::size_t>(p.pred[static_cast<std::size_t>(j)])])
                    p.pred[static_cast<std::size_t>(j)] = i;
            } else {
                if (p.succ[static_cast<std::size_t>(j)] < 0 ||
                    v[static_cast<std::size_t>(i)] <
                        v[static_cast<std::size_t>(p.succ[static_cast<std::size_t>(j)])])
                    p.succ[static_cast<std::size_t>(j)] = i;
            }
        }
    }
    for (int b : vp.bonds()) p.glued[static_cast<std::size_t>(b)] = 1;
    return p;
}

namespace {

// Backtracking over pattern positions.  pos[j] is the subject index
// matched at pattern position j; a candidate value only has to beat the
// closest already-placed values below and above (transitivity gives the
// rest).
bool extend_match(std::span<const int> w, const CompiledPattern& p, std::vector<int>& pos,
                  int j) {
    const int n = static_cast<int>(w.size());
    const int k = static_cast<int>(p.vals.size());
    if (j == k) return true;
    int first = (j == 0) ? 0 : pos[static_cast<std::size_t>(j - 1)] + 1;
    int last = n - (k - j);
    if (p.glued[static_cast<std::size_t>(j)]) last = std::min(last, first);
    for (int i = first; i <= last; ++i) {
        const int v = w[static_cast<std::size_t>(i)];
        const int pr = p.pred[static_cast<std::size_t>(j)];
        if (pr >= 0 && v <= w[static_cast<std::size_t>(pos[static_cast<std::size_t>(pr)])])
            continue;
        const int su = p.succ[static_cast<std::size_t>(j)];
        if (su >= 0 && v >= w[static_cast<std::size_t>(pos[static_cast<std::size_t>(su)])])
            continue;
        pos[static_cast<std::size_t>(j)] = i;
        if (extend_match(w, p, pos, j + 1)) return true;
    }
    return false;
}

void collect_matches(std::span<const int> w, const CompiledPattern& p, std::vector<int>& pos,
                     int j, std::vector<std::vector<int>>& out) {
    const int n = static_cast<int>(w.size());
    const int k = static_cast<int>(p.vals.size());
    if (j == k) {
        out.push_back(pos);
        return;
    }
    int first = (j == 0) ? 0 : pos[static_cast<std::size_t>(j - 1)] + 1;
    int last = n - (k - j);
    if (p.glued[static_cast<std::size_t>(j)]) last = std::min(last, first);
    for (int i = first; i <= last; ++i) {
        const int v = w[static_cast<std::size_t>(i)];
        const int pr = p.pred[static_cast<std::size_t>(j)];
        if (pr >= 0 && v <= w[static_cast<std::size_t>(pos[static_cast<std::size_t>(pr)])])
            continue;
        const int su = p.succ[static_cast<std::size_t>(j)];
        if (su >= 0 && v >= w[static_cast<std::size_t>(pos[static_cast<std::size_t>(su)])])
            continue;
        pos[static_cast<std::size_t>(j)] = i;
        collect_matches(w, p, pos, j + 1, out);
    }
}

}  // namespace

bool word_contains(std::span<const int> word, const CompiledPattern& p) {
    const int k = static_cast<int>(p.vals.size());
    if (k == 0) return true;
    if (k > static_cast<int>(word.size())) return false;
    std::vector<int> pos(static_cast<std::size_t>(k));
    return extend_match(word, p, pos, 0);
}

bool word_contains_cyclic(std::span<const int> word, const CompiledPattern& p) {
    const int n = static_cast<int>(word.size());
    const int k = static_cast<int>(p.vals.size());
    if (k == 0) return true;
    if (k > n) return false;
    std::vector<int> rot(word.begin(), word.end());
    for (int r = 0; r < n; ++r) {
        if (r > 0) std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (word_contains(rot, p)) return true;
    }
    return false;
}

bool contains_linear(const Permutation& sigma, const Permutation& pat) {
    return word_contains(sigma.values(), compile_pattern(VincularPattern::classical(pat, false)));
}

bool contains_cyclic(const CyclicPerm& sigma, const CyclicPerm& pat) {
    return word_contains_cyclic(sigma.canon().values(),
                                compile_pattern(VincularPattern::classical(pat)));
}

bool contains_vincular_linear(const Permutation& sigma, const VincularPattern& vp) {
    if (vp.cyclic()) throw InvalidInput("linear containment needs a linear pattern");
    return word_contains(sigma.values(), compile_pattern(vp));
}

bool contains_vincular_cyclic(const CyclicPerm& sigma, const VincularPattern& vp) {
    if (!vp.cyclic()) throw InvalidInput("cyclic containment needs a cyclic pattern");
    return word_contains_cyclic(sigma.canon().values(), compile_pattern(vp));
}

std::vector<std::vector<int>> occurrences(const Permutation& sigma, const VincularPattern& vp) {
    if (vp.cyclic()) throw InvalidInput("occurrences are defined for linear patterns");
    const CompiledPattern p = compile_pattern(vp);
    std::vector<std::vector<int>> out;
    const int k = static_cast<int>(p.vals.size());
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    if (k > sigma.size()) return out;
    std::vector<int> pos(static_cast<std::size_t>(k));
    collect_matches(sigma.values(), p, pos, 0, out);
    return out;
}

bool avoids(const CyclicPerm& sigma, const PatternSet& set) {
    if (!set.cyclic()) throw InvalidInput("avoids expects a cyclic pattern set");
    return CompiledPatternSet(set).word_avoids(sigma.canon().values());
}

CompiledPatternSet::CompiledPatternSet(const PatternSet& set) : cyclic_(set.cyclic()) {
    pats_.reserve(set.size());
    for (const auto& p : set.patterns()) pats_.push_back(compile_pattern(p));
}

bool CompiledPatternSet::word_avoids(std::span<const int> word) const {
    for (const auto& p : pats_) {
        const bool hit = cyclic_ ? word_contains_cyclic(word, p) : word_contains(word, p);
        if (hit) return false;
    }
    return true;
}

namespace {

const CompiledPattern& pat213() {
    static const CompiledPattern p =
        compile_pattern(VincularPattern::classical(Permutation({2, 1, 3}), false));
    return p;
}

const CompiledPattern& pat231() {
    static const CompiledPattern p =
        compile_pattern(VincularPattern::classical(Permutation({2, 3, 1}), false));
    return p;
}

bool has_descent(std::span<const int> w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) return true;
    return false;
}

bool has_ascent(std::span<const int> w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) return true;
    return false;
}

}  // namespace

bool is_1342_avoider_characterized(const CyclicPerm& sigma) {
    const auto& v = sigma.canon().values();
    const int n = static_cast<int>(v.size());
    if (n <= 2) return true;
    const auto it = std::find(v.begin(), v.end(), n);
    const int k = static_cast<int>(it - v.begin());
    const std::span<const int> rho(v.data() + 1, static_cast<std::size_t>(k - 1));
    const std::span<const int> tau(v.data() + k + 1, static_cast<std::size_t>(n - 1 - k));
    if (word_contains(rho, pat213()) || word_contains(rho, pat231())) return false;
    if (word_contains(tau, pat213()) || word_contains(tau, pat231())) return false;
    if (!rho.empty() && !tau.empty()) {
        const int rho_max = *std::max_element(rho.begin(), rho.end());
        const int tau_min = *std::min_element(tau.begin(), tau.end());
        if (rho_max > tau_min) return false;
    }
    if (has_descent(rho) && has_ascent(tau)) return false;
    return true;
}

}  // namespace cycperm
