#include "cycperm/stats.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "cycperm/errors.hpp"

namespace cycperm {

namespace {

std::vector<int> descent_positions(std::span<const int> w) {
    std::vector<int> out;
    for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i)
        if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(i + 1)]) out.push_back(i + 1);
    return out;
}

int inv_word(std::span<const int> w) {
    int count = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++count;
    return count;
}

int exc_word(std::span<const int> w) {
    int count = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] > static_cast<int>(i) + 1) ++count;
    return count;
}

int pk_word(std::span<const int> w) {
    int count = 0;
    for (int i = 1; i + 1 < static_cast<int>(w.size()); ++i)
        if (w[static_cast<std::size_t>(i - 1)] < w[static_cast<std::size_t>(i)] &&
            w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(i + 1)])
            ++count;
    return count;
}

int stat_on_word(Stat s, std::span<const int> w) {
    switch (s) {
        case Stat::des:
            return static_cast<int>(descent_positions(w).size());
        case Stat::maj: {
            const auto d = descent_positions(w);
            return std::accumulate(d.begin(), d.end(), 0);
        }
        case Stat::inv:
            return inv_word(w);
        case Stat::exc:
            return exc_word(w);
        case Stat::pk:
            return pk_word(w);
        case Stat::cdes:
            return cdes_word(w);
        case Stat::cpk:
            return cpk_word(w);
    }
    throw InvalidInput("unknown statistic");
}

}  // namespace

std::vector<int> descent_set(const Permutation& p) { return descent_positions(p.values()); }

std::vector<int> peak_set(const Permutation& p) {
    const auto& w = p.values();
    std::vector<int> out;
    for (int i = 1; i + 1 < static_cast<int>(w.size()); ++i)
        if (w[static_cast<std::size_t>(i - 1)] < w[static_cast<std::size_t>(i)] &&
            w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(i + 1)])
            out.push_back(i + 1);
    return out;
}

int des(const Permutation& p) { return stat_on_word(Stat::des, p.values()); }
int maj(const Permutation& p) { return stat_on_word(Stat::maj, p.values()); }
int inv(const Permutation& p) { return stat_on_word(Stat::inv, p.values()); }
int exc(const Permutation& p) { return stat_on_word(Stat::exc, p.values()); }
int pk(const Permutation& p) { return stat_on_word(Stat::pk, p.values()); }

int cdes_word(std::span<const int> w) {
    const int n = static_cast<int>(w.size());
    int count = 0;
    for (int i = 0; i < n; ++i)
        if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>((i + 1) % n)]) ++count;
    return count;
}

int cpk_word(std::span<const int> w) {
    const int n = static_cast<int>(w.size());
    int count = 0;
    for (int i = 0; i < n; ++i) {
        const int prev = w[static_cast<std::size_t>((i + n - 1) % n)];
        const int next = w[static_cast<std::size_t>((i + 1) % n)];
        if (prev < w[static_cast<std::size_t>(i)] && w[static_cast<std::size_t>(i)] > next) ++count;
    }
    return count;
}

int cdes(const CyclicPerm& p) { return cdes_word(p.canon().values()); }
int cpk(const CyclicPerm& p) { return cpk_word(p.canon().values()); }

int stat_value(Stat s, const Permutation& p) {
    if (s == Stat::cdes || s == Stat::cpk)
        throw InvalidInput("cyclic statistic requested for a linear permutation");
    return stat_on_word(s, p.values());
}

Stat stat_from_name(const std::string& name) {
    if (name == "des") return Stat::des;
    if (name == "maj") return Stat::maj;
    if (name == "inv") return Stat::inv;
    if (name == "exc") return Stat::exc;
    if (name == "pk") return Stat::pk;
    if (name == "cdes") return Stat::cdes;
    if (name == "cpk") return Stat::cpk;
    throw InvalidInput("unknown statistic: " + name);
}

std::string stat_name(Stat s) {
    switch (s) {
        case Stat::des: return "des";
        case Stat::maj: return "maj";
        case Stat::inv: return "inv";
        case Stat::exc: return "exc";
        case Stat::pk: return "pk";
        case Stat::cdes: return "cdes";
        case Stat::cpk: return "cpk";
    }
    throw InvalidInput("unknown statistic");
}

bool cdes_matches_excedance(const CyclicPerm& p) {
    const auto& w = p.canon().values();
    const int n = static_cast<int>(w.size());
    std::vector<int> g(static_cast<std::size_t>(n + 1), 0);
    for (int i = 0; i < n; ++i)
        g[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])] =
            w[static_cast<std::size_t>((i + n - 1) % n)];
    int excedances = 0;
    for (int x = 1; x <= n; ++x)
        if (g[static_cast<std::size_t>(x)] > x) ++excedances;
    return excedances == cdes_word(w);
}

IntPolynomial stat_genfun_linear(const PatternSet& linear_set, int n, Stat stat,
                                 const ScanConfig& cfg) {
    if (linear_set.cyclic())
        throw InvalidInput("linear generating functions need a linear pattern set");
    if (stat == Stat::cdes || stat == Stat::cpk)
        throw InvalidInput("cyclic statistic requested for a linear scan");
    check_scan_size(n, cfg);
    const CompiledPatternSet cps(linear_set);
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    std::vector<long long> hist;
    do {
        if (!cps.word_avoids(word)) continue;
        const int v = stat_on_word(stat, word);
        if (v >= static_cast<int>(hist.size())) hist.resize(static_cast<std::size_t>(v) + 1, 0);
        ++hist[static_cast<std::size_t>(v)];
    } while (std::next_permutation(word.begin(), word.end()));
    IntPolynomial out;
    for (int k = 0; k < static_cast<int>(hist.size()); ++k)
        if (hist[static_cast<std::size_t>(k)] != 0)
            out.add_term(k, Int(hist[static_cast<std::size_t>(k)]));
    return out;
}

IntPolynomial cdes_genfun(const PatternSet& cyclic_set, int n, const ScanConfig& cfg) {
    if (!cyclic_set.cyclic()) throw InvalidInput("cdes scans need a cyclic pattern set");
    const CompiledPatternSet cps(cyclic_set);
    const auto parts = scan_fold<std::vector<long long>>(
        n, cfg, [&](std::vector<long long>& hist, std::span<const int> w) {
            if (hist.empty()) hist.assign(static_cast<std::size_t>(n), 0);
            if (cps.word_avoids(w)) ++hist[static_cast<std::size_t>(cdes_word(w))];
        });
    IntPolynomial out;
    for (const auto& hist : parts)
        for (int k = 0; k < static_cast<int>(hist.size()); ++k)
            if (hist[static_cast<std::size_t>(k)] != 0)
                out.add_term(k, Int(hist[static_cast<std::size_t>(k)]));
    return out;
}

BivarPolynomial joint_cdes_cpk_genfun(const PatternSet& cyclic_set, int n,
                                      const ScanConfig& cfg) {
    if (!cyclic_set.cyclic()) throw InvalidInput("cdes scans need a cyclic pattern set");
    const CompiledPatternSet cps(cyclic_set);
    using Hist = std::map<std::pair<int, int>, long long>;
    const auto parts = scan_fold<Hist>(n, cfg, [&](Hist& hist, std::span<const int> w) {
        if (cps.word_avoids(w)) ++hist[{cdes_word(w), cpk_word(w)}];
    });
    BivarPolynomial out;
    for (const auto& hist : parts)
        for (const auto& [exps, count] : hist) out.add_term(exps.first, exps.second, Int(count));
    return out;
}

}  // namespace cycperm
