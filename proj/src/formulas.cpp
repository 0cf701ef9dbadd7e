#include "cycperm/formulas.hpp"

#include <algorithm>
#include <utility>

#include "cycperm/errors.hpp"
#include "cycperm/pattern_io.hpp"
#include "cycperm/stats.hpp"

namespace cycperm {

namespace {

CyclicPerm cp(std::vector<int> word) {
    return CyclicPerm::from_canonical_unchecked(std::move(word));
}

std::string id_for(FormulaKind kind, const PatternSet& set) {
    std::string prefix;
    switch (kind) {
        case FormulaKind::count: prefix = "count:"; break;
        case FormulaKind::cdes_poly: prefix = "cdes:"; break;
        case FormulaKind::joint_poly: prefix = "joint:"; break;
        case FormulaKind::linear_des_poly: prefix = "lindes:"; break;
    }
    std::string body;
    for (const auto& p : set.patterns()) {
        if (!body.empty() && !set.cyclic()) body += '-';
        body += print_pattern(p);
    }
    return prefix + body;
}

FormulaEntry count_entry(PatternSet set, int min_n, std::string text,
                         std::function<Int(int)> fn) {
    std::string id = id_for(FormulaKind::count, set);
    return {std::move(id),   std::move(set), min_n, FormulaKind::count,
            std::move(text), std::move(fn),  {},    {}};
}

FormulaEntry cdes_entry(PatternSet set, int min_n, std::string text,
                        std::function<IntPolynomial(int)> fn) {
    std::string id = id_for(FormulaKind::cdes_poly, set);
    return {std::move(id),   std::move(set), min_n,         FormulaKind::cdes_poly,
            std::move(text), {},             std::move(fn), {}};
}

// ---- right-hand sides ----

IntPolynomial geometric_q(int n) {  // q + q^2 + ... + q^(n-1)
    IntPolynomial p;
    for (int k = 1; k <= n - 1; ++k) p.add_term(k, 1);
    return p;
}

IntPolynomial cdes_poly_1324(int n) {
    IntPolynomial p;
    for (int k = 1; k <= n - 1; ++k) {
        const Int c = binomial(n + k - 3, n - k - 1);
        if (c != 0) p.add_term(k, c);
    }
    return p;
}

IntPolynomial cdes_poly_1342(int n) {
    const IntPolynomial doubled = IntPolynomial::monomial(2, 1) * poly_pow(IntPolynomial({1, 1}), n - 2);
    return doubled - geometric_q(n);
}

IntPolynomial cdes_poly_1432(int n) {
    IntPolynomial p;
    p.add_term(1, 1);
    const Int quad = pow2(n - 1) - n;
    if (quad != 0) p.add_term(2, quad);
    for (int j = 3; 2 * j - 1 <= n; ++j) p.add_term(j, binomial(n, 2 * j - 1));
    return p;
}

IntPolynomial cdes_poly_top_pair(int n) {  // (2n-5) q^(n-2) + q^(n-1)
    IntPolynomial p;
    p.add_term(n - 2, 2 * n - 5);
    p.add_term(n - 1, 1);
    return p;
}

IntPolynomial cdes_poly_binom_top(int n) {  // binomial(n-1,2) q^(n-2) + q^(n-1)
    IntPolynomial p;
    const Int c = binomial(n - 1, 2);
    if (c != 0) p.add_term(n - 2, c);
    p.add_term(n - 1, 1);
    return p;
}

IntPolynomial cdes_poly_staircase(int n) {  // q + sum_{k=2}^{n-1} (n-k) q^k
    IntPolynomial p;
    p.add_term(1, 1);
    for (int k = 2; k <= n - 1; ++k) p.add_term(k, n - k);
    return p;
}

IntPolynomial cdes_poly_four_terms(int n) {  // q + q^2 + q^(n-2) + q^(n-1)
    IntPolynomial p;
    p.add_term(1, 1);
    p.add_term(2, 1);
    p.add_term(n - 2, 1);
    p.add_term(n - 1, 1);
    return p;
}

IntPolynomial cdes_poly_binomial(int n) {  // q (1+q)^(n-2)
    return IntPolynomial::monomial(1, 1) * poly_pow(IntPolynomial({1, 1}), n - 2);
}

IntPolynomial cdes_poly_near_top(int n) {  // (n-2) q^(n-2) + q^(n-1)
    IntPolynomial p;
    if (n > 2) p.add_term(n - 2, n - 2);
    p.add_term(n - 1, 1);
    return p;
}

BivarPolynomial joint_poly_top(int n) {  // q^(n-2) t + (2n-6) q^(n-2) t^2 + q^(n-1) t
    BivarPolynomial p;
    p.add_term(n - 2, 1, 1);
    if (2 * n - 6 > 0) p.add_term(n - 2, 2, 2 * n - 6);
    p.add_term(n - 1, 1, 1);
    return p;
}

IntPolynomial lindes_poly(int n) {  // (1+q)^(n-1)
    return poly_pow(IntPolynomial({1, 1}), n - 1);
}

BivarPolynomial reverse_q_bivar(const BivarPolynomial& f, int n) {
    BivarPolynomial out;
    for (const auto& [exps, c] : f.terms()) out.add_term(n - exps.first, exps.second, c);
    return out;
}

}  // namespace

const std::vector<FormulaEntry>& formula_catalogue() {
    static const std::vector<FormulaEntry> catalogue = [] {
        const CyclicPerm A = cp({1, 2, 3, 4});
        const CyclicPerm B = cp({1, 2, 4, 3});
        const CyclicPerm C = cp({1, 3, 2, 4});
        const CyclicPerm D = cp({1, 3, 4, 2});
        const CyclicPerm E = cp({1, 4, 2, 3});
        const CyclicPerm F = cp({1, 4, 3, 2});
        const auto set = [](std::vector<CyclicPerm> ps) {
            return PatternSet::cyclic_classical(std::move(ps));
        };

        const auto count_increasing = [](int n) { return pow2(n) + 1 - 2 * n - binomial(n, 3); };
        const auto count_near_increasing = [](int n) { return pow2(n - 1) - n + 1; };
        const auto count_fib = [](int n) { return fibonacci(2 * n - 3); };
        const auto count_linear = [](int n) { return Int(2 * (n - 2)); };
        const auto count_quadratic = [](int n) { return 1 + binomial(n - 1, 2); };
        const auto count_doubling = [](int n) { return pow2(n - 2); };
        const auto count_n_minus_1 = [](int n) { return Int(n - 1); };
        const auto constant = [](Int v) { return [v](int) { return v; }; };

        std::vector<FormulaEntry> cat;

        // counting formulas: the six single patterns
        cat.push_back(count_entry(set({A}), 1, "2^n + 1 - 2n - binomial(n,3)", count_increasing));
        cat.push_back(count_entry(set({F}), 1, "2^n + 1 - 2n - binomial(n,3)", count_increasing));
        cat.push_back(count_entry(set({B}), 1, "2^(n-1) - n + 1", count_near_increasing));
        cat.push_back(count_entry(set({D}), 1, "2^(n-1) - n + 1", count_near_increasing));
        cat.push_back(count_entry(set({C}), 2, "fibonacci(2n-3)", count_fib));
        cat.push_back(count_entry(set({E}), 2, "fibonacci(2n-3)", count_fib));

        // counting formulas: pairs (one entry per symmetry orbit)
        cat.push_back(count_entry(set({A, D}), 3, "2(n-2)", count_linear));
        cat.push_back(count_entry(set({A, C}), 3, "2(n-2)", count_linear));
        cat.push_back(count_entry(set({A, E}), 1, "1 + binomial(n-1,2)", count_quadratic));
        cat.push_back(count_entry(set({B, C}), 1, "1 + binomial(n-1,2)", count_quadratic));
        cat.push_back(count_entry(set({A, F}), 6, "0", constant(0)));
        cat.push_back(count_entry(set({B, D}), 4, "4", constant(4)));
        cat.push_back(count_entry(set({C, E}), 3, "2^(n-2)", count_doubling));

        // counting formulas: triples
        cat.push_back(count_entry(set({A, B, C}), 4, "3", constant(3)));
        cat.push_back(count_entry(set({B, C, D}), 4, "3", constant(3)));
        cat.push_back(count_entry(set({A, B, D}), 5, "2", constant(2)));
        cat.push_back(count_entry(set({A, D, E}), 2, "n - 1", count_n_minus_1));
        cat.push_back(count_entry(set({A, C, E}), 2, "n - 1", count_n_minus_1));
        cat.push_back(count_entry(set({B, C, E}), 2, "n - 1", count_n_minus_1));

        // counting formulas: representatives of the constant families
        cat.push_back(count_entry(set({A, B, C, D}), 5, "1", constant(1)));
        cat.push_back(count_entry(set({A, B, C, E}), 5, "2", constant(2)));
        cat.push_back(count_entry(set({A, B, C, D, E}), 5, "1", constant(1)));

        // cyclic descent polynomials
        cat.push_back(cdes_entry(set({C}), 2, "sum_k binomial(n+k-3, n-k-1) q^k",
                                 cdes_poly_1324));
        cat.push_back(cdes_entry(set({D}), 2, "2q(1+q)^(n-2) - (q + q^2 + ... + q^(n-1))",
                                 cdes_poly_1342));
        cat.push_back(cdes_entry(set({F}), 2,
                                 "q + (2^(n-1) - n) q^2 + sum_{j>=3} binomial(n, 2j-1) q^j",
                                 cdes_poly_1432));
        cat.push_back(cdes_entry(set({A, D}), 3, "(2n-5) q^(n-2) + q^(n-1)", cdes_poly_top_pair));
        cat.push_back(cdes_entry(set({A, C}), 3, "(2n-5) q^(n-2) + q^(n-1)", cdes_poly_top_pair));
        cat.push_back(cdes_entry(set({A, E}), 1, "binomial(n-1,2) q^(n-2) + q^(n-1)",
                                 cdes_poly_binom_top));
        cat.push_back(cdes_entry(set({B, C}), 2, "q + sum_{k=2}^{n-1} (n-k) q^k",
                                 cdes_poly_staircase));
        cat.push_back(cdes_entry(set({B, D}), 4, "q + q^2 + q^(n-2) + q^(n-1)",
                                 cdes_poly_four_terms));
        cat.push_back(cdes_entry(set({C, E}), 3, "q (1+q)^(n-2)", cdes_poly_binomial));
        cat.push_back(cdes_entry(set({A, D, E}), 2, "(n-2) q^(n-2) + q^(n-1)",
                                 cdes_poly_near_top));
        cat.push_back(cdes_entry(set({A, C, E}), 2, "(n-2) q^(n-2) + q^(n-1)",
                                 cdes_poly_near_top));
        cat.push_back(cdes_entry(set({B, C, E}), 2, "q + q^2 + ... + q^(n-1)", geometric_q));

        // joint cyclic descent / cyclic peak polynomial
        {
            PatternSet s = set({A, D});
            std::string id = id_for(FormulaKind::joint_poly, s);
            cat.push_back({std::move(id), std::move(s), 3, FormulaKind::joint_poly,
                           "q^(n-2) t + (2n-6) q^(n-2) t^2 + q^(n-1) t", {}, {}, joint_poly_top});
        }

        // bonded pattern counted by the Catalan numbers
        cat.push_back(count_entry(
            PatternSet({VincularPattern(Permutation({1, 3, 2, 4}), {3}, true)}), 1,
            "catalan(n-1)", [](int n) { return catalan(n - 1); }));

        // linear ingredient: descents over the linear avoiders of {213, 231}
        {
            PatternSet s = PatternSet::linear_classical(
                {Permutation({2, 1, 3}), Permutation({2, 3, 1})});
            std::string id = id_for(FormulaKind::linear_des_poly, s);
            cat.push_back({std::move(id), std::move(s), 1, FormulaKind::linear_des_poly,
                           "(1+q)^(n-1)", {}, lindes_poly, {}});
        }

        return cat;
    }();
    return catalogue;
}

EntryLookup entry_for_set_up_to_symmetry(const PatternSet& set, FormulaKind kind) {
    const auto& cat = formula_catalogue();
    for (const auto& e : cat)
        if (e.kind == kind && e.patterns == set) return {&e, false};
    for (const auto& e : cat) {
        if (e.kind != kind) continue;
        if (reverse_complement(e.patterns) == set) return {&e, false};
        if (reversal(e.patterns) == set) return {&e, true};
        if (complement(e.patterns) == set) return {&e, true};
    }
    return {nullptr, false};
}

namespace {

std::vector<CheckRow> verify_rows(const PatternSet& set, const FormulaEntry& entry, bool flip,
                                  int min_n, int max_n, const ScanConfig& cfg) {
    if (max_n < 1) throw InvalidInput("max_n must be at least 1");
    std::vector<CheckRow> rows;
    const std::string id = id_for(entry.kind, set);
    for (int n = 1; n <= max_n; ++n) {
        CheckRow row{id, n, "-", "", n >= min_n, true};
        switch (entry.kind) {
            case FormulaKind::count: {
                const Int actual = count_avoiders(set, n, cfg);
                row.actual = actual.str();
                if (row.judged) {
                    const Int expected = entry.count_fn(n);
                    row.expected = expected.str();
                    row.pass = expected == actual;
                }
                break;
            }
            case FormulaKind::cdes_poly: {
                const IntPolynomial actual = cdes_genfun(set, n, cfg);
                row.actual = actual.str();
                if (row.judged) {
                    IntPolynomial expected = entry.poly_fn(n);
                    if (flip) expected = reverse_transform(expected, n);
                    row.expected = expected.str();
                    row.pass = expected == actual;
                }
                break;
            }
            case FormulaKind::joint_poly: {
                const BivarPolynomial actual = joint_cdes_cpk_genfun(set, n, cfg);
                row.actual = actual.str();
                if (row.judged) {
                    BivarPolynomial expected = entry.joint_fn(n);
                    if (flip) expected = reverse_q_bivar(expected, n);
                    row.expected = expected.str();
                    row.pass = expected == actual;
                }
                break;
            }
            case FormulaKind::linear_des_poly: {
                const IntPolynomial actual = stat_genfun_linear(set, n, Stat::des, cfg);
                row.actual = actual.str();
                if (row.judged) {
                    IntPolynomial expected = entry.poly_fn(n);
                    if (flip) expected = reverse_transform(expected, n - 1);
                    row.expected = expected.str();
                    row.pass = expected == actual;
                }
                break;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::vector<CheckRow> verify_set(const PatternSet& set, FormulaKind kind, int max_n,
                                 const ScanConfig& cfg) {
    const EntryLookup lookup = entry_for_set_up_to_symmetry(set, kind);
    if (lookup.entry)
        return verify_rows(set, *lookup.entry, lookup.flip, lookup.entry->min_n, max_n, cfg);
    if (kind == FormulaKind::count) {
        for (const auto& family : constant_class_table())
            for (const auto& member : family.sets)
                if (member == set) {
                    const Int value = family.value;
                    FormulaEntry constant_entry{
                        id_for(kind, set),     set, family.min_n, FormulaKind::count,
                        value.str(),           [value](int) { return value; },
                        {},                    {}};
                    return verify_rows(set, constant_entry, false, family.min_n, max_n, cfg);
                }
    }
    throw InvalidInput("no registered formula for " + id_for(kind, set));
}

std::vector<CheckRow> verify_formula(const FormulaEntry& entry, int max_n,
                                     const ScanConfig& cfg) {
    return verify_rows(entry.patterns, entry, false, entry.min_n, max_n, cfg);
}

Suite suite_from_name(const std::string& name) {
    if (name == "singles") return Suite::singles;
    if (name == "doubles") return Suite::doubles;
    if (name == "triples") return Suite::triples;
    if (name == "quads") return Suite::quads;
    if (name == "genfuns") return Suite::genfuns;
    if (name == "es") return Suite::es;
    if (name == "vincular") return Suite::vincular;
    if (name == "all") return Suite::all;
    throw InvalidInput("unknown suite: " + name);
}

std::string suite_name(Suite s) {
    switch (s) {
        case Suite::singles: return "singles";
        case Suite::doubles: return "doubles";
        case Suite::triples: return "triples";
        case Suite::quads: return "quads";
        case Suite::genfuns: return "genfuns";
        case Suite::es: return "es";
        case Suite::vincular: return "vincular";
        case Suite::all: return "all";
    }
    throw InvalidInput("unknown suite");
}

std::vector<CyclicPerm> core_patterns() {
    return {cp({1, 2, 3, 4}), cp({1, 2, 4, 3}), cp({1, 3, 2, 4}),
            cp({1, 3, 4, 2}), cp({1, 4, 2, 3}), cp({1, 4, 3, 2})};
}

std::vector<PatternSet> doubleton_sets() {
    const auto core = core_patterns();
    std::vector<PatternSet> sets;
    for (std::size_t i = 0; i < core.size(); ++i)
        for (std::size_t j = i + 1; j < core.size(); ++j)
            sets.push_back(PatternSet::cyclic_classical({core[i], core[j]}));
    return sets;
}

std::vector<PatternSet> triple_sets() {
    const auto core = core_patterns();
    std::vector<PatternSet> sets;
    for (std::size_t i = 0; i < core.size(); ++i)
        for (std::size_t j = i + 1; j < core.size(); ++j)
            for (std::size_t k = j + 1; k < core.size(); ++k) {
                if (i == 0 && k == 5) continue;  // increasing + decreasing together
                sets.push_back(PatternSet::cyclic_classical({core[i], core[j], core[k]}));
            }
    return sets;
}

const std::vector<ConstantFamily>& constant_class_table() {
    static const std::vector<ConstantFamily> table = [] {
        const CyclicPerm A = cp({1, 2, 3, 4});
        const CyclicPerm B = cp({1, 2, 4, 3});
        const CyclicPerm C = cp({1, 3, 2, 4});
        const CyclicPerm D = cp({1, 3, 4, 2});
        const CyclicPerm E = cp({1, 4, 2, 3});
        const CyclicPerm F = cp({1, 4, 3, 2});
        const auto set = [](std::vector<CyclicPerm> ps) {
            return PatternSet::cyclic_classical(std::move(ps));
        };
        std::vector<ConstantFamily> t;
        t.push_back({1, 5, {set({A, B, C, D}), set({B, D, E, F})}});
        t.push_back({2, 5,
                     {set({A, B, C, E}), set({A, B, D, E}), set({A, C, D, E}),
                      set({B, C, D, E}), set({B, C, D, F}), set({B, C, E, F}),
                      set({C, D, E, F})}});
        t.push_back({1, 5, {set({A, B, C, D, E}), set({B, C, D, E, F})}});
        return t;
    }();
    return table;
}

std::vector<PatternSet> vincular_count_spellings() {
    return {
        PatternSet({VincularPattern(Permutation({1, 3, 2, 4}), {3}, true)}),
        PatternSet({VincularPattern(Permutation({1, 4, 2, 3}), {2}, true)}),
        PatternSet({VincularPattern(Permutation({1, 3, 2, 4}), {1}, true)}),
        PatternSet({VincularPattern(Permutation({2, 3, 1, 4}), {2}, true)}),
    };
}

namespace {

std::vector<CheckRow> es_rows(int max_n, const ScanConfig& cfg) {
    std::vector<CheckRow> rows;
    const int scan_cap = std::min(max_n, std::min(cfg.max_n, kHardMaxN));
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            const std::string id = "es:" + std::to_string(m) + "x" + std::to_string(n);
            const PatternSet set = PatternSet::cyclic_classical(
                {increasing_pattern(m + 2), decreasing_pattern(n + 2)});
            const CyclicPerm witness = es_extremal(m, n);
            const bool av = avoids(witness, set);
            rows.push_back(
                {id + ":witness", m * n + 1, "avoids", av ? "avoids" : "contains", true, av});
            if (m * n + 2 <= scan_cap) {
                const Int count = count_avoiders(set, m * n + 2, cfg);
                rows.push_back({id + ":tight", m * n + 2, "0", count.str(), true, count == 0});
            }
        }
    return rows;
}

}  // namespace

std::vector<CheckRow> run_suite(Suite suite, int max_n, const ScanConfig& cfg) {
    std::vector<CheckRow> rows;
    const auto append = [&rows](std::vector<CheckRow> more) {
        rows.insert(rows.end(), std::make_move_iterator(more.begin()),
                    std::make_move_iterator(more.end()));
    };
    const bool all = suite == Suite::all;
    if (all || suite == Suite::singles)
        for (const auto& p : core_patterns())
            append(verify_set(PatternSet::cyclic_classical({p}), FormulaKind::count, max_n, cfg));
    if (all || suite == Suite::doubles)
        for (const auto& s : doubleton_sets()) append(verify_set(s, FormulaKind::count, max_n, cfg));
    if (all || suite == Suite::triples)
        for (const auto& s : triple_sets()) append(verify_set(s, FormulaKind::count, max_n, cfg));
    if (all || suite == Suite::quads)
        for (const auto& family : constant_class_table())
            for (const auto& s : family.sets) append(verify_set(s, FormulaKind::count, max_n, cfg));
    if (all || suite == Suite::genfuns)
        for (const auto& e : formula_catalogue())
            if (e.kind != FormulaKind::count) append(verify_formula(e, max_n, cfg));
    if (all || suite == Suite::es) append(es_rows(max_n, cfg));
    if (all || suite == Suite::vincular)
        for (const auto& s : vincular_count_spellings())
            append(verify_set(s, FormulaKind::count, max_n, cfg));
    return rows;
}

CyclicPerm increasing_pattern(int len) { return CyclicPerm(Permutation::identity(len)); }

CyclicPerm decreasing_pattern(int len) { return CyclicPerm(Permutation::decreasing(len)); }

CyclicPerm es_extremal(int m, int n) {
    if (m < 1 || n < 1) throw InvalidInput("need m >= 1 and n >= 1");
    std::vector<int> word{1};
    word.reserve(static_cast<std::size_t>(m * n + 1));
    for (int k = 2; k <= m + 1; ++k) {
        const auto block = arithmetic_decreasing({n, m, k});
        word.insert(word.end(), block.begin(), block.end());
    }
    return CyclicPerm::from_canonical_unchecked(std::move(word));
}

bool es_bound_tight(int m, int n, const ScanConfig& cfg) {
    const PatternSet set =
        PatternSet::cyclic_classical({increasing_pattern(m + 2), decreasing_pattern(n + 2)});
    return count_avoiders(set, m * n + 2, cfg) == 0;
}

EgfConjectureId conjecture_from_name(const std::string& name) {
    if (name == "egf-123") return EgfConjectureId::vincular_123;
    if (name == "egf-213") return EgfConjectureId::vincular_213;
    throw InvalidInput("unknown conjecture: " + name);
}

std::string conjecture_name(EgfConjectureId id) {
    return id == EgfConjectureId::vincular_123 ? "egf-123" : "egf-213";
}

std::string convention_name(EgfConvention c) {
    switch (c) {
        case EgfConvention::with_empty: return "with_empty";
        case EgfConvention::no_empty: return "no_empty";
        case EgfConvention::shifted: return "shifted";
    }
    throw InvalidInput("unknown convention");
}

namespace {

RationalSeries series_for(EgfConvention conv, const std::vector<Int>& counts) {
    const int n_counts = static_cast<int>(counts.size());
    if (conv == EgfConvention::shifted) {
        RationalSeries s(n_counts - 1);
        Rat fact = 1;
        for (int k = 0; k <= n_counts - 1; ++k) {
            if (k > 0) fact *= k;
            s.set_coeff(k, Rat(counts[static_cast<std::size_t>(k)]) / fact);
        }
        return s;
    }
    RationalSeries s(n_counts);
    if (conv == EgfConvention::with_empty) s.set_coeff(0, 1);
    Rat fact = 1;
    for (int k = 1; k <= n_counts; ++k) {
        fact *= k;
        s.set_coeff(k, Rat(counts[static_cast<std::size_t>(k - 1)]) / fact);
    }
    return s;
}

}  // namespace

EgfReport conjecture_check(EgfConjectureId id, int order, const ScanConfig& cfg) {
    if (order < 1) throw InvalidInput("order must be at least 1");
    const Permutation base =
        id == EgfConjectureId::vincular_123 ? Permutation({1, 2, 3}) : Permutation({2, 1, 3});
    const PatternSet set({VincularPattern(base, {1, 2}, true)});

    EgfReport report;
    report.id = id;
    report.order = order;
    for (int n = 1; n <= order; ++n) report.counts.push_back(count_avoiders(set, n, cfg));

    // Independent probe of the series exponential: (exp F)' must equal
    // F' exp(F) when computed through the recurrence.
    const RationalSeries probe = series_for(EgfConvention::no_empty, report.counts);
    const RationalSeries probe_exp = series_exp(probe);
    report.exp_self_check = probe_exp.derivative() == probe.derivative() * probe_exp;

    for (const EgfConvention conv :
         {EgfConvention::with_empty, EgfConvention::no_empty, EgfConvention::shifted}) {
        EgfConventionResult res;
        res.convention = conv;
        if (conv == EgfConvention::shifted && order < 2) {
            res.well_formed = false;
            res.violation_reason = "needs at least two scanned counts";
            report.conventions.push_back(std::move(res));
            continue;
        }
        const RationalSeries e = series_for(conv, report.counts);
        try {
            const RationalSeries residual = id == EgfConjectureId::vincular_123
                                                ? ode_residual_quadratic(e)
                                                : ode_residual_exponential(e);
            res.residual = residual.coeffs();
            res.vanishes = residual.is_zero();
        } catch (const ConventionViolation& ex) {
            res.well_formed = false;
            res.violation_reason = ex.what();
        }
        report.conventions.push_back(std::move(res));
    }
    return report;
}

}  // namespace cycperm
