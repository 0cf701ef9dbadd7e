#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycperm/errors.hpp"
#include "cycperm/formulas.hpp"
#include "cycperm/pattern_io.hpp"
#include "cycperm/stats.hpp"

using namespace cycperm;

namespace {
CyclicPerm cp(std::vector<int> v) { return CyclicPerm(Permutation(std::move(v))); }
PatternSet cyc(std::vector<std::vector<int>> words) {
    std::vector<CyclicPerm> ps;
    for (auto& w : words) ps.push_back(cp(std::move(w)));
    return PatternSet::cyclic_classical(ps);
}
bool rows_pass(const std::vector<CheckRow>& rows) {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return true;
}
}  // namespace

TEST_CASE("catalogue shape") {
    const auto& cat = formula_catalogue();
    CHECK(cat.size() == 37);
    std::set<std::string> ids;
    for (const auto& e : cat) {
        CHECK(ids.insert(e.id).second);
        // the entry is found again by exact lookup
        const EntryLookup lookup = entry_for_set_up_to_symmetry(e.patterns, e.kind);
        CHECK(lookup.entry == &e);
        CHECK_FALSE(lookup.flip);
        CHECK_FALSE(e.formula_text.empty());
    }
    CHECK(core_patterns().size() == 6);
    CHECK(doubleton_sets().size() == 15);
    CHECK(triple_sets().size() == 16);
    std::size_t constant_sets = 0;
    for (const auto& fam : constant_class_table()) constant_sets += fam.sets.size();
    CHECK(constant_sets == 11);
}

TEST_CASE("every doubleton and triple is covered through the symmetries") {
    for (const auto& s : doubleton_sets())
        CHECK(entry_for_set_up_to_symmetry(s, FormulaKind::count).entry != nullptr);
    for (const auto& s : triple_sets())
        CHECK(entry_for_set_up_to_symmetry(s, FormulaKind::count).entry != nullptr);
    CHECK(entry_for_set_up_to_symmetry(cyc({{1, 2, 3, 4}, {1, 2, 4, 3}, {1, 4, 3, 2}}),
                                       FormulaKind::count)
              .entry == nullptr);
}

TEST_CASE("count verification through transported entries") {
    // {[1243],[1432]} is the reversal image of the registered {[1234],[1342]}
    const auto rows = verify_set(cyc({{1, 2, 4, 3}, {1, 4, 3, 2}}), FormulaKind::count, 7);
    CHECK(rows.size() == 7);
    CHECK(rows_pass(rows));
    CHECK(rows[0].id == "count:[1243][1432]");
    CHECK(rows[6].expected == "10");  // 2(n-2) at n = 7

    // below the floor rows are reported but not judged
    const auto zero_rows = verify_set(cyc({{1, 2, 3, 4}, {1, 4, 3, 2}}), FormulaKind::count, 7);
    CHECK(zero_rows[4].expected == "-");
    CHECK(zero_rows[4].actual == "2");
    CHECK(zero_rows[4].pass);
    CHECK(zero_rows[5].expected == "0");
    CHECK(zero_rows[6].expected == "0");
    CHECK(rows_pass(zero_rows));
}

TEST_CASE("constant-class fallback covers family members outside the catalogue") {
    const auto rows = verify_set(cyc({{1, 2, 4, 3}, {1, 3, 2, 4}, {1, 3, 4, 2}, {1, 4, 2, 3}}),
                                 FormulaKind::count, 7);
    CHECK(rows_pass(rows));
    CHECK(rows[6].expected == "2");
    CHECK_THROWS_AS(verify_set(cyc({{1, 2, 3, 4}, {1, 2, 4, 3}, {1, 4, 3, 2}}),
                               FormulaKind::count, 6),
                    InvalidInput);
}

TEST_CASE("descent polynomial formulas at frozen small sizes") {
    const auto& cat = formula_catalogue();
    const auto entry = [&](const std::string& id) -> const FormulaEntry& {
        for (const auto& e : cat)
            if (e.id == id) return e;
        throw std::runtime_error("missing " + id);
    };
    CHECK(entry("cdes:[1324]").poly_fn(5) == IntPolynomial({0, 1, 6, 5, 1}));
    CHECK(entry("cdes:[1342]").poly_fn(5) == IntPolynomial({0, 1, 5, 5, 1}));
    CHECK(entry("cdes:[1432]").poly_fn(5) == IntPolynomial({0, 1, 11, 1}));
    CHECK(entry("cdes:[1234][1342]").poly_fn(5) == IntPolynomial({0, 0, 0, 5, 1}));
    CHECK(entry("cdes:[1234][1423]").poly_fn(5) == IntPolynomial({0, 0, 0, 6, 1}));
    CHECK(entry("cdes:[1234][1423]").poly_fn(1) == IntPolynomial::one());
    CHECK(entry("cdes:[1243][1324]").poly_fn(5) == IntPolynomial({0, 1, 3, 2, 1}));
    CHECK(entry("cdes:[1243][1342]").poly_fn(4) == IntPolynomial({0, 1, 2, 1}));
    CHECK(entry("cdes:[1324][1423]").poly_fn(5) == IntPolynomial({0, 1, 3, 3, 1}));
    CHECK(entry("cdes:[1234][1342][1423]").poly_fn(5) == IntPolynomial({0, 0, 0, 3, 1}));
    CHECK(entry("cdes:[1243][1324][1423]").poly_fn(5) == IntPolynomial({0, 1, 1, 1, 1}));

    BivarPolynomial joint5;
    joint5.add_term(3, 1, 1);
    joint5.add_term(3, 2, 4);
    joint5.add_term(4, 1, 1);
    CHECK(entry("joint:[1234][1342]").joint_fn(5) == joint5);

    CHECK(entry("lindes:213-231").poly_fn(4) == IntPolynomial({1, 3, 3, 1}));
}

TEST_CASE("descent polynomials transport through reversal with reversed coefficients") {
    // {[1243],[1423]} = c({[1243],[1324]}), whose registered polynomial is
    // q + sum (n-k) q^k; the image polynomial has reversed coefficients
    const PatternSet image = cyc({{1, 2, 4, 3}, {1, 4, 2, 3}});
    const EntryLookup lookup = entry_for_set_up_to_symmetry(image, FormulaKind::cdes_poly);
    REQUIRE(lookup.entry != nullptr);
    CHECK(lookup.flip);
    CHECK(cdes_genfun(image, 5) == IntPolynomial({0, 1, 2, 3, 1}));
    CHECK(rows_pass(verify_set(image, FormulaKind::cdes_poly, 7)));

    // joint statistic through reversal: {[1243],[1432]} from {[1234],[1342]}
    CHECK(rows_pass(verify_set(cyc({{1, 2, 4, 3}, {1, 4, 3, 2}}), FormulaKind::joint_poly, 6)));
}

TEST_CASE("suites") {
    CHECK(suite_from_name("genfuns") == Suite::genfuns);
    CHECK(suite_name(Suite::quads) == "quads");
    CHECK_THROWS_AS(suite_from_name("nonsense"), InvalidInput);

    CHECK(rows_pass(run_suite(Suite::singles, 6)));
    CHECK(rows_pass(run_suite(Suite::quads, 6)));
    CHECK(rows_pass(run_suite(Suite::vincular, 6)));

    const auto es = run_suite(Suite::es, 8);
    std::size_t witness = 0, tight = 0;
    for (const auto& r : es) {
        if (r.id.find(":witness") != std::string::npos) ++witness;
        if (r.id.find(":tight") != std::string::npos) ++tight;
    }
    CHECK(witness == 16);
    CHECK(tight == 10);
    CHECK(rows_pass(es));
}

TEST_CASE("extremal construction") {
    CHECK(es_extremal(1, 1) == cp({1, 2}));
    CHECK(es_extremal(2, 2) == cp({1, 4, 2, 5, 3}));
    CHECK(es_extremal(5, 3).canon().values() ==
          std::vector<int>{1, 12, 7, 2, 13, 8, 3, 14, 9, 4, 15, 10, 5, 16, 11, 6});
    CHECK_THROWS_AS(es_extremal(0, 1), InvalidInput);

    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            const PatternSet set = PatternSet::cyclic_classical(
                {increasing_pattern(m + 2), decreasing_pattern(n + 2)});
            CHECK(es_extremal(m, n).size() == m * n + 1);
            CHECK(avoids(es_extremal(m, n), set));
        }

    CHECK(es_bound_tight(1, 2));
    CHECK(es_bound_tight(2, 2));
}

TEST_CASE("bonded pattern spellings all count the same") {
    const auto spellings = vincular_count_spellings();
    REQUIRE(spellings.size() == 4);
    for (const auto& s : spellings) {
        for (int n = 2; n <= 6; ++n) CHECK(count_avoiders(s, n) == catalan(n - 1));
        CHECK(rows_pass(verify_set(s, FormulaKind::count, 6)));
    }
    CHECK(print_pattern_set(spellings[0]) == "[13(24)]");
    CHECK(print_pattern_set(spellings[1]) == "[1(42)3]");
    CHECK(print_pattern_set(spellings[2]) == "[(13)24]");
    CHECK(print_pattern_set(spellings[3]) == "[2(31)4]");
}

TEST_CASE("series conjecture checker") {
    CHECK(conjecture_from_name("egf-123") == EgfConjectureId::vincular_123);
    CHECK(conjecture_name(EgfConjectureId::vincular_213) == "egf-213");
    CHECK_THROWS_AS(conjecture_from_name("egf-999"), InvalidInput);
    CHECK_THROWS_AS(conjecture_check(EgfConjectureId::vincular_123, 0), InvalidInput);

    const EgfReport r123 = conjecture_check(EgfConjectureId::vincular_123, 4);
    CHECK(r123.counts == std::vector<Int>{1, 1, 1, 3});
    CHECK(r123.exp_self_check);
    REQUIRE(r123.conventions.size() == 3);

    const auto& with_empty = r123.conventions[0];
    CHECK(with_empty.well_formed);
    CHECK_FALSE(with_empty.vanishes);
    CHECK(with_empty.residual[0] == 0);
    CHECK(with_empty.residual[1] == 0);
    CHECK(with_empty.residual[2] == -1);

    const auto& no_empty = r123.conventions[1];
    CHECK(no_empty.well_formed);
    CHECK_FALSE(no_empty.vanishes);
    CHECK(no_empty.residual[0] == 0);
    CHECK(no_empty.residual[1] == 2);

    const auto& shifted = r123.conventions[2];
    CHECK(shifted.well_formed);
    CHECK(shifted.vanishes);
    CHECK(shifted.residual.size() == 3);

    const EgfReport r213 = conjecture_check(EgfConjectureId::vincular_213, 5);
    CHECK(r213.counts[0] == 1);
    CHECK(r213.counts[1] == 1);
    CHECK(r213.counts[2] == 1);
    CHECK(r213.exp_self_check);
    CHECK_FALSE(r213.conventions[0].well_formed);
    CHECK_FALSE(r213.conventions[0].violation_reason.empty());
    CHECK(r213.conventions[1].well_formed);
    CHECK(r213.conventions[1].residual[0] == 0);
    CHECK_FALSE(r213.conventions[2].well_formed);

    const EgfReport tiny = conjecture_check(EgfConjectureId::vincular_123, 1);
    CHECK(tiny.conventions[0].residual.size() == 1);
    CHECK_FALSE(tiny.conventions[2].well_formed);
}
