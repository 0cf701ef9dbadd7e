#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cycperm/enumerate.hpp"
#include "cycperm/numbers.hpp"
#include "cycperm/pattern.hpp"
#include "cycperm/perm.hpp"
#include "cycperm/poly.hpp"
#include "cycperm/series.hpp"

namespace cycperm {

enum class FormulaKind { count, cdes_poly, joint_poly, linear_des_poly };

// One certified closed form: for every n >= min_n the formula value has
// to match the exhaustive scan.  Exactly one of the three callbacks is
// set, matching `kind`.
struct FormulaEntry {
    std::string id;  // "count:[1234]", "cdes:[1234][1342]", ...
    PatternSet patterns;
    int min_n = 1;
    FormulaKind kind = FormulaKind::count;
    std::string formula_text;
    std::function<Int(int)> count_fn;
    std::function<IntPolynomial(int)> poly_fn;
    std::function<BivarPolynomial(int)> joint_fn;
};

const std::vector<FormulaEntry>& formula_catalogue();

// Catalogue lookup through the reversal/complement symmetries.  `flip`
// marks a match through reversal or complement alone: counts transport
// unchanged, but descent polynomials transport through the coefficient
// reversal q^k -> q^(n-k) (cyclic descents of the image are n minus the
// original's; linear descents reverse within degree n-1).
struct EntryLookup {
    const FormulaEntry* entry = nullptr;
    bool flip = false;
};

EntryLookup entry_for_set_up_to_symmetry(const PatternSet& set, FormulaKind kind);

struct CheckRow {
    std::string id;
    int n = 0;
    std::string expected;  // "-" when the row is below the formula floor
    std::string actual;
    bool judged = true;    // n >= min_n
    bool pass = true;      // unjudged rows pass vacuously
};

// Scan n = 1..max_n and compare against the entry covering `set`
// (catalogue first, then the constant-class table); throws InvalidInput
// when nothing covers it.
std::vector<CheckRow> verify_set(const PatternSet& set, FormulaKind kind, int max_n,
                                 const ScanConfig& cfg = {});
std::vector<CheckRow> verify_formula(const FormulaEntry& entry, int max_n,
                                     const ScanConfig& cfg = {});

enum class Suite { singles, doubles, triples, quads, genfuns, es, vincular, all };
Suite suite_from_name(const std::string& name);
std::string suite_name(Suite s);

std::vector<CheckRow> run_suite(Suite suite, int max_n, const ScanConfig& cfg = {});

// The six cyclic classes of the length-4 patterns, and the pattern sets
// with certified counting formulas built from them.
std::vector<CyclicPerm> core_patterns();
std::vector<PatternSet> doubleton_sets();  // all 15 pairs
std::vector<PatternSet> triple_sets();     // the 16 triples that exclude
                                           // {increasing, decreasing} together

// Families of 4- and 5-pattern sets whose avoider count is the same
// constant for every n >= min_n.
struct ConstantFamily {
    Int value;
    int min_n = 5;
    std::vector<PatternSet> sets;
};

const std::vector<ConstantFamily>& constant_class_table();

// The four spellings of the bonded count pattern whose avoiders are
// counted by the Catalan numbers; they form one reversal/complement
// orbit.
std::vector<PatternSet> vincular_count_spellings();

// ---- extremal construction ----

CyclicPerm increasing_pattern(int len);  // [1 2 ... len]
CyclicPerm decreasing_pattern(int len);  // [1 len len-1 ... 2]

// A class of size mn+1 avoiding both the increasing pattern of length
// m+2 and the decreasing pattern of length n+2: the value 1 followed by
// the blocks (k + (n-1)m, ..., k+m, k) for k = 2, ..., m+1.
CyclicPerm es_extremal(int m, int n);

// The defining bound is tight: no class of size mn+2 avoids both
// patterns.  Checked by exhaustive scan (subject to the scan cap).
bool es_bound_tight(int m, int n, const ScanConfig& cfg = {});

// ---- formal series conjectures ----

enum class EgfConjectureId { vincular_123, vincular_213 };
EgfConjectureId conjecture_from_name(const std::string& name);  // "egf-123", "egf-213"
std::string conjecture_name(EgfConjectureId id);

// How the scanned counts a_1, a_2, ... are packed into an exponential
// series: with a constant term 1, without one, or index-shifted
// (coefficient of x^n/n! is a_{n+1}).
enum class EgfConvention { with_empty, no_empty, shifted };
std::string convention_name(EgfConvention c);

struct EgfConventionResult {
    EgfConvention convention = EgfConvention::with_empty;
    bool well_formed = true;       // false when the equation cannot be posed
    std::string violation_reason;  // set when !well_formed
    std::vector<Rat> residual;     // left side minus right side, by power
    bool vanishes = false;
};

struct EgfReport {
    EgfConjectureId id = EgfConjectureId::vincular_123;
    int order = 0;            // counts a_1..a_order enter the series
    std::vector<Int> counts;  // counts[i] = a_{i+1}
    bool exp_self_check = true;  // (exp F)' == F' exp(F) on a probe series
    std::vector<EgfConventionResult> conventions;
};

// Scan the avoider counts of the conjecture's pattern and test its
// differential equation under all three conventions.
EgfReport conjecture_check(EgfConjectureId id, int order, const ScanConfig& cfg = {});

}  // namespace cycperm
