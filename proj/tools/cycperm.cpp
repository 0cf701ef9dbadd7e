// Command-line front end: enumeration, generating functions, formula
// verification suites, Wilf classification, generating trees, the
// extremal construction, and the formal-series conjecture checker.
//
// Exit codes: 0 success / all checks pass, 1 verification mismatch,
// 2 usage or resource errors.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cycperm/enumerate.hpp"
#include "cycperm/errors.hpp"
#include "cycperm/formulas.hpp"
#include "cycperm/pattern_io.hpp"
#include "cycperm/stats.hpp"

using nlohmann::ordered_json;
using namespace cycperm;

namespace {

struct RunConfig {
    std::string format = "text";
    std::string out_path;
    int threads = 1;
    int cap = kHardMaxN;  // from CYCPERM_MAX_N

    ScanConfig scan() const { return {cap, threads}; }
};

int resolve_cap() {
    const char* env = std::getenv("CYCPERM_MAX_N");
    if (env == nullptr || *env == '\0') return kHardMaxN;
    const std::string s(env);
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = std::string::npos;
    }
    if (used != s.size() || value < 1 || value > kHardMaxN)
        throw InvalidInput("CYCPERM_MAX_N must be an integer in [1, " +
                           std::to_string(kHardMaxN) + "], got \"" + s + "\"");
    return value;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void deliver(const RunConfig& rc, const ordered_json& payload, const std::string& text,
             const std::string& csv) {
    std::string body;
    if (rc.format == "json")
        body = payload.dump(2) + "\n";
    else if (rc.format == "csv")
        body = csv;
    else
        body = text;
    if (rc.out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(rc.out_path);
    if (!f) throw InvalidInput("cannot open output path: " + rc.out_path);
    f << body;
}

ordered_json check_rows_json(const std::vector<CheckRow>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json o;
        o["entry_id"] = r.id;
        o["n"] = r.n;
        o["expected"] = r.expected;
        o["actual"] = r.actual;
        o["pass"] = r.pass;
        arr.push_back(std::move(o));
    }
    return arr;
}

std::string check_rows_csv(std::vector<CheckRow> rows) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const CheckRow& a, const CheckRow& b) { return a.n < b.n; });
    std::string csv = "entry_id,n,expected,actual,pass\n";
    for (const auto& r : rows)
        csv += csv_field(r.id) + "," + std::to_string(r.n) + "," + csv_field(r.expected) + "," +
               csv_field(r.actual) + "," + (r.pass ? "true" : "false") + "\n";
    return csv;
}

std::string check_rows_text(const std::vector<CheckRow>& rows, const std::string& heading) {
    std::ostringstream out;
    out << heading << "\n";
    std::size_t failed = 0;
    for (const auto& r : rows) {
        out << "  " << r.id << "  n=" << r.n << "  expected=" << r.expected
            << "  actual=" << r.actual << "  " << (r.pass ? "pass" : "FAIL") << "\n";
        if (!r.pass) ++failed;
    }
    out << rows.size() << " checks, " << failed << " failed\n";
    return out.str();
}

bool all_pass(const std::vector<CheckRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

std::vector<std::string> poly_coeff_strings(const IntPolynomial& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(c.str());
    if (out.empty()) out.push_back("0");
    return out;
}

// ---- count ----

int cmd_count(const RunConfig& rc, const std::string& patterns, int min_n, int max_n) {
    const PatternSet set = parse_pattern_set(patterns);
    if (min_n < 1 || min_n > max_n) throw InvalidInput("need 1 <= min-n <= max-n");
    const CountingTable table = count_class(set, min_n, max_n, rc.scan());

    ordered_json payload;
    payload["command"] = "count";
    payload["inputs"] = {{"patterns", print_pattern_set(set)},
                         {"min_n", min_n},
                         {"max_n", max_n},
                         {"threads", rc.threads}};
    ordered_json rows = ordered_json::array();
    std::string csv = "n,count\n";
    std::ostringstream text;
    text << "avoiders of " << print_pattern_set(set) << "\n";
    for (std::size_t i = 0; i < table.counts.size(); ++i) {
        const int n = table.min_n + static_cast<int>(i);
        const std::string c = table.counts[i].str();
        rows.push_back(ordered_json{{"n", n}, {"count", c}});
        csv += std::to_string(n) + "," + c + "\n";
        text << "  n=" << n << "  " << c << "\n";
    }
    payload["rows"] = std::move(rows);
    payload["pass"] = true;
    deliver(rc, payload, text.str(), csv);
    return 0;
}

// ---- genfun ----

int cmd_genfun(const RunConfig& rc, const std::string& patterns, const std::string& stat_name,
               int n) {
    const PatternSet set = parse_pattern_set(patterns);
    ordered_json payload;
    payload["command"] = "genfun";
    payload["inputs"] = {{"patterns", print_pattern_set(set)},
                         {"stat", stat_name},
                         {"n", n},
                         {"threads", rc.threads}};

    ordered_json coeffs;
    std::string csv;
    std::ostringstream text;
    if (stat_name == "joint") {
        const BivarPolynomial p = joint_cdes_cpk_genfun(set, n, rc.scan());
        coeffs = ordered_json::array();
        csv = "q_exp,t_exp,coefficient\n";
        for (const auto& [exps, c] : p.terms()) {
            coeffs.push_back(ordered_json::array({exps.first, exps.second, c.str()}));
            csv += std::to_string(exps.first) + "," + std::to_string(exps.second) + "," +
                   c.str() + "\n";
        }
        text << "joint cdes/cpk over avoiders of " << print_pattern_set(set) << " at n=" << n
             << "\n  " << p.str() << "\n";
    } else {
        IntPolynomial p;
        if (stat_name == "cdes") {
            p = cdes_genfun(set, n, rc.scan());
            text << "cdes over avoiders of ";
        } else {
            const Stat stat = stat_from_name(stat_name);
            p = stat_genfun_linear(set, n, stat, rc.scan());
            text << stat_name << " over linear avoiders of ";
        }
        coeffs = poly_coeff_strings(p);
        csv = "exponent,coefficient\n";
        const auto strs = poly_coeff_strings(p);
        for (std::size_t k = 0; k < strs.size(); ++k)
            csv += std::to_string(k) + "," + strs[k] + "\n";
        text << print_pattern_set(set) << " at n=" << n << "\n  " << p.str() << "\n";
    }
    payload["coeffs"] = std::move(coeffs);
    payload["pass"] = true;
    deliver(rc, payload, text.str(), csv);
    return 0;
}

// ---- verify ----

int cmd_verify(const RunConfig& rc, const std::string& suite_str, int max_n) {
    const Suite suite = suite_from_name(suite_str);
    const std::vector<CheckRow> rows = run_suite(suite, max_n, rc.scan());
    const bool ok = all_pass(rows);

    ordered_json payload;
    payload["command"] = "verify";
    payload["inputs"] = {{"suite", suite_str}, {"max_n", max_n}, {"threads", rc.threads}};
    payload["rows"] = check_rows_json(rows);
    payload["pass"] = ok;
    deliver(rc, payload, check_rows_text(rows, "suite " + suite_str + " up to n=" +
                                                   std::to_string(max_n)),
            check_rows_csv(rows));
    return ok ? 0 : 1;
}

// ---- wilf ----

void subsets_of_size(int total, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> pick;
    const auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == k) {
            out.push_back(pick);
            return;
        }
        for (int i = start; i < total; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
}

int cmd_wilf(const RunConfig& rc, int length, int set_size, int max_n) {
    if (length != 4) throw InvalidInput("only length-4 patterns are classified");
    if (set_size < 1 || set_size > 5) throw InvalidInput("set-size must be in [1, 5]");
    const auto core = core_patterns();
    std::vector<std::vector<int>> picks;
    subsets_of_size(static_cast<int>(core.size()), set_size, picks);
    std::vector<PatternSet> sets;
    sets.reserve(picks.size());
    for (const auto& pick : picks) {
        std::vector<CyclicPerm> ps;
        for (int i : pick) ps.push_back(core[static_cast<std::size_t>(i)]);
        sets.push_back(PatternSet::cyclic_classical(std::move(ps)));
    }
    const std::vector<WilfGroup> groups = wilf_classify(sets, max_n, rc.scan());

    ordered_json payload;
    payload["command"] = "wilf";
    payload["inputs"] = {{"length", length},
                         {"set_size", set_size},
                         {"max_n", max_n},
                         {"threads", rc.threads}};
    ordered_json classes = ordered_json::array();
    std::string csv = "class,nontrivial,members,counts\n";
    std::ostringstream text;
    text << groups.size() << " Wilf classes of the " << sets.size() << " sets of " << set_size
         << " pattern" << (set_size == 1 ? "" : "s") << ", counts for n=1.."
         << max_n << "\n";
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const WilfGroup& grp = groups[g];
        ordered_json members = ordered_json::array();
        ordered_json counts = ordered_json::array();
        std::string members_str, counts_str;
        for (const auto& m : grp.members) {
            if (!members_str.empty()) members_str += " ";
            members_str += "{" + print_pattern_set(m) + "}";
            members.push_back(print_pattern_set(m));
        }
        for (const auto& c : grp.counts) {
            if (!counts_str.empty()) counts_str += " ";
            counts_str += c.str();
            counts.push_back(c.str());
        }
        classes.push_back(ordered_json{{"members", std::move(members)},
                                       {"counts", std::move(counts)},
                                       {"nontrivial", grp.nontrivial()}});
        csv += std::to_string(g + 1) + "," + (grp.nontrivial() ? "true" : "false") + "," +
               csv_field(members_str) + "," + csv_field(counts_str) + "\n";
        text << "class " << g + 1 << (grp.nontrivial() ? " (nontrivial)" : " (trivial)") << ": "
             << members_str << "\n  counts: " << counts_str << "\n";
    }
    payload["classes"] = std::move(classes);
    payload["pass"] = true;
    deliver(rc, payload, text.str(), csv);
    return 0;
}

// ---- tree ----

int cmd_tree(const RunConfig& rc, const std::string& patterns, int levels, bool check_rules) {
    const PatternSet set = parse_pattern_set(patterns);
    check_scan_size(levels, rc.scan());
    const ProductionRuleSet* rules = nullptr;
    if (check_rules) {
        rules = registered_rules(set);
        if (rules == nullptr)
            throw InvalidInput("no production rules registered for " + print_pattern_set(set));
    }
    const std::vector<TreeLevel> tree = build_tree_levels(set, levels, rc.scan());
    RuleCheckResult rule_result;
    if (rules != nullptr) rule_result = verify_production_rules(set, *rules, levels, rc.scan());

    ordered_json payload;
    payload["command"] = "tree";
    payload["inputs"] = {{"patterns", print_pattern_set(set)},
                         {"levels", levels},
                         {"rules", check_rules},
                         {"threads", rc.threads}};
    ordered_json rows = ordered_json::array();
    std::string csv = "level,total,degrees\n";
    std::ostringstream text;
    text << "generating tree for " << print_pattern_set(set) << "\n";
    for (const TreeLevel& lvl : tree) {
        ordered_json degrees;
        std::string degrees_str;
        for (const auto& [deg, cnt] : lvl.degree_counts) {
            degrees[std::to_string(deg)] = cnt.str();
            if (!degrees_str.empty()) degrees_str += " ";
            degrees_str += std::to_string(deg) + ":" + cnt.str();
        }
        rows.push_back(ordered_json{
            {"level", lvl.level}, {"total", lvl.total().str()}, {"degrees", std::move(degrees)}});
        csv += std::to_string(lvl.level) + "," + lvl.total().str() + "," +
               csv_field(degrees_str) + "\n";
        text << "  level " << lvl.level << ": total " << lvl.total().str() << ", degrees "
             << degrees_str << "\n";
    }
    bool ok = true;
    if (rules != nullptr) {
        ok = rule_result.ok;
        text << "rules " << rules->name << ": "
             << (ok ? "pass" : "FAIL " + rule_result.message) << "\n";
        if (!ok) std::cerr << "rule mismatch: " << rule_result.message << "\n";
    }
    payload["rows"] = std::move(rows);
    payload["pass"] = ok;
    deliver(rc, payload, text.str(), csv);
    return ok ? 0 : 1;
}

// ---- es ----

int cmd_es(const RunConfig& rc, int m, int n) {
    const CyclicPerm extremal = es_extremal(m, n);
    const PatternSet set = PatternSet::cyclic_classical(
        {increasing_pattern(m + 2), decreasing_pattern(n + 2)});
    const std::string id = "es:" + std::to_string(m) + "x" + std::to_string(n);
    const int cap = std::min(rc.cap, kHardMaxN);

    std::vector<CheckRow> rows;
    rows.push_back({id + ":extremal", m * n + 1, "-", extremal.str(), false, true});
    const bool avoided = avoids(extremal, set);
    rows.push_back({id + ":witness", m * n + 1, "avoids", avoided ? "avoids" : "contains", true,
                    avoided});
    std::string notice;
    if (m * n + 2 <= cap) {
        const Int count = count_avoiders(set, m * n + 2, rc.scan());
        rows.push_back({id + ":tight", m * n + 2, "0", count.str(), true, count == 0});
    } else {
        notice = "containment scan at n=" + std::to_string(m * n + 2) +
                 " skipped: exceeds cap " + std::to_string(cap);
        rows.push_back({id + ":tight", m * n + 2, "-", "skipped", false, true});
    }
    const bool ok = all_pass(rows);

    ordered_json payload;
    payload["command"] = "es";
    payload["inputs"] = {{"m", m}, {"n", n}, {"cap", cap}, {"threads", rc.threads}};
    payload["rows"] = check_rows_json(rows);
    payload["pass"] = ok;
    std::string text = check_rows_text(
        rows, "extremal class avoiding " + print_pattern_set(set) + ": " + extremal.str());
    if (!notice.empty()) text += notice + "\n";
    deliver(rc, payload, text, check_rows_csv(rows));
    return ok ? 0 : 1;
}

// ---- conjecture ----

int cmd_conjecture(const RunConfig& rc, const std::string& id_str, int order) {
    const EgfConjectureId id = conjecture_from_name(id_str);
    const EgfReport report = conjecture_check(id, order, rc.scan());

    ordered_json payload;
    payload["command"] = "conjecture";
    payload["inputs"] = {{"id", id_str}, {"order", order}, {"threads", rc.threads}};
    ordered_json rows = ordered_json::array();
    std::string csv = "record,well_formed,vanishes,data\n";
    std::ostringstream text;

    ordered_json counts = ordered_json::array();
    std::string counts_str;
    for (const auto& c : report.counts) {
        counts.push_back(c.str());
        if (!counts_str.empty()) counts_str += " ";
        counts_str += c.str();
    }
    rows.push_back(ordered_json{{"kind", "counts"}, {"values", std::move(counts)}});
    rows.push_back(ordered_json{{"kind", "self_check"}, {"ok", report.exp_self_check}});
    csv += "counts,,," + csv_field(counts_str) + "\n";
    csv += std::string("self_check,") + (report.exp_self_check ? "true" : "false") + ",,\n";
    text << "avoider counts a_1..a_" << order << ": " << counts_str << "\n";
    text << "series exponential self-check: " << (report.exp_self_check ? "pass" : "FAIL")
         << "\n";

    for (const auto& res : report.conventions) {
        const std::string name = convention_name(res.convention);
        ordered_json row;
        row["kind"] = "convention";
        row["convention"] = name;
        row["well_formed"] = res.well_formed;
        row["violation_reason"] = res.violation_reason;
        ordered_json residual = ordered_json::array();
        std::string residual_str;
        for (const auto& r : res.residual) {
            residual.push_back(r.str());
            if (!residual_str.empty()) residual_str += " ";
            residual_str += r.str();
        }
        row["residual"] = std::move(residual);
        row["vanishes"] = res.vanishes;
        rows.push_back(std::move(row));
        csv += name + "," + (res.well_formed ? "true" : "false") + "," +
               (res.vanishes ? "true" : "false") + "," +
               csv_field(res.well_formed ? residual_str : res.violation_reason) + "\n";
        text << "convention " << name << ": ";
        if (!res.well_formed)
            text << "not well-formed: " << res.violation_reason << "\n";
        else
            text << "residual [" << residual_str << "] "
                 << (res.vanishes ? "(vanishes)" : "(nonzero)") << "\n";
    }
    payload["rows"] = std::move(rows);
    payload["pass"] = report.exp_self_check;
    deliver(rc, payload, text.str(), csv);
    return 0;  // conjectures are reported, not asserted
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig rc;
    try {
        rc.cap = resolve_cap();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"cyclic permutation pattern avoidance toolkit"};
    app.require_subcommand(1);
    app.add_option("--format", rc.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--out", rc.out_path, "write output to this path instead of stdout");
    app.add_option("--threads", rc.threads, "worker threads for scans")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();

    std::string patterns, stat_name = "cdes", suite = "all", conj_id;
    int min_n = 1, max_n = 9, gf_n = 0, length = 4, set_size = 1, levels = 9;
    int es_m = 1, es_n = 1, order = 8;
    bool check_rules = false;

    CLI::App* count = app.add_subcommand("count", "count avoiders for a range of sizes");
    count->fallthrough();
    count->add_option("--patterns", patterns, "pattern set")->required();
    count->add_option("--min-n", min_n, "first size")->capture_default_str();
    count->add_option("--max-n", max_n, "last size")->capture_default_str();

    CLI::App* genfun = app.add_subcommand("genfun", "statistic generating function at one size");
    genfun->fallthrough();
    genfun->add_option("--patterns", patterns, "pattern set")->required();
    genfun->add_option("--stat", stat_name, "statistic")
        ->check(CLI::IsMember({"cdes", "joint", "des", "maj", "inv", "exc", "pk"}))
        ->capture_default_str();
    genfun->add_option("--n", gf_n, "size")->required();

    CLI::App* verify = app.add_subcommand("verify", "check registered formulas against scans");
    verify->fallthrough();
    verify->add_option("--suite", suite, "singles|doubles|triples|quads|genfuns|es|vincular|all")
        ->capture_default_str();
    verify->add_option("--max-n", max_n, "scan sizes 1..max-n")->capture_default_str();

    CLI::App* wilf = app.add_subcommand("wilf", "group pattern sets by avoider counts");
    wilf->fallthrough();
    wilf->add_option("--length", length, "pattern length (4)")->capture_default_str();
    wilf->add_option("--set-size", set_size, "patterns per set")->required();
    wilf->add_option("--max-n", max_n, "counts compared for n=1..max-n")->capture_default_str();

    CLI::App* tree = app.add_subcommand("tree", "generating tree levels and degree histograms");
    tree->fallthrough();
    tree->add_option("--patterns", patterns, "pattern set")->required();
    tree->add_option("--levels", levels, "deepest level")->capture_default_str();
    tree->add_flag("--rules", check_rules, "validate the registered production rules");

    CLI::App* es = app.add_subcommand("es", "extremal class avoiding long runs both ways");
    es->fallthrough();
    es->add_option("--m", es_m, "increasing-run parameter")->required();
    es->add_option("--n", es_n, "decreasing-run parameter")->required();

    CLI::App* conjecture =
        app.add_subcommand("conjecture", "differential-equation residuals for scanned series");
    conjecture->fallthrough();
    conjecture->add_option("--id", conj_id, "egf-123|egf-213")->required();
    conjecture->add_option("--order", order, "series truncation order")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) return cmd_count(rc, patterns, min_n, max_n);
        if (genfun->parsed()) return cmd_genfun(rc, patterns, stat_name, gf_n);
        if (verify->parsed()) return cmd_verify(rc, suite, max_n);
        if (wilf->parsed()) return cmd_wilf(rc, length, set_size, max_n);
        if (tree->parsed()) return cmd_tree(rc, patterns, levels, check_rules);
        if (es->parsed()) return cmd_es(rc, es_m, es_n);
        if (conjecture->parsed()) return cmd_conjecture(rc, conj_id, order);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no command\n";
    return 2;
}
