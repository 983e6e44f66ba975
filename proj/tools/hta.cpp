// Command-line driver: verification suites, demos, period matrices, cobar components
// and stuffle products. Exit status 0 pass, 1 failure, 2 usage or parse error.
#include "hta/io.hpp"
#include "hta/models.hpp"
#include "hta/suites.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

using namespace hta;
using json = nlohmann::ordered_json;

namespace {

const char* kVersion = "1.0.0";

json to_json(const SuiteReport& r)
{
    json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["cases"] = r.cases();
    j["failures"] = r.failures();
    j["pass"] = r.pass();
    json checks = json::array();
    for (auto& c : r.checks) {
        json cj;
        cj["law"] = c.law;
        cj["cases"] = c.cases;
        cj["failures"] = c.failures;
        if (c.failures) {
            cj["failure"]["input"] = c.example;
            if (!c.lhs.empty()) {
                cj["failure"]["lhs"] = c.lhs;
                cj["failure"]["rhs"] = c.rhs;
            }
        }
        checks.push_back(cj);
    }
    j["checks"] = checks;
    json outs = json::array();
    for (auto& [k, v] : r.outputs) outs.push_back({{"label", k}, {"value", v}});
    j["outputs"] = outs;
    json tables = json::array();
    for (auto& t : r.tables) tables.push_back({{"title", t.title}, {"columns", t.columns}, {"rows", t.rows}});
    j["tables"] = tables;
    return j;
}

void print_table(std::ostream& os, const Table& t)
{
    os << t.title << "\n";
    std::vector<size_t> w(t.columns.size(), 0);
    for (size_t i = 0; i < t.columns.size(); ++i) w[i] = t.columns[i].size();
    for (auto& row : t.rows)
        for (size_t i = 0; i < row.size() && i < w.size(); ++i) w[i] = std::max(w[i], row[i].size());
    auto line = [&](const std::vector<std::string>& row) {
        os << " ";
        for (size_t i = 0; i < row.size(); ++i) {
            os << " " << row[i];
            if (i + 1 < row.size()) os << std::string(w[i] - row[i].size(), ' ');
        }
        os << "\n";
    };
    line(t.columns);
    for (auto& row : t.rows) line(row);
}

void print_text(std::ostream& os, const SuiteReport& r)
{
    os << "== " << r.suite;
    if (r.seed) os << " (seed " << r.seed << ")";
    os << " ==\n";
    for (auto& [k, v] : r.outputs) {
        if (v.find('\n') == std::string::npos) {
            os << k << " = " << v << "\n";
        } else {
            os << k << ":\n";
            std::istringstream in(v);
            std::string l;
            while (std::getline(in, l)) os << "  " << l << "\n";
        }
    }
    for (auto& t : r.tables) print_table(os, t);
    for (auto& c : r.checks) {
        if (c.pass()) {
            os << "PASS " << c.law << " (" << c.cases << " cases)\n";
        } else {
            os << "FAIL " << c.law << " (" << c.failures << "/" << c.cases << " failed)\n";
            if (!c.example.empty()) os << "  input: " << c.example << "\n";
            if (!c.lhs.empty()) os << "  lhs:   " << c.lhs << "\n  rhs:   " << c.rhs << "\n";
        }
    }
    os << (r.pass() ? "PASS" : "FAIL") << " " << r.suite << ": " << r.cases() << " cases, " << r.failures() << " failures\n";
}

struct Globals {
    RunConfig cfg;
    std::vector<int> t_window{-3, 3};
    std::string algebra;
    bool json_out = false, text_out = false;
};

int emit(const Globals& g, const std::string& command, const std::vector<SuiteReport>& reports, bool default_json)
{
    bool ok = !reports.empty();
    for (auto& r : reports) ok = ok && r.pass();
    bool as_json = g.json_out || (default_json && !g.text_out);
    if (as_json) {
        json j;
        j["schema"] = "hta-report/1";
        j["version"] = kVersion;
        j["command"] = command;
        j["config"] = {{"seed", g.cfg.seed},
                       {"max_weight", g.cfg.max_weight},
                       {"max_symbol_degree", g.cfg.max_symbol_degree},
                       {"t_window", {g.cfg.t_lo, g.cfg.t_hi}},
                       {"algebra", g.algebra.empty() ? json(nullptr) : json(g.algebra)}};
        json rs = json::array();
        for (auto& r : reports) rs.push_back(to_json(r));
        j["reports"] = rs;
        j["pass"] = ok;
        std::cout << j.dump(2) << "\n";
    } else {
        for (auto& r : reports) print_text(std::cout, r);
        if (reports.size() > 1) std::cout << (ok ? "PASS" : "FAIL") << " overall\n";
    }
    return ok ? 0 : 1;
}

MultiDegree parse_content(int t_total, const std::vector<std::string>& items)
{
    MultiDegree md;
    md.t_total = t_total;
    for (auto& s : items) {
        auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--content", "expected name=degree, got '" + s + "'");
        try {
            md.symbol_degrees[s.substr(0, eq)] = std::stoi(s.substr(eq + 1));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--content", "expected name=degree, got '" + s + "'");
        }
    }
    return md;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hodge-Tate period algebra toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kVersion);
    Globals g;
    app.add_option("--seed", g.cfg.seed, "seed of the random suites")->capture_default_str();
    app.add_option("--max-weight", g.cfg.max_weight, "largest weight of random inputs")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--max-symbol-degree", g.cfg.max_symbol_degree, "largest symbol degree in cobar components")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--t-window", g.t_window, "t exponent window LO HI")->expected(2)->capture_default_str();
    app.add_option("--algebra", g.algebra, "built-in algebra name or algebra file");
    auto* fj = app.add_flag("--json", g.json_out, "JSON output");
    auto* ft = app.add_flag("--text", g.text_out, "human-readable output");
    fj->excludes(ft);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> suites;
    verify->add_option("--suite", suites, "suite name or all (repeatable)")->capture_default_str();

    auto* demo = app.add_subcommand("demo", "reproduce a worked example");
    std::string demo_name;
    demo->add_option("name", demo_name, "dilog, trilog, polylog or eta")->required();

    auto* period = app.add_subcommand("period", "periods of a framed matrix file");
    std::string matrix_path;
    period->add_option("file", matrix_path, "matrix file")->required();

    auto* cobar = app.add_subcommand("cobar", "homology of one cobar component");
    int weight = 2, t_total = 0, spread = -1;
    std::vector<std::string> content;
    cobar->add_option("--weight", weight, "weight n")->capture_default_str()->check(CLI::PositiveNumber);
    cobar->add_option("--t-total", t_total, "total t exponent")->capture_default_str();
    cobar->add_option("--content", content, "content degree name=k (repeatable)");
    cobar->add_option("--spread", spread, "t spread bound, default automatic");

    auto* stuffle = app.add_subcommand("stuffle", "stuffle of two polylogarithm indices");
    std::string left, right;
    int order = 12;
    stuffle->add_option("--left", left, "index such as 1,2:x,y")->required();
    stuffle->add_option("--right", right, "index such as 1:z")->required();
    stuffle->add_option("--order", order, "series oracle order")->capture_default_str()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        g.cfg.t_lo = g.t_window[0];
        g.cfg.t_hi = g.t_window[1];
        g.cfg.validate();
        AlgPtr alg;
        if (!g.algebra.empty()) alg = resolve_algebra(g.algebra);

        if (*verify) {
            g.cfg.algebra = alg;
            if (suites.empty()) suites.push_back("all");
            std::vector<std::string> names;
            for (auto& s : suites) {
                if (s == "all") {
                    names.insert(names.end(), suite_names().begin(), suite_names().end());
                } else if (std::find(suite_names().begin(), suite_names().end(), s) != suite_names().end()) {
                    names.push_back(s);
                } else {
                    std::cerr << "error: unknown suite '" << s << "'\n";
                    return 2;
                }
            }
            std::sort(names.begin(), names.end());
            names.erase(std::unique(names.begin(), names.end()), names.end());
            std::vector<SuiteReport> reports;
            for (auto& n : names) reports.push_back(run_suite(n, g.cfg));
            return emit(g, "verify", reports, true);
        }
        if (*demo) {
            if (std::find(demo_names().begin(), demo_names().end(), demo_name) == demo_names().end()) {
                std::cerr << "error: unknown demo '" << demo_name << "'\n";
                return 2;
            }
            return emit(g, "demo", {run_demo(demo_name)}, false);
        }
        if (*period) {
            MatrixFile mf;
            try {
                mf = parse_matrix_file(read_file(matrix_path), alg);
            } catch (const ParseError& e) {
                std::cerr << matrix_path << ":" << e.line << ":" << e.col << ": error: " << e.what() << "\n";
                return 2;
            }
            return emit(g, "period", {period_report(mf.h)}, false);
        }
        if (*cobar) {
            if (!alg) alg = models::de_rham();
            return emit(g, "cobar", {cobar_report(alg, weight, parse_content(t_total, content), spread)}, false);
        }
        if (*stuffle) {
            if (!alg) alg = models::plain({"x", "y", "z", "u", "v", "w"});
            return emit(g, "stuffle", {stuffle_report(alg, left, right, order)}, false);
        }
    } catch (const ParseError& e) {
        std::cerr << (g.algebra.empty() ? "input" : g.algebra) << ":" << e.line << ":" << e.col << ": error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
