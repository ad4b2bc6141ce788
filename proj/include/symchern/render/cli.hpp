#pragma once

// Command-line front end: argument parsing, dispatch, and the text, JSON and
// CSV renderers. run_cli is the whole program; tools/symchern.cpp only
// forwards argv.

#include "symchern/chern.hpp"
#include "symchern/ktheory.hpp"
#include "symchern/parallel.hpp"
#include "symchern/plucker.hpp"
#include "symchern/ranktwo.hpp"
#include "symchern/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace symchern {

using Json = nlohmann::json;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::string command;
    std::optional<int> n, d, k, kmax, jmax, q, m;
    std::string basis = "e";
    std::string format = "text";
    std::string out_path;
    int jobs = 1;
    std::string check = "none";
    std::string suite;
    std::string plucker_mode = "demo";
    std::string input_path;
};

struct CommandOutput {
    std::string command;
    Json params = Json::object();
    Status status = Status::pass;
    std::vector<std::string> columns;  // CSV column order
    std::vector<Row> rows;
    std::vector<Counterexample> counterexamples;
    std::vector<Counterexample> findings;
    std::vector<std::string> text;
    long elapsed_ms = 0;

    void absorb(const VerificationReport& r)
    {
        if (r.status == Status::fail)
            status = Status::fail;
        else if (r.status == Status::precondition_violated && status == Status::pass)
            status = r.status;
        counterexamples.insert(counterexamples.end(), r.counterexamples.begin(), r.counterexamples.end());
        findings.insert(findings.end(), r.findings.begin(), r.findings.end());
    }
};

// ---- rendering -------------------------------------------------------------

inline std::string field_text(const Field& f)
{
    return std::holds_alternative<long>(f) ? std::to_string(std::get<long>(f)) : std::get<std::string>(f);
}

inline Json field_json(const Field& f)
{
    if (std::holds_alternative<long>(f))
        return std::get<long>(f);
    return std::get<std::string>(f);
}

inline Json counterexamples_json(const std::vector<Counterexample>& cs)
{
    Json a = Json::array();
    for (const auto& c : cs)
        a.push_back({{"params", c.params}, {"values", c.values}});
    return a;
}

inline Json to_json(const CommandOutput& o)
{
    Json rows = Json::array();
    for (const auto& r : o.rows) {
        Json obj = Json::object();
        for (const auto& [key, value] : r)
            obj[key] = field_json(value);
        rows.push_back(std::move(obj));
    }
    return {{"command", o.command},
            {"params", o.params},
            {"status", status_name(o.status)},
            {"rows", std::move(rows)},
            {"counterexamples", counterexamples_json(o.counterexamples)},
            {"findings", counterexamples_json(o.findings)},
            {"elapsed_ms", o.elapsed_ms}};
}

inline std::string render_json(const CommandOutput& o) { return to_json(o).dump(2) + "\n"; }

inline std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

inline std::string render_csv(const CommandOutput& o)
{
    std::string s;
    for (std::size_t i = 0; i < o.columns.size(); ++i)
        s += (i ? "," : "") + o.columns[i];
    s += "\n";
    for (const auto& r : o.rows) {
        for (std::size_t i = 0; i < o.columns.size(); ++i) {
            std::string cell;
            for (const auto& [key, value] : r)
                if (key == o.columns[i])
                    cell = field_text(value);
            s += (i ? "," : "") + csv_escape(cell);
        }
        s += "\n";
    }
    return s;
}

inline std::string render_text(const CommandOutput& o)
{
    std::string s;
    for (const auto& line : o.text)
        s += line + "\n";
    for (const auto& c : o.counterexamples)
        s += "counterexample: " + c.params + ": " + c.values + "\n";
    for (const auto& c : o.findings)
        s += "finding: " + c.params + ": " + c.values + "\n";
    return s;
}

inline std::string row_text(const Row& r)
{
    std::string s;
    for (const auto& [key, value] : r)
        s += (s.empty() ? "" : "  ") + key + "=" + field_text(value);
    return s;
}

// ---- commands --------------------------------------------------------------

namespace detail {

inline int require(const std::optional<int>& v, const char* flag)
{
    if (!v)
        throw UsageError(std::string("missing required option ") + flag);
    return *v;
}

template <class Coeff>
void symfunc_rows(CommandOutput& o, const BasicSymFunc<Coeff>& f)
{
    o.columns = {"lambda", "coefficient"};
    for (const auto& [l, c] : f.coords)
        o.rows.push_back({{"lambda", l.str()}, {"coefficient", coeff_str(c)}});
}

inline void suite_into(CommandOutput& o, const SuiteResult& r, const std::string& header)
{
    o.absorb(r.report);
    for (const auto& row : r.rows)
        for (const auto& [key, value] : row)
            if (std::find(o.columns.begin(), o.columns.end(), key) == o.columns.end())
                o.columns.push_back(key);
    o.rows.insert(o.rows.end(), r.rows.begin(), r.rows.end());
    o.text.push_back(header + ": " + status_name(r.report.status) + " (" + r.report.range + ")");
    for (const auto& row : r.rows)
        o.text.push_back("  " + row_text(row));
}

} // namespace detail

inline CommandOutput cmd_chern(const RunConfig& cfg)
{
    const int n = detail::require(cfg.n, "--n");
    const int d = detail::require(cfg.d, "--d");
    const int k = detail::require(cfg.k, "--k");
    if (n < 1 || d < 0 || k < 0)
        throw UsageError("chern needs n >= 1, d >= 0, k >= 0");
    CommandOutput o;
    o.params = {{"n", n}, {"d", d}, {"k", k}, {"basis", cfg.basis}};
    const Basis b = parse_basis(cfg.basis);
    SymFunc oracle = chern_class(n, d, k, Basis::m);
    SymFunc value = convert_basis(oracle, b);
    // second route through the universal polynomial, kept to small k
    if (k <= 6) {
        SymFunc universal = chern_from_universal(k, n, d);
        SymFunc from_oracle = convert_basis(oracle, Basis::e);
        if (!(universal == from_oracle)) {
            VerificationReport r;
            r.fail("n=" + std::to_string(n) + " d=" + std::to_string(d) + " k=" + std::to_string(k),
                   "oracle " + from_oracle.str() + ", universal " + universal.str());
            o.absorb(r);
        }
    }
    detail::symfunc_rows(o, value);
    o.text.push_back(value.str());
    return o;
}

inline CommandOutput cmd_universal(const RunConfig& cfg)
{
    const int k = detail::require(cfg.k, "--k");
    if (k < 0)
        throw UsageError("universal needs k >= 0");
    if (cfg.basis != "e" && cfg.basis != "s")
        throw UsageError("universal supports --basis e or s");
    CommandOutput o;
    o.params = {{"k", k}, {"basis", cfg.basis}};
    TSymFunc f = cfg.basis == "e" ? universal_chern(k) : universal_schur(k);
    detail::symfunc_rows(o, f);
    o.text.push_back(f.str());
    return o;
}

inline CommandOutput cmd_ranktwo_table(const RunConfig& cfg)
{
    const int kmax = cfg.kmax.value_or(6);
    const int jmax = cfg.jmax.value_or(2);
    if (kmax < 1 || jmax < 0)
        throw UsageError("ranktwo-table needs kmax >= 1, jmax >= 0");
    CommandOutput o;
    o.params = {{"kmax", kmax}, {"jmax", jmax}, {"check", cfg.check}};
    o.columns = {"k", "j", "r", "B"};
    auto cells = detail::scan_cells(kmax, jmax);
    auto rows = parallel_map(cells, [](const std::pair<int, int>& c) { return row(c.first, c.second); }, cfg.jobs);
    for (const auto& r : rows) {
        o.text.push_back("k=" + std::to_string(r.k) + " j=" + std::to_string(r.j) + " B=" + r.B.str());
        for (std::size_t i = 0; i < r.B.size(); ++i)
            o.rows.push_back({{"k", long{r.k}}, {"j", long{r.j}}, {"r", static_cast<long>(i)}, {"B", to_string(r.B[i])}});
    }
    if (cfg.check == "A" || cfg.check == "both")
        o.absorb(check_conjecture_A(kmax, jmax, cfg.jobs));
    if (cfg.check == "B" || cfg.check == "both")
        o.absorb(check_conjecture_B(kmax, jmax, cfg.jobs));
    if (cfg.check != "none")
        o.text.push_back("check " + cfg.check + ": " + status_name(o.status));
    return o;
}

inline CommandOutput cmd_nn(const RunConfig& cfg)
{
    const int n = detail::require(cfg.n, "--n");
    const int d = detail::require(cfg.d, "--d");
    const int q = detail::require(cfg.q, "--q");
    const int m = detail::require(cfg.m, "--m");
    if (n < 1 || d < 0 || q < 0 || m < 0)
        throw UsageError("nn needs n >= 1 and nonnegative d, q, m");
    CommandOutput o;
    o.params = {{"n", n}, {"d", d}, {"q", q}, {"m", m}};
    SymFunc direct = nn_coefficient(n, d, q, m);
    TSymFunc symbolic = nn_symbolic_T(q, m);
    SymFunc universal = specialize(symbolic, n, d);
    if (!(direct == universal)) {
        VerificationReport r;
        r.fail("n=" + std::to_string(n) + " d=" + std::to_string(d) + " q=" + std::to_string(q) + " m=" + std::to_string(m),
               "expansion " + direct.str() + ", universal " + universal.str());
        o.absorb(r);
    }
    o.columns = {"route", "value"};
    o.rows.push_back({{"route", std::string("expansion")}, {"value", direct.str()}});
    o.rows.push_back({{"route", std::string("universal")}, {"value", symbolic.str()}});
    o.text.push_back(direct.str());
    o.text.push_back("universal: " + symbolic.str());
    return o;
}

namespace detail {

inline Rational json_rational(const Json& v)
{
    if (v.is_number_integer())
        return Rational(Integer(v.dump()));
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    throw UsageError("polynomial coefficients must be integers or rational strings");
}

// One line of the Pluecker input format:
// {"lambda": [..], "index_convention": "pl"|"schur", "index": i, "poly_d": [c0, c1, ...]}
inline PluckerDatum parse_plucker_line(const std::string& line, std::size_t lineno)
{
    const std::string where = "input line " + std::to_string(lineno) + ": ";
    Json j;
    try {
        j = Json::parse(line);
    } catch (const Json::parse_error& e) {
        throw UsageError(where + e.what());
    }
    try {
        std::vector<int> parts = j.at("lambda").get<std::vector<int>>();
        const std::string conv = j.at("index_convention").get<std::string>();
        const int index = j.at("index").get<int>();
        std::vector<Rational> coeffs;
        for (const auto& c : j.at("poly_d"))
            coeffs.push_back(json_rational(c));
        Partition l(parts);
        int i = 0;
        if (conv == "schur")
            i = index;
        else if (conv == "pl")
            i = schur_index_from_pl(l, index);
        else
            throw UsageError(where + "index_convention must be \"pl\" or \"schur\"");
        return shifted_datum(l, i, UPoly(std::move(coeffs)), "line " + std::to_string(lineno));
    } catch (const Json::exception& e) {
        throw UsageError(where + e.what());
    } catch (const UsageError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw UsageError(where + e.what());
    }
}

} // namespace detail

inline CommandOutput cmd_plucker(const RunConfig& cfg)
{
    CommandOutput o;
    std::vector<PluckerDatum> data;
    if (!cfg.input_path.empty()) {
        o.params = {{"input", cfg.input_path}};
        std::ifstream in(cfg.input_path);
        if (!in)
            throw UsageError("cannot open " + cfg.input_path);
        std::string line;
        for (std::size_t lineno = 1; std::getline(in, line); ++lineno)
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                data.push_back(detail::parse_plucker_line(line, lineno));
    } else {
        if (cfg.plucker_mode != "demo")
            throw UsageError("plucker takes 'demo' or --input PATH");
        o.params = {{"mode", std::string("demo")}};
        data = builtin_vectors();
        data.push_back(flex_datum());
    }
    o.columns = {"label", "lambda", "i", "pl_index", "Q", "C", "status"};
    for (const auto& v : data) {
        VerificationReport r = check_shifted_conjectures(v);
        o.absorb(r);
        Row row{{"label", v.label},
                {"lambda", v.lambda.str()},
                {"i", long{v.i}},
                {"pl_index", long{v.pl_index}},
                {"Q", v.Q.str("x")},
                {"C", v.C.str()},
                {"status", status_name(r.status)}};
        o.text.push_back(row_text(row));
        o.rows.push_back(std::move(row));
    }
    return o;
}

inline CommandOutput cmd_verify(const RunConfig& cfg)
{
    if (cfg.suite.empty())
        throw UsageError("verify needs a suite name");
    if (cfg.suite != "all" && std::find(suite_names().begin(), suite_names().end(), cfg.suite) == suite_names().end())
        throw UsageError("unknown suite '" + cfg.suite + "'");
    SuiteOptions opt;
    opt.kmax = cfg.kmax.value_or(20);
    opt.jmax = cfg.jmax.value_or(-1);
    opt.workers = cfg.jobs;
    CommandOutput o;
    o.params = {{"suite", cfg.suite}};
    if (cfg.suite == "conjA" || cfg.suite == "conjB" || cfg.suite == "all") {
        o.params["kmax"] = opt.kmax;
        if (cfg.jmax)
            o.params["jmax"] = *cfg.jmax;
    }
    detail::suite_into(o, run_suite(cfg.suite, opt), cfg.suite);
    return o;
}

// ---- entry point -------------------------------------------------------------

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Exact Chern classes of symmetric powers and related positivity checks", "symchern"};
    app.footer("Worker count defaults to the SYMCHERN_JOBS environment variable, else the hardware concurrency.\n"
               "Exit codes: 0 pass, 1 verification failure, 2 usage error, budget violation or violated precondition.");
    app.require_subcommand(1);
    app.fallthrough();
    cfg.jobs = default_workers();

    auto int_opt = [&](const char* name, std::optional<int>& slot, const char* help) {
        app.add_option_function<int>(name, [&slot](const int& v) { slot = v; }, help);
    };
    int_opt("--n", cfg.n, "number of variables (rank)");
    int_opt("--d", cfg.d, "symmetric power");
    int_opt("--k", cfg.k, "degree of the class");
    int_opt("--kmax", cfg.kmax, "largest k scanned");
    int_opt("--jmax", cfg.jmax, "largest j scanned");
    int_opt("--q", cfg.q, "z-order");
    int_opt("--m", cfg.m, "zeta-order");
    app.add_option("--basis", cfg.basis, "output basis")->check(CLI::IsMember({"m", "e", "s", "p"}));
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", cfg.out_path, "write output to a file");
    app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* chern = app.add_subcommand("chern", "c_k(n,d) in a chosen basis");
    auto* universal = app.add_subcommand("universal", "c_k as a polynomial in T_r and e_lambda");
    auto* table = app.add_subcommand("ranktwo-table", "binomial coefficients B_{k,j,r} of the rank-two Schur rows");
    table->add_option("--check", cfg.check, "conjecture check")->check(CLI::IsMember({"none", "A", "B", "both"}));
    auto* nn = app.add_subcommand("nn", "[z^q zeta^m] of the normalized K-theoretic product");
    auto* plucker = app.add_subcommand("plucker", "shifted Pluecker vectors: demo or --input FILE (JSON lines)");
    plucker->add_option("mode", cfg.plucker_mode, "demo");
    plucker->add_option("--input", cfg.input_path, "JSON-lines file of Pluecker polynomials");
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify->add_option("suite", cfg.suite, "suite name")->required()->check(CLI::IsMember(suites));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    Stopwatch sw;
    CommandOutput o;
    try {
        if (chern->parsed()) {
            cfg.command = "chern";
            o = cmd_chern(cfg);
        } else if (universal->parsed()) {
            cfg.command = "universal";
            o = cmd_universal(cfg);
        } else if (table->parsed()) {
            cfg.command = "ranktwo-table";
            o = cmd_ranktwo_table(cfg);
        } else if (nn->parsed()) {
            cfg.command = "nn";
            o = cmd_nn(cfg);
        } else if (plucker->parsed()) {
            cfg.command = "plucker";
            o = cmd_plucker(cfg);
        } else {
            cfg.command = "verify";
            o = cmd_verify(cfg);
        }
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << app.get_formatter()->make_help(&app, "symchern", CLI::AppFormatMode::Normal);
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    o.command = cfg.command;
    o.elapsed_ms = std::lround(sw.ms());

    std::string rendered = cfg.format == "json" ? render_json(o) : cfg.format == "csv" ? render_csv(o) : render_text(o);
    if (cfg.out_path.empty()) {
        out << rendered;
    } else {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << cfg.out_path << "\n";
            return 2;
        }
        f << rendered;
    }
    return o.status == Status::pass ? 0 : o.status == Status::fail ? 1 : 2;
}

} // namespace symchern
