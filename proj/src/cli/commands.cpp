#include "absnorm/cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "absnorm/cli/matrix_file.hpp"
#include "absnorm/conjecture.hpp"
#include "absnorm/error.hpp"
#include "absnorm/extremal.hpp"
#include "absnorm/inequality.hpp"
#include "absnorm/search.hpp"
#include "absnorm/suites.hpp"

namespace absnorm::cli {

using nlohmann::json;

namespace {

constexpr const char* tool_version = "absnorm 1.0.0";

// Values in (1, 1 + 1e-6) sit next to the p = 1 singularity of the root.
constexpr double min_conjecture_gap = 1e-6;

json to_json(const Tolerances& t) {
    return {{"ineq", t.ineq},         {"agreement", t.agreement}, {"exact", t.exact},
            {"residual", t.residual}, {"ceiling", t.ceiling},     {"witness", t.witness}};
}

Tolerances tolerances_from(const json& j) {
    Tolerances t;
    t.ineq = j.value("ineq", t.ineq);
    t.agreement = j.value("agreement", t.agreement);
    t.exact = j.value("exact", t.exact);
    t.residual = j.value("residual", t.residual);
    t.ceiling = j.value("ceiling", t.ceiling);
    t.witness = j.value("witness", t.witness);
    return t;
}

json module_tolerances() {
    return {{"tol_recon", tol::recon}, {"tol_herm", tol::herm},
            {"tol_psd", tol::psd},     {"tol_maj", tol_maj},
            {"tol_contraction", tol_contraction},
            {"root_tolerance", root_tolerance}};
}

json paths_json(const std::vector<std::filesystem::path>& paths) {
    json out = json::array();
    for (const auto& p : paths) out.push_back(p.string());
    return out;
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

json ratio_json(const RatioReport& r) {
    return {{"lhs", r.lhs}, {"rhs", r.rhs}, {"ratio", r.ratio}, {"p", r.p.to_string()}, {"m", r.m}};
}

json conjecture_json(const ConjectureResult& r) {
    return {{"p", r.p},        {"m", r.m},
            {"x", number(r.x)}, {"log_x", r.log_x},
            {"c", r.c},        {"residual", r.residual},
            {"universal", r.universal}};
}

double require_conjecture_p(double p) {
    if (!std::isfinite(p)) throw Error(ErrorKind::DomainError, "conjecture needs a finite p; use --limit");
    if (p <= 1.0) throw Error(ErrorKind::PTooSmall, "conjectured constant needs p > 1");
    if (p < 1.0 + min_conjecture_gap)
        throw Error(ErrorKind::PTooSmall, "p within 1e-6 of 1 is rejected; use --limit for the p -> 1 limit");
    return p;
}

// Shared conjecture-cell checks.
void check_conjecture_cell(RunReport& rep, const ConjectureResult& r, double scan, const Tolerances& tol,
                           const std::string& tag) {
    rep.check_le("residual" + tag, CheckLevel::theorem, r.residual, tol.residual, 0.0);
    rep.check_le("scan_agreement" + tag, CheckLevel::theorem, std::abs(r.c - scan), tol.agreement * r.c, 0.0);
    rep.check_le("below_universal" + tag, CheckLevel::conjecture, r.c, r.universal, tol.ineq * std::max(1.0, r.universal));
    if (r.p == 2.0)
        rep.check_le("p2_matches_frobenius" + tag, CheckLevel::theorem, std::abs(r.c - frobenius_constant(r.m)),
                     tol.exact, 0.0);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::MalformedFile, "cannot write " + path);
    out << text;
}

}  // namespace

void Tolerances::set(const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::DomainError, "tolerance must be name=value");
    const std::string name = assignment.substr(0, eq);
    double value = 0.0;
    try {
        value = std::stod(assignment.substr(eq + 1));
    } catch (const std::exception&) {
        throw Error(ErrorKind::DomainError, "bad tolerance value in '" + assignment + "'");
    }
    if (!(value >= 0.0)) throw Error(ErrorKind::DomainError, "tolerances must be nonnegative");
    if (name == "ineq") ineq = value;
    else if (name == "agreement") agreement = value;
    else if (name == "exact") exact = value;
    else if (name == "residual") residual = value;
    else if (name == "ceiling") ceiling = value;
    else if (name == "witness") witness = value;
    else throw Error(ErrorKind::DomainError, "unknown tolerance '" + name + "'");
}

RunReport run_abs(const AbsOptions& opt) {
    RunReport rep;
    rep.command = "abs";
    rep.config = {{"input", opt.input}, {"output", opt.output}};
    const ComplexMatrix a = read_matrix_file(opt.input);
    require_square(a, "input");
    const ComplexMatrix abs = abs_value(a);
    write_matrix_file(opt.output, abs);
    // |A|² = A*A
    const ComplexMatrix gram = a.adjoint() * a;
    const double err = (abs * abs - gram).norm();
    rep.results = {{"rows", a.rows()}, {"cols", a.cols()}, {"output", opt.output},
                   {"trace", abs.trace().real()}};
    rep.check_le("square_root_of_gram", CheckLevel::theorem, err, tol::recon * std::max(1.0, gram.norm()), 0.0);
    return rep;
}

RunReport run_ratio(const RatioOptions& opt) {
    RunReport rep;
    rep.command = "ratio";
    rep.config = {{"files", opt.files}, {"p", opt.p}, {"tolerances", to_json(opt.tol)}};
    const PExponent p = PExponent::parse(opt.p);
    std::vector<std::filesystem::path> paths(opt.files.begin(), opt.files.end());
    const MatrixTuple t = read_tuple(paths);
    const RatioReport r = ratio(t, p);
    rep.results = ratio_json(r);
    rep.results["n"] = t.rows();

    const std::size_t m = t.size();
    if (m == 1) {
        rep.check_le("single_member_ratio", CheckLevel::theorem, r.ratio, 1.0, opt.tol.ineq);
        return rep;
    }
    const double universal = universal_bound(p, m);
    rep.results["universal"] = universal;
    rep.check_le("universal_bound", CheckLevel::theorem, r.ratio, universal, opt.tol.ineq * std::max(1.0, universal));
    if (!p.is_infinite() && p.value() == 2.0) {
        const double c2 = frobenius_constant(m);
        rep.results["frobenius_constant"] = c2;
        rep.check_le("frobenius_bound", CheckLevel::theorem, r.ratio, c2, opt.tol.ineq * std::max(1.0, c2));
    }
    if (!p.is_infinite() && p.value() >= 1.0 + min_conjecture_gap) {
        const double c = c_conjectured(p.value(), m).c;
        rep.results["conjectured"] = c;
        rep.check_le("conjectured_bound", CheckLevel::conjecture, r.ratio, c, opt.tol.ineq * std::max(1.0, c));
    }
    return rep;
}

RunReport run_extremal(const ExtremalOptions& opt) {
    RunReport rep;
    rep.command = "extremal";
    rep.config = {{"m", opt.m},
                  {"s", opt.s ? json(*opt.s) : json(nullptr)},
                  {"optimal", opt.optimal},
                  {"p", opt.p},
                  {"dimension", opt.dimension},
                  {"emit_dir", opt.emit_dir},
                  {"tolerances", to_json(opt.tol)}};
    if (opt.s.has_value() == opt.optimal)
        throw Error(ErrorKind::DomainError, "pass exactly one of --s and --optimal");
    const PExponent p = PExponent::parse(opt.p);
    const bool p2 = !p.is_infinite() && p.value() == 2.0;

    double s = 0.0;
    if (opt.s) {
        s = *opt.s;
    } else {
        s = p2 ? s_star(opt.m) : scan_family(opt.m, p).s_best;
    }
    std::optional<Eigen::Index> dim;
    if (opt.dimension > 0) dim = opt.dimension;
    const EquiangularFamily fam = build_family(opt.m, s, std::nullopt, dim);
    const RatioReport r = ratio(fam.tuple, p);
    const double closed = family_ratio_p(opt.m, s, p);
    const double universal = universal_bound(p, opt.m);

    rep.results = ratio_json(r);
    rep.results["s"] = s;
    rep.results["closed_form_ratio"] = closed;
    rep.results["universal"] = universal;
    rep.check_le("closed_form_agreement", CheckLevel::theorem, rel_diff(r.ratio, closed), opt.tol.agreement, 0.0);
    rep.check_le("universal_bound", CheckLevel::theorem, r.ratio, universal, opt.tol.ineq * std::max(1.0, universal));
    if (p2) {
        const double c2 = frobenius_constant(opt.m);
        rep.results["f_ratio"] = f_ratio(opt.m, s);
        rep.results["frobenius_constant"] = c2;
        rep.check_le("frobenius_bound", CheckLevel::theorem, r.ratio, c2, opt.tol.ineq * std::max(1.0, c2));
        if (opt.optimal)
            rep.check_le("frobenius_sharpness", CheckLevel::theorem, std::abs(r.ratio - c2), opt.tol.agreement, 0.0);
    }
    if (!p.is_infinite() && p.value() >= 1.0 + min_conjecture_gap) {
        const double c = c_conjectured(p.value(), opt.m).c;
        rep.results["conjectured"] = c;
        rep.check_le("conjectured_bound", CheckLevel::conjecture, r.ratio, c, opt.tol.ineq * std::max(1.0, c));
        if (opt.optimal)
            rep.check_le("attains_conjectured", CheckLevel::theorem, rel_diff(r.ratio, c), opt.tol.agreement, 0.0);
    }
    if (!opt.emit_dir.empty()) rep.results["tuple_files"] = paths_json(write_tuple(opt.emit_dir, fam.tuple));
    return rep;
}

RunReport run_conjecture(const ConjectureOptions& opt) {
    RunReport rep;
    rep.command = "conjecture";
    rep.config = {{"p", opt.p ? json(*opt.p) : json(nullptr)},
                  {"m", opt.m},
                  {"table", opt.table},
                  {"limit", opt.limit},
                  {"p_grid", opt.p_grid},
                  {"m_grid", opt.m_grid},
                  {"csv", opt.csv},
                  {"tolerances", to_json(opt.tol)},
                  {"module_tolerances", module_tolerances()}};
    if (static_cast<int>(opt.table) + static_cast<int>(opt.limit) + static_cast<int>(opt.p.has_value()) != 1)
        throw Error(ErrorKind::DomainError, "pass exactly one of --p, --table, --limit");

    if (opt.limit) {
        const LimitReport lr = limit_checks(opt.m);
        rep.results = {{"m", lr.m},
                       {"epsilons", lr.epsilons},
                       {"near_one", lr.near_one},
                       {"large_p", lr.large_p},
                       {"near_sqrt_m", lr.near_sqrt_m},
                       {"monotone_to_one", lr.monotone_to_one},
                       {"monotone_to_sqrt_m", lr.monotone_to_sqrt_m},
                       {"gap_to_one", lr.gap_to_one},
                       {"gap_to_sqrt_m", lr.gap_to_sqrt_m},
                       {"p2_value", lr.p2_value}};
        rep.check_le("limit_p_to_1", CheckLevel::theorem, lr.gap_to_one, 0.01, 0.0);
        rep.check_le("limit_p_to_inf", CheckLevel::theorem, lr.gap_to_sqrt_m, 0.01, 0.0);
        rep.check_le("p2_matches_frobenius", CheckLevel::theorem, lr.p2_error, opt.tol.exact, 0.0);
        return rep;
    }

    std::vector<double> ps = opt.table ? opt.p_grid : std::vector<double>{*opt.p};
    std::vector<std::size_t> ms = opt.table ? opt.m_grid : std::vector<std::size_t>{opt.m};
    json rows = json::array();
    for (double p : ps) {
        require_conjecture_p(p);
        for (std::size_t m : ms) {
            const ConjectureResult r = c_conjectured(p, m);
            const double scan = cross_check_scan(p, m);
            json row = conjecture_json(r);
            row["scan"] = scan;
            rows.push_back(row);
            const std::string tag = opt.table ? "[p=" + format_double(p) + ",m=" + std::to_string(m) + "]" : "";
            check_conjecture_cell(rep, r, scan, opt.tol, tag);
        }
    }
    rep.results = opt.table ? json{{"rows", rows}} : rows.front();
    if (!opt.csv.empty()) write_text(opt.csv, conjecture_csv(rows));
    return rep;
}

std::string conjecture_csv(const json& rows) {
    const auto cell = [](const json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
        return format_double(v.get<double>());
    };
    std::string out = "p,m,x,log_x,c,residual,universal\n";
    for (const auto& r : rows) {
        out += cell(r["p"]) + "," + cell(r["m"]) + "," + cell(r["x"]) + "," + cell(r["log_x"]) + "," +
               cell(r["c"]) + "," + cell(r["residual"]) + "," + cell(r["universal"]) + "\n";
    }
    return out;
}

RunReport run_check(const CheckOptions& opt) {
    RunReport rep;
    rep.command = "check";
    rep.config = {{"suite", opt.suite},
                  {"samples", opt.samples},
                  {"seed", opt.seed},
                  {"threads", opt.threads},
                  {"module_tolerances", module_tolerances()}};
    if (opt.samples < 1) throw Error(ErrorKind::DomainError, "--samples must be at least 1");
    const SuiteOptions so{opt.samples, opt.seed, opt.threads};
    std::vector<SuiteResult> suites;
    const bool all = opt.suite == "all";
    bool known = all;
    const auto want = [&](const char* name) {
        const bool hit = all || opt.suite == name;
        known = known || hit;
        return hit;
    };
    if (want("frobenius")) suites.push_back(frobenius_suite(so));
    if (want("lemma")) suites.push_back(lemma_suite(so));
    if (want("prop31")) suites.push_back(prop31_suite(so));
    if (want("majorization")) suites.push_back(majorization_suite(so));
    if (want("invariance")) suites.push_back(invariance_suite(so));
    if (!known) throw Error(ErrorKind::DomainError, "unknown suite '" + opt.suite + "'");

    json results = json::object();
    for (const auto& s : suites) {
        json checks = json::array();
        for (const auto& c : s.checks) {
            checks.push_back({{"name", c.name},
                              {"samples", c.samples},
                              {"failures", c.failures},
                              {"min_slack", number(c.min_slack)}});
            rep.check_le(s.suite + "." + c.name, CheckLevel::theorem, static_cast<double>(c.failures), 0.0, 0.0);
        }
        results[s.suite] = checks;
    }
    rep.results = results;
    return rep;
}

RunReport run_search(const SearchOptions& opt) {
    RunReport rep;
    rep.command = "search";
    rep.config = {{"m", opt.m},           {"n", opt.n},           {"p", opt.p},
                  {"restarts", opt.restarts}, {"iters", opt.iters}, {"step", opt.step},
                  {"shrink", opt.shrink}, {"seed", opt.seed},     {"threads", opt.threads},
                  {"emit_dir", opt.emit_dir}, {"tolerances", to_json(opt.tol)}};
    SearchConfig cfg;
    cfg.m = opt.m;
    cfg.n = opt.n;
    cfg.p = PExponent::parse(opt.p);
    cfg.restarts = opt.restarts;
    cfg.max_iters = opt.iters;
    cfg.initial_step = opt.step;
    cfg.shrink = opt.shrink;
    cfg.seed = opt.seed;
    cfg.threads = opt.threads;
    const SearchReport sr = search(cfg);

    json restarts = json::array();
    for (const auto& r : sr.restarts) {
        restarts.push_back({{"index", r.index},
                            {"seed", r.seed},
                            {"initial_ratio", r.initial_ratio},
                            {"final_ratio", r.final_ratio},
                            {"iters", r.iters}});
    }
    rep.results = {{"best_ratio", sr.best_ratio},
                   {"best_restart", sr.best_restart},
                   {"universal", sr.universal},
                   {"gap_to_universal", sr.gap_to_universal},
                   {"max_evaluated", sr.max_evaluated},
                   {"restarts", restarts}};
    if (sr.conjectured) {
        rep.results["conjectured"] = *sr.conjectured;
        rep.results["gap_to_conjecture"] = *sr.gap_to_conjecture;
    }

    // The witness is re-read from disk when emitted so the check covers the file round trip.
    MatrixTuple witness = sr.best_tuple;
    if (!opt.emit_dir.empty()) {
        const auto paths = write_tuple(opt.emit_dir, sr.best_tuple);
        rep.results["witness_files"] = paths_json(paths);
        witness = read_tuple(paths);
    }
    const double replayed = ratio(witness, cfg.p).ratio;
    rep.check_le("witness_reevaluation", CheckLevel::theorem, std::abs(replayed - sr.best_ratio), opt.tol.witness, 0.0);
    rep.check_le("universal_ceiling", CheckLevel::theorem, sr.max_evaluated, sr.universal, opt.tol.ceiling);
    if (!cfg.p.is_infinite() && cfg.p.value() == 2.0) {
        rep.check_le("frobenius_ceiling", CheckLevel::theorem, sr.max_evaluated, frobenius_constant(cfg.m),
                     opt.tol.ineq * frobenius_constant(cfg.m));
    }
    if (sr.conjectured)
        rep.check_le("conjectured_ceiling", CheckLevel::conjecture, sr.best_ratio, *sr.conjectured,
                     opt.tol.ineq * std::max(1.0, *sr.conjectured));
    return rep;
}

RunReport run_replay(const json& recorded) {
    const std::string command = recorded.at("command").get<std::string>();
    const json& c = recorded.at("config");
    RunReport again;
    if (command == "abs") {
        again = run_abs({c.at("input").get<std::string>(), c.at("output").get<std::string>()});
    } else if (command == "ratio") {
        RatioOptions o;
        o.files = c.at("files").get<std::vector<std::string>>();
        o.p = c.at("p").get<std::string>();
        o.tol = tolerances_from(c.value("tolerances", json::object()));
        again = run_ratio(o);
    } else if (command == "extremal") {
        ExtremalOptions o;
        o.m = c.at("m").get<std::size_t>();
        if (!c.at("s").is_null()) o.s = c.at("s").get<double>();
        o.optimal = c.at("optimal").get<bool>();
        o.p = c.at("p").get<std::string>();
        o.dimension = c.value("dimension", 0L);
        o.emit_dir = c.value("emit_dir", std::string());
        o.tol = tolerances_from(c.value("tolerances", json::object()));
        again = run_extremal(o);
    } else if (command == "conjecture") {
        ConjectureOptions o;
        if (!c.at("p").is_null()) o.p = c.at("p").get<double>();
        o.m = c.at("m").get<std::size_t>();
        o.table = c.at("table").get<bool>();
        o.limit = c.at("limit").get<bool>();
        o.p_grid = c.at("p_grid").get<std::vector<double>>();
        o.m_grid = c.at("m_grid").get<std::vector<std::size_t>>();
        o.csv = c.value("csv", std::string());
        o.tol = tolerances_from(c.value("tolerances", json::object()));
        again = run_conjecture(o);
    } else if (command == "check") {
        CheckOptions o;
        o.suite = c.at("suite").get<std::string>();
        o.samples = c.at("samples").get<std::size_t>();
        o.seed = c.at("seed").get<std::uint64_t>();
        o.threads = c.value("threads", 1u);
        again = run_check(o);
    } else if (command == "search") {
        SearchOptions o;
        o.m = c.at("m").get<std::size_t>();
        o.n = c.at("n").get<long>();
        o.p = c.at("p").get<std::string>();
        o.restarts = c.at("restarts").get<std::size_t>();
        o.iters = c.at("iters").get<std::size_t>();
        o.step = c.at("step").get<double>();
        o.shrink = c.at("shrink").get<double>();
        o.seed = c.at("seed").get<std::uint64_t>();
        o.threads = c.value("threads", 1u);
        o.emit_dir = c.value("emit_dir", std::string());
        o.tol = tolerances_from(c.value("tolerances", json::object()));
        again = run_search(o);
    } else {
        throw Error(ErrorKind::MalformedFile, "cannot replay command '" + command + "'");
    }

    RunReport rep;
    rep.command = "replay";
    rep.config = {{"command", command}, {"recorded_config", c}};
    const json& before = recorded.at("results");
    json differing = json::array();
    for (const auto& [key, value] : before.items())
        if (!again.results.contains(key) || again.results[key] != value) differing.push_back(key);
    for (const auto& [key, value] : again.results.items())
        if (!before.contains(key)) differing.push_back(key);
    rep.results = {{"replayed_command", command},
                   {"identical", differing.empty()},
                   {"differing_fields", differing},
                   {"results", again.results}};
    rep.checks = again.checks;
    rep.check_true("replay_identical", CheckLevel::theorem, differing.empty());
    return rep;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Schatten-norm inequalities for sums of matrices and their absolute values", "absnorm"};
    app.set_version_flag("--version", tool_version);
    app.require_subcommand(1);

    std::string report_path;
    std::vector<std::string> tol_assignments;
    const auto add_common = [&](CLI::App* sub, bool with_tol) {
        sub->add_option("--report", report_path, "Also write the report JSON to this file");
        if (with_tol)
            sub->add_option("--tol", tol_assignments, "Override a check tolerance, e.g. --tol ineq=1e-8")
                ->type_name("NAME=VALUE");
    };

    AbsOptions abs_opt;
    auto* abs_cmd = app.add_subcommand("abs", "Write |A| = (A*A)^{1/2} for a square matrix file");
    abs_cmd->add_option("input", abs_opt.input, "Input matrix file")->required();
    abs_cmd->add_option("-o,--output", abs_opt.output, "Output matrix file")->required();
    add_common(abs_cmd, false);

    RatioOptions ratio_opt;
    auto* ratio_cmd = app.add_subcommand("ratio", "Compare ||sum A_k||_p with ||sum |A_k| ||_p");
    ratio_cmd->add_option("files", ratio_opt.files, "Matrix files A_1 ... A_m")->required();
    ratio_cmd->add_option("--p", ratio_opt.p, "Schatten exponent (number >= 1 or 'inf')")->capture_default_str();
    add_common(ratio_cmd, true);

    ExtremalOptions ext_opt;
    double ext_s = 0.0;
    auto* ext_cmd = app.add_subcommand("extremal", "Build the equiangular rank-one family");
    ext_cmd->add_option("--m", ext_opt.m, "Family size (>= 2)")->required();
    auto* s_flag = ext_cmd->add_option("--s", ext_s, "Common inner product s in [0, 1]");
    ext_cmd->add_flag("--optimal", ext_opt.optimal, "Use the maximizing s for the chosen p");
    ext_cmd->add_option("--p", ext_opt.p, "Schatten exponent")->capture_default_str();
    ext_cmd->add_option("--dimension", ext_opt.dimension, "Embedding dimension n >= m (default m)");
    ext_cmd->add_option("--emit-tuple", ext_opt.emit_dir, "Directory for A_k matrix files");
    add_common(ext_cmd, true);

    ConjectureOptions conj_opt;
    double conj_p = 0.0;
    std::vector<std::string> m_grid_text;
    auto* conj_cmd = app.add_subcommand("conjecture", "Evaluate the conjectured constant c_p(m)");
    auto* p_flag = conj_cmd->add_option("--p", conj_p, "Exponent p > 1");
    conj_cmd->add_option("--m", conj_opt.m, "Number of summands")->capture_default_str();
    conj_cmd->add_flag("--table", conj_opt.table, "Evaluate the p-grid x m-grid table");
    conj_cmd->add_flag("--limit", conj_opt.limit, "Report the p -> 1 and p -> inf limits for --m");
    conj_cmd->add_option("--p-grid", conj_opt.p_grid, "Comma-separated p values")->delimiter(',');
    conj_cmd->add_option("--m-grid", m_grid_text, "Comma-separated m values or ranges like 2-16")->delimiter(',');
    conj_cmd->add_option("--csv", conj_opt.csv, "Write the table as CSV");
    add_common(conj_cmd, true);

    CheckOptions check_opt;
    auto* check_cmd = app.add_subcommand("check", "Run seeded property suites");
    check_cmd->add_option("--suite", check_opt.suite, "lemma|prop31|frobenius|majorization|invariance|all")
        ->capture_default_str();
    check_cmd->add_option("--samples", check_opt.samples, "Samples per suite (per cell for frobenius)")
        ->capture_default_str();
    check_cmd->add_option("--seed", check_opt.seed, "Master seed")->capture_default_str();
    check_cmd->add_option("--threads", check_opt.threads, "Worker threads (0 = all cores)")->capture_default_str();
    add_common(check_cmd, false);

    SearchOptions search_opt;
    auto* search_cmd = app.add_subcommand("search", "Pattern search for large ratios");
    search_cmd->add_option("--m", search_opt.m, "Number of summands")->capture_default_str();
    search_cmd->add_option("--n", search_opt.n, "Matrix dimension")->capture_default_str();
    search_cmd->add_option("--p", search_opt.p, "Schatten exponent")->capture_default_str();
    search_cmd->add_option("--restarts", search_opt.restarts, "Random restarts")->capture_default_str();
    search_cmd->add_option("--iters", search_opt.iters, "Ratio evaluations per restart")->capture_default_str();
    search_cmd->add_option("--step", search_opt.step, "Initial step size")->capture_default_str();
    search_cmd->add_option("--shrink", search_opt.shrink, "Step shrink factor in (0, 1)")->capture_default_str();
    search_cmd->add_option("--seed", search_opt.seed, "Master seed")->capture_default_str();
    search_cmd->add_option("--threads", search_opt.threads, "Worker threads (0 = all cores)")->capture_default_str();
    search_cmd->add_option("--emit-witness", search_opt.emit_dir, "Directory for the best tuple's matrix files");
    add_common(search_cmd, true);

    std::string replay_path;
    auto* replay_cmd = app.add_subcommand("replay", "Re-run a saved report and diff its results");
    replay_cmd->add_option("report_file", replay_path, "Report JSON")->required();
    add_common(replay_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        Tolerances tol;
        for (const auto& a : tol_assignments) tol.set(a);
        const auto started = std::chrono::steady_clock::now();
        RunReport rep;
        if (*abs_cmd) {
            rep = run_abs(abs_opt);
        } else if (*ratio_cmd) {
            ratio_opt.tol = tol;
            rep = run_ratio(ratio_opt);
        } else if (*ext_cmd) {
            if (*s_flag) ext_opt.s = ext_s;
            ext_opt.tol = tol;
            rep = run_extremal(ext_opt);
        } else if (*conj_cmd) {
            if (*p_flag) conj_opt.p = conj_p;
            if (!m_grid_text.empty()) {
                conj_opt.m_grid.clear();
                for (const auto& item : m_grid_text) {
                    const auto dash = item.find('-');
                    const std::size_t lo = std::stoul(item.substr(0, dash));
                    const std::size_t hi = dash == std::string::npos ? lo : std::stoul(item.substr(dash + 1));
                    for (std::size_t m = lo; m <= hi; ++m) conj_opt.m_grid.push_back(m);
                }
            }
            conj_opt.tol = tol;
            rep = run_conjecture(conj_opt);
        } else if (*check_cmd) {
            rep = run_check(check_opt);
        } else if (*search_cmd) {
            search_opt.tol = tol;
            rep = run_search(search_opt);
        } else if (*replay_cmd) {
            std::ifstream in(replay_path);
            if (!in) throw Error(ErrorKind::MalformedFile, "cannot open " + replay_path);
            rep = run_replay(json::parse(in));
        }
        rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        const std::string text = rep.to_json().dump(2) + "\n";
        out << text;
        if (!report_path.empty()) write_text(report_path, text);
        return rep.exit_code();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
    } catch (const json::exception& e) {
        err << "error: malformed report: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return exit_usage;
}

}  // namespace absnorm::cli
