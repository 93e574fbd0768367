// hcwand: boundary-law solver for the hard-core wand model on Cayley trees.
//
// Subcommands: solve, scan, curve, verify, simulate.  All flags are
// long-form; a key=value config file can supply any of them, with the
// command line taking precedence.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hcwand/bipartite.hpp"
#include "hcwand/exact_verify.hpp"
#include "hcwand/output.hpp"
#include "hcwand/rootfind.hpp"
#include "hcwand/scan.hpp"
#include "hcwand/tree_sim.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailure = 2;
constexpr int kExitDivergence = 3;

using nlohmann::json;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw std::runtime_error("cannot open output file: " + out_path);
    os << text;
}

json pair_solutions_json(const hcwand::SolutionSet& set) {
    json arr = json::array();
    for (const auto& s : set.solutions)
        arr.push_back({{"a", s.first}, {"c", s.second}, {"residual", s.residual}});
    return arr;
}

json law_json(const hcwand::PeriodicBoundaryLaw& law) {
    return {{"period", law.period},
            {"values", law.values},
            {"normalisable", law.normalisable()}};
}

int cmd_solve(const std::string& mode, int k, double lambda, double lambda2, double gamma,
              const std::string& out, const std::string& format) {
    json rep;
    rep["mode"] = mode;
    rep["k"] = k;
    rep["lambda"] = lambda;

    if (mode == "ti-q2") {
        double a = hcwand::solve_ti_q2(k, lambda);
        hcwand::ReducedSystem sys(k, 2, hcwand::ActivityProfile::ti_q2(lambda),
                                  hcwand::SystemKind::TI);
        std::vector<double> z = {a};
        rep["regime"] = "unique";
        rep["solutions"] = {{{"a", a}, {"residual", sys.max_abs_residual(z)}}};
        rep["laws"] = {law_json(hcwand::assemble_ti_vector_q2(a))};
    } else if (mode == "ti-q4") {
        auto set = hcwand::enumerate_ti_q4(k, lambda, lambda2);
        rep["lambda2"] = lambda2;
        rep["lambda_cr"] = hcwand::lambda_cr1(k, lambda2);
        rep["regime"] = set.regime == hcwand::Regime::Unique ? "unique" : "triple";
        rep["solutions"] = pair_solutions_json(set);
        rep["laws"] = json::array();
        for (const auto& s : set.solutions)
            rep["laws"].push_back(law_json(hcwand::assemble_ti_vector_q4(s.first, s.second, lambda2)));
    } else if (mode == "bip-q2") {
        auto set = hcwand::solve_bip_q2(k, lambda);
        rep["lambda_cr"] = hcwand::lambda_cr2(k);
        rep["regime"] = set.regime == hcwand::Regime::Unique ? "unique" : "triple";
        rep["solutions"] = pair_solutions_json(set);
        rep["laws"] = json::array();
        for (const auto& s : set.solutions)
            rep["laws"].push_back({{"even_level", law_json(hcwand::assemble_ti_vector_q2(s.first))},
                                   {"odd_level", law_json(hcwand::assemble_ti_vector_q2(s.second))}});
    } else if (mode == "bip-q4-I3") {
        auto sol = hcwand::solve_bip_q4_I3(k, lambda, gamma);
        rep["gamma"] = gamma;
        rep["regime"] = "unique";
        rep["solutions"] = {{{"a", sol.a}, {"b", sol.b}, {"c", sol.c}, {"d", sol.d},
                             {"residual", sol.residual}}};
        rep["laws"] = {law_json(hcwand::assemble_ti_vector_q4(sol.a, sol.b, gamma))};
    } else if (mode == "bip-q4-I4") {
        auto set = hcwand::solve_bip_q4_I4(k, lambda, gamma);
        rep["gamma"] = gamma;
        rep["lambda_cr"] = hcwand::lambda_cr3(k, gamma);
        rep["regime"] = set.regime == hcwand::Regime::Unique ? "unique" : "triple";
        rep["solutions"] = pair_solutions_json(set);
        rep["laws"] = json::array();
        for (const auto& s : set.solutions)
            rep["laws"].push_back(
                {{"even_level", law_json(hcwand::assemble_ti_vector_q4(s.first, s.first, gamma))},
                 {"odd_level", law_json(hcwand::assemble_ti_vector_q4(s.second, s.second, gamma))}});
    } else {
        std::cerr << "unknown solve mode: " << mode << "\n";
        return kExitUsage;
    }
    rep["normalisable"] = false;

    if (format == "csv") {
        std::ostringstream os;
        os << "a,c,residual\n";
        for (const auto& s : rep["solutions"]) {
            double a = s.contains("a") ? s["a"].get<double>() : NAN;
            double c = s.contains("c") ? s["c"].get<double>() : a;
            os << hcwand::format_double(a) << ',' << hcwand::format_double(c) << ','
               << hcwand::format_double(s["residual"].get<double>()) << '\n';
        }
        write_output(os.str(), out);
    } else {
        write_output(rep.dump(2), out);
    }
    return kExitOk;
}

int cmd_scan(const std::string& mode, int k, double lambda_min, double lambda_max, int steps,
             double lambda2, double gamma, const std::string& out, const std::string& format) {
    hcwand::ScanMode m;
    double aux;
    if (mode == "ti-q4") {
        m = hcwand::ScanMode::TiQ4;
        aux = lambda2;
    } else if (mode == "bip-q2") {
        m = hcwand::ScanMode::BipQ2;
        aux = 1.0;
    } else if (mode == "bip-q4-I4") {
        m = hcwand::ScanMode::BipQ4I4;
        aux = gamma;
    } else {
        std::cerr << "unknown scan mode: " << mode << "\n";
        return kExitUsage;
    }
    hcwand::ScanResult res = hcwand::scan_lambda(m, k, aux, lambda_min, lambda_max, steps);
    if (format == "csv")
        write_output(hcwand::scan_to_csv(res), out);
    else
        write_output(hcwand::scan_to_json(res).dump(2), out);
    return kExitOk;
}

int cmd_curve(int k, double lambda2, double t_min, double t_max, int steps,
              const std::string& out, const std::string& format) {
    auto rows = hcwand::emit_curve(k, lambda2, t_min, t_max, steps);
    double t_star = hcwand::locate_curve_minimum(k, lambda2);
    if (format == "csv") {
        write_output(hcwand::curve_to_csv(rows), out);
    } else {
        json j = hcwand::curve_to_json(k, lambda2, rows);
        j["minimum"] = {{"t", t_star},
                        {"lambda", hcwand::lambda_of_t(t_star, k, lambda2)},
                        {"lambda_cr1", hcwand::lambda_cr1(k, lambda2)}};
        write_output(j.dump(2), out);
    }
    return kExitOk;
}

int cmd_verify(int k_min, int k_max, const std::string& out, const std::string& format) {
    bool all_ok = true;
    json rows = json::array();
    std::ostringstream text;
    for (int k = k_min; k <= k_max; ++k) {
        auto rep = hcwand::exact::verify_k(k);
        all_ok = all_ok && rep.all_ok();
        rows.push_back({{"k", k},
                        {"low_coeffs", rep.low_coeffs_ok},
                        {"x4_formula", rep.x4_formula_ok},
                        {"high_coeffs_positive", rep.high_coeffs_positive},
                        {"binomial_inequality", rep.binomial_inequality_ok},
                        {"descartes", rep.descartes_ok},
                        {"eta_positive", rep.eta_positive_ok}});
        text << "k=" << k << (rep.all_ok() ? " PASS" : " FAIL") << '\n';
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "k,low_coeffs,x4_formula,high_coeffs_positive,binomial_inequality,descartes,eta_positive\n";
        for (const auto& r : rows)
            os << r["k"] << ',' << r["low_coeffs"] << ',' << r["x4_formula"] << ','
               << r["high_coeffs_positive"] << ',' << r["binomial_inequality"] << ','
               << r["descartes"] << ',' << r["eta_positive"] << '\n';
        write_output(os.str(), out);
    } else {
        json j = {{"config", {{"k_min", k_min}, {"k_max", k_max}}},
                  {"rows", rows},
                  {"all_ok", all_ok}};
        write_output(j.dump(2), out);
    }
    std::cerr << text.str();
    return all_ok ? kExitOk : kExitVerifyFailure;
}

int cmd_simulate(int k, double lambda, double lambda2, bool use_q4, int depth, int M,
                 unsigned long long seed, const std::string& out, const std::string& format) {
    hcwand::ActivityProfile acts =
        use_q4 ? hcwand::ActivityProfile::q4(lambda, lambda2) : hcwand::ActivityProfile::ti_q2(lambda);

    std::vector<double> ti_pattern;
    if (use_q4) {
        double astar = hcwand::solve_ti_q4_diagonal(k, lambda, lambda2);
        ti_pattern = {1.0, astar, lambda2, astar};
    } else {
        ti_pattern = {1.0, hcwand::solve_ti_q2(k, lambda)};
    }

    auto boundary =
        hcwand::make_boundary(hcwand::BoundaryKind::PerturbedPattern, M, ti_pattern, 0.2, seed);
    hcwand::RunOptions opts;
    opts.metric_margin = std::min(M - 1, depth + 2);  // exclude the edge-contamination cone
    auto result = hcwand::run(k, depth, M, acts, boundary, ti_pattern, opts);

    // height-periodic targets, when the 2-cycle exists
    std::optional<hcwand::TwoCycle> cycle;
    {
        hcwand::DecreasingMap map =
            use_q4 ? hcwand::make_map(hcwand::MapFamily::BipQ4, k, lambda, lambda2)
                   : hcwand::make_map(hcwand::MapFamily::BipQ2, k, lambda);
        auto fp = hcwand::solve_decreasing_fixed_point(map);
        cycle = hcwand::find_two_cycle(map, fp.x0, hcwand::invariant_bracket(map));
    }

    json j;
    j["config"] = {{"k", k},      {"lambda", lambda}, {"q", use_q4 ? 4 : 2},
                   {"depth", depth}, {"truncate", M},    {"seed", seed}};
    if (use_q4) j["config"]["lambda2"] = lambda2;
    j["diverged"] = result.diverged;
    j["converged_to_ti"] = result.converged;
    j["ti_metric_per_level"] = result.metrics;

    if (cycle) {
        std::vector<double> p1 = ti_pattern, p2 = ti_pattern;
        p1[1] = cycle->x1;
        p2[1] = cycle->x2;
        if (use_q4) {
            p1[3] = cycle->x1;
            p2[3] = cycle->x2;
        }
        const auto& last = result.levels.back();
        const auto& prev = result.levels[result.levels.size() - 2];
        double m_last = std::min(hcwand::pattern_deviation(last, p1, opts.metric_margin),
                                 hcwand::pattern_deviation(last, p2, opts.metric_margin));
        double m_prev = std::min(hcwand::pattern_deviation(prev, p1, opts.metric_margin),
                                 hcwand::pattern_deviation(prev, p2, opts.metric_margin));
        j["two_cycle"] = {{"a1", cycle->x1}, {"a2", cycle->x2}};
        j["cycle_metric_last_two_levels"] = {m_prev, m_last};
    }

    std::vector<double> root_law(result.levels.back().values);
    j["root_law"] = root_law;

    if (format == "csv") {
        std::ostringstream os;
        os << "level,ti_metric\n";
        for (size_t i = 0; i < result.metrics.size(); ++i)
            os << i << ',' << hcwand::format_double(result.metrics[i]) << '\n';
        write_output(os.str(), out);
    } else {
        write_output(j.dump(2), out);
    }
    return result.diverged ? kExitDivergence : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boundary-law solver for the hard-core wand model on Cayley trees"};
    app.require_subcommand(1);
    app.set_config("--config");

    std::string mode, out, format = "json";
    int k = 2, steps = 101, depth = 12, truncate = 50, k_max = 12, k_min = 2;
    double lambda = 1.0, lambda_min = 0.0, lambda_max = 0.0, lambda2 = 1.0, gamma = 1.0;
    double t_min = 0.1, t_max = 10.0;
    unsigned long long seed = 1;
    bool have_lambda2 = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--k", k, "tree order (>= 2)")->check(CLI::Range(2, 64));
        sub->add_option("--out", out, "output file (default: stdout)");
        sub->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* solve = app.add_subcommand("solve", "enumerate solutions at one parameter point");
    add_common(solve);
    solve->add_option("--mode", mode)
        ->required()
        ->check(CLI::IsMember({"ti-q2", "ti-q4", "bip-q2", "bip-q4-I3", "bip-q4-I4"}));
    solve->add_option("--lambda", lambda)->required();
    solve->add_option("--lambda2", lambda2);
    solve->add_option("--gamma", gamma);

    CLI::App* scan = app.add_subcommand("scan", "sweep lambda and refine the bifurcation point");
    add_common(scan);
    scan->add_option("--mode", mode)
        ->required()
        ->check(CLI::IsMember({"ti-q4", "bip-q2", "bip-q4-I4"}));
    scan->add_option("--lambda-min", lambda_min)->required();
    scan->add_option("--lambda-max", lambda_max)->required();
    scan->add_option("--steps", steps)->check(CLI::Range(2, 1000000));
    scan->add_option("--lambda2", lambda2);
    scan->add_option("--gamma", gamma);

    CLI::App* curve = app.add_subcommand("curve", "emit the lambda(t) curve");
    add_common(curve);
    curve->add_option("--lambda2", lambda2)->required();
    curve->add_option("--t-min", t_min);
    curve->add_option("--t-max", t_max);
    curve->add_option("--steps", steps)->check(CLI::Range(2, 1000000));

    CLI::App* verify = app.add_subcommand("verify", "exact integer identity checks");
    verify->add_option("--k-min", k_min)->check(CLI::Range(2, 64));
    verify->add_option("--k-max", k_max)->check(CLI::Range(2, 64));
    verify->add_option("--out", out, "output file (default: stdout)");
    verify->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    CLI::App* simulate = app.add_subcommand("simulate", "truncated boundary-law recursion");
    add_common(simulate);
    simulate->add_option("--lambda", lambda)->required();
    simulate->add_option("--lambda2", lambda2)->capture_default_str();
    simulate->add_flag("--q4", have_lambda2, "use the 4-periodic activity profile");
    simulate->add_option("--depth", depth)->check(CLI::Range(1, 100000));
    simulate->add_option("--truncate", truncate)->check(CLI::Range(3, 100000));
    simulate->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed())
            return cmd_solve(mode, k, lambda, lambda2, gamma, out, format);
        if (scan->parsed())
            return cmd_scan(mode, k, lambda_min, lambda_max, steps, lambda2, gamma, out, format);
        if (curve->parsed()) return cmd_curve(k, lambda2, t_min, t_max, steps, out, format);
        if (verify->parsed()) {
            if (k_min > k_max) {
                std::cerr << "malformed k range: k-min > k-max\n";
                return kExitUsage;
            }
            return cmd_verify(k_min, k_max, out, format);
        }
        if (simulate->parsed())
            return cmd_simulate(k, lambda, lambda2, have_lambda2, depth, truncate, seed, out,
                                format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
