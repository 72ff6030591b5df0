// steinlab: numerical laboratory for generalized Bayes shrinkage estimation
// of a multivariate normal mean under regularly varying mixture priors.
//
// Subcommands: classify, marginal, estimate, sure, tauberian, dominate, risk,
// blyth. Output is CSV on stdout (or --out), with --json for structured
// reports where applicable. Exit codes: 0 success, 1 configuration error,
// 2 numerical failure (quadrature/divergence).

#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>
#include <json.hpp>

#include "steinlab/report.hpp"

namespace {

using namespace steinlab;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
}

struct Cli {
    RunConfig cfg;
    std::string config_path;
    std::string out_path;
    bool json = false;
    std::string mu_grid_str, i_list_str;

    void add_common(CLI::App* app) {
        app->add_option("--config", config_path, "JSON config file");
        app->add_option("--d", cfg.d, "dimension (>= 3)");
        app->add_option("--a", cfg.a, "mixing exponent a");
        app->add_option("--b", cfg.b, "mixing exponent b");
        app->add_option("--c", cfg.c, "mixing exponent c");
        app->add_option("--rel-tol", cfg.quad.rel_tol, "quadrature relative tolerance");
        app->add_option("--abs-tol", cfg.quad.abs_tol, "quadrature absolute tolerance");
        app->add_option("--max-subdiv", cfg.quad.max_subdivisions,
                        "quadrature subdivision budget");
        app->add_option("--out", out_path, "write output to file instead of stdout");
    }

    void add_wgrid(CLI::App* app) {
        app->add_option("--w-min", cfg.w_min, "w grid minimum");
        app->add_option("--w-max", cfg.w_max, "w grid maximum");
        app->add_option("--w-points", cfg.w_points, "w grid size (log-spaced)");
    }

    // flags override JSON config which overrides defaults
    void finalize(const CLI::App* app) {
        if (config_path.empty()) return;
        RunConfig from_file;
        apply_json_config(from_file, config_path);
        RunConfig merged = from_file;
        auto keep = [&](const std::string& flag) {
            return app->count(flag) > 0;
        };
        if (!keep("--d")) cfg.d = merged.d;
        if (!keep("--a")) cfg.a = merged.a;
        if (!keep("--b")) cfg.b = merged.b;
        if (!keep("--c")) cfg.c = merged.c;
        if (!keep("--rel-tol")) cfg.quad.rel_tol = merged.quad.rel_tol;
        if (!keep("--abs-tol")) cfg.quad.abs_tol = merged.quad.abs_tol;
        if (!keep("--max-subdiv"))
            cfg.quad.max_subdivisions = merged.quad.max_subdivisions;
        if (app->get_option_no_throw("--n") == nullptr || !keep("--n"))
            cfg.n = merged.n;
        if (app->get_option_no_throw("--seed") == nullptr || !keep("--seed"))
            cfg.seed = merged.seed;
        if (app->get_option_no_throw("--w-min") == nullptr || !keep("--w-min"))
            cfg.w_min = merged.w_min;
        if (app->get_option_no_throw("--w-max") == nullptr || !keep("--w-max"))
            cfg.w_max = merged.w_max;
        if (app->get_option_no_throw("--w-points") == nullptr || !keep("--w-points"))
            cfg.w_points = merged.w_points;
        if (mu_grid_str.empty()) cfg.mu_grid = merged.mu_grid;
        if (i_list_str.empty()) cfg.i_list = merged.i_list;
        if (app->get_option_no_throw("--estimator") == nullptr ||
            !keep("--estimator"))
            cfg.estimator = merged.estimator;
        if (app->get_option_no_throw("--kind") == nullptr || !keep("--kind"))
            cfg.blyth_kind = merged.blyth_kind;
    }

    std::shared_ptr<const MarginalEvaluator> evaluator() const {
        return std::make_shared<const MarginalEvaluator>(cfg.mixing(), cfg.quad);
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"steinlab: shrinkage estimation under regularly varying mixture priors"};
    app.require_subcommand(1);
    Cli cli;

    auto* cmd_classify = app.add_subcommand(
        "classify", "admissibility/minimaxity verdict for (d, a, b, c)");
    cli.add_common(cmd_classify);
    cmd_classify->add_flag("--json", cli.json, "machine-readable JSON report");

    auto* cmd_marginal = app.add_subcommand(
        "marginal", "CSV: w, M0, M1, M2, tauberian_ratio over the w grid");
    cli.add_common(cmd_marginal);
    cli.add_wgrid(cmd_marginal);

    auto* cmd_estimate = app.add_subcommand(
        "estimate", "CSV: w, multiplier, f(w) for the generalized Bayes estimator");
    cli.add_common(cmd_estimate);
    cli.add_wgrid(cmd_estimate);

    auto* cmd_sure =
        app.add_subcommand("sure", "CSV: w, multiplier, SURE for --estimator");
    cli.add_common(cmd_sure);
    cli.add_wgrid(cmd_sure);
    cmd_sure->add_option("--estimator", cli.cfg.estimator,
                         "gb | avg | comp | pp-avg | point:<g> | js");

    auto* cmd_tauberian =
        app.add_subcommand("tauberian", "CSV: t, ratio, limit over the w grid");
    cli.add_common(cmd_tauberian);
    cli.add_wgrid(cmd_tauberian);

    auto* cmd_dominate = app.add_subcommand(
        "dominate",
        "CSV: w, k_star, multipliers, SUREs, delta_w of the dominating pair");
    cli.add_common(cmd_dominate);
    cli.add_wgrid(cmd_dominate);

    auto* cmd_risk =
        app.add_subcommand("risk", "CSV: mu_norm, risk, se, mean_sure (Monte Carlo)");
    cli.add_common(cmd_risk);
    cmd_risk->add_option("--estimator", cli.cfg.estimator,
                         "gb | avg | comp | pp-avg | point:<g> | js");
    cmd_risk->add_option("--mu-grid", cli.mu_grid_str, "comma-separated |mu| values");
    cmd_risk->add_option("--n", cli.cfg.n, "Monte Carlo sample size");
    cmd_risk->add_option("--seed", cli.cfg.seed, "Monte Carlo seed");

    auto* cmd_blyth =
        app.add_subcommand("blyth", "CSV: i, delta_i, bound for a Blyth sequence");
    cli.add_common(cmd_blyth);
    cmd_blyth->add_option("--kind", cli.cfg.blyth_kind, "moment | log");
    cmd_blyth->add_option("--i-list", cli.i_list_str, "comma-separated indices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // configuration error
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        cli.finalize(sub);
        if (!cli.mu_grid_str.empty()) cli.cfg.mu_grid = parse_double_list(cli.mu_grid_str);
        if (!cli.i_list_str.empty()) cli.cfg.i_list = parse_double_list(cli.i_list_str);
        const RunConfig& cfg = cli.cfg;

        if (sub == cmd_classify) {
            const MixingParams p = cfg.mixing();
            const Verdict v = classify(p);
            emit(cli.json ? classify_json(p, v) : classify_human(p, v), cli.out_path);
        } else if (sub == cmd_marginal) {
            emit(marginal_csv(*cli.evaluator(), cfg.w_grid()), cli.out_path);
        } else if (sub == cmd_estimate) {
            GeneralizedBayesEstimator est(cli.evaluator());
            emit(estimate_csv(est, cfg.w_grid()), cli.out_path);
        } else if (sub == cmd_sure) {
            auto est = build_estimator(cfg.estimator, cfg);
            emit(sure_csv(*est, cfg.w_grid()), cli.out_path);
        } else if (sub == cmd_tauberian) {
            emit(tauberian_csv(*cli.evaluator(), cfg.w_grid()), cli.out_path);
        } else if (sub == cmd_dominate) {
            auto table = std::make_shared<const MarginalTable>(cli.evaluator());
            auto dc = std::make_shared<const DominatorConstruction>(table);
            emit(dominate_csv(dc, cfg.w_grid()), cli.out_path);
        } else if (sub == cmd_risk) {
            auto est = build_estimator(cfg.estimator, cfg);
            emit(risk_csv(*est, cfg.mu_grid, cfg.n, cfg.seed), cli.out_path);
        } else if (sub == cmd_blyth) {
            BlythSequence::Kind kind;
            if (cfg.blyth_kind == "moment")
                kind = BlythSequence::Kind::Moment;
            else if (cfg.blyth_kind == "log")
                kind = BlythSequence::Kind::Log;
            else
                throw std::invalid_argument("--kind must be moment or log");
            MarginalTable table(cli.evaluator());
            emit(blyth_csv(table, kind, cfg.i_list), cli.out_path);
        }
    } catch (const QuadratureError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const DivergenceError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
