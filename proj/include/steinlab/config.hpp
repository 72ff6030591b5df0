#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "steinlab/dominate.hpp"

namespace steinlab {

/// Run configuration shared by the CLI subcommands. Precedence: command-line
/// flags override a JSON config file (--config), which overrides these
/// defaults.
struct RunConfig {
    int d = 6;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    QuadratureConfig quad{};
    long n = 200000;
    std::uint64_t seed = 20210901;
    double w_min = 1e-2;
    double w_max = 1e2;
    int w_points = 50;
    std::vector<double> mu_grid{0.0, 2.0, 5.0};
    std::vector<double> i_list{10.0, 100.0, 1000.0, 10000.0};
    std::string blyth_kind = "moment";
    std::string estimator = "gb";

    MixingParams mixing() const { return MixingParams(d, a, b, c); }
    std::vector<double> w_grid() const;  // log-spaced
};

/// Overlay fields present in a JSON config file onto cfg.
void apply_json_config(RunConfig& cfg, const std::string& path);

std::vector<double> parse_double_list(const std::string& csv);

/// Build an estimator by CLI name: gb | avg | comp | pp-avg | point:<g> | js
/// | identity. avg/comp/pp-avg construct the dominator (throws
/// DivergenceError outside the inadmissible regime).
std::shared_ptr<const ShrinkageEstimator> build_estimator(const std::string& name,
                                                          const RunConfig& cfg);

}  // namespace steinlab
