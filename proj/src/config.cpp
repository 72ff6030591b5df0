#include "steinlab/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace steinlab {

std::vector<double> RunConfig::w_grid() const {
    if (w_points < 2 || !(w_max > w_min) || !(w_min > 0.0))
        throw std::invalid_argument("w grid: need w_points >= 2, 0 < w_min < w_max");
    std::vector<double> grid(w_points);
    const double l0 = std::log(w_min), l1 = std::log(w_max);
    for (int i = 0; i < w_points; ++i)
        grid[i] = std::exp(l0 + (l1 - l0) * i / (w_points - 1));
    return grid;
}

void apply_json_config(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    nlohmann::json j;
    in >> j;
    if (j.contains("d")) cfg.d = j["d"].get<int>();
    if (j.contains("a")) cfg.a = j["a"].get<double>();
    if (j.contains("b")) cfg.b = j["b"].get<double>();
    if (j.contains("c")) cfg.c = j["c"].get<double>();
    if (j.contains("quadrature")) {
        const auto& q = j["quadrature"];
        if (q.contains("rel_tol")) cfg.quad.rel_tol = q["rel_tol"].get<double>();
        if (q.contains("abs_tol")) cfg.quad.abs_tol = q["abs_tol"].get<double>();
        if (q.contains("max_subdivisions"))
            cfg.quad.max_subdivisions = q["max_subdivisions"].get<int>();
    }
    if (j.contains("mc")) {
        const auto& m = j["mc"];
        if (m.contains("n")) cfg.n = m["n"].get<long>();
        if (m.contains("seed")) cfg.seed = m["seed"].get<std::uint64_t>();
    }
    if (j.contains("grids")) {
        const auto& g = j["grids"];
        if (g.contains("w_min")) cfg.w_min = g["w_min"].get<double>();
        if (g.contains("w_max")) cfg.w_max = g["w_max"].get<double>();
        if (g.contains("w_points")) cfg.w_points = g["w_points"].get<int>();
        if (g.contains("mu_grid")) cfg.mu_grid = g["mu_grid"].get<std::vector<double>>();
        if (g.contains("i_list")) cfg.i_list = g["i_list"].get<std::vector<double>>();
    }
    if (j.contains("estimator")) cfg.estimator = j["estimator"].get<std::string>();
    if (j.contains("blyth_kind")) cfg.blyth_kind = j["blyth_kind"].get<std::string>();
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument("bad number in list: " + tok);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty numeric list");
    return out;
}

std::shared_ptr<const ShrinkageEstimator> build_estimator(const std::string& name,
                                                          const RunConfig& cfg) {
    if (name == "js") return std::make_shared<JamesSteinEstimator>(cfg.d);
    if (name == "identity") return std::make_shared<IdentityEstimator>(cfg.d);
    if (name.rfind("point:", 0) == 0)
        return std::make_shared<PointPriorEstimator>(cfg.d,
                                                     std::stod(name.substr(6)));

    auto ev = std::make_shared<const MarginalEvaluator>(cfg.mixing(), cfg.quad);
    auto table = std::make_shared<const MarginalTable>(ev);
    if (name == "gb") return std::make_shared<GeneralizedBayesEstimator>(table);

    auto dc = std::make_shared<const DominatorConstruction>(table);
    if (name == "avg") return std::make_shared<ImprovedEstimator>(dc, 1);
    if (name == "comp") return std::make_shared<ImprovedEstimator>(dc, 2);
    if (name == "pp-avg")
        return std::make_shared<PositivePartEstimator>(
            std::make_shared<ImprovedEstimator>(dc, 1));
    throw std::invalid_argument("unknown estimator: " + name);
}

}  // namespace steinlab
