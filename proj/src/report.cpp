#include "steinlab/report.hpp"

#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace steinlab {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string classify_human(const MixingParams& p, const Verdict& v) {
    std::ostringstream os;
    os << "pi(g; a=" << p.a << ", b=" << p.b << ", c=" << p.c << "), d=" << p.d
       << "\n"
       << "  admissibility:     " << to_string(v.admissibility) << " (" << v.rule
       << ")\n"
       << "  minimax:           " << (v.minimax ? "yes" : "no") << "\n"
       << "  tail integral int_1^inf dg/(g pi(g)): "
       << (v.integral_diverges ? "diverges" : "converges") << "\n";
    return os.str();
}

std::string classify_json(const MixingParams& p, const Verdict& v) {
    nlohmann::json j{{"d", p.d},
                     {"a", p.a},
                     {"b", p.b},
                     {"c", p.c},
                     {"admissibility", to_string(v.admissibility)},
                     {"rule", v.rule},
                     {"minimax", v.minimax},
                     {"integral_diverges", v.integral_diverges}};
    return j.dump(2) + "\n";
}

std::string marginal_csv(const MarginalEvaluator& ev,
                         const std::vector<double>& w_grid) {
    std::ostringstream os;
    os << "w,M0,M1,M2,tauberian_ratio\n";
    for (double w : w_grid) {
        os << fmt17(w) << ',' << fmt17(ev.weighted(w, 0)) << ','
           << fmt17(ev.weighted(w, 1)) << ',' << fmt17(ev.weighted(w, 2)) << ','
           << fmt17(w > 0.0 ? ev.tauberian_ratio(w) : 0.0) << '\n';
    }
    return os.str();
}

std::string estimate_csv(const GeneralizedBayesEstimator& est,
                         const std::vector<double>& w_grid) {
    std::ostringstream os;
    os << "w,multiplier,f\n";
    for (double w : w_grid)
        os << fmt17(w) << ',' << fmt17(est.multiplier(w)) << ','
           << fmt17(est.grad_log_marginal_norm(w)) << '\n';
    return os.str();
}

std::string sure_csv(const ShrinkageEstimator& est, const std::vector<double>& w_grid) {
    std::ostringstream os;
    os << "w,multiplier,sure\n";
    for (double w : w_grid)
        os << fmt17(w) << ',' << fmt17(est.multiplier(w)) << ',' << fmt17(est.sure(w))
           << '\n';
    return os.str();
}

std::string tauberian_csv(const MarginalEvaluator& ev,
                          const std::vector<double>& t_grid) {
    std::ostringstream os;
    os << "t,ratio,limit\n";
    const double limit = ev.tauberian_limit();
    for (double t : t_grid)
        os << fmt17(t) << ',' << fmt17(ev.tauberian_ratio(t)) << ',' << fmt17(limit)
           << '\n';
    return os.str();
}

std::string dominate_csv(std::shared_ptr<const DominatorConstruction> dc,
                         const std::vector<double>& w_grid) {
    ImprovedEstimator avg(dc, 1);
    ImprovedEstimator comp(dc, 2);
    GeneralizedBayesEstimator gb(dc->table());
    std::ostringstream os;
    os << "w,k_star,multiplier_avg,multiplier_comp,sure_pi,sure_avg,delta_w\n";
    for (double w : w_grid) {
        os << fmt17(w) << ',' << fmt17(dc->k_star(w)) << ','
           << fmt17(avg.multiplier(w)) << ',' << fmt17(comp.multiplier(w)) << ','
           << fmt17(gb.sure(w)) << ',' << fmt17(avg.sure(w)) << ','
           << fmt17(dc->delta_companion(w)) << '\n';
    }
    return os.str();
}

std::string risk_csv(const ShrinkageEstimator& est, const std::vector<double>& mu_grid,
                     long n, std::uint64_t seed) {
    std::ostringstream os;
    os << "mu_norm,risk,se,mean_sure\n";
    for (double mu : mu_grid) {
        const RiskPoint pt = mc_risk(est, mu, n, seed);
        os << fmt17(mu) << ',' << fmt17(pt.risk) << ',' << fmt17(pt.se) << ','
           << fmt17(pt.mean_sure) << '\n';
    }
    return os.str();
}

std::string blyth_csv(const MarginalTable& table, BlythSequence::Kind kind,
                      const std::vector<double>& i_list) {
    const MixingParams& p = table.evaluator().params();
    const double bound = kind == BlythSequence::Kind::Moment
                             ? blyth_moment_bound(p, table.evaluator().quad())
                             : std::numeric_limits<double>::infinity();
    std::ostringstream os;
    os << "i,delta_i,bound\n";
    for (double i : i_list) {
        const BlythSequence s(kind, i);
        os << fmt17(i) << ',' << fmt17(bayes_risk_difference(s, table)) << ','
           << fmt17(bound) << '\n';
    }
    return os.str();
}

}  // namespace steinlab
