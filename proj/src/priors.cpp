#include "steinlab/priors.hpp"

#include <cmath>

namespace steinlab {

double mixing_density(double g, const MixingParams& p) {
    if (!(g >= 0.0)) throw std::domain_error("mixing_density: g must be >= 0");
    const double gp1 = g + 1.0;
    double ratio_pow;
    if (p.b == 0.0)
        ratio_pow = 1.0;  // 0^0 = 1 convention
    else
        ratio_pow = std::pow(g / gp1, p.b);
    return std::pow(gp1, p.a) * ratio_pow * std::pow(log_weight(g), p.c);
}

double log_slope(double g, const MixingParams& p) {
    if (!(g > 0.0)) throw std::domain_error("log_slope: g must be > 0");
    return p.a + p.b / g + p.c / log_weight(g);
}

std::pair<double, double> stein_prior_check(double mu_norm_sq, int d,
                                            const QuadratureConfig& cfg) {
    if (d < 3) throw std::invalid_argument("stein_prior_check: d >= 3 required");
    if (!(mu_norm_sq > 0.0))
        throw std::domain_error("stein_prior_check: |mu|^2 must be positive");

    // Map g = s/(1-s) and fold at s = 1/2, so that the endpoint behavior at
    // s = 1 (an integrable singularity when d = 3) is evaluated in u = 1 - s
    // where doubles keep full resolution.
    const double m2 = mu_norm_sq;
    const double half_d = 0.5 * d;
    auto lower = [&](double s) {
        // g = s/(1-s): log g = log s - log(1-s), 1/g = (1-s)/s
        const double lg = std::log(s) - std::log1p(-s);
        const double le = -half_d * lg - 0.5 * m2 * (1.0 - s) / s - 2.0 * std::log1p(-s);
        return le < -745.0 ? 0.0 : std::exp(le);
    };
    auto upper = [&](double u) {
        // s = 1-u: log g = log(1-u) - log u, 1/g = u/(1-u)
        const double lg = std::log1p(-u) - std::log(u);
        const double le = -half_d * lg - 0.5 * m2 * u / (1.0 - u) - 2.0 * std::log(u);
        return le < -745.0 ? 0.0 : std::exp(le);
    };
    std::vector<double> pts{0.0};
    for (int k = 12; k >= 1; --k) pts.push_back(std::pow(10.0, -k));
    pts.push_back(0.25);
    pts.push_back(0.5);
    const double lhs = integrate_segments(lower, pts, cfg) +
                       integrate_segments(upper, pts, cfg);

    const double rhs = std::tgamma(half_d - 1.0) * std::pow(2.0, half_d - 1.0) *
                       std::pow(mu_norm_sq, 1.0 - half_d);
    return {lhs, rhs};
}

}  // namespace steinlab
