#include "steinlab/marginal.hpp"

#include <cmath>
#include <vector>

namespace steinlab {

namespace {

// Graded breakpoints on (0, 1/2] approaching 0; used for both halves of the
// folded integral, so endpoint singularities always sit at a point where
// doubles have full resolution.
const std::vector<double>& half_mesh() {
    static const std::vector<double> mesh = [] {
        std::vector<double> pts{0.0};
        for (int k = 12; k >= 1; --k) pts.push_back(std::pow(10.0, -k));
        pts.push_back(0.25);
        pts.push_back(0.5);
        return pts;
    }();
    return mesh;
}

}  // namespace

// Core integral in s = 1/(g+1):
//   int_0^1 s^{d/2+shift-2-a} (1-s)^b (1 - log s)^c e^{-w s / 2}
//           * exp(extra_log(s, 1-s)) * factor(s, 1-s) ds
// The smooth part is assembled in log space so that extreme w cannot overflow,
// and the integral is folded at s = 1/2: the upper half is evaluated in the
// variable u = 1 - s, which keeps the (1-s)^b endpoint singularity resolvable
// (near s = 1 the spacing of doubles is ~1e-16, while near u = 0 it is not).
template <class ExtraLog, class Factor>
double MarginalEvaluator::integral_s(double w, double shift, ExtraLog extra_log,
                                     Factor factor) const {
    const double pexp = 0.5 * params_.d + shift - 2.0 - params_.a;
    const double b = params_.b;
    const double c = params_.c;
    auto lower = [&](double s) {
        const double omx = 1.0 - s;
        const double ls = std::log(s);
        const double lb = b == 0.0 ? 0.0 : b * std::log1p(-s);
        const double le =
            pexp * ls + lb + c * std::log(1.0 - ls) - 0.5 * w * s + extra_log(s, omx);
        if (le < -745.0) return 0.0;
        return std::exp(le) * factor(s, omx);
    };
    auto upper = [&](double u) {
        const double s = 1.0 - u;
        const double ls = std::log1p(-u);
        const double lb = b == 0.0 ? 0.0 : b * std::log(u);
        const double le =
            pexp * ls + lb + c * std::log(1.0 - ls) - 0.5 * w * s + extra_log(s, u);
        if (le < -745.0) return 0.0;
        return std::exp(le) * factor(s, u);
    };
    return integrate_segments(lower, half_mesh(), quad_) +
           integrate_segments(upper, half_mesh(), quad_);
}

double MarginalEvaluator::weighted(double w, int k) const {
    if (!(w >= 0.0)) throw std::domain_error("weighted: w must be >= 0");
    if (k < 0 || k > 2) throw std::invalid_argument("weighted: k must be in {0,1,2}");
    return integral_s(
        w, static_cast<double>(k), [](double, double) { return 0.0; },
        [](double, double) { return 1.0; });
}

double MarginalEvaluator::weighted_custom(
    double w, int k, const std::function<double(double)>& weight_g) const {
    if (!(w >= 0.0)) throw std::domain_error("weighted_custom: w must be >= 0");
    return integral_s(
        w, static_cast<double>(k), [](double, double) { return 0.0; },
        [&](double s, double omx) { return weight_g(omx / s); });
}

double MarginalEvaluator::weighted_inverse_g(double w) const {
    if (!(params_.b > 0.0))
        throw DivergenceError("weight 1/g is non-integrable at g = 0 unless b > 0");
    if (!(w >= 0.0)) throw std::domain_error("weighted_inverse_g: w must be >= 0");
    // 1/g = s/(1-s), folded into the log part
    return integral_s(
        w, 0.0,
        [](double s, double omx) { return std::log(s) - std::log(omx); },
        [](double, double) { return 1.0; });
}

double MarginalEvaluator::weighted_inverse_log(double w) const {
    if (!(w >= 0.0)) throw std::domain_error("weighted_inverse_log: w must be >= 0");
    return integral_s(
        w, 0.0,
        [](double s, double) { return -std::log(1.0 - std::log(s)); },
        [](double, double) { return 1.0; });
}

double MarginalEvaluator::tauberian_ratio(double t) const {
    if (!(t > 0.0)) throw std::domain_error("tauberian_ratio: t must be > 0");
    return std::pow(t, 0.5 * params_.d - 1.0) * marginal(t) /
           mixing_density(t, params_);
}

}  // namespace steinlab
