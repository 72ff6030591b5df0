#include "steinlab/blyth.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "steinlab/classify.hpp"

namespace steinlab {

double h_sq(double g, const BlythSequence& s) {
    if (!(g >= 0.0)) throw std::domain_error("h_sq: g must be >= 0");
    if (s.kind == BlythSequence::Kind::Moment) return s.index / (g + s.index);
    const double h = h_eval(g, s);
    return h * h;
}

double h_eval(double g, const BlythSequence& s) {
    if (!(g >= 0.0)) throw std::domain_error("h_eval: g must be >= 0");
    if (s.kind == BlythSequence::Kind::Moment)
        return std::sqrt(s.index / (g + s.index));
    if (g >= s.index) return 0.0;
    // int_0^g dt/((t+1)L(t)) = log L(g) in closed form
    return 1.0 - std::log(log_weight(g)) / std::log(log_weight(s.index));
}

double h_log_slope_bound(double g, const BlythSequence& s) {
    if (s.kind != BlythSequence::Kind::Log)
        throw std::invalid_argument("h_log_slope_bound: log kind only");
    if (g >= s.index) return 0.0;
    // |h_i'(g)| (g+1) L(g) = 1 / log L(i)
    return 1.0 / std::log(log_weight(s.index));
}

double delta_i_multiplier(double w, const BlythSequence& s,
                          const MarginalEvaluator& ev) {
    auto weight = [&](double g) { return h_sq(g, s); };
    const double n0 = ev.weighted_custom(w, 0, weight);
    const double n1 = ev.weighted_custom(w, 1, weight);
    return 1.0 - n1 / n0;
}

namespace {

void require_proper(const BlythSequence& s, const MixingParams& p) {
    if (s.kind == BlythSequence::Kind::Moment) {
        const bool finite_moment = p.a < 0.0 || (p.a == 0.0 && p.c < -1.0);
        if (!finite_moment)
            throw std::domain_error(
                "moment-kind Blyth prior is improper: needs the (g+1)^{-1} "
                "moment finite (a < 0, or a = 0 and c < -1)");
    } else {
        if (!(p.a == 0.0 && p.b >= 0.0 && std::fabs(p.c) <= 1.0))
            throw std::domain_error(
                "log-kind Blyth sequence is exercised only for a = 0, b >= 0, "
                "|c| <= 1");
    }
}

}  // namespace

double bayes_risk_difference(const BlythSequence& s, const MarginalTable& table) {
    const MarginalEvaluator& ev = table.evaluator();
    const MixingParams& p = ev.params();
    require_proper(s, p);

    const double half_d = 0.5 * p.d;
    auto weight = [&](double g) { return h_sq(g, s); };
    auto integrand_w = [&](double w) {
        const double n0 = ev.weighted_custom(w, 0, weight);
        const double n1 = ev.weighted_custom(w, 1, weight);
        const double mult_i = 1.0 - n1 / n0;
        const double mult_pi = 1.0 - table.ratio1(w);
        const double gap = mult_pi - mult_i;
        return std::pow(w, half_d) * gap * gap * n0;
    };
    // v = log(1+w); extend by unit segments until the tail stops contributing
    auto fv = [&](double v) {
        const double w = std::expm1(v);
        return integrand_w(w) * (1.0 + w);
    };
    QuadratureConfig cfg = ev.quad();
    cfg.rel_tol = std::max(cfg.rel_tol, 1e-8);  // outer integral; inner is 1e-9
    double total = 0.0;
    int quiet = 0;
    for (int seg = 0; seg < 40 && quiet < 2; ++seg) {
        const double part =
            integrate(fv, static_cast<double>(seg), seg + 1.0, cfg);
        total += part;
        quiet = std::fabs(part) <= 1e-10 * std::fabs(total) + cfg.abs_tol ? quiet + 1 : 0;
    }
    const double cst =
        std::pow(std::numbers::pi, half_d) / std::tgamma(half_d);
    return cst * total;
}

double blyth_moment_bound(const MixingParams& p, const QuadratureConfig& cfg) {
    const double moment = mixture_moment(p, cfg);
    return 4.0 * p.d * std::pow(2.0 * std::numbers::pi, 0.5 * p.d) * moment;
}

namespace {

// (pi^{d/2}/Gamma(d/2)) int_0^inf w^{d/2-2} e^{-w/beta} dw with graded mesh
// near w = 0 (the integrand is singular there for d = 3).
double radial_inverse_sq(double beta, int d, const QuadratureConfig& cfg) {
    const double half_d = 0.5 * d;
    const double wmax = 400.0 * beta;
    auto f = [&](double w) { return std::pow(w, half_d - 2.0) * std::exp(-w / beta); };
    std::vector<double> pts{0.0};
    for (int k = 10; k >= 1; --k) pts.push_back(wmax * std::pow(10.0, -k));
    pts.push_back(0.25 * wmax);
    pts.push_back(0.5 * wmax);
    pts.push_back(wmax);
    return std::pow(std::numbers::pi, half_d) / std::tgamma(half_d) *
           integrate_segments(f, pts, cfg);
}

}  // namespace

std::pair<double, double> gamma_identity(double g, int d, const QuadratureConfig& cfg) {
    if (d < 3) throw std::invalid_argument("gamma_identity: d >= 3 required");
    if (!(g >= 0.0)) throw std::domain_error("gamma_identity: g must be >= 0");
    const double half_d = 0.5 * d;
    const double lhs =
        std::pow(g + 1.0, -half_d) * radial_inverse_sq(2.0 * (g + 1.0), d, cfg);
    const double rhs =
        std::pow(std::numbers::pi, half_d) * std::pow(2.0, half_d) / (d - 2.0) /
        (g + 1.0);
    return {lhs, rhs};
}

std::pair<double, double> gamma_alpha_identity(double alpha, int d,
                                               const QuadratureConfig& cfg) {
    if (d < 3) throw std::invalid_argument("gamma_alpha_identity: d >= 3 required");
    if (!(alpha > 0.0)) throw std::domain_error("gamma_alpha_identity: alpha > 0");
    const double half_d = 0.5 * d;
    const double lhs = radial_inverse_sq(alpha, d, cfg);
    const double rhs = 2.0 * std::pow(std::numbers::pi, half_d) *
                       std::pow(alpha, half_d - 1.0) / (d - 2.0);
    return {lhs, rhs};
}

}  // namespace steinlab
