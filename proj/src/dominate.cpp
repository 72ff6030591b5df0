#include "steinlab/dominate.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "steinlab/classify.hpp"

namespace steinlab {

namespace {

// Breakpoints for an integral in z = log t over [zlo, zhi], one per unit.
std::vector<double> unit_mesh(double zlo, double zhi) {
    std::vector<double> pts{zlo};
    for (double z = std::floor(zlo) + 1.0; z < zhi; z += 1.0)
        if (z > zlo) pts.push_back(z);
    pts.push_back(zhi);
    return pts;
}

}  // namespace

DominatorConstruction::DominatorConstruction(
    std::shared_ptr<const MarginalTable> table, double w_min, double w_max)
    : table_(std::move(table)), w_min_(w_min), w_max_(w_max) {
    const MixingParams& p = table_->evaluator().params();
    if (tail_integral_diverges(p))
        throw DivergenceError(
            "Brown integral diverges for these parameters; no dominator exists "
            "(estimator is admissible)");

    const MarginalEvaluator& ev = table_->evaluator();
    const double limit = ev.tauberian_limit();

    // Truncation point: regular-variation tail of m within 0.5% of its limit.
    truncation_ = 1e4;
    while (truncation_ < w_max_ &&
           std::fabs(ev.tauberian_ratio(truncation_) / limit - 1.0) > 5e-3)
        truncation_ *= 2.0;

    // Tail of the Brown integral from T: m(t) ~ limit * pi(t) / t^{d/2-1}, so
    //   int_T^inf dt/(t^{d/2} m(t)) ~ (1/limit) int_T^inf dt/(t pi(t)).
    // In y = L(t) the latter is
    //   int_{L(T)}^inf e^{-a(y-1)} y^{-c} ((t+1)/t)^{b+1} dy,  t = e^{y-1} - 1.
    const double y0 = log_weight(truncation_);
    const double step = 1.0 / std::max(p.a, 0.02);
    auto tail_f = [&](double y) {
        double edge = 1.0;  // ((t+1)/t)^{b+1} with t = e^{y-1} - 1; 1 to 1e-17
        if (y - 1.0 < 40.0) {  // beyond that expm1 overflows and the factor is 1
            const double t = std::expm1(y - 1.0);
            edge = std::pow((t + 1.0) / t, p.b + 1.0);
        }
        return std::exp(-p.a * (y - 1.0)) * std::pow(y, -p.c) * edge;
    };
    std::vector<double> ypts;
    for (int j = 0; j <= 45; ++j) ypts.push_back(y0 + j * step);
    double tail = integrate_segments(tail_f, ypts, ev.quad());
    if (p.a == 0.0)  // power-law remainder beyond the numeric window
        tail += std::pow(ypts.back(), 1.0 - p.c) / (p.c - 1.0);
    tail /= limit;

    brown_c_ = brown_integral(truncation_) + tail;

    // Cumulative tabulation of I(w) = int_1^w dt/(t^{d/2} m(t)) on a log grid
    // anchored at w = 1, then 1/q* = brown_c - I/2.
    const int per_decade = 80;
    const int lo = static_cast<int>(std::llround(std::log10(w_min_)));
    const int hi = static_cast<int>(std::llround(std::log10(w_max_)));
    const int n = (hi - lo) * per_decade + 1;
    const int anchor = -lo * per_decade;  // index of w = 1
    std::vector<double> z(n);
    const double ln10 = std::log(10.0);
    for (int i = 0; i < n; ++i) z[i] = (lo + static_cast<double>(i) / per_decade) * ln10;

    const double half_d = 0.5 * dim();
    auto f = [&](double zz) {
        const double t = std::exp(zz);
        return std::exp(zz * (1.0 - half_d)) / table_->m(t);
    };
    QuadratureConfig seg_cfg = ev.quad();
    seg_cfg.rel_tol = 1e-11;
    seg_cfg.abs_tol = 1e-300;
    seg_cfg.max_subdivisions = 100;

    std::vector<double> cum(n, 0.0);
    for (int i = anchor + 1; i < n; ++i)
        cum[i] = cum[i - 1] + integrate(f, z[i - 1], z[i], seg_cfg);
    for (int i = anchor - 1; i >= 0; --i)
        cum[i] = cum[i + 1] - integrate(f, z[i], z[i + 1], seg_cfg);

    std::vector<double> lq(n);
    for (int i = 0; i < n; ++i) {
        const double inv_q = brown_c_ - 0.5 * cum[i];
        if (!(inv_q > 0.0))
            throw QuadratureError("dominator: 1/q* tabulated non-positive");
        lq[i] = std::log(inv_q);
    }
    for (int i = 1; i < n; ++i)
        if (!(lq[i] < lq[i - 1]))
            throw QuadratureError("dominator: tabulated 1/q* not strictly decreasing");
    log_inv_q_ = PchipInterpolant(std::move(z), std::move(lq));
}

double DominatorConstruction::brown_integral(double T) const {
    if (!(T >= 1.0)) throw std::domain_error("brown_integral: T >= 1 required");
    if (T == 1.0) return 0.0;
    const double half_d = 0.5 * dim();
    auto f = [&](double z) {
        const double t = std::exp(z);
        return std::exp(z * (1.0 - half_d)) / table_->m(t);
    };
    QuadratureConfig cfg = table_->evaluator().quad();
    cfg.rel_tol = std::min(cfg.rel_tol, 1e-10);
    return integrate_segments(f, unit_mesh(0.0, std::log(T)), cfg);
}

double DominatorConstruction::inv_q_star(double w) const {
    if (!(w > 0.0)) throw std::domain_error("inv_q_star: w must be > 0");
    if (w < w_min_ || w > w_max_) return inv_q_star_direct(w);
    return std::exp(log_inv_q_(std::log(w)));
}

double DominatorConstruction::inv_q_star_direct(double w) const {
    if (!(w > 0.0)) throw std::domain_error("inv_q_star_direct: w must be > 0");
    const double half_d = 0.5 * dim();
    auto f = [&](double z) {
        const double t = std::exp(z);
        return std::exp(z * (1.0 - half_d)) / table_->m(t);
    };
    QuadratureConfig cfg = table_->evaluator().quad();
    cfg.rel_tol = std::min(cfg.rel_tol, 1e-11);
    const double zw = std::log(w);
    const double I = zw >= 0.0 ? integrate_segments(f, unit_mesh(0.0, zw), cfg)
                               : -integrate_segments(f, unit_mesh(zw, 0.0), cfg);
    return brown_c_ - 0.5 * I;
}

double DominatorConstruction::delta_companion(double w) const {
    if (!(w > 0.0)) throw std::domain_error("delta_companion: w must be > 0");
    const double h = 1e-3 * w;
    auto k = [&](double ww) { return k_star_direct(ww); };
    const double d1 = (k(w + h) - k(w - h)) / (2.0 * h);
    const double d2 = (k(w + 0.5 * h) - k(w - 0.5 * h)) / h;
    const double kp = (4.0 * d2 - d1) / 3.0;
    const double kw = k(w);
    const double m = table_->m(w);
    const int d = dim();
    return 4.0 * w * kw * kw / m *
           (1.0 / m - (d * kw + 2.0 * w * kp) / (w * kw * kw));
}

ImprovedEstimator::ImprovedEstimator(std::shared_ptr<const DominatorConstruction> dc,
                                     int scale)
    : ShrinkageEstimator(dc->dim()), dc_(std::move(dc)), scale_(scale) {
    if (scale != 1 && scale != 2)
        throw std::invalid_argument("ImprovedEstimator: scale must be 1 or 2");
}

double ImprovedEstimator::multiplier(double w) const {
    if (!(w >= 0.0)) throw std::domain_error("multiplier: w must be >= 0");
    const MarginalTable& mt = *dc_->table();
    if (w == 0.0) return -std::numeric_limits<double>::infinity();
    return 1.0 - mt.ratio1(w) - scale_ * dc_->k_star(w) / mt.m(w);
}

double ImprovedEstimator::multiplier_deriv(double w) const {
    if (!(w > 0.0)) throw std::domain_error("multiplier_deriv: w must be > 0");
    const MarginalTable& mt = *dc_->table();
    const double m = mt.m(w);
    const double r1 = mt.ratio1(w);
    const double r2 = mt.ratio2(w);
    const double gb_deriv = 0.5 * (r2 - r1 * r1);

    const double half_d = 0.5 * dim();
    const double wpow = std::pow(w, -half_d);  // w^{-d/2}
    const double q = 1.0 / dc_->inv_q_star(w);
    const double kst = wpow * q;
    // d/dw (1/q*) = -1/(2 w^{d/2} m)  =>  q*' = q*^2 wpow / (2 m)
    const double qp = q * q * wpow / (2.0 * m);
    const double kp = -half_d * wpow / w * q + wpow * qp;
    const double mp = -0.5 * r1 * m;  // m' = -M_1/2
    return gb_deriv - scale_ * (kp * m - kst * mp) / (m * m);
}

std::pair<std::shared_ptr<ShrinkageEstimator>, std::shared_ptr<ShrinkageEstimator>>
improved_estimators(std::shared_ptr<const DominatorConstruction> dc) {
    return {std::make_shared<ImprovedEstimator>(dc, 1),
            std::make_shared<ImprovedEstimator>(dc, 2)};
}

}  // namespace steinlab
