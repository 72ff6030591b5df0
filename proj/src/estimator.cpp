#include "steinlab/estimator.hpp"

#include <cmath>

namespace steinlab {

MarginalTable::MarginalTable(std::shared_ptr<const MarginalEvaluator> ev,
                             double w_max, int nodes)
    : ev_(std::move(ev)), w_max_(w_max) {
    if (nodes < 16) throw std::invalid_argument("MarginalTable: too few nodes");
    const double v_max = std::log1p(w_max_);
    std::vector<double> v(nodes), r1(nodes), r2(nodes), lm(nodes);
    for (int i = 0; i < nodes; ++i) {
        v[i] = v_max * i / (nodes - 1);
        const double w = std::expm1(v[i]);
        const double m0 = ev_->weighted(w, 0);
        const double m1 = ev_->weighted(w, 1);
        const double m2 = ev_->weighted(w, 2);
        r1[i] = m1 / m0;
        r2[i] = m2 / m0;
        lm[i] = std::log(m0);
    }
    m_at_zero_ = std::exp(lm[0]);
    r1_ = PchipInterpolant(v, std::move(r1));
    r2_ = PchipInterpolant(v, std::move(r2));
    log_m_ = PchipInterpolant(std::move(v), std::move(lm));
}

double MarginalTable::ratio1(double w) const {
    if (w > w_max_) return ev_->weighted(w, 1) / ev_->weighted(w, 0);
    return r1_(std::log1p(w));
}

double MarginalTable::ratio2(double w) const {
    if (w > w_max_) return ev_->weighted(w, 2) / ev_->weighted(w, 0);
    return r2_(std::log1p(w));
}

double MarginalTable::m(double w) const {
    if (w > w_max_) return ev_->weighted(w, 0);
    return std::exp(log_m_(std::log1p(w)));
}

std::vector<double> ShrinkageEstimator::estimate(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != d_)
        throw std::invalid_argument("estimate: x has wrong dimension");
    double w = 0.0;
    for (double xi : x) w += xi * xi;
    const double mult = multiplier(w);
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = mult * x[i];
    return out;
}

GeneralizedBayesEstimator::GeneralizedBayesEstimator(
    std::shared_ptr<const MarginalTable> table)
    : ShrinkageEstimator(table->evaluator().params().d), table_(std::move(table)) {}

GeneralizedBayesEstimator::GeneralizedBayesEstimator(
    std::shared_ptr<const MarginalEvaluator> ev)
    : ShrinkageEstimator(ev->params().d), ev_(std::move(ev)) {}

double GeneralizedBayesEstimator::r1(double w) const {
    if (table_) return table_->ratio1(w);
    return ev_->weighted(w, 1) / ev_->weighted(w, 0);
}

double GeneralizedBayesEstimator::r2(double w) const {
    if (table_) return table_->ratio2(w);
    return ev_->weighted(w, 2) / ev_->weighted(w, 0);
}

double GeneralizedBayesEstimator::multiplier(double w) const {
    if (!(w >= 0.0)) throw std::domain_error("multiplier: w must be >= 0");
    return 1.0 - r1(w);
}

double GeneralizedBayesEstimator::multiplier_deriv(double w) const {
    const double a = r1(w);
    return 0.5 * (r2(w) - a * a);
}

double GeneralizedBayesEstimator::grad_log_marginal_norm(double w) const {
    if (!(w >= 0.0)) throw std::domain_error("grad_log_marginal_norm: w >= 0 required");
    if (w == 0.0) return 0.0;
    return std::sqrt(w) * r1(w);
}

const MarginalEvaluator& GeneralizedBayesEstimator::evaluator() const {
    return table_ ? table_->evaluator() : *ev_;
}

PointPriorEstimator::PointPriorEstimator(int d, double g)
    : ShrinkageEstimator(d), g_(g) {
    if (!(g >= 0.0)) throw std::domain_error("PointPriorEstimator: g must be >= 0");
}

double point_prior_risk(double g, double mu_norm_sq, int d) {
    if (!(g >= 0.0)) throw std::domain_error("point_prior_risk: g must be >= 0");
    const double gp1 = g + 1.0;
    return (g * g * d + mu_norm_sq) / (gp1 * gp1);
}

}  // namespace steinlab
