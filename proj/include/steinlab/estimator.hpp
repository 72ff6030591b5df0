#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "steinlab/interp.hpp"
#include "steinlab/marginal.hpp"

namespace steinlab {

/// Memoized smooth functionals of the marginal, built eagerly on a grid in
/// v = log(1+w) and interpolated monotonically. Monte Carlo loops need ~1e6
/// evaluations per run; direct quadrature stays available through evaluator().
/// Queries beyond w_max fall back to direct quadrature.
class MarginalTable {
public:
    explicit MarginalTable(std::shared_ptr<const MarginalEvaluator> ev,
                           double w_max = 1e8, int nodes = 3000);

    double ratio1(double w) const;  // M_1(w) / M_0(w)
    double ratio2(double w) const;  // M_2(w) / M_0(w)
    double m(double w) const;       // M_0(w)
    double m0_at_zero() const { return m_at_zero_; }
    double w_max() const { return w_max_; }
    const MarginalEvaluator& evaluator() const { return *ev_; }
    std::shared_ptr<const MarginalEvaluator> evaluator_ptr() const { return ev_; }

private:
    std::shared_ptr<const MarginalEvaluator> ev_;
    double w_max_;
    double m_at_zero_;
    PchipInterpolant r1_, r2_, log_m_;
};

/// Radial-multiplier estimator of a d-variate normal mean: the d-vector
/// estimate is multiplier(|x|^2) * x. multiplier_deriv feeds the SURE.
class ShrinkageEstimator {
public:
    explicit ShrinkageEstimator(int d) : d_(d) {
        if (d < 3) throw std::invalid_argument("ShrinkageEstimator: d >= 3 required");
    }
    virtual ~ShrinkageEstimator() = default;

    int dim() const { return d_; }
    virtual double multiplier(double w) const = 0;
    virtual double multiplier_deriv(double w) const = 0;
    virtual std::string name() const = 0;

    /// True where the multiplier is not differentiable (positive-part kink);
    /// sure() at such w returns the one-sided value.
    virtual bool kink_at(double w) const {
        (void)w;
        return false;
    }

    /// SURE at w = |x|^2: with s(w) = multiplier(w) - 1,
    ///   d + w s^2 + 2 (d s + 2 w s').
    double sure(double w) const {
        const double s = multiplier(w) - 1.0;
        const double sp = multiplier_deriv(w);
        return d_ + w * s * s + 2.0 * (d_ * s + 2.0 * w * sp);
    }

    std::vector<double> estimate(std::span<const double> x) const;

private:
    int d_;
};

class GeneralizedBayesEstimator : public ShrinkageEstimator {
public:
    /// Memoized: multiplier lookups go through the table.
    explicit GeneralizedBayesEstimator(std::shared_ptr<const MarginalTable> table);
    /// Direct: every lookup is a fresh quadrature (verification path).
    explicit GeneralizedBayesEstimator(std::shared_ptr<const MarginalEvaluator> ev);

    double multiplier(double w) const override;        // 1 - M_1/M_0
    double multiplier_deriv(double w) const override;  // (M_2/M_0 - (M_1/M_0)^2)/2
    std::string name() const override { return "generalized-bayes"; }

    /// f(w) = sqrt(w) M_1(w)/M_0(w) = |grad log m|; f(0) = 0, sup finite.
    double grad_log_marginal_norm(double w) const;

    const MarginalEvaluator& evaluator() const;
    std::shared_ptr<const MarginalTable> table() const { return table_; }

private:
    double r1(double w) const;
    double r2(double w) const;
    std::shared_ptr<const MarginalTable> table_;
    std::shared_ptr<const MarginalEvaluator> ev_;
};

/// Proper Bayes estimator for the point prior at scale g: multiplier g/(g+1).
class PointPriorEstimator : public ShrinkageEstimator {
public:
    PointPriorEstimator(int d, double g);

    double multiplier(double) const override { return g_ / (g_ + 1.0); }
    double multiplier_deriv(double) const override { return 0.0; }
    std::string name() const override { return "point-prior"; }
    double scale() const { return g_; }

private:
    double g_;
};

/// Exact risk of the point-prior Bayes estimator: (g^2 d + |mu|^2) / (g+1)^2.
double point_prior_risk(double g, double mu_norm_sq, int d);

class JamesSteinEstimator : public ShrinkageEstimator {
public:
    explicit JamesSteinEstimator(int d) : ShrinkageEstimator(d) {}
    double multiplier(double w) const override { return 1.0 - (dim() - 2.0) / w; }
    double multiplier_deriv(double w) const override { return (dim() - 2.0) / (w * w); }
    std::string name() const override { return "james-stein"; }
};

class IdentityEstimator : public ShrinkageEstimator {
public:
    explicit IdentityEstimator(int d) : ShrinkageEstimator(d) {}
    double multiplier(double) const override { return 1.0; }
    double multiplier_deriv(double) const override { return 0.0; }
    std::string name() const override { return "identity"; }
};

/// max(multiplier, 0) of a wrapped estimator.
class PositivePartEstimator : public ShrinkageEstimator {
public:
    explicit PositivePartEstimator(std::shared_ptr<const ShrinkageEstimator> inner)
        : ShrinkageEstimator(inner->dim()), inner_(std::move(inner)) {}

    double multiplier(double w) const override {
        const double m = inner_->multiplier(w);
        return m > 0.0 ? m : 0.0;
    }
    double multiplier_deriv(double w) const override {
        return inner_->multiplier(w) > 0.0 ? inner_->multiplier_deriv(w) : 0.0;
    }
    bool kink_at(double w) const override { return inner_->multiplier(w) == 0.0; }
    std::string name() const override { return "positive-part(" + inner_->name() + ")"; }
    const ShrinkageEstimator& inner() const { return *inner_; }

private:
    std::shared_ptr<const ShrinkageEstimator> inner_;
};

}  // namespace steinlab
