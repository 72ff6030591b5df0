#pragma once

#include <cstdint>
#include <vector>

#include "steinlab/estimator.hpp"

namespace steinlab {

/// Monte Carlo risk estimate at one |mu|, with the SURE sample mean over the
/// same draws (common random numbers). Deterministic given (seed, n) for any
/// thread count.
struct RiskPoint {
    double mu_norm = 0.0;
    double risk = 0.0;
    double se = 0.0;
    double mean_sure = 0.0;
    double sure_se = 0.0;
    // risk - mean_sure, with the standard error of the per-draw difference
    // loss - SURE (paired; far sharper than combining the marginal SEs)
    double gap = 0.0;
    double gap_se = 0.0;
    long n = 0;
    std::uint64_t seed = 0;
};

/// Paired comparison of several estimators on identical draws. diff[j] is the
/// risk of estimator j minus the risk of estimator 0, with the standard error
/// of the per-draw loss difference (much sharper than combining the two
/// marginal standard errors).
struct RiskComparison {
    std::vector<RiskPoint> points;
    std::vector<double> diff;
    std::vector<double> diff_se;
};

/// Draws X = mu + Z with Z ~ N(0, I_d), mu on the first axis (equivariance
/// makes direction irrelevant). threads <= 0 means: use STEINLAB_THREADS if
/// set, else 1.
RiskPoint mc_risk(const ShrinkageEstimator& est, double mu_norm, long n,
                  std::uint64_t seed, int threads = 0);

RiskComparison mc_risk_compare(const std::vector<const ShrinkageEstimator*>& ests,
                               double mu_norm, long n, std::uint64_t seed,
                               int threads = 0);

}  // namespace steinlab
