#include <cmath>
#include <memory>

#include <doctest.h>

#include "steinlab/blyth.hpp"
#include "steinlab/estimator.hpp"

using namespace steinlab;

namespace {

std::shared_ptr<const MarginalTable> proper_table() {
    // d = 4, a = -2, b = c = 0: proper mixture with finite (g+1)^{-1} moment
    static auto table = std::make_shared<const MarginalTable>(
        std::make_shared<const MarginalEvaluator>(MixingParams(4, -2.0, 0.0, 0.0)));
    return table;
}

}  // namespace

TEST_CASE("taming functions: closed-form spot values") {
    const BlythSequence mom(BlythSequence::Kind::Moment, 5.0);
    CHECK(h_eval(0.0, mom) == 1.0);
    CHECK(h_eval(5.0, mom) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(h_sq(5.0, mom) == doctest::Approx(0.5).epsilon(1e-15));

    const BlythSequence lg(BlythSequence::Kind::Log, 100.0);
    CHECK(h_eval(0.0, lg) == 1.0);
    CHECK(h_eval(100.0, lg) == 0.0);
    CHECK(h_eval(250.0, lg) == 0.0);  // truncated beyond the index
    // g chosen so that log L(g) = log L(i) / 2 gives h = 1/2
    const double g_half = std::exp(std::sqrt(log_weight(100.0)) - 1.0) - 1.0;
    CHECK(h_eval(g_half, lg) == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(BlythSequence(BlythSequence::Kind::Moment, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(h_eval(-1.0, mom), std::domain_error);
}

TEST_CASE("taming functions increase pointwise to 1") {
    for (auto kind : {BlythSequence::Kind::Moment, BlythSequence::Kind::Log}) {
        double prev = -1.0;
        for (double i : {10.0, 100.0, 1000.0, 1e6}) {
            const BlythSequence s(kind, i);
            const double h = h_eval(3.0, s);
            CHECK(h > prev);
            CHECK(h <= 1.0);
            prev = h;
        }
        // moment kind reaches 1 like 1/i; the log kind only like 1/log log i,
        // so just confirm it is well past its i = 10 value
        if (kind == BlythSequence::Kind::Moment)
            CHECK(prev == doctest::Approx(1.0).epsilon(1e-2));
        else
            CHECK(prev > 2.0 * h_eval(3.0, BlythSequence(kind, 10.0)));
    }
}

TEST_CASE("log-kind slope bound") {
    const BlythSequence lg(BlythSequence::Kind::Log, 100.0);
    const double bound = 1.0 / std::log(log_weight(100.0));
    for (double g : {0.5, 3.0, 50.0}) {
        CHECK(h_log_slope_bound(g, lg) == doctest::Approx(bound).epsilon(1e-14));
        // finite-difference oracle for |h'|(g+1)L(g)
        const double h = 1e-6 * std::max(g, 1.0);
        const double fd = (h_eval(g + h, lg) - h_eval(g - h, lg)) / (2.0 * h);
        CHECK(std::fabs(fd) * (g + 1.0) * log_weight(g) ==
              doctest::Approx(bound).epsilon(1e-6));
    }
    CHECK(h_log_slope_bound(200.0, lg) == 0.0);
    const BlythSequence mom(BlythSequence::Kind::Moment, 100.0);
    CHECK_THROWS_AS(h_log_slope_bound(1.0, mom), std::invalid_argument);
}

TEST_CASE("tamed multiplier: closed form at the origin") {
    // d = 4, a = -2, moment kind i = 1: weight 1/(g+1), so
    // N_0(0) = int (g+1)^{-5} = 1/4, N_1(0) = int (g+1)^{-6} = 1/5,
    // multiplier = 1 - (1/5)/(1/4) = 1/5
    const MarginalEvaluator& ev = proper_table()->evaluator();
    const BlythSequence s(BlythSequence::Kind::Moment, 1.0);
    CHECK(delta_i_multiplier(0.0, s, ev) == doctest::Approx(0.2).epsilon(1e-8));
}

TEST_CASE("tamed multiplier converges to the untamed one") {
    const MarginalEvaluator& ev = proper_table()->evaluator();
    GeneralizedBayesEstimator gb(proper_table()->evaluator_ptr());
    const double target = gb.multiplier(2.0);
    double prev_gap = 1.0;
    for (double i : {10.0, 1000.0, 1e6}) {
        const BlythSequence s(BlythSequence::Kind::Moment, i);
        const double gap = std::fabs(delta_i_multiplier(2.0, s, ev) - target);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < 1e-4);
}

TEST_CASE("Bayes risk differences shrink along the sequence") {
    const double d10 =
        bayes_risk_difference(BlythSequence(BlythSequence::Kind::Moment, 10.0),
                              *proper_table());
    const double d100 =
        bayes_risk_difference(BlythSequence(BlythSequence::Kind::Moment, 100.0),
                              *proper_table());
    CHECK(d10 > 0.0);
    CHECK(d100 > 0.0);
    CHECK(d100 < d10);
    const double bound =
        blyth_moment_bound(proper_table()->evaluator().params());
    CHECK(d10 < bound);
    CHECK(d100 < bound);
}

TEST_CASE("improper configurations are refused") {
    auto stein = std::make_shared<const MarginalTable>(
        std::make_shared<const MarginalEvaluator>(MixingParams(6, 0.0, 0.0, 0.0)));
    CHECK_THROWS_AS(
        bayes_risk_difference(BlythSequence(BlythSequence::Kind::Moment, 10.0), *stein),
        std::domain_error);
    // log kind outside a = 0, b >= 0, |c| <= 1
    CHECK_THROWS_AS(
        bayes_risk_difference(BlythSequence(BlythSequence::Kind::Log, 10.0),
                              *proper_table()),
        std::domain_error);
    // log kind on its home turf runs
    CHECK_NOTHROW(
        bayes_risk_difference(BlythSequence(BlythSequence::Kind::Log, 10.0), *stein));
}

TEST_CASE("analytic bound closed form") {
    // d = 4, a = -2: moment = 1/2, bound = 4*4*(2 pi)^2 * 1/2 = 8 (2 pi)^2
    const double bound = blyth_moment_bound(MixingParams(4, -2.0, 0.0, 0.0));
    const double exact = 8.0 * std::pow(2.0 * M_PI, 2.0);
    CHECK(bound == doctest::Approx(exact).epsilon(1e-8));
}

TEST_CASE("radial normalization identities") {
    for (int d : {3, 4, 6, 8}) {
        for (double g : {0.0, 1.0, 10.0}) {
            auto [lhs, rhs] = gamma_identity(g, d);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
        }
    }
    // d = 4, alpha = 2: 2 pi^2 * 2^1 / 2 = 2 pi^2
    auto [lhs, rhs] = gamma_alpha_identity(2.0, 4);
    CHECK(rhs == doctest::Approx(2.0 * M_PI * M_PI).epsilon(1e-14));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
    CHECK_THROWS_AS(gamma_identity(1.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(gamma_alpha_identity(-1.0, 4), std::domain_error);
}
