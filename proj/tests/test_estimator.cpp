#include <cmath>
#include <memory>
#include <random>
#include <vector>

#include <doctest.h>

#include "steinlab/estimator.hpp"

using namespace steinlab;

namespace {

std::shared_ptr<const MarginalEvaluator> make_ev(int d, double a, double b, double c) {
    return std::make_shared<const MarginalEvaluator>(MixingParams(d, a, b, c));
}

// random orthogonal matrix by Gram-Schmidt on a Gaussian matrix
std::vector<std::vector<double>> random_rotation(int d, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    std::vector<std::vector<double>> q(d, std::vector<double>(d));
    for (auto& row : q)
        for (double& v : row) v = nd(rng);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < i; ++j) {
            double dot = 0.0;
            for (int k = 0; k < d; ++k) dot += q[i][k] * q[j][k];
            for (int k = 0; k < d; ++k) q[i][k] -= dot * q[j][k];
        }
        double nrm = 0.0;
        for (int k = 0; k < d; ++k) nrm += q[i][k] * q[i][k];
        nrm = std::sqrt(nrm);
        for (int k = 0; k < d; ++k) q[i][k] /= nrm;
    }
    return q;
}

}  // namespace

TEST_CASE("point-prior estimator and its exact risk") {
    PointPriorEstimator est(4, 1.0);
    CHECK(est.multiplier(3.7) == 0.5);
    // risk (g^2 d + |mu|^2)/(g+1)^2
    CHECK(point_prior_risk(1.0, 0.0, 4) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(point_prior_risk(0.0, 9.0, 4) == doctest::Approx(9.0).epsilon(1e-15));
    CHECK(point_prior_risk(1.0, 4.0, 4) == doctest::Approx(2.0).epsilon(1e-15));
    // SURE of a constant multiplier is exact in expectation; pointwise formula:
    // d + w/(g+1)^2 - 2d/(g+1)
    const double w = 5.0;
    CHECK(est.sure(w) == doctest::Approx(4.0 + w / 4.0 - 4.0).epsilon(1e-14));
}

TEST_CASE("baseline estimators") {
    JamesSteinEstimator js(6);
    CHECK(js.multiplier(8.0) == doctest::Approx(0.5).epsilon(1e-15));
    // SURE of James-Stein is d - (d-2)^2/w
    for (double w : {1.0, 4.0, 25.0})
        CHECK(js.sure(w) == doctest::Approx(6.0 - 16.0 / w).epsilon(1e-12));

    IdentityEstimator id(5);
    CHECK(id.multiplier(3.0) == 1.0);
    CHECK(id.sure(17.0) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("generalized Bayes multiplier at the origin, pure power") {
    // d = 4, a = -2: M_1(0)/M_0(0) = (1/4)/(1/3), multiplier = 1/4
    GeneralizedBayesEstimator est(make_ev(4, -2.0, 0.0, 0.0));
    CHECK(est.multiplier(0.0) == doctest::Approx(0.25).epsilon(1e-8));
    CHECK(est.grad_log_marginal_norm(0.0) == 0.0);
}

TEST_CASE("multiplier derivative matches a finite difference") {
    GeneralizedBayesEstimator est(make_ev(6, 0.5, 0.5, 1.0));
    for (double w : {0.5, 3.0, 20.0, 200.0}) {
        const double h = 1e-3 * std::max(w, 1.0);
        const double fd = (est.multiplier(w + h) - est.multiplier(w - h)) / (2.0 * h);
        CHECK(est.multiplier_deriv(w) == doctest::Approx(fd).epsilon(1e-5));
    }
}

TEST_CASE("shrinkage factor w(1 - multiplier) tends to d - 2 - 2a") {
    struct Case { int d; double a; };
    for (Case t : {Case{6, 0.0}, Case{6, 1.0}, Case{8, -1.0}}) {
        GeneralizedBayesEstimator est(make_ev(t.d, t.a, 0.0, 0.0));
        const double target = t.d - 2.0 - 2.0 * t.a;
        CHECK(1e8 * (1.0 - est.multiplier(1e8)) ==
              doctest::Approx(target).epsilon(0.01));
        // equivalently sqrt(w) f(w) -> same constant
        CHECK(std::sqrt(1e8) * est.grad_log_marginal_norm(1e8) ==
              doctest::Approx(target).epsilon(0.01));
    }
}

TEST_CASE("gradient norm f is bounded with interior maximum") {
    GeneralizedBayesEstimator est(make_ev(6, 0.0, 0.0, 0.0));
    double sup = 0.0;
    for (double w = 1e-2; w <= 1e8; w *= 2.0) {
        const double f = est.grad_log_marginal_norm(w);
        CHECK(std::isfinite(f));
        CHECK(f >= 0.0);
        sup = std::max(sup, f);
    }
    CHECK(sup > 0.0);
    // decays like (d-2-2a)/sqrt(w) at the top of the range
    CHECK(est.grad_log_marginal_norm(1e8) < 0.1 * sup);
}

TEST_CASE("memoized table agrees with direct quadrature") {
    auto ev = make_ev(5, 0.0, 0.5, 1.0);
    auto table = std::make_shared<const MarginalTable>(ev);
    GeneralizedBayesEstimator memo(table);
    GeneralizedBayesEstimator direct(ev);
    for (double w = 1e-3; w <= 1e8; w *= 4.9) {
        CHECK(memo.multiplier(w) ==
              doctest::Approx(direct.multiplier(w)).epsilon(1e-6));
    }
    // beyond the table range the memo falls back to direct evaluation
    CHECK(memo.multiplier(3e8) ==
          doctest::Approx(direct.multiplier(3e8)).epsilon(1e-12));
    CHECK(table->m0_at_zero() ==
          doctest::Approx(ev->marginal(0.0)).epsilon(1e-10));
}

TEST_CASE("vector estimate is equivariant under rotations") {
    const int d = 6;
    GeneralizedBayesEstimator est(make_ev(d, 0.0, 0.0, 0.0));
    std::mt19937_64 rng(7);
    std::normal_distribution<double> nd;
    for (unsigned trial = 0; trial < 3; ++trial) {
        std::vector<double> x(d);
        for (double& v : x) v = 2.0 * nd(rng);
        const auto q = random_rotation(d, 100 + trial);
        std::vector<double> qx(d, 0.0);
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) qx[i] += q[i][k] * x[k];
        const auto ex = est.estimate(x);
        const auto eqx = est.estimate(qx);
        // rotate est(x) and compare with est(Qx)
        for (int i = 0; i < d; ++i) {
            double qex = 0.0;
            for (int k = 0; k < d; ++k) qex += q[i][k] * ex[k];
            CHECK(eqx[i] == doctest::Approx(qex).epsilon(1e-10));
        }
    }
}

TEST_CASE("estimate at the origin is the origin") {
    GeneralizedBayesEstimator est(make_ev(4, -2.0, 0.0, 0.0));
    std::vector<double> zero(4, 0.0);
    for (double v : est.estimate(zero)) CHECK(v == 0.0);
}

TEST_CASE("positive part") {
    auto js = std::make_shared<const JamesSteinEstimator>(6);
    PositivePartEstimator pp(js);
    CHECK(pp.multiplier(2.0) == 0.0);  // JS multiplier is -1 there
    CHECK(pp.multiplier(8.0) == doctest::Approx(0.5));
    CHECK(pp.multiplier_deriv(2.0) == 0.0);
    CHECK(pp.kink_at(4.0));       // inner multiplier crosses zero at w = d-2... = 4
    CHECK(!pp.kink_at(8.0));
    // SURE of the positive part is d - w below the kink (multiplier 0)
    CHECK(pp.sure(2.0) == doctest::Approx(6.0 + 2.0 - 12.0).epsilon(1e-13));
    // idempotent on an everywhere-positive multiplier
    auto gb = std::make_shared<const GeneralizedBayesEstimator>(make_ev(6, 0.0, 0.0, 0.0));
    PositivePartEstimator ppgb(gb);
    for (double w : {0.5, 5.0, 50.0})
        CHECK(ppgb.multiplier(w) == gb->multiplier(w));
}
