#pragma once

#include <utility>

#include "steinlab/estimator.hpp"

namespace steinlab {

/// A Blyth sequence h_i taming the improper mixing measure into proper priors
/// pi_i with mixing density h_i^2(g) pi(g).
///   moment kind: h_i^2(g) = i / (g + i)
///   log kind:    h_i(g) = 1 - log L(g) / log L(i) for g < i, 0 for g >= i
/// Both satisfy 0 <= h_i <= 1, increase pointwise in i, and tend to 1.
struct BlythSequence {
    enum class Kind { Moment, Log };
    Kind kind;
    double index;  // i > 0 (log kind needs i > e - 1 so that log L(i) > 0)

    BlythSequence(Kind k, double i) : kind(k), index(i) {
        if (!(i > 0.0)) throw std::invalid_argument("BlythSequence: index must be > 0");
        if (k == Kind::Log && !(std::log(log_weight(i)) > 0.0))
            throw std::invalid_argument("BlythSequence: log kind needs log L(i) > 0");
    }
};

double h_eval(double g, const BlythSequence& s);
double h_sq(double g, const BlythSequence& s);

/// |h_i'(g)| (g+1) L(g) for the log kind, used in the sup-bound spot checks.
double h_log_slope_bound(double g, const BlythSequence& s);

/// Multiplier of delta_i: 1 - N_1(w)/N_0(w) with h_i^2-weighted marginals.
double delta_i_multiplier(double w, const BlythSequence& s,
                          const MarginalEvaluator& ev);

/// Bayes risk difference
///   Delta_i = int |delta_pi - delta_i|^2 m_i(|x|^2) dx
/// reduced to one radial integral:
///   (pi^{d/2}/Gamma(d/2)) int_0^inf w^{d/2-1} w (mult_pi - mult_i)^2 m_i(w) dw.
/// Requires pi_i proper: moment kind needs the (g+1)^{-1} moment finite
/// (a < 0 or a = 0, c < -1); log kind is exercised only for a = 0, b >= 0,
/// |c| <= 1.
double bayes_risk_difference(const BlythSequence& s, const MarginalTable& table);

/// Analytic upper bound 4 d (2 pi)^{d/2} int pi(g)/(g+1) dg on Delta_i for the
/// moment kind.
double blyth_moment_bound(const MixingParams& p, const QuadratureConfig& cfg = {});

/// (quadrature, closed form) of int F(|x|^2, g)/|x|^2 dx = C_d/(g+1),
/// C_d = pi^{d/2} 2^{d/2} / (d-2).
std::pair<double, double> gamma_identity(double g, int d,
                                         const QuadratureConfig& cfg = {});

/// (quadrature, closed form) of int |x|^{-2} exp(-|x|^2/alpha) dx
/// = 2 pi^{d/2} alpha^{d/2-1} / (d-2).
std::pair<double, double> gamma_alpha_identity(double alpha, int d,
                                               const QuadratureConfig& cfg = {});

}  // namespace steinlab
