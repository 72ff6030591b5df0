#pragma once

#include <utility>

#include "steinlab/quadrature.hpp"

namespace steinlab {

/// L(g) = log(g+1) + 1. Strictly increasing with L(0) = 1.
inline double log_weight(double g) { return std::log1p(g) + 1.0; }

/// Parameters of the mixing density pi(g; a, b, c) = (g+1)^a (g/(g+1))^b L(g)^c
/// over the normal-prior scale g, together with the dimension d.
///
/// Validity region: d >= 3, a < d/2 - 1, b > -1, c unrestricted. This is
/// exactly the condition under which the marginal is finite everywhere, and it
/// is enforced at construction.
struct MixingParams {
    int d;
    double a;
    double b;
    double c;

    MixingParams(int d_, double a_, double b_, double c_) : d(d_), a(a_), b(b_), c(c_) {
        if (!valid(d_, a_, b_, c_))
            throw std::invalid_argument(
                "MixingParams: require d >= 3, a < d/2 - 1, b > -1");
    }

    static bool valid(int d, double a, double b, double c) {
        (void)c;
        return d >= 3 && a < 0.5 * d - 1.0 && b > -1.0 && std::isfinite(a) &&
               std::isfinite(b) && std::isfinite(c);
    }
};

// pi(g; a, b, c). Convention 0^0 = 1, so at g = 0 the value is 0 for b > 0,
// 1 for b = 0 (Stein's prior is the constant 1) and +inf for b in (-1, 0)
// (an integrable endpoint singularity).
double mixing_density(double g, const MixingParams& p);

// (g+1) * d/dg log pi(g) = a + b/g + c/L(g), for g > 0.
double log_slope(double g, const MixingParams& p);

// Quadrature check of the closed form
//   int_0^inf g^{-d/2} exp(-|mu|^2 / (2g)) dg = Gamma(d/2-1) 2^{d/2-1} |mu|^{2-d}.
// Returns (lhs by quadrature, rhs closed form).
std::pair<double, double> stein_prior_check(double mu_norm_sq, int d,
                                            const QuadratureConfig& cfg = {});

}  // namespace steinlab
