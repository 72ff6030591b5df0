#include "steinlab/classify.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace steinlab {

const char* to_string(Admissibility a) {
    switch (a) {
        case Admissibility::Inadmissible: return "Inadmissible";
        case Admissibility::Admissible: return "Admissible";
        case Admissibility::AdmissibleBoundary: return "AdmissibleBoundary";
        case Admissibility::AdmissibleBrownOnly: return "AdmissibleBrownOnly";
    }
    return "?";
}

bool tail_integral_diverges(const MixingParams& p) {
    if (p.a > 0.0) return false;
    if (p.a < 0.0) return true;
    return p.c <= 1.0;
}

Verdict classify(const MixingParams& p) {
    Verdict v{};
    v.integral_diverges = tail_integral_diverges(p);
    v.minimax = minimax_check(p);
    if (p.a > 0.0 || (p.a == 0.0 && p.c > 1.0)) {
        v.admissibility = Admissibility::Inadmissible;
        v.rule = "Corollary 2.1";
    } else if (p.a < 0.0 || (p.a == 0.0 && p.c < -1.0)) {
        v.admissibility = Admissibility::Admissible;
        v.rule = "Corollary 3.1";
    } else if (p.b >= 0.0) {
        // a = 0, |c| <= 1
        v.admissibility = Admissibility::AdmissibleBoundary;
        v.rule = "Theorem 3.3";
    } else {
        v.admissibility = Admissibility::AdmissibleBrownOnly;
        v.rule = "Theorem 1.1";
    }
    return v;
}

TailProbe tail_integral_probe(const MixingParams& p, const QuadratureConfig& cfg) {
    // 1/(g pi(g)) is smooth on [1, inf); integrate in z = log g.
    auto f = [&](double z) { return 1.0 / mixing_density(std::exp(z), p); };
    auto chunk = [&](double zlo, double zhi) {
        std::vector<double> pts;
        const int n = 8;
        for (int i = 0; i <= n; ++i) pts.push_back(zlo + (zhi - zlo) * i / n);
        return integrate_segments(f, pts, cfg);
    };
    TailProbe probe{};
    const double z2 = std::log(1e2), z4 = std::log(1e4), z6 = std::log(1e6);
    probe.partial[0] = chunk(0.0, z2);
    probe.partial[1] = probe.partial[0] + chunk(z2, z4);
    probe.partial[2] = probe.partial[1] + chunk(z4, z6);
    const double inc1 = probe.partial[1] - probe.partial[0];
    const double inc2 = probe.partial[2] - probe.partial[1];
    // Convergent tails have rapidly shrinking increments; anything decaying
    // no faster than a power of log L(T) is treated as divergent.
    probe.diverges = inc1 > 0.0 && inc2 / inc1 > 0.5;
    probe.inconclusive = probe.diverges != tail_integral_diverges(p);
    return probe;
}

double mixture_moment(const MixingParams& p, const QuadratureConfig& cfg) {
    const bool finite = p.a < 0.0 || (p.a == 0.0 && p.c < -1.0);
    if (!finite) return std::numeric_limits<double>::infinity();
    // Integrate in y = L(g) = log(g+1) + 1, where dy = dg/(g+1):
    //   int_1^inf e^{a(y-1)} (g/(g+1))^b y^c dy,  g = e^{y-1} - 1.
    // At a = 0 the convergence is purely through y^c (c < -1), which is hopeless
    // in g or s coordinates at any floating-point truncation but immediate here.
    auto f = [&](double y) {
        const double t = y - 1.0;
        double lb = 0.0;
        if (p.b != 0.0 && t < 40.0) {  // beyond, g/(g+1) = 1 to 1e-17
            const double g = std::expm1(t);
            lb = p.b * (std::log(g) - std::log1p(g));
        }
        const double le = p.a * t + lb + p.c * std::log(y);
        return le < -745.0 ? 0.0 : std::exp(le);
    };
    // graded start (integrable (y-1)^b endpoint when b < 0), then doublings
    std::vector<double> pts{1.0};
    for (int k = 12; k >= 1; --k) pts.push_back(1.0 + std::pow(10.0, -k));
    const double y_max = p.a < 0.0 ? 2.0 + 745.0 / -p.a : 1e7;
    for (double y = 2.0; y < y_max; y *= 2.0) pts.push_back(y);
    pts.push_back(y_max);
    double total = integrate_segments(f, pts, cfg);
    if (p.a == 0.0)  // exact power-law remainder beyond the numeric window
        total += std::pow(y_max, p.c + 1.0) / (-p.c - 1.0);
    return total;
}

bool admissible_general_mixture(double moment) { return std::isfinite(moment); }

bool minimax_check(const MixingParams& p) {
    const double lower = -0.5 * p.d + 1.0 + std::max(0.0, -2.0 * p.c);
    return lower <= p.a && p.a < 0.5 * p.d - 1.0 && p.b >= 0.0;
}

}  // namespace steinlab
