#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace steinlab {

struct QuadratureConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
            throw std::invalid_argument("quadrature tolerances must be positive");
        if (max_subdivisions < 1)
            throw std::invalid_argument("max_subdivisions must be at least 1");
    }
};

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights on [-1,1].
inline constexpr double gk_node[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double gk_wk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double gk_wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
inline void gk15(const F& f, double a, double b, double& result, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double f0 = f(c);
    double resk = gk_wk[7] * f0;
    double resg = gk_wg[3] * f0;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * gk_node[i];
        const double fsum = f(c - dx) + f(c + dx);
        resk += gk_wk[i] * fsum;
        if (i % 2 == 1) resg += gk_wg[i / 2] * fsum;
    }
    result = resk * h;
    const double diff = std::fabs(resk - resg) * std::fabs(h);
    // QUADPACK-style sharpened estimate
    err = diff;
    if (diff > 0.0) err = std::min(diff, std::pow(200.0 * diff, 1.5));
}

struct Segment {
    double a, b, result, err;
    bool operator<(const Segment& o) const { return err < o.err; }
};

}  // namespace detail

// Adaptive Gauss-Kronrod integration over the segments defined by an
// increasing breakpoint list. Endpoints are never evaluated, so integrable
// endpoint singularities are admissible.
template <class F>
double integrate_segments(const F& f, const std::vector<double>& breakpoints,
                          const QuadratureConfig& cfg = {}) {
    cfg.validate();
    if (breakpoints.size() < 2)
        throw std::invalid_argument("need at least two breakpoints");

    std::vector<detail::Segment> heap;
    heap.reserve(static_cast<std::size_t>(cfg.max_subdivisions) + breakpoints.size());
    double total = 0.0, total_err = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        detail::Segment s{breakpoints[i], breakpoints[i + 1], 0.0, 0.0};
        if (!(s.b > s.a)) continue;
        detail::gk15(f, s.a, s.b, s.result, s.err);
        total += s.result;
        total_err += s.err;
        heap.push_back(s);
        std::push_heap(heap.begin(), heap.end());
    }

    int splits = 0;
    while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total))) {
        if (splits >= cfg.max_subdivisions)
            throw QuadratureError("quadrature: subdivision budget exhausted (err=" +
                                  std::to_string(total_err) + ")");
        std::pop_heap(heap.begin(), heap.end());
        detail::Segment worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // interval no longer splittable in double precision; accept it as is
            total_err -= worst.err;
            if (heap.empty()) break;
            continue;
        }
        detail::Segment left{worst.a, mid, 0.0, 0.0}, right{mid, worst.b, 0.0, 0.0};
        detail::gk15(f, left.a, left.b, left.result, left.err);
        detail::gk15(f, right.a, right.b, right.result, right.err);
        total += left.result + right.result - worst.result;
        total_err += left.err + right.err - worst.err;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end());
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end());
        ++splits;
    }
    if (!std::isfinite(total))
        throw QuadratureError("quadrature: non-finite result");
    return total;
}

template <class F>
double integrate(const F& f, double a, double b, const QuadratureConfig& cfg = {}) {
    return integrate_segments(f, std::vector<double>{a, b}, cfg);
}

}  // namespace steinlab
