#pragma once

// Adaptive Gauss-Kronrod (G7/K15) quadrature, one-dimensional and as an
// iterated tensor product over rectangles. Panels subdivide until the
// embedded error estimate meets the panel's share of the tolerance; the
// summation order over the panel tree is deterministic.

#include <array>
#include <cmath>
#include <cstdlib>
#include <utility>

#include "darboux/errors.hpp"

namespace darboux {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    int max_depth = 32;
    int initial_panels = 1;
};

namespace detail {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule.
inline constexpr std::array<double, 8> kGK15Nodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <class F>
std::pair<double, double> gk15_panel(F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kGK15Nodes[i];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[i] * sum;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * sum;
    }
    kronrod *= half;
    gauss *= half;
    return {kronrod, std::abs(kronrod - gauss)};
}

template <class F>
double adapt(F& f, double a, double b, double tol, int depth, int max_depth) {
    const auto [value, err] = gk15_panel(f, a, b);
    if (err <= tol || b - a <= 1e-14 * (1.0 + std::abs(a) + std::abs(b)))
        return value;
    if (depth >= max_depth)
        throw QuadratureError("adaptive quadrature did not converge at maximum depth");
    const double mid = 0.5 * (a + b);
    return adapt(f, a, mid, 0.5 * tol, depth + 1, max_depth) +
           adapt(f, mid, b, 0.5 * tol, depth + 1, max_depth);
}

inline void validate(const QuadratureConfig& cfg) {
    if (!(cfg.abs_tol > 0.0))
        throw QuadratureError("quadrature tolerance must be positive");
    if (cfg.max_depth < 1)
        throw QuadratureError("quadrature max depth must be at least 1");
    if (cfg.initial_panels < 1)
        throw QuadratureError("quadrature initial panel count must be at least 1");
}

} // namespace detail

/// Integrate f over [a, b] to absolute tolerance cfg.abs_tol.
template <class F>
double integrate(F&& f, double a, double b, const QuadratureConfig& cfg = {}) {
    detail::validate(cfg);
    if (a == b) return 0.0;
    if (a > b) return -integrate(std::forward<F>(f), b, a, cfg);
    const int panels = cfg.initial_panels;
    const double panel_tol = cfg.abs_tol / panels;
    double total = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double pa = a + (b - a) * static_cast<double>(i) / panels;
        const double pb = a + (b - a) * static_cast<double>(i + 1) / panels;
        total += detail::adapt(f, pa, pb, panel_tol, 0, cfg.max_depth);
    }
    return total;
}

/// Iterated tensor-product integral of f(u, v) over [u0,u1] x [v0,v1].
/// The inner integral runs at a tolerance tight enough that its error,
/// accumulated over the outer interval, stays within half of abs_tol.
template <class F>
double integrate_rect(F&& f, double u0, double u1, double v0, double v1,
                      const QuadratureConfig& cfg = {}) {
    detail::validate(cfg);
    if (u0 == u1 || v0 == v1) return 0.0;
    QuadratureConfig inner = cfg;
    inner.abs_tol = 0.5 * cfg.abs_tol / std::max(std::abs(u1 - u0), 1.0);
    QuadratureConfig outer = cfg;
    outer.abs_tol = 0.5 * cfg.abs_tol;
    auto outer_f = [&](double u) {
        auto inner_f = [&](double v) { return f(u, v); };
        return integrate(inner_f, v0, v1, inner);
    };
    return integrate(outer_f, u0, u1, outer);
}

} // namespace darboux
