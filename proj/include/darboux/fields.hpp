#pragma once

// The rotation field y (unique solution of z_u = y x r_u, z_v = y x r_v)
// and the translation field s = z - y x (r - origin) of a bending, plus
// the triviality classifier: a bending is the velocity field of a rigid
// motion exactly when y is constant.
//
// The generic solver treats the six stacked scalar equations as a least
// squares problem. A residual above reject_tol means the input is not a
// bending; below accept_tol it is ordinary float noise; the band between
// the two is accepted but worth surfacing as a warning.

#include <cmath>
#include <utility>

#include <Eigen/Dense>

#include "darboux/bending.hpp"
#include "darboux/surface.hpp"

namespace darboux {

struct DarbouxOptions {
    double reject_tol = 1e-6;
    double accept_tol = 1e-9;
};

struct RotationSample {
    Vec3 y = Vec3::Zero();
    double residual = 0.0;   // max |component| over the six stacked equations
};

namespace detail {

// Matrix of w x (.) so that skew(w) * x = w x x.
inline Eigen::Matrix3d skew(const Vec3& w) {
    Eigen::Matrix3d m;
    m << 0.0, -w.z(), w.y(),
         w.z(), 0.0, -w.x(),
         -w.y(), w.x(), 0.0;
    return m;
}

} // namespace detail

/// Solve the stacked system for y at a point. Throws DegenerateChartError
/// when r_u, r_v are collinear and ResidualError when the least-squares
/// residual exceeds opts.reject_tol.
inline RotationSample rotation_at(const Chart& c, const BendingField& z, double u,
                                  double v, const DarbouxOptions& opts = {}) {
    const Vec3 ru = c.d_u(u, v);
    const Vec3 rv = c.d_v(u, v);
    if (ru.cross(rv).norm() < kDegeneracyThreshold)
        throw DegenerateChartError("chart is degenerate at (u, v) = (" +
                                   std::to_string(u) + ", " + std::to_string(v) + ")");

    // y x r_w = -skew(r_w) y
    Eigen::Matrix<double, 6, 3> A;
    A.topRows<3>() = -detail::skew(ru);
    A.bottomRows<3>() = -detail::skew(rv);
    Eigen::Matrix<double, 6, 1> b;
    b.head<3>() = z.d_u(u, v);
    b.tail<3>() = z.d_v(u, v);

    RotationSample sample;
    sample.y = A.colPivHouseholderQr().solve(b);
    sample.residual = (A * sample.y - b).cwiseAbs().maxCoeff();
    if (sample.residual > opts.reject_tol)
        throw ResidualError("rotation-field residual " + std::to_string(sample.residual) +
                                " exceeds " + std::to_string(opts.reject_tol) +
                                ": the field is not a bending at (u, v) = (" +
                                std::to_string(u) + ", " + std::to_string(v) + ")",
                            sample.residual);
    return sample;
}

/// Closed-form rotation field on a graph chart:
///   y = (zeta_v, -zeta_u, eta_u + f_u zeta_v).
/// Requires that z satisfies the bending system on the chart.
inline Vec3 rotation_monge(const MongeChart& m, const BendingField& z, double u, double v) {
    const double zeta_u = z.zeta().derivative(Var::U).eval(u, v);
    const double zeta_v = z.zeta().derivative(Var::V).eval(u, v);
    const double eta_u = z.eta().derivative(Var::U).eval(u, v);
    const double fu = m.f_u().eval(u, v);
    return Vec3(zeta_v, -zeta_u, eta_u + fu * zeta_v);
}

/// Both closed-form routes to the third rotation component,
///   eta_u + f_u zeta_v   and   -xi_v - f_v zeta_u,
/// which the bending system makes equal. Exposed for cross-validation.
inline std::pair<double, double> rotation_monge_y3_forms(const MongeChart& m,
                                                         const BendingField& z,
                                                         double u, double v) {
    const double zeta_u = z.zeta().derivative(Var::U).eval(u, v);
    const double zeta_v = z.zeta().derivative(Var::V).eval(u, v);
    const double eta_u = z.eta().derivative(Var::U).eval(u, v);
    const double xi_v = z.xi().derivative(Var::V).eval(u, v);
    const double fu = m.f_u().eval(u, v);
    const double fv = m.f_v().eval(u, v);
    return {eta_u + fu * zeta_v, -xi_v - fv * zeta_u};
}

/// Translation field s = z - y x (r - origin). Unlike y, s depends on the
/// chosen ambient origin; shifting the origin by c changes s by y x c.
inline Vec3 translation_at(const Chart& c, const BendingField& z, double u, double v,
                           const Vec3& origin = Vec3::Zero(),
                           const DarbouxOptions& opts = {}) {
    const RotationSample rot = rotation_at(c, z, u, v, opts);
    return z.value(u, v) - rot.y.cross(c.position(u, v) - origin);
}

struct TrivialityVerdict {
    bool is_trivial = false;
    Vec3 a = Vec3::Zero();       // recovered translation velocity
    Vec3 b = Vec3::Zero();       // recovered angular velocity
    double deviation = 0.0;      // max over grid of |y - b| and |s - a|
    double max_residual = 0.0;   // worst rotation-solve residual seen
};

/// Grid classifier: b is the mean of y, a the mean of s (origin 0);
/// the bending is trivial when no sample deviates from those means by
/// more than tol.
inline TrivialityVerdict classify(const Chart& c, const BendingField& z, GridSpec grid,
                                  double tol = 1e-8, const DarbouxOptions& opts = {}) {
    const int n = grid.nu * grid.nv;
    std::vector<Vec3> ys, ss;
    ys.reserve(n);
    ss.reserve(n);
    TrivialityVerdict verdict;
    Vec3 y_mean = Vec3::Zero(), s_mean = Vec3::Zero();
    for (int j = 0; j < grid.nv; ++j) {
        const double v = c.v_range().at(j, grid.nv);
        for (int i = 0; i < grid.nu; ++i) {
            const double u = c.u_range().at(i, grid.nu);
            const RotationSample rot = rotation_at(c, z, u, v, opts);
            const Vec3 s = z.value(u, v) - rot.y.cross(c.position(u, v));
            verdict.max_residual = std::max(verdict.max_residual, rot.residual);
            ys.push_back(rot.y);
            ss.push_back(s);
            y_mean += rot.y;
            s_mean += s;
        }
    }
    y_mean /= n;
    s_mean /= n;
    for (int k = 0; k < n; ++k) {
        verdict.deviation = std::max(verdict.deviation, (ys[k] - y_mean).cwiseAbs().maxCoeff());
        verdict.deviation = std::max(verdict.deviation, (ss[k] - s_mean).cwiseAbs().maxCoeff());
    }
    verdict.a = s_mean;
    verdict.b = y_mean;
    verdict.is_trivial = verdict.deviation < tol;
    return verdict;
}

} // namespace darboux
