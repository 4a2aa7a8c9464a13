#pragma once

// Surface patches r(u, v) over a parameter rectangle and their pointwise
// second-order data: tangents, unit normal, fundamental forms, mean
// curvature and area element. All derivatives are symbolic; charts cache
// the derived coordinate expressions at construction.
//
// Orientation convention: the unit normal is r_u x r_v normalized. Every
// curvature sign in this library follows from that choice.

#include <array>
#include <cmath>
#include <utility>

#include <Eigen/Dense>

#include "darboux/expr.hpp"
#include "darboux/quadrature.hpp"

namespace darboux {

using Vec3 = Eigen::Vector3d;

/// Closed real interval.
struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    double length() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return x >= lo && x <= hi; }
    double clamp(double x) const { return x < lo ? lo : (x > hi ? hi : x); }
    double at(int i, int n) const {
        return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
};

/// Regular (u, v) lattice dimensions.
struct GridSpec {
    int nu = 64;
    int nv = 64;
};

using ExprTriple = std::array<Expr, 3>;

inline Vec3 eval3(const ExprTriple& e, double u, double v) {
    return Vec3(e[0].eval(u, v), e[1].eval(u, v), e[2].eval(u, v));
}

inline ExprTriple derive3(const ExprTriple& e, Var var) {
    return {e[0].derivative(var), e[1].derivative(var), e[2].derivative(var)};
}

/// Pointwise second-order data of a chart.
struct SurfaceJet {
    Vec3 r, r_u, r_v, r_uu, r_uv, r_vv;
    Vec3 n;                      // (r_u x r_v) / |r_u x r_v|
    double E, F, G;              // first fundamental form
    double L, M, N;              // second fundamental form
    double H;                    // mean curvature
    double dA;                   // area element sqrt(EG - F^2)
};

inline constexpr double kDegeneracyThreshold = 1e-12;

/// A surface patch: three coordinate expressions over a rectangle.
class Chart {
public:
    Chart(Expr x, Expr y, Expr z, Interval u_range, Interval v_range)
        : pos_{std::move(x), std::move(y), std::move(z)},
          pos_u_(derive3(pos_, Var::U)),
          pos_v_(derive3(pos_, Var::V)),
          pos_uu_(derive3(pos_u_, Var::U)),
          pos_uv_(derive3(pos_u_, Var::V)),
          pos_vv_(derive3(pos_v_, Var::V)),
          u_range_(u_range),
          v_range_(v_range) {}

    const ExprTriple& coords() const { return pos_; }
    Interval u_range() const { return u_range_; }
    Interval v_range() const { return v_range_; }

    Vec3 position(double u, double v) const { return eval3(pos_, u, v); }
    Vec3 d_u(double u, double v) const { return eval3(pos_u_, u, v); }
    Vec3 d_v(double u, double v) const { return eval3(pos_v_, u, v); }
    Vec3 d_uu(double u, double v) const { return eval3(pos_uu_, u, v); }
    Vec3 d_uv(double u, double v) const { return eval3(pos_uv_, u, v); }
    Vec3 d_vv(double u, double v) const { return eval3(pos_vv_, u, v); }

private:
    ExprTriple pos_, pos_u_, pos_v_, pos_uu_, pos_uv_, pos_vv_;
    Interval u_range_, v_range_;
};

/// Graph chart r = (u, v, f(u, v)); regular for any smooth f.
class MongeChart {
public:
    MongeChart(Expr f, Interval u_range, Interval v_range)
        : f_(f),
          f_u_(f.derivative(Var::U)),
          f_v_(f.derivative(Var::V)),
          chart_(Expr::variable(Var::U), Expr::variable(Var::V), std::move(f),
                 u_range, v_range) {}

    const Expr& f() const { return f_; }
    const Expr& f_u() const { return f_u_; }
    const Expr& f_v() const { return f_v_; }
    const Chart& chart() const { return chart_; }
    Interval u_range() const { return chart_.u_range(); }
    Interval v_range() const { return chart_.v_range(); }

private:
    Expr f_, f_u_, f_v_;
    Chart chart_;
};

/// Evaluate the full jet at (u, v).
/// Throws DegenerateChartError when |r_u x r_v| < 1e-12.
inline SurfaceJet chart_jet(const Chart& c, double u, double v) {
    SurfaceJet j;
    j.r = c.position(u, v);
    j.r_u = c.d_u(u, v);
    j.r_v = c.d_v(u, v);
    j.r_uu = c.d_uu(u, v);
    j.r_uv = c.d_uv(u, v);
    j.r_vv = c.d_vv(u, v);

    const Vec3 cross = j.r_u.cross(j.r_v);
    const double cross_norm = cross.norm();
    if (cross_norm < kDegeneracyThreshold)
        throw DegenerateChartError("chart is degenerate: |r_u x r_v| = " +
                                   std::to_string(cross_norm) + " at (u, v) = (" +
                                   std::to_string(u) + ", " + std::to_string(v) + ")");
    j.n = cross / cross_norm;

    j.E = j.r_u.dot(j.r_u);
    j.F = j.r_u.dot(j.r_v);
    j.G = j.r_v.dot(j.r_v);
    j.L = j.r_uu.dot(j.n);
    j.M = j.r_uv.dot(j.n);
    j.N = j.r_vv.dot(j.n);
    const double det = j.E * j.G - j.F * j.F;
    j.H = (j.E * j.N - 2.0 * j.F * j.M + j.G * j.L) / (2.0 * det);
    j.dA = std::sqrt(det);
    return j;
}

/// Integral of H dA over the chart rectangle.
inline double total_mean_curvature(const Chart& c, const QuadratureConfig& q = {}) {
    auto integrand = [&](double u, double v) {
        const SurfaceJet j = chart_jet(c, u, v);
        return j.H * j.dA;
    };
    return integrate_rect(integrand, c.u_range().lo, c.u_range().hi,
                          c.v_range().lo, c.v_range().hi, q);
}

inline double total_mean_curvature(const MongeChart& m, const QuadratureConfig& q = {}) {
    return total_mean_curvature(m.chart(), q);
}

} // namespace darboux
