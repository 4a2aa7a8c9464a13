#pragma once

// Parametric curves in the (u, v) parameter domain, reusing the expression
// engine: both coordinate expressions are evaluated with the curve
// parameter bound to u and v alike, so a curve may be written in terms of
// either variable name. Velocities are total derivatives d/dt.

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "darboux/expr.hpp"
#include "darboux/surface.hpp"

namespace darboux {

class ParamCurve {
public:
    ParamCurve(Expr u_of_t, Expr v_of_t, Interval t_range)
        : u_(std::move(u_of_t)),
          v_(std::move(v_of_t)),
          du_(u_.derivative(Var::U) + u_.derivative(Var::V)),
          dv_(v_.derivative(Var::U) + v_.derivative(Var::V)),
          t_range_(t_range) {}

    /// Straight parameter segment from (u0, v0) to (u1, v1), t in [0, 1].
    static ParamCurve segment(double u0, double v0, double u1, double v1) {
        const Expr t = Expr::variable(Var::U);
        return ParamCurve(Expr::constant(u0) + (u1 - u0) * t,
                          Expr::constant(v0) + (v1 - v0) * t, Interval{0.0, 1.0});
    }

    Eigen::Vector2d point(double t) const {
        return {u_.eval(t, t), v_.eval(t, t)};
    }

    Eigen::Vector2d velocity(double t) const {
        return {du_.eval(t, t), dv_.eval(t, t)};
    }

    Interval t_range() const { return t_range_; }

private:
    Expr u_, v_, du_, dv_;
    Interval t_range_;
};

/// The four sides of the chart's parameter rectangle, counterclockwise
/// (bottom, right, top, left). This orientation defines the boundary for
/// every boundary line integral in this library.
inline std::vector<ParamCurve> boundary_segments(const Chart& c) {
    const double u0 = c.u_range().lo, u1 = c.u_range().hi;
    const double v0 = c.v_range().lo, v1 = c.v_range().hi;
    return {
        ParamCurve::segment(u0, v0, u1, v0),
        ParamCurve::segment(u1, v0, u1, v1),
        ParamCurve::segment(u1, v1, u0, v1),
        ParamCurve::segment(u0, v1, u0, v0),
    };
}

} // namespace darboux
