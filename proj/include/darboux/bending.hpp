#pragma once

// Candidate variation fields z = (xi, eta, zeta) on a chart, verification
// of the bending system
//
//   r_u . z_u = 0,   r_u . z_v + r_v . z_u = 0,   r_v . z_v = 0,
//
// construction of rigid-motion (trivial) fields z = a + b x r, the
// deformed chart r + t z, and the first variation of curve length.

#include <array>
#include <cmath>
#include <utility>

#include <Eigen/Dense>

#include "darboux/curve.hpp"
#include "darboux/expr.hpp"
#include "darboux/quadrature.hpp"
#include "darboux/surface.hpp"

namespace darboux {

class BendingField {
public:
    BendingField(Expr xi, Expr eta, Expr zeta)
        : z_{std::move(xi), std::move(eta), std::move(zeta)},
          z_u_(derive3(z_, Var::U)),
          z_v_(derive3(z_, Var::V)) {}

    const ExprTriple& components() const { return z_; }
    const Expr& xi() const { return z_[0]; }
    const Expr& eta() const { return z_[1]; }
    const Expr& zeta() const { return z_[2]; }

    Vec3 value(double u, double v) const { return eval3(z_, u, v); }
    Vec3 d_u(double u, double v) const { return eval3(z_u_, u, v); }
    Vec3 d_v(double u, double v) const { return eval3(z_v_, u, v); }

private:
    ExprTriple z_, z_u_, z_v_;
};

/// Velocity data of a rigid motion: translation a, angular velocity b.
struct RigidMotionSpec {
    Vec3 a = Vec3::Zero();
    Vec3 b = Vec3::Zero();
};

/// The three left-hand sides of the bending system at (u, v).
inline std::array<double, 3> bending_residuals(const Chart& c, const BendingField& z,
                                               double u, double v) {
    const Vec3 ru = c.d_u(u, v);
    const Vec3 rv = c.d_v(u, v);
    const Vec3 zu = z.d_u(u, v);
    const Vec3 zv = z.d_v(u, v);
    return {ru.dot(zu), ru.dot(zv) + rv.dot(zu), rv.dot(zv)};
}

struct BendingSweep {
    double max_residual = 0.0;
    double tol = 1e-10;
    bool pass = false;
};

/// Residual sweep over a lattice; the field is accepted as a bending when
/// max |rho_i| stays below tol.
inline BendingSweep verify_bending(const Chart& c, const BendingField& z,
                                   GridSpec grid = {64, 64}, double tol = 1e-10) {
    BendingSweep sweep;
    sweep.tol = tol;
    for (int j = 0; j < grid.nv; ++j) {
        const double v = c.v_range().at(j, grid.nv);
        for (int i = 0; i < grid.nu; ++i) {
            const double u = c.u_range().at(i, grid.nu);
            const auto rho = bending_residuals(c, z, u, v);
            for (double r : rho) sweep.max_residual = std::max(sweep.max_residual, std::abs(r));
        }
    }
    sweep.pass = sweep.max_residual < tol;
    return sweep;
}

/// The rigid-motion field a + b x r assembled symbolically from the
/// chart's coordinate expressions.
inline BendingField trivial_bending(const RigidMotionSpec& m, const Chart& c) {
    const ExprTriple& r = c.coords();
    const Vec3 a = m.a, b = m.b;
    return BendingField(a.x() + b.y() * r[2] - b.z() * r[1],
                        a.y() + b.z() * r[0] - b.x() * r[2],
                        a.z() + b.x() * r[1] - b.y() * r[0]);
}

/// Chart of the deformed surface r + t z. At t = 0 the result evaluates
/// identically to c; for large |t| it may be degenerate at some points,
/// which chart_jet detects lazily.
inline Chart deform(const Chart& c, const BendingField& z, double t) {
    const ExprTriple& r = c.coords();
    const ExprTriple& w = z.components();
    return Chart(r[0] + t * w[0], r[1] + t * w[1], r[2] + t * w[2],
                 c.u_range(), c.v_range());
}

/// d/dt at t = 0 of the length of the deformed curve t -> r + t z along
/// gamma. The integrand is the exact t-derivative (w . z') / |w| with
/// w the curve tangent in space; stationary points of gamma contribute 0.
inline double curve_length_variation(const Chart& c, const BendingField& z,
                                     const ParamCurve& gamma,
                                     const QuadratureConfig& q = {}) {
    auto integrand = [&](double t) {
        const Eigen::Vector2d p = gamma.point(t);
        const Eigen::Vector2d s = gamma.velocity(t);
        const Vec3 w = c.d_u(p.x(), p.y()) * s.x() + c.d_v(p.x(), p.y()) * s.y();
        const double wn = w.norm();
        if (wn < 1e-14) return 0.0;
        const Vec3 zdot = z.d_u(p.x(), p.y()) * s.x() + z.d_v(p.x(), p.y()) * s.y();
        return w.dot(zdot) / wn;
    };
    return integrate(integrand, gamma.t_range().lo, gamma.t_range().hi, q);
}

} // namespace darboux
