#include "dynamo/susy.hpp"

#include <cmath>

#include "dynamo/errors.hpp"
#include "dynamo/ode.hpp"

namespace dynamo {

PhiExact::PhiExact(double x0_, double kappa_, int sign_)
    : x0(x0_), kappa(kappa_), sign(sign_) {
    if (!(kappa > 0.0)) throw invalid_parameter("PhiExact: kappa must be positive");
    if (sign != 1 && sign != -1) throw invalid_parameter("PhiExact: sign must be +1 or -1");
}

double PhiExact::operator()(double x) const {
    return (-sign * kappa + std::tanh(x - x0)) * std::exp(sign * kappa * x);
}

double PhiExact::prime(double x) const {
    const double t = std::tanh(x - x0);
    const double sech2 = 1.0 - t * t;
    return (sech2 - kappa * kappa + sign * kappa * t) * std::exp(sign * kappa * x);
}

double PhiExact::second(double x) const {
    const double t = std::tanh(x - x0);
    const double sech2 = 1.0 - t * t;
    return (-2.0 * t * sech2 + 2.0 * sign * kappa * sech2 +
            kappa * kappa * (-sign * kappa + t)) *
           std::exp(sign * kappa * x);
}

double wronskian(const PhiExact& plus, const PhiExact& minus, double x) {
    return plus(x) * minus.prime(x) - plus.prime(x) * minus(x);
}

std::optional<double> bound_state_level(double x0) {
    if (x0 <= 0.0) return std::nullopt;
    const double t = std::tanh(x0);
    return -t * t;
}

namespace {

double norm_ratio(const std::vector<double>& r, const std::vector<double>& f) {
    double rn = 0.0, fn = 0.0;
    for (double c : r) rn += c * c;
    for (double c : f) fn += c * c;
    return std::sqrt(rn / fn);
}

}  // namespace

double intertwining_residual(const TestFunction& tf, const Grid& grid, double x0) {
    const AlphaProfile alpha(1.0, x0);
    std::vector<double> r(grid.n), fv(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.x(i);
        const double w = std::tanh(x - x0);
        const double f = tf.f(x), f1 = tf.d1(x), f2 = tf.d2(x), f3 = tf.d3(x);
        const double al = alpha(x);
        const double half_a2 = 0.5 * al * al;
        // L H0 f with L = -d/dx + w, H0 = -d^2/dx^2
        const double lh0 = f3 - w * f2;
        // H1 L f with H1 = -d^2/dx^2 - alpha^2/2
        const double wp = 1.0 - w * w;           // w' = sech^2
        const double wpp = -2.0 * wp * w;        // w''
        const double h1l = f3 - wpp * f - 2.0 * wp * f1 - w * f2 + half_a2 * f1 -
                           half_a2 * w * f;
        r[i] = lh0 - h1l;
        fv[i] = f;
    }
    return norm_ratio(r, fv);
}

double factorization_residual_h0(const TestFunction& tf, const Grid& grid, double x0) {
    std::vector<double> r(grid.n), fv(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.x(i);
        const double w = std::tanh(x - x0);
        const double wp = 1.0 - w * w;
        const double f = tf.f(x), f1 = tf.d1(x), f2 = tf.d2(x);
        // L'L f computed as (d/dx + w) applied to g = -f' + w f
        const double g1 = -f2 + wp * f + w * f1;  // g'
        const double ldl = g1 + w * (-f1 + w * f);
        r[i] = ldl - (-f2 + f);
        fv[i] = f;
    }
    return norm_ratio(r, fv);
}

double factorization_residual_h1(const TestFunction& tf, const Grid& grid, double x0) {
    const AlphaProfile alpha(1.0, x0);
    std::vector<double> r(grid.n), fv(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.x(i);
        const double w = std::tanh(x - x0);
        const double wp = 1.0 - w * w;
        const double f = tf.f(x), f1 = tf.d1(x), f2 = tf.d2(x);
        const double al = alpha(x);
        // L L' f with g = f' + w f
        const double g1 = f2 + wp * f + w * f1;
        const double lld = -g1 + w * (f1 + w * f);
        r[i] = lld - (-f2 - 0.5 * al * al * f + f);
        fv[i] = f;
    }
    return norm_ratio(r, fv);
}

FactorizationSeed h2l_factorization_seed(double x0, int l, const Grid& grid) {
    if (l < 0) throw invalid_parameter("h2l_factorization_seed: l must be >= 0");
    const AlphaProfile alpha(1.0, x0);
    const double ll1 = static_cast<double>(l) * (l + 1);
    const OdeRhs rhs = [&](double x, const std::vector<double>& y, std::vector<double>& dy) {
        const double al = alpha(x);
        dy[0] = y[1];
        dy[1] = (ll1 / (x * x) - 0.5 * al * al + 0.5) * y[0];
    };
    const double h = grid.h();
    // Frobenius series u = x^{l+1}(1 + a2 x^2 + a3 x^3 + ...) seeds the start
    // at O(h^4); bare x^{l+1} would shift the node-count threshold by O(h^2).
    const double Q0 = 0.5 - 0.5 * alpha(0.0) * alpha(0.0);
    const double Q1 = -alpha(0.0) * alpha.prime(0.0);
    const double a2 = Q0 / (4.0 * l + 6.0);
    const double a3 = Q1 / (6.0 * l + 12.0);
    const double hl = std::pow(h, l);
    const std::vector<double> y0 = {
        hl * h * (1.0 + a2 * h * h + a3 * h * h * h),
        hl * ((l + 1) + (l + 3) * a2 * h * h + (l + 4) * a3 * h * h * h)};
    const Trajectory traj = integrate_ivp(rhs, h, grid.L, y0, h, /*watch=*/0);

    FactorizationSeed seed;
    seed.x0 = x0;
    seed.l = l;
    seed.u.reserve(traj.y.size());
    seed.du.reserve(traj.y.size());
    double umax = 0.0;
    bool guard_hit = false;
    for (const auto& y : traj.y) {
        seed.u.push_back(y[0]);
        seed.du.push_back(y[1]);
        umax = std::max(umax, std::abs(y[0]));
        if (std::abs(y[0]) < 1e-12 * umax) guard_hit = true;
    }
    seed.node_positions = traj.nodes;
    seed.nodes = static_cast<int>(traj.nodes.size());
    seed.regular = (seed.nodes == 0) && !guard_hit;
    return seed;
}

std::vector<double> FactorizationSeed::superpotential(const Grid& grid) const {
    if (!regular) throw irregular_superpotential_error();
    if (static_cast<int>(u.size()) < grid.n)
        throw invalid_parameter("superpotential: seed was integrated on a smaller grid");
    std::vector<double> w(grid.n);
    for (int i = 0; i < grid.n; ++i) w[i] = du[i] / u[i];
    return w;
}

}  // namespace dynamo
