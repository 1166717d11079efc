#include <cmath>
#include <random>

#include <doctest.h>

#include "dynamo/banded.hpp"
#include "dynamo/errors.hpp"
#include "dynamo/grid.hpp"
#include "dynamo/ode.hpp"
#include "dynamo/quadrature.hpp"
#include "dynamo/tridiag.hpp"

using namespace dynamo;

TEST_SUITE_BEGIN("kernels");

namespace {

double soliton_level(int n) {
    const Grid g(100.0, n);
    const auto T = discretize_schrodinger(g, [](double x) {
        const double c = std::cosh(x - 10.0);
        return -2.0 / (c * c);
    });
    return smallest_eigenvalue(T);
}

}  // namespace

TEST_CASE("grid basics") {
    const Grid g(100.0, 7);
    CHECK(g.h() == doctest::Approx(12.5));
    CHECK(g.x(0) == doctest::Approx(12.5));
    CHECK(g.x(6) == doctest::Approx(87.5));
    CHECK_THROWS_AS(Grid(-1.0, 10), invalid_parameter);
    CHECK_THROWS_AS(Grid(10.0, 0), invalid_parameter);
}

TEST_CASE("three-point Laplacian exact spectrum") {
    Tridiagonal T;
    T.diagonal = {2.0, 2.0, 2.0};
    T.off = {-1.0, -1.0};
    const auto vals = lowest_eigenvalues(T, 3, 1e-13);
    CHECK(vals[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-12));
    CHECK(vals[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(vals[2] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("particle in a box") {
    const Grid g(M_PI, 1500);
    const auto T = discretize_schrodinger(g, [](double) { return 0.0; });
    const auto pairs = lowest_eigenpairs(T, 3);
    const double h = g.h();
    for (int k = 1; k <= 3; ++k) {
        // exact eigenvalue of the discrete operator
        const double exact = (2.0 - 2.0 * std::cos(k * M_PI * h / g.L)) / (h * h);
        CHECK(pairs[k - 1].value == doctest::Approx(exact).epsilon(1e-10));
        // continuum limit (k pi / L)^2 = k^2
        CHECK(pairs[k - 1].value ==
              doctest::Approx(static_cast<double>(k) * k).epsilon(1e-5));
    }
    // orthonormality and sign convention
    for (int a = 0; a < 3; ++a) {
        double nrm = 0.0;
        for (double c : pairs[a].vector) nrm += c * c;
        CHECK(nrm == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(pairs[a].vector[0] > 0.0);
        for (int b = a + 1; b < 3; ++b) {
            double dot = 0.0;
            for (int i = 0; i < g.n; ++i) dot += pairs[a].vector[i] * pairs[b].vector[i];
            CHECK(std::abs(dot) < 1e-8);
        }
    }
}

TEST_CASE("constant potential shifts the spectrum exactly") {
    const Grid g(20.0, 400);
    const auto T0 = discretize_schrodinger(g, [](double) { return 0.0; });
    const auto Tc = discretize_schrodinger(g, [](double) { return 3.25; });
    const auto v0 = lowest_eigenvalues(T0, 4);
    const auto vc = lowest_eigenvalues(Tc, 4);
    for (int k = 0; k < 4; ++k)
        CHECK(vc[k] - v0[k] == doctest::Approx(3.25).epsilon(1e-10));
}

TEST_CASE("eigenvalue convergence is second order") {
    const double e1 = soliton_level(1000);
    const double e2 = soliton_level(2000);
    const double e3 = soliton_level(4000);
    const double ratio = std::abs(e1 - e2) / std::abs(e2 - e3);
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.5);
}

TEST_CASE("soliton well level via Richardson extrapolation") {
    // One-soliton well centered at x = 10 holds a single level at -1; the
    // Dirichlet wall contributes only an exponentially small shift.
    const Grid g1(100.0, 4000), g2(100.0, 8000);
    const double rho = g1.h() / g2.h();
    const double l1 = soliton_level(4000), l2 = soliton_level(8000);
    const double extrap = (rho * rho * l2 - l1) / (rho * rho - 1.0);
    CHECK(extrap == doctest::Approx(-1.0).epsilon(1e-5));
}

TEST_CASE("eigenvector residual meets the advertised bound") {
    const Grid g(100.0, 3000);
    const auto T = discretize_schrodinger(g, [](double x) {
        const double c = std::cosh(x - 5.0);
        return -2.0 / (c * c) + 0.3 / (x * x);
    });
    const auto pairs = lowest_eigenpairs(T, 2);
    const double tn = T.inf_norm();
    std::vector<double> y;
    for (const auto& ep : pairs) {
        T.apply(ep.vector, y);
        double res = 0.0;
        for (int i = 0; i < g.n; ++i)
            res = std::max(res, std::abs(y[i] - ep.value * ep.vector[i]));
        CHECK(res < 1e-9 * tn);
    }
}

TEST_CASE("Sturm count agrees with full extraction") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ud(-2.0, 2.0);
    Tridiagonal T;
    const int n = 40;
    T.diagonal.resize(n);
    T.off.resize(n - 1);
    for (int i = 0; i < n; ++i) T.diagonal[i] = ud(rng);
    for (int i = 0; i + 1 < n; ++i) T.off[i] = ud(rng);
    const auto all = lowest_eigenvalues(T, n, 1e-12);
    for (double mu : {-3.0, -1.0, -0.2, 0.0, 0.4, 1.5, 3.0, 9.0}) {
        int expected = 0;
        for (double v : all)
            if (v < mu) ++expected;
        CHECK(sturm_count_below(T, mu) == expected);
    }
}

TEST_CASE("discretize rejects a non-finite potential") {
    const Grid g(10.0, 50);
    CHECK_THROWS_WITH_AS(
        discretize_schrodinger(g, [](double x) { return 1.0 / (x - x); }),
        doctest::Contains("node"), numerical_failure);
}

TEST_CASE("shifted tridiagonal solve round trip") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> ud(-1.0, 1.0);
    Tridiagonal T;
    const int n = 50;
    T.diagonal.resize(n);
    T.off.resize(n - 1);
    for (int i = 0; i < n; ++i) T.diagonal[i] = 3.0 + ud(rng);
    for (int i = 0; i + 1 < n; ++i) T.off[i] = ud(rng);
    std::vector<double> x_true(n), rhs(n), x;
    for (int i = 0; i < n; ++i) x_true[i] = ud(rng);
    const double shift = 0.37;
    // rhs = (T - shift) x_true
    T.apply(x_true, rhs);
    for (int i = 0; i < n; ++i) rhs[i] -= shift * x_true[i];
    shifted_tridiagonal_solve(T, shift, rhs, x);
    for (int i = 0; i < n; ++i) CHECK(x[i] == doctest::Approx(x_true[i]).epsilon(1e-10));
}

TEST_CASE("banded LU round trip") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> ud(-1.0, 1.0);
    const int n = 60, kl = 3, ku = 2;
    BandMatrix A(n, kl, ku);
    for (int i = 0; i < n; ++i)
        for (int j = std::max(0, i - kl); j <= std::min(n - 1, i + ku); ++j)
            A.at(i, j) = (i == j ? 4.0 : 0.0) + ud(rng);
    std::vector<double> x_true(n);
    for (int i = 0; i < n; ++i) x_true[i] = ud(rng);
    std::vector<double> b;
    A.apply(x_true, b);
    const BandLU lu(A);
    lu.solve(b);
    for (int i = 0; i < n; ++i) CHECK(b[i] == doctest::Approx(x_true[i]).epsilon(1e-9));
}

TEST_CASE("RK4 classics") {
    const OdeRhs expo = [](double, const std::vector<double>& y, std::vector<double>& dy) {
        dy[0] = y[0];
    };
    const Trajectory t1 = integrate_ivp(expo, 0.0, 1.0, {1.0}, 1e-3);
    CHECK(t1.y.back()[0] == doctest::Approx(std::exp(1.0)).epsilon(1e-8));

    const OdeRhs cosh_rhs = [](double, const std::vector<double>& y,
                               std::vector<double>& dy) {
        dy[0] = y[1];
        dy[1] = y[0];
    };
    const Trajectory t2 = integrate_ivp(cosh_rhs, 0.0, 1.0, {1.0, 0.0}, 1e-3);
    CHECK(t2.y.back()[0] == doctest::Approx(std::cosh(1.0)).epsilon(1e-10));
}

TEST_CASE("RK4 node recording") {
    const OdeRhs osc = [](double, const std::vector<double>& y, std::vector<double>& dy) {
        dy[0] = y[1];
        dy[1] = -y[0];
    };
    const Trajectory t = integrate_ivp(osc, 0.0, 10.0, {0.0, 1.0}, 1e-3, /*watch=*/0);
    REQUIRE(t.nodes.size() == 3);
    for (size_t k = 0; k < t.nodes.size(); ++k)
        CHECK(t.nodes[k] == doctest::Approx((k + 1) * M_PI).epsilon(1e-6));
}

TEST_CASE("RK4 reports blow-up with the last finite x") {
    // y' = y^2 from y(0) = 2 blows up at x = 1/2.
    const OdeRhs r = [](double, const std::vector<double>& y, std::vector<double>& dy) {
        dy[0] = y[0] * y[0];
    };
    try {
        integrate_ivp(r, 0.0, 1.0, {2.0}, 1e-4);
        FAIL("expected blowup_error");
    } catch (const blowup_error& e) {
        // Finite steps may carry the trajectory slightly past the pole at 1/2
        // before the state overflows.
        CHECK(e.last_x > 0.4);
        CHECK(e.last_x < 0.6);
    }
}

TEST_CASE("Simpson quadrature") {
    {
        const int m = 3001;
        const double h = M_PI / (m - 1);
        std::vector<double> f(m);
        for (int k = 0; k < m; ++k) f[k] = std::sin(k * h);
        CHECK(simpson(f, h) == doctest::Approx(2.0).epsilon(1e-8));
    }
    {
        // int_0^40 sech^2 = tanh(40) = 1 to well below 1e-10
        const int m = 4001;
        const double h = 40.0 / (m - 1);
        std::vector<double> f(m);
        for (int k = 0; k < m; ++k) {
            const double c = std::cosh(k * h);
            f[k] = 1.0 / (c * c);
        }
        CHECK(simpson(f, h) == doctest::Approx(1.0).epsilon(1e-10));
    }
    CHECK_THROWS_AS(simpson({1.0, 2.0}, 0.1), invalid_parameter);
}

TEST_CASE("Simpson handles even and odd sample counts at fourth order") {
    // int_0^1 x^4 dx = 1/5
    for (int m : {101, 102}) {
        const double h = 1.0 / (m - 1);
        std::vector<double> f(m);
        for (int k = 0; k < m; ++k) f[k] = std::pow(k * h, 4);
        CHECK(simpson(f, h) == doctest::Approx(0.2).epsilon(1e-8));
    }
}

TEST_CASE("cumulative Simpson against the antiderivative") {
    const int m = 2001;
    const double h = M_PI / (m - 1);
    std::vector<double> f(m);
    for (int k = 0; k < m; ++k) f[k] = std::sin(k * h);
    const auto I = cumulative_simpson(f, h);
    const auto J = cumulative_simpson_tail(f, h);
    for (int k = 0; k < m; k += 97) {
        CHECK(I[k] == doctest::Approx(1.0 - std::cos(k * h)).epsilon(1e-10));
        CHECK(J[k] == doctest::Approx(std::cos(k * h) + 1.0).epsilon(1e-10));
    }
    // forward + tail = total, everywhere
    for (int k = 0; k < m; k += 53)
        CHECK(I[k] + J[k] == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_SUITE_END();
