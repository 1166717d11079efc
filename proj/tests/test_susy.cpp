#include <cmath>
#include <random>

#include <doctest.h>

#include "dynamo/errors.hpp"
#include "dynamo/susy.hpp"
#include "dynamo/tridiag.hpp"

using namespace dynamo;

TEST_SUITE_BEGIN("susy");

namespace {

const double kKappaJ = 1.0 / std::sqrt(2.0);
const double kXJ = std::log(1.0 + std::sqrt(2.0));  // arctanh(2^{-1/2})

// phi_s and its first three derivatives as a closed-form test function.
TestFunction phi_test_function(double x0, double kappa, int s) {
    auto t = [x0](double x) { return std::tanh(x - x0); };
    return TestFunction{
        [=](double x) { return (-s * kappa + t(x)) * std::exp(s * kappa * x); },
        [=](double x) {
            const double th = t(x), s2 = 1.0 - th * th;
            return (s2 - kappa * kappa + s * kappa * th) * std::exp(s * kappa * x);
        },
        [=](double x) {
            const double th = t(x), s2 = 1.0 - th * th;
            return (-2.0 * th * s2 + 2.0 * s * kappa * s2 +
                    kappa * kappa * (-s * kappa + th)) *
                   std::exp(s * kappa * x);
        },
        [=](double x) {
            const double th = t(x), s2 = 1.0 - th * th;
            const double b = -2.0 * th * s2 + 2.0 * s * kappa * s2 +
                             kappa * kappa * (-s * kappa + th);
            const double db = s2 * (-2.0 + 6.0 * th * th - 4.0 * s * kappa * th +
                                    kappa * kappa);
            return (db + s * kappa * b) * std::exp(s * kappa * x);
        }};
}

double richardson_lowest(double x0, int n) {
    const Grid g1(100.0, n / 2), g2(100.0, n);
    const auto pot = [x0](double x) {
        const double c = std::cosh(x - x0);
        return -2.0 / (c * c);
    };
    const double l1 = smallest_eigenvalue(discretize_schrodinger(g1, pot));
    const double l2 = smallest_eigenvalue(discretize_schrodinger(g2, pot));
    const double rho = g1.h() / g2.h();
    return (rho * rho * l2 - l1) / (rho * rho - 1.0);
}

}  // namespace

TEST_CASE("phi at the profile center") {
    const double x0 = 0.8, kappa = 0.6;
    const PhiExact pp(x0, kappa, +1), pm(x0, kappa, -1);
    CHECK(pp(x0) == doctest::Approx(-kappa * std::exp(kappa * x0)).epsilon(1e-14));
    CHECK(pm(x0) == doctest::Approx(kappa * std::exp(-kappa * x0)).epsilon(1e-14));
    CHECK_THROWS_AS(PhiExact(0.5, 0.0, +1), invalid_parameter);
    CHECK_THROWS_AS(PhiExact(0.5, -1.0, -1), invalid_parameter);
}

TEST_CASE("phi solves the soliton Schrodinger equation") {
    const Grid grid(100.0, 2000);
    for (double kappa : {0.3, kKappaJ, 0.9}) {
        for (int s : {+1, -1}) {
            const PhiExact phi(1.1, kappa, s);
            double rn = 0.0, fn = 0.0;
            for (int i = 0; i < grid.n; ++i) {
                const double x = grid.x(i);
                const double c = std::cosh(x - 1.1);
                const double v = -2.0 / (c * c);
                const double r = -phi.second(x) + v * phi(x) + kappa * kappa * phi(x);
                rn += r * r;
                fn += phi(x) * phi(x);
            }
            CHECK(std::sqrt(rn / fn) < 1e-8);
        }
    }
}

TEST_CASE("Wronskian is constant and equals -2^{-1/2} at kappa = 2^{-1/2}") {
    const PhiExact pp(kXJ, kKappaJ, +1), pm(kXJ, kKappaJ, -1);
    for (int k = 0; k < 100; ++k) {
        const double x = k * 1.0;
        CHECK(std::abs(wronskian(pp, pm, x) - (-kKappaJ)) < 1e-10);
    }
}

TEST_CASE("bound state level") {
    CHECK(!bound_state_level(0.0));
    CHECK(!bound_state_level(-1.5));
    CHECK(*bound_state_level(kXJ) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(*bound_state_level(30.0) == doctest::Approx(-1.0).epsilon(1e-10));
    // 30-digit value of -tanh^2(1)
    CHECK(*bound_state_level(1.0) ==
          doctest::Approx(-0.58002565838597393).epsilon(1e-14));
}

TEST_CASE("level formula against the discretized eigensolver") {
    CHECK(richardson_lowest(1.0, 8000) ==
          doctest::Approx(-std::pow(std::tanh(1.0), 2)).epsilon(1e-6));

    std::mt19937 rng(31415);
    std::uniform_real_distribution<double> ux0(0.1, 3.0);
    for (int k = 0; k < 20; ++k) {
        const double x0 = ux0(rng);
        const double expected = *bound_state_level(x0);
        CHECK(std::abs(richardson_lowest(x0, 8000) - expected) < 1e-6);
    }
}

TEST_CASE("intertwining L H0 = H1 L") {
    const Grid grid(100.0, 1000);
    const double x0 = 0.9;
    const TestFunction gauss{
        [](double x) { return std::exp(-x * x / 4.0); },
        [](double x) { return -0.5 * x * std::exp(-x * x / 4.0); },
        [](double x) { return (0.25 * x * x - 0.5) * std::exp(-x * x / 4.0); },
        [](double x) { return (0.75 * x - x * x * x / 8.0) * std::exp(-x * x / 4.0); }};
    const TestFunction xexp{
        [](double x) { return x * std::exp(-x); },
        [](double x) { return (1.0 - x) * std::exp(-x); },
        [](double x) { return (x - 2.0) * std::exp(-x); },
        [](double x) { return (3.0 - x) * std::exp(-x); }};
    CHECK(intertwining_residual(gauss, grid, x0) < 1e-8);
    CHECK(intertwining_residual(xexp, grid, x0) < 1e-8);
    CHECK(intertwining_residual(phi_test_function(x0, 0.5, +1), grid, x0) < 1e-8);
}

TEST_CASE("factorization identities") {
    const Grid grid(100.0, 1000);
    const TestFunction gauss{
        [](double x) { return std::exp(-x * x / 4.0); },
        [](double x) { return -0.5 * x * std::exp(-x * x / 4.0); },
        [](double x) { return (0.25 * x * x - 0.5) * std::exp(-x * x / 4.0); },
        [](double x) { return (0.75 * x - x * x * x / 8.0) * std::exp(-x * x / 4.0); }};
    CHECK(factorization_residual_h0(gauss, grid, 0.7) < 1e-8);
    CHECK(factorization_residual_h1(gauss, grid, 0.7) < 1e-8);
}

TEST_CASE("phi_- decays below the Dirichlet tolerance at L = 100") {
    const PhiExact pm(kXJ, kKappaJ, -1);
    CHECK(std::abs(pm(100.0)) < 1e-20);
}

TEST_CASE("factorization seed: node structure across the Jordan point") {
    const Grid grid(100.0, 8000);
    const FactorizationSeed below = h2l_factorization_seed(0.5, 0, grid);
    CHECK(below.nodes == 0);
    CHECK(below.regular);
    CHECK_NOTHROW(below.superpotential(grid));

    const FactorizationSeed above = h2l_factorization_seed(1.2, 0, grid);
    CHECK(above.nodes >= 1);
    CHECK(!above.regular);
    CHECK_THROWS_AS(above.superpotential(grid), irregular_superpotential_error);
}

TEST_CASE("seed trajectory matches the closed-form combination for l = 0") {
    // H_{2,0} u = 0 is the soliton problem at E = -1/2; the outward solution
    // is a fixed combination of phi_+ and phi_- determined at x = h.
    const Grid grid(100.0, 8000);
    const double x0 = 1.5;
    const PhiExact pp(x0, kKappaJ, +1), pm(x0, kKappaJ, -1);
    const double W = wronskian(pp, pm, 1.0);
    const FactorizationSeed seed = h2l_factorization_seed(x0, 0, grid);

    const double h = grid.h();
    const double u0 = seed.u[0], du0 = seed.du[0];
    const double A = (u0 * pm.prime(h) - du0 * pm(h)) / W;
    const double B = (pp(h) * du0 - pp.prime(h) * u0) / W;
    auto exact = [&](double x) { return A * pp(x) + B * pm(x); };

    for (int i = 100; i < grid.n; i += 500) {
        const double x = grid.x(i);
        CHECK(seed.u[i] == doctest::Approx(exact(x)).epsilon(1e-6));
    }
    // node count against dense sampling of the closed form
    int sign_changes = 0;
    double prev = exact(h);
    for (double x = h; x <= 100.0; x += 1e-3) {
        const double cur = exact(x);
        if ((prev < 0 && cur > 0) || (prev > 0 && cur < 0)) ++sign_changes;
        prev = cur;
    }
    CHECK(seed.nodes == sign_changes);
}

TEST_CASE("node-count transition sits at the Jordan point") {
    const Grid grid(100.0, 4000);
    double lo = kXJ - 0.3, hi = kXJ + 0.3;
    CHECK(h2l_factorization_seed(lo, 0, grid).nodes == 0);
    CHECK(h2l_factorization_seed(hi, 0, grid).nodes >= 1);
    for (int it = 0; it < 40; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (h2l_factorization_seed(mid, 0, grid).nodes == 0)
            lo = mid;
        else
            hi = mid;
    }
    CHECK(0.5 * (lo + hi) == doctest::Approx(kXJ).epsilon(1e-6));
}

TEST_CASE("regularity threshold grows with l") {
    const Grid grid(100.0, 4000);
    // l = 1 still nodeless where l = 0 already has a node
    CHECK(h2l_factorization_seed(1.2, 0, grid).nodes >= 1);
    CHECK(h2l_factorization_seed(1.2, 1, grid).nodes == 0);
    double lo = 1.2, hi = 4.0;
    CHECK(h2l_factorization_seed(hi, 1, grid).nodes >= 1);
    for (int it = 0; it < 30; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (h2l_factorization_seed(mid, 1, grid).nodes == 0)
            lo = mid;
        else
            hi = mid;
    }
    CHECK(0.5 * (lo + hi) > kXJ);
}

TEST_SUITE_END();
