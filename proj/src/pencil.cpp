#include "dynamo/pencil.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dynamo/errors.hpp"
#include "dynamo/profile.hpp"

namespace dynamo {

AuxiliaryOperator::AuxiliaryOperator(double x0, int l, const Grid& grid)
    : grid_(grid), x0_(x0), l_(l) {
    if (l < 0) throw invalid_parameter("AuxiliaryOperator: l must be >= 0");
    const double h = grid.h();
    inv_h2_ = 1.0 / (h * h);
    e2_ = inv_h2_ * inv_h2_;
    const double safmin = std::numeric_limits<double>::min();
    pivmin_ = std::max(safmin, safmin * e2_);
    const AlphaProfile prof(1.0, x0);
    const double ll1 = static_cast<double>(l) * (l + 1);
    dbase_.resize(grid.n);
    alpha_.resize(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.x(i);
        const double al = prof(x);
        alpha_[i] = al;
        dbase_[i] = 2.0 * inv_h2_ + ll1 / (x * x) - 0.5 * al * al;
    }
}

namespace {

constexpr double kLambdaJ = 0.5;

// Sturm count specialized to constant off-diagonal -1/h^2 and diagonal
// dbase + b*alpha.
int count_below(const std::vector<double>& dbase, const std::vector<double>& alpha,
                double b, double e2, double pivmin, double mu) {
    const int n = static_cast<int>(dbase.size());
    int count = 0;
    double q = dbase[0] + b * alpha[0] - mu;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    for (int i = 1; i < n; ++i) {
        q = dbase[i] + b * alpha[i] - mu - e2 / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

}  // namespace

double AuxiliaryOperator::lambda(double b, double eigen_tol) const {
    const int n = grid_.n;
    // The smallest eigenvalue is >= min of the potential (row sums cancel the
    // Laplacian part) and, for these scattering-type wells, far below the cap.
    double lo = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        lo = std::min(lo, dbase_[i] + b * alpha_[i] - 2.0 * inv_h2_);
    lo -= 1e-6;
    double hi = 1.2;
    if (count_below(dbase_, alpha_, b, e2_, pivmin_, hi) < 1) {
        // Degenerate configuration (tiny boxes, huge l); fall back to the full
        // Gershgorin interval.
        for (int i = 0; i < n; ++i)
            hi = std::max(hi, dbase_[i] + b * alpha_[i] + 2.0 * inv_h2_);
        hi += 1e-6;
    }
    for (int it = 0; it < 2048 && hi - lo > eigen_tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (count_below(dbase_, alpha_, b, e2_, pivmin_, mid) < 1)
            lo = mid;
        else
            hi = mid;
    }
    return -0.5 * (lo + hi);
}

Tridiagonal AuxiliaryOperator::assemble(double b) const {
    Tridiagonal T;
    T.diagonal.resize(grid_.n);
    T.off.assign(grid_.n - 1, -inv_h2_);
    for (int i = 0; i < grid_.n; ++i) T.diagonal[i] = dbase_[i] + b * alpha_[i];
    return T;
}

EigenPair AuxiliaryOperator::ground_state(double b, double eigen_tol) const {
    const Tridiagonal T = assemble(b);
    return lowest_eigenpairs(T, 1, eigen_tol)[0];
}

std::vector<double> reduced_spectrum(double x0, int l, const Grid& grid, int k) {
    const AuxiliaryOperator op(x0, l, grid);
    const Tridiagonal T = op.assemble(0.0);
    const std::vector<double> evals = lowest_eigenvalues(T, k);
    std::vector<double> lambdas(evals.size());
    for (size_t j = 0; j < evals.size(); ++j) lambdas[j] = -evals[j];
    return lambdas;  // descending in lambda
}

double auxiliary_lambda(double x0, int l, double b, const Grid& grid) {
    return AuxiliaryOperator(x0, l, grid).lambda(b);
}

namespace {

// The constraint b = -/+ sqrt(1/2 - lambda(b)) is equivalent to a root of
// G(b) = lambda(b) + b^2 - 1/2.  Its sign costs one Sturm pass:
// G > 0  <=>  the smallest eigenvalue of A(b) lies below b^2 - 1/2.
// Exact signs make the b-bisection noise-free, and the lambda > 1/2 region
// (imaginary epsilon) needs no special casing since G > 0 throughout it.
class ConstraintSign {
  public:
    ConstraintSign(const std::vector<double>& dbase, const std::vector<double>& alpha,
                   double e2, double pivmin)
        : dbase_(dbase), alpha_(alpha), e2_(e2), pivmin_(pivmin) {}

    int operator()(double b) const {
        const double mu = b * b - kLambdaJ;
        return count_below(dbase_, alpha_, b, e2_, pivmin_, mu) >= 1 ? +1 : -1;
    }

    bool lambda_exceeds_half(double b) const {
        return count_below(dbase_, alpha_, b, e2_, pivmin_, -kLambdaJ) >= 1;
    }

  private:
    const std::vector<double>& dbase_;
    const std::vector<double>& alpha_;
    double e2_, pivmin_;
};

double bisect_sign_change(const ConstraintSign& sg, double a, double c, int sa,
                          double tol) {
    for (int it = 0; it < 128 && c - a > tol; ++it) {
        const double mid = 0.5 * (a + c);
        if (mid == a || mid == c) break;
        if (sg(mid) == sa)
            a = mid;
        else
            c = mid;
    }
    return 0.5 * (a + c);
}

PencilSolution make_solution(const AuxiliaryOperator& op, double b_root,
                             const SolveOptions& opts) {
    PencilSolution sol;
    sol.x0 = op.x0();
    sol.l = op.l();
    sol.b_root = b_root;
    sol.epsilon = -b_root;
    sol.lambda = kLambdaJ - b_root * b_root;
    sol.branch = b_root <= 0.0 ? Branch::FPlus : Branch::FMinus;

    EigenPair gs = op.ground_state(b_root, opts.eigen_tol);
    sol.F = std::move(gs.vector);

    const Grid& grid = op.grid();
    double fmax = 0.0, tail = 0.0;
    const double tail_start = grid.L * (1.0 - opts.tail_fraction);
    for (int i = 0; i < grid.n; ++i) {
        const double a = std::abs(sol.F[i]);
        fmax = std::max(fmax, a);
        if (grid.x(i) >= tail_start) tail = std::max(tail, a);
    }
    sol.localized = tail < opts.tail_threshold * fmax;

    // Residual of the pencil form itself, with lambda the definitional
    // 1/2 - eps^2: ||(T(b) + (1/2 - b^2)) F||, ||F|| = 1.
    const Tridiagonal T = op.assemble(b_root);
    std::vector<double> y;
    T.apply(sol.F, y);
    const double shift = kLambdaJ - b_root * b_root;
    double rn = 0.0;
    for (int i = 0; i < grid.n; ++i) {
        const double r = y[i] + shift * sol.F[i];
        rn += r * r;
    }
    sol.residual = std::sqrt(rn);
    return sol;
}

ConstraintSign make_sign(const AuxiliaryOperator& op) {
    return ConstraintSign(op.dbase(), op.alphas(), op.e2(), op.pivmin());
}

}  // namespace

PencilResult solve_pencil(double x0, int l, const Grid& grid, const SolveOptions& opts) {
    const AuxiliaryOperator op(x0, l, grid);
    const ConstraintSign sg = make_sign(op);
    PencilResult result;

    const int nsteps =
        static_cast<int>(std::floor((opts.scan_max - opts.scan_min) / opts.scan_step + 0.5));
    std::vector<double> bs(nsteps + 1);
    std::vector<int> signs(nsteps + 1);
    for (int k = 0; k <= nsteps; ++k) {
        bs[k] = opts.scan_min + k * opts.scan_step;
        signs[k] = sg(bs[k]);
    }

    std::vector<double> roots;
    for (int k = 0; k < nsteps; ++k)
        if (signs[k] != signs[k + 1])
            roots.push_back(
                bisect_sign_change(sg, bs[k], bs[k + 1], signs[k], opts.root_tol));
    result.roots_b = roots;

    for (double b : roots) {
        PencilSolution sol = make_solution(op, b, opts);
        if (sol.lambda > 0.0 && sol.localized)
            result.candidates.push_back(std::move(sol));
    }
    if (!result.candidates.empty()) {
        // Default policy: deepest state.  Sweeps override this with
        // continuity tracking along x0.
        const auto best = std::max_element(
            result.candidates.begin(), result.candidates.end(),
            [](const PencilSolution& a, const PencilSolution& b) {
                return a.lambda < b.lambda;
            });
        result.solution = *best;
    } else {
        // Diagnostic: did the scan touch the region where epsilon would be
        // imaginary (lambda > 1/2)?
        for (int k = 0; k <= nsteps && !result.imaginary_straddle; ++k)
            if (sg.lambda_exceeds_half(bs[k])) result.imaginary_straddle = true;
    }
    return result;
}

std::optional<PencilSolution> solve_pencil_near(double x0, int l, const Grid& grid,
                                                double b_center, double half_width,
                                                const SolveOptions& opts) {
    const AuxiliaryOperator op(x0, l, grid);
    const ConstraintSign sg = make_sign(op);
    const double a = b_center - half_width, c = b_center + half_width;
    const int sa = sg(a);
    if (sg(c) == sa) return std::nullopt;
    const double root = bisect_sign_change(sg, a, c, sa, opts.root_tol);
    return make_solution(op, root, opts);
}

}  // namespace dynamo
