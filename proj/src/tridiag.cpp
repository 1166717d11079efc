#include "dynamo/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dynamo/errors.hpp"

namespace dynamo {

void Tridiagonal::apply(const std::vector<double>& v, std::vector<double>& y) const {
    const int n = size();
    y.resize(n);
    for (int i = 0; i < n; ++i) {
        double s = diagonal[i] * v[i];
        if (i > 0) s += off[i - 1] * v[i - 1];
        if (i + 1 < n) s += off[i] * v[i + 1];
        y[i] = s;
    }
}

double Tridiagonal::inf_norm() const {
    const int n = size();
    double m = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = std::abs(diagonal[i]);
        if (i > 0) s += std::abs(off[i - 1]);
        if (i + 1 < n) s += std::abs(off[i]);
        m = std::max(m, s);
    }
    return m;
}

Tridiagonal discretize_schrodinger(const Grid& grid,
                                   const std::function<double(double)>& potential) {
    const double h = grid.h();
    const double inv_h2 = 1.0 / (h * h);
    Tridiagonal T;
    T.diagonal.resize(grid.n);
    T.off.assign(grid.n - 1, -inv_h2);
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.x(i);
        const double q = potential(x);
        if (!std::isfinite(q))
            throw numerical_failure("discretize_schrodinger: potential not finite at node " +
                                    std::to_string(i) + " (x = " + std::to_string(x) + ")");
        T.diagonal[i] = 2.0 * inv_h2 + q;
    }
    return T;
}

namespace {

// Sturm sign count: number of eigenvalues below mu equals the number of
// negative leading minors of T - mu I, computed by the classic q-recurrence.
// Tiny pivots are replaced by -pivmin (LAPACK dstebz convention).
int sturm_count(const std::vector<double>& d, const std::vector<double>& e2, double mu,
                double pivmin) {
    const int n = static_cast<int>(d.size());
    int count = 0;
    double q = d[0] - mu;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    for (int i = 1; i < n; ++i) {
        q = d[i] - mu - e2[i - 1] / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

struct SturmData {
    std::vector<double> e2;
    double pivmin;
};

SturmData prepare(const Tridiagonal& T) {
    SturmData s;
    const int n = T.size();
    s.e2.resize(std::max(0, n - 1));
    double max_e2 = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        s.e2[i] = T.off[i] * T.off[i];
        max_e2 = std::max(max_e2, s.e2[i]);
    }
    const double safmin = std::numeric_limits<double>::min();
    s.pivmin = std::max(safmin, safmin * max_e2);
    return s;
}

// Bisect for the (k+1)-th smallest eigenvalue (0-indexed k) in [lo, hi].
double bisect_index(const std::vector<double>& d, const SturmData& s, int k, double lo,
                    double hi, double abs_tol) {
    // 2048 iterations is far beyond what any double interval needs; treat
    // exhaustion as a hard failure.
    for (int it = 0; it < 2048; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= abs_tol || mid == lo || mid == hi) return mid;
        if (sturm_count(d, s.e2, mid, s.pivmin) <= k)
            lo = mid;
        else
            hi = mid;
    }
    throw numerical_failure("tridiagonal bisection did not converge");
}

}  // namespace

int sturm_count_below(const Tridiagonal& T, double mu) {
    const SturmData s = prepare(T);
    return sturm_count(T.diagonal, s.e2, mu, s.pivmin);
}

void spectrum_bounds(const Tridiagonal& T, double& lo, double& hi) {
    const int n = T.size();
    lo = std::numeric_limits<double>::infinity();
    hi = -lo;
    for (int i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(T.off[i - 1]);
        if (i + 1 < n) r += std::abs(T.off[i]);
        lo = std::min(lo, T.diagonal[i] - r);
        hi = std::max(hi, T.diagonal[i] + r);
    }
    // Widen so strict Sturm counts at the endpoints are unambiguous.
    const double pad = 1e-8 * (1.0 + std::abs(lo) + std::abs(hi));
    lo -= pad;
    hi += pad;
}

std::vector<double> lowest_eigenvalues(const Tridiagonal& T, int k, double abs_tol) {
    if (k < 1) throw invalid_parameter("lowest_eigenvalues: k must be >= 1");
    k = std::min(k, T.size());
    const SturmData s = prepare(T);
    double lo, hi;
    spectrum_bounds(T, lo, hi);
    std::vector<double> vals(k);
    double left = lo;
    for (int j = 0; j < k; ++j) {
        vals[j] = bisect_index(T.diagonal, s, j, left, hi, abs_tol);
        // The next eigenvalue cannot lie below this one.
        left = vals[j] - abs_tol;
    }
    return vals;
}

double smallest_eigenvalue(const Tridiagonal& T, double abs_tol) {
    const SturmData s = prepare(T);
    double lo, hi;
    spectrum_bounds(T, lo, hi);
    return bisect_index(T.diagonal, s, 0, lo, hi, abs_tol);
}

void shifted_tridiagonal_solve(const Tridiagonal& T, double shift,
                               const std::vector<double>& rhs, std::vector<double>& x) {
    const int n = T.size();
    // Row-pivoted tridiagonal LU (gttrf/gttrs layout): swaps spill into a
    // second superdiagonal.  Zero pivots are nudged, which is what inverse
    // iteration with a converged shift wants.
    std::vector<double> dl(std::max(0, n - 1)), dd(n), du(std::max(0, n - 1)),
        du2(std::max(0, n - 2), 0.0);
    std::vector<char> swapped(std::max(0, n - 1), 0);
    for (int i = 0; i < n; ++i) dd[i] = T.diagonal[i] - shift;
    for (int i = 0; i + 1 < n; ++i) {
        dl[i] = T.off[i];
        du[i] = T.off[i];
    }
    const double tiny =
        std::numeric_limits<double>::epsilon() * std::max(T.inf_norm(), 1.0) * 1e-16 +
        std::numeric_limits<double>::min();
    for (int i = 0; i + 1 < n; ++i) {
        if (std::abs(dd[i]) >= std::abs(dl[i])) {
            if (dd[i] == 0.0) dd[i] = tiny;
            const double m = dl[i] / dd[i];
            dl[i] = m;
            dd[i + 1] -= m * du[i];
        } else {
            const double m = dd[i] / dl[i];
            dd[i] = dl[i];
            dl[i] = m;
            const double temp = du[i];
            du[i] = dd[i + 1];
            dd[i + 1] = temp - m * dd[i + 1];
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -m * du[i + 1];
            }
            swapped[i] = 1;
        }
    }
    if (dd[n - 1] == 0.0) dd[n - 1] = tiny;

    x = rhs;
    for (int i = 0; i + 1 < n; ++i) {
        if (!swapped[i]) {
            x[i + 1] -= dl[i] * x[i];
        } else {
            const double temp = x[i];
            x[i] = x[i + 1];
            x[i + 1] = temp - dl[i] * x[i];
        }
    }
    x[n - 1] /= dd[n - 1];
    if (n >= 2) x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / dd[n - 2];
    for (int i = n - 3; i >= 0; --i)
        x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / dd[i];
}

namespace {

void normalize_and_fix_sign(std::vector<double>& v) {
    double nrm2 = 0.0, vmax = 0.0;
    for (double c : v) {
        nrm2 += c * c;
        vmax = std::max(vmax, std::abs(c));
    }
    const double nrm = std::sqrt(nrm2);
    double sign = 1.0;
    for (double c : v) {
        if (std::abs(c) > 1e-12 * vmax) {
            sign = c > 0.0 ? 1.0 : -1.0;
            break;
        }
    }
    const double scale = sign / nrm;
    for (double& c : v) c *= scale;
}

}  // namespace

std::vector<EigenPair> lowest_eigenpairs(const Tridiagonal& T, int k, double abs_tol,
                                         double residual_tol) {
    const std::vector<double> vals = lowest_eigenvalues(T, k, abs_tol);
    const int n = T.size();
    const double tnorm = T.inf_norm();
    std::vector<EigenPair> out(vals.size());
    std::vector<double> y;
    for (size_t j = 0; j < vals.size(); ++j) {
        EigenPair& ep = out[j];
        bool converged = false;
        // Deterministically seeded pseudo-random starts; a structured start
        // (e.g. constant) can be exactly orthogonal to the target mode.
        for (unsigned attempt = 0; attempt < 3 && !converged; ++attempt) {
            ep.value = vals[j];
            std::vector<double>& v = ep.vector;
            v.resize(n);
            unsigned state = 0x9e3779b9u + 77u * static_cast<unsigned>(j) + attempt;
            for (int i = 0; i < n; ++i) {
                state = state * 1664525u + 1013904223u;
                v[i] = state / 2147483648.0 - 1.0;
            }
            normalize_and_fix_sign(v);
            for (int it = 0; it < 12; ++it) {
                shifted_tridiagonal_solve(T, ep.value, v, y);
                // Orthogonalize against earlier vectors of a cluster.
                for (size_t p = 0; p < j; ++p) {
                    const std::vector<double>& u = out[p].vector;
                    if (std::abs(out[p].value - ep.value) >
                        1e-6 * (1.0 + std::abs(ep.value)))
                        continue;
                    double dot = 0.0;
                    for (int i = 0; i < n; ++i) dot += u[i] * y[i];
                    for (int i = 0; i < n; ++i) y[i] -= dot * u[i];
                }
                v.swap(y);
                normalize_and_fix_sign(v);
                T.apply(v, y);
                double rq = 0.0;
                for (int i = 0; i < n; ++i) rq += v[i] * y[i];
                double res = 0.0;
                for (int i = 0; i < n; ++i)
                    res = std::max(res, std::abs(y[i] - rq * v[i]));
                // Guard against drifting into a neighboring mode: the Rayleigh
                // value must stay at the bisection target.
                const bool on_target =
                    std::abs(rq - vals[j]) <= 1e3 * abs_tol + 1e-9 * (1.0 + std::abs(vals[j]));
                if (res <= residual_tol * tnorm && on_target && it >= 1) {
                    ep.value = rq;
                    converged = true;
                    break;
                }
                if (!on_target) break;  // wrong basin; retry with a new start
            }
        }
        if (!converged)
            throw numerical_failure("inverse iteration failed to reach residual tolerance");
    }
    std::sort(out.begin(), out.end(),
              [](const EigenPair& a, const EigenPair& b) { return a.value < b.value; });
    return out;
}

}  // namespace dynamo
