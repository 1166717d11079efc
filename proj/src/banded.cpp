#include "dynamo/banded.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dynamo {

void BandMatrix::apply(const std::vector<double>& v, std::vector<double>& y) const {
    y.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        const int j0 = std::max(0, i - kl);
        const int j1 = std::min(n - 1, i + ku);
        double s = 0.0;
        for (int j = j0; j <= j1; ++j) s += get(i, j) * v[j];
        y[i] = s;
    }
}

BandLU::BandLU(const BandMatrix& A) : f_(A), piv_(A.n) {
    const int n = f_.n, kl = f_.kl, ku = f_.ku;
    const double tiny = std::numeric_limits<double>::min();
    for (int j = 0; j < n; ++j) {
        // Pivot search in column j, rows j..j+kl.
        const int imax = std::min(n - 1, j + kl);
        int p = j;
        double best = std::abs(f_.get(j, j));
        for (int i = j + 1; i <= imax; ++i) {
            const double a = std::abs(f_.get(i, j));
            if (a > best) {
                best = a;
                p = i;
            }
        }
        piv_[j] = p;
        const int jmax = std::min(n - 1, j + ku + kl);
        if (p != j) {
            for (int c = j; c <= jmax; ++c) std::swap(f_.at(j, c), f_.at(p, c));
        }
        double pivot = f_.at(j, j);
        if (pivot == 0.0) {
            pivot = tiny;
            f_.at(j, j) = pivot;
        }
        for (int i = j + 1; i <= imax; ++i) {
            const double m = f_.at(i, j) / pivot;
            f_.at(i, j) = m;
            if (m != 0.0)
                for (int c = j + 1; c <= jmax; ++c) f_.at(i, c) -= m * f_.at(j, c);
        }
    }
}

void BandLU::solve(std::vector<double>& b) const {
    const int n = f_.n, kl = f_.kl, ku = f_.ku;
    for (int j = 0; j < n; ++j) {
        if (piv_[j] != j) std::swap(b[j], b[piv_[j]]);
        const int imax = std::min(n - 1, j + kl);
        const double bj = b[j];
        if (bj != 0.0)
            for (int i = j + 1; i <= imax; ++i) b[i] -= f_.get(i, j) * bj;
    }
    for (int i = n - 1; i >= 0; --i) {
        const int j1 = std::min(n - 1, i + ku + kl);
        double s = b[i];
        for (int j = i + 1; j <= j1; ++j) s -= f_.get(i, j) * b[j];
        b[i] = s / f_.get(i, i);
    }
}

}  // namespace dynamo
