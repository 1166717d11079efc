#pragma once

#include <vector>

namespace dynamo {

// General band matrix, kl sub- and ku super-diagonals, LAPACK-style band
// storage with kl extra superdiagonals of fill for the pivoted LU.
struct BandMatrix {
    int n = 0, kl = 0, ku = 0;
    std::vector<double> ab;  // (2*kl+ku+1) rows by n columns, row-major

    BandMatrix() = default;
    BandMatrix(int n_, int kl_, int ku_)
        : n(n_), kl(kl_), ku(ku_), ab(static_cast<size_t>(2 * kl_ + ku_ + 1) * n_, 0.0) {}

    int rows() const { return 2 * kl + ku + 1; }
    bool inside(int i, int j) const {
        const int r = kl + ku + i - j;
        return i >= 0 && i < n && j >= 0 && j < n && r >= 0 && r < rows();
    }
    double& at(int i, int j) { return ab[static_cast<size_t>(kl + ku + i - j) * n + j]; }
    double get(int i, int j) const {
        if (!inside(i, j)) return 0.0;
        return ab[static_cast<size_t>(kl + ku + i - j) * n + j];
    }

    void apply(const std::vector<double>& v, std::vector<double>& y) const;
};

// Pivoted LU factorization of a band matrix; factor once, solve many.
class BandLU {
  public:
    explicit BandLU(const BandMatrix& A);
    void solve(std::vector<double>& b) const;

  private:
    BandMatrix f_;
    std::vector<int> piv_;
};

}  // namespace dynamo
