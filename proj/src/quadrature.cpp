#include "dynamo/quadrature.hpp"

#include "dynamo/errors.hpp"

namespace dynamo {

double simpson(const std::vector<double>& f, double h) {
    const int m = static_cast<int>(f.size());
    if (m < 3) throw invalid_parameter("simpson: need at least 3 samples");
    const int intervals = m - 1;
    double total = 0.0;
    int last = intervals;  // first index not handled by Simpson pairs
    if (intervals % 2 != 0) last = intervals - 3;
    for (int k = 0; k + 2 <= last; k += 2)
        total += h / 3.0 * (f[k] + 4.0 * f[k + 1] + f[k + 2]);
    if (intervals % 2 != 0) {
        // 3/8 closure keeps the odd-interval case at O(h^4).
        const int k = intervals - 3;
        total += 3.0 * h / 8.0 * (f[k] + 3.0 * f[k + 1] + 3.0 * f[k + 2] + f[k + 3]);
    }
    return total;
}

std::vector<double> cumulative_simpson(const std::vector<double>& f, double h) {
    const int m = static_cast<int>(f.size());
    if (m < 3) throw invalid_parameter("cumulative_simpson: need at least 3 samples");
    std::vector<double> I(m, 0.0);
    for (int k = 2; k < m; k += 2)
        I[k] = I[k - 2] + h / 3.0 * (f[k - 2] + 4.0 * f[k - 1] + f[k]);
    for (int k = 1; k < m; k += 2) {
        if (k + 1 < m)
            I[k] = I[k - 1] + h / 12.0 * (5.0 * f[k - 1] + 8.0 * f[k] - f[k + 1]);
        else
            I[k] = I[k - 1] + h / 12.0 * (-f[k - 2] + 8.0 * f[k - 1] + 5.0 * f[k]);
    }
    return I;
}

std::vector<double> cumulative_simpson_tail(const std::vector<double>& f, double h) {
    const int m = static_cast<int>(f.size());
    if (m < 3) throw invalid_parameter("cumulative_simpson_tail: need at least 3 samples");
    std::vector<double> J(m, 0.0);
    // Pairs from the right end; parity classes mirror cumulative_simpson.
    for (int k = m - 3; k >= 0; k -= 2)
        J[k] = J[k + 2] + h / 3.0 * (f[k] + 4.0 * f[k + 1] + f[k + 2]);
    for (int k = m - 2; k >= 0; k -= 2) {
        if (k + 2 < m)
            J[k] = J[k + 1] + h / 12.0 * (5.0 * f[k] + 8.0 * f[k + 1] - f[k + 2]);
        else
            J[k] = J[k + 1] + h / 12.0 * (-f[k - 1] + 8.0 * f[k] + 5.0 * f[k + 1]);
    }
    return J;
}

}  // namespace dynamo
