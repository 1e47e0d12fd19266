#include "quadlsq/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "quadlsq/errors.hpp"

namespace quadlsq {

ExtVector solve_upper(const Matrix<DoubleDouble>& upper, std::span<const DoubleDouble> rhs) {
    const std::size_t n = upper.rows();
    assert(upper.cols() == n && rhs.size() == n);
    ExtVector x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        const DoubleDouble pivot = upper(ii, ii);
        if (pivot.hi == 0.0) throw NumericalError("singular diagonal");
        DoubleDouble acc = rhs[ii];
        for (std::size_t k = ii + 1; k < n; ++k) acc -= upper(ii, k) * x[k];
        x[ii] = acc / pivot;
    }
    return x;
}

Matrix<DoubleDouble> invert_upper(const Matrix<DoubleDouble>& upper) {
    const std::size_t n = upper.rows();
    Matrix<DoubleDouble> inv(n, n);
    ExtVector unit(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(unit.begin(), unit.end(), DoubleDouble{});
        unit[j] = 1.0;
        const ExtVector col = solve_upper(upper, unit);
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    return inv;
}

Matrix<double> to_doubles(const Matrix<DoubleDouble>& m) {
    Matrix<double> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
    return out;
}

double norm_inf(const Matrix<double>& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double sum = 0.0;
        for (double v : m.row(i)) sum += std::abs(v);
        best = std::max(best, sum);
    }
    return best;
}

double norm_1(const Matrix<double>& m) {
    double best = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < m.rows(); ++i) sum += std::abs(m(i, j));
        best = std::max(best, sum);
    }
    return best;
}

}  // namespace quadlsq
