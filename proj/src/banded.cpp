#include "gardner/banded.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gardner/errors.hpp"

namespace gardner {

BandedMatrix::BandedMatrix(std::size_t dim, std::size_t kl, std::size_t ku)
    : dim_(dim), kl_(kl), ku_(ku), band_((kl + ku + 1) * dim, 0.0) {}

double BandedMatrix::operator()(std::size_t i, std::size_t j) const noexcept {
    if (!in_band(i, j)) return 0.0;
    return band_[j * (kl_ + ku_ + 1) + (ku_ + i - j)];
}

double& BandedMatrix::at(std::size_t i, std::size_t j) {
    if (!in_band(i, j)) {
        throw DomainError("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") is outside the band");
    }
    return band_[j * (kl_ + ku_ + 1) + (ku_ + i - j)];
}

double BandedMatrix::max_abs() const noexcept {
    double m = 0.0;
    for (double v : band_) m = std::max(m, std::abs(v));
    return m;
}

std::vector<double> multiply(const BandedMatrix& m, std::span<const double> x) {
    if (x.size() != m.dim()) throw DomainError("multiply: dimension mismatch");
    const std::size_t n = m.dim();
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j0 = i > m.kl() ? i - m.kl() : 0;
        const std::size_t j1 = std::min(n - 1, i + m.ku());
        double acc = 0.0;
        for (std::size_t j = j0; j <= j1; ++j) acc += m(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

BandedLU::BandedLU(const BandedMatrix& m)
    : dim_(m.dim()),
      kl_(m.kl()),
      ku_(m.ku()),
      ldab_(2 * m.kl() + m.ku() + 1),
      lu_(ldab_ * m.dim(), 0.0),
      pivots_(m.dim(), 0) {
    const std::size_t n = dim_;
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t i0 = j > ku_ ? j - ku_ : 0;
        const std::size_t i1 = std::min(n - 1, j + kl_);
        for (std::size_t i = i0; i <= i1; ++i) lu(i, j) = m(i, j);
    }

    const double threshold = kSingularPivotTolerance * m.max_abs();
    const std::size_t kv = kl_ + ku_;  // widened upper bandwidth

    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t last_row = std::min(n - 1, k + kl_);
        std::size_t p = k;
        double best = std::abs(lu(k, k));
        for (std::size_t i = k + 1; i <= last_row; ++i) {
            if (std::abs(lu(i, k)) > best) {
                best = std::abs(lu(i, k));
                p = i;
            }
        }
        if (!(best > threshold)) {
            throw SingularMatrixError("banded LU: pivot " + std::to_string(best) + " at column " +
                                      std::to_string(k) + " below threshold");
        }
        pivots_[k] = p;
        const std::size_t last_col = std::min(n - 1, k + kv);
        if (p != k) {
            for (std::size_t j = k; j <= last_col; ++j) std::swap(lu(k, j), lu(p, j));
        }
        const double pivot = lu(k, k);
        for (std::size_t i = k + 1; i <= last_row; ++i) {
            const double factor = lu(i, k) / pivot;
            lu(i, k) = factor;
            if (factor == 0.0) continue;
            for (std::size_t j = k + 1; j <= last_col; ++j) lu(i, j) -= factor * lu(k, j);
        }
    }
}

std::vector<double> BandedLU::solve(std::span<const double> rhs) const {
    if (rhs.size() != dim_) throw DomainError("solve: dimension mismatch");
    const std::size_t n = dim_;
    const std::size_t kv = kl_ + ku_;
    std::vector<double> x(rhs.begin(), rhs.end());

    for (std::size_t k = 0; k < n; ++k) {
        if (pivots_[k] != k) std::swap(x[k], x[pivots_[k]]);
        const std::size_t last_row = std::min(n - 1, k + kl_);
        for (std::size_t i = k + 1; i <= last_row; ++i) x[i] -= lu(i, k) * x[k];
    }
    for (std::size_t k = n; k-- > 0;) {
        const std::size_t last_col = std::min(n - 1, k + kv);
        double acc = x[k];
        for (std::size_t j = k + 1; j <= last_col; ++j) acc -= lu(k, j) * x[j];
        x[k] = acc / lu(k, k);
    }
    return x;
}

std::vector<double> solve(const BandedMatrix& m, std::span<const double> rhs) {
    if (rhs.size() != m.dim()) throw DomainError("solve: dimension mismatch");
    return BandedLU(m).solve(rhs);
}

}  // namespace gardner
