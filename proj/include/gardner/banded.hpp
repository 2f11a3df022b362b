#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gardner {

/// Square real matrix with kl sub-diagonals and ku super-diagonals.
///
/// Entries are kept in LAPACK-style band storage: A(i, j) lives at
/// row (ku + i - j), column j of a (kl + ku + 1) x dim array. Entries outside
/// the band are structural zeros and cannot be written.
class BandedMatrix {
public:
    BandedMatrix() = default;
    BandedMatrix(std::size_t dim, std::size_t kl, std::size_t ku);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t kl() const noexcept { return kl_; }
    [[nodiscard]] std::size_t ku() const noexcept { return ku_; }

    [[nodiscard]] bool in_band(std::size_t i, std::size_t j) const noexcept {
        return j + kl_ >= i && i + ku_ >= j && i < dim_ && j < dim_;
    }

    /// Element (i, j); zero outside the band.
    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const noexcept;
    /// Mutable element (i, j). Throws DomainError outside the band.
    double& at(std::size_t i, std::size_t j);
    /// at(i, j) += value.
    void add(std::size_t i, std::size_t j, double value) { at(i, j) += value; }

    /// Largest absolute entry inside the band.
    [[nodiscard]] double max_abs() const noexcept;

private:
    std::size_t dim_ = 0;
    std::size_t kl_ = 0;
    std::size_t ku_ = 0;
    std::vector<double> band_;  // column-major, (kl + ku + 1) rows
};

/// Band-aware product m * x. Throws DomainError on dimension mismatch.
[[nodiscard]] std::vector<double> multiply(const BandedMatrix& m, std::span<const double> x);

/// LU factorisation with partial pivoting restricted to the band.
///
/// Row interchanges widen the upper triangle to kl + ku super-diagonals, so the
/// factor keeps 2*kl + ku + 1 band rows. Factorisation works on a private copy.
class BandedLU {
public:
    /// Throws SingularMatrixError when a pivot magnitude is below
    /// 1e-14 times the largest entry of the input band.
    explicit BandedLU(const BandedMatrix& m);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::vector<double> solve(std::span<const double> rhs) const;

private:
    [[nodiscard]] double& lu(std::size_t i, std::size_t j) noexcept {
        return lu_[j * ldab_ + (kl_ + ku_ + i - j)];
    }
    [[nodiscard]] double lu(std::size_t i, std::size_t j) const noexcept {
        return lu_[j * ldab_ + (kl_ + ku_ + i - j)];
    }

    std::size_t dim_ = 0;
    std::size_t kl_ = 0;
    std::size_t ku_ = 0;
    std::size_t ldab_ = 0;
    std::vector<double> lu_;
    std::vector<std::size_t> pivots_;
};

/// Solves m * x = rhs. Throws SingularMatrixError or DomainError.
[[nodiscard]] std::vector<double> solve(const BandedMatrix& m, std::span<const double> rhs);

inline constexpr double kSingularPivotTolerance = 1e-14;

}  // namespace gardner
