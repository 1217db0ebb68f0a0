// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fr3
{

using cplx = std::complex<double>;

// Channel coefficients, precoder directions.
using ComplexVector = std::vector<cplx>;

// Dense row-major complex matrix.
class ComplexMatrix
{
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols, cplx fill = {});

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    cplx &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const cplx> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<const cplx> data() const noexcept { return data_; }
    std::span<cplx> data() noexcept { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

bool all_finite(std::span<const cplx> v) noexcept;
bool all_finite(std::span<const double> v) noexcept;

// sum_i conj(a_i) * b_i. Throws DimensionError on length mismatch.
cplx hermitian_dot(std::span<const cplx> a, std::span<const cplx> b);

// Euclidean norm squared.
double squared_norm(std::span<const cplx> a) noexcept;

// H^H x for H (rows x cols); x has H.rows() entries, result H.cols().
ComplexVector matvec_hermitian(const ComplexMatrix &H, std::span<const cplx> x);

// Euclidean projection onto {q : q >= 0, sum q <= budget}.
//
// Negative entries are clamped first; if the clamped point already satisfies
// the budget it is the projection. Otherwise the point is projected onto the
// scaled simplex {q >= 0, sum q = budget} with the sorted-threshold method.
// Throws DomainError for budget <= 0 and NumericError for non-finite input.
std::vector<double> project_to_power_set(std::span<const double> p, double budget);

} // namespace fr3
