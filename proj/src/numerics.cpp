// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------

#include "fr3/numerics.hpp"

#include "fr3/errors.hpp"
#include "fr3/simd/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace fr3
{

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, cplx fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill)
{
}

bool all_finite(std::span<const cplx> v) noexcept
{
    return std::all_of(v.begin(), v.end(), [](const cplx &z)
                       { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

bool all_finite(std::span<const double> v) noexcept
{
    return std::all_of(v.begin(), v.end(), [](double x)
                       { return std::isfinite(x); });
}

cplx hermitian_dot(std::span<const cplx> a, std::span<const cplx> b)
{
    if (a.size() != b.size())
        throw DimensionError("hermitian_dot: length mismatch (" + std::to_string(a.size()) +
                             " vs " + std::to_string(b.size()) + ")");
    return simd::active_kernels().hermitian_dot(a.data(), b.data(), a.size());
}

double squared_norm(std::span<const cplx> a) noexcept
{
    return simd::active_kernels().squared_norm(a.data(), a.size());
}

ComplexVector matvec_hermitian(const ComplexMatrix &H, std::span<const cplx> x)
{
    if (x.size() != H.rows())
        throw DimensionError("matvec_hermitian: x has " + std::to_string(x.size()) +
                             " entries, H has " + std::to_string(H.rows()) + " rows");
    ComplexVector out(H.cols());
    simd::active_kernels().matvec_hermitian(H.data().data(), H.rows(), H.cols(), x.data(),
                                            out.data());
    return out;
}

std::vector<double> project_to_power_set(std::span<const double> p, double budget)
{
    if (!(budget > 0.0) || !std::isfinite(budget))
        throw DomainError("project_to_power_set: budget must be positive and finite");
    if (!all_finite(p))
        throw NumericError("project_to_power_set: non-finite input");

    std::vector<double> q(p.begin(), p.end());
    double clamped_sum = 0.0;
    for (double &v : q)
    {
        v = std::max(v, 0.0);
        clamped_sum += v;
    }
    if (clamped_sum <= budget)
        return q;

    // Threshold tau with sum_k max(p_k - tau, 0) = budget. Negative inputs
    // can never be active once tau > 0, so sorting the clamped values is fine.
    std::vector<double> sorted = q;
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());

    double running = 0.0;
    double tau = 0.0;
    for (std::size_t j = 0; j < sorted.size(); ++j)
    {
        running += sorted[j];
        const double candidate = (running - budget) / static_cast<double>(j + 1);
        if (j + 1 == sorted.size() || sorted[j + 1] <= candidate)
        {
            tau = candidate;
            break;
        }
    }

    double sum = 0.0;
    for (double &v : q)
    {
        v = std::max(v - tau, 0.0);
        sum += v;
    }
    // Rounding can leave the sum a few ulps above the budget.
    if (sum > budget)
    {
        const double scale = budget / sum;
        for (double &v : q)
            v *= scale;
    }
    return q;
}

} // namespace fr3
