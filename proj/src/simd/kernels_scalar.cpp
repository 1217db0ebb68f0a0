// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------

#include "fr3/simd/kernels.hpp"

namespace fr3::simd
{
namespace
{

// Explicit real arithmetic: std::complex operator* carries NaN recovery
// branches we do not want in the reference loops.

cplx hermitian_dot_scalar(const cplx *a, const cplx *b, std::size_t n)
{
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

double squared_norm_scalar(const cplx *a, std::size_t n)
{
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return s;
}

void matvec_hermitian_scalar(const cplx *H, std::size_t rows, std::size_t cols,
                             const cplx *x, cplx *out)
{
    for (std::size_t j = 0; j < cols; ++j)
        out[j] = cplx(0.0, 0.0);

    for (std::size_t m = 0; m < rows; ++m)
    {
        const cplx *row = H + m * cols;
        const double xr = x[m].real(), xi = x[m].imag();
        for (std::size_t j = 0; j < cols; ++j)
        {
            const double hr = row[j].real(), hi = row[j].imag();
            out[j] = cplx(out[j].real() + hr * xr + hi * xi,
                          out[j].imag() + hr * xi - hi * xr);
        }
    }
}

const KernelTable kScalarTable{
    Isa::Scalar,
    "scalar",
    &hermitian_dot_scalar,
    &squared_norm_scalar,
    &matvec_hermitian_scalar,
};

} // namespace

const KernelTable &scalar_kernels() noexcept
{
    return kScalarTable;
}

} // namespace fr3::simd
