// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------
//
// AVX2 + FMA variants. This file is compiled with -mavx2 -mfma and must only
// be entered after cpu_supports(Isa::Avx2) returned true.

#include "fr3/simd/kernels.hpp"

#include <immintrin.h>

namespace fr3::simd
{
namespace
{

inline const double *as_doubles(const cplx *p)
{
    return reinterpret_cast<const double *>(p);
}

inline double *as_doubles(cplx *p)
{
    return reinterpret_cast<double *>(p);
}

inline double hsum(__m256d v)
{
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

cplx hermitian_dot_avx2(const cplx *a, const cplx *b, std::size_t n)
{
    const double *pa = as_doubles(a);
    const double *pb = as_doubles(b);

    // acc_re lanes: (ar*br, ai*bi) -> all lanes sum to Re
    // acc_im lanes: (ar*bi, ai*br) -> even minus odd lanes give Im
    __m256d acc_re0 = _mm256_setzero_pd(), acc_re1 = _mm256_setzero_pd();
    __m256d acc_im0 = _mm256_setzero_pd(), acc_im1 = _mm256_setzero_pd();

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
    {
        const __m256d va0 = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vb0 = _mm256_loadu_pd(pb + 2 * i);
        const __m256d va1 = _mm256_loadu_pd(pa + 2 * i + 4);
        const __m256d vb1 = _mm256_loadu_pd(pb + 2 * i + 4);
        acc_re0 = _mm256_fmadd_pd(va0, vb0, acc_re0);
        acc_re1 = _mm256_fmadd_pd(va1, vb1, acc_re1);
        acc_im0 = _mm256_fmadd_pd(va0, _mm256_permute_pd(vb0, 0b0101), acc_im0);
        acc_im1 = _mm256_fmadd_pd(va1, _mm256_permute_pd(vb1, 0b0101), acc_im1);
    }
    for (; i + 2 <= n; i += 2)
    {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        acc_re0 = _mm256_fmadd_pd(va, vb, acc_re0);
        acc_im0 = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), acc_im0);
    }

    const __m256d acc_re = _mm256_add_pd(acc_re0, acc_re1);
    const __m256d acc_im = _mm256_add_pd(acc_im0, acc_im1);
    const __m256d sign = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);

    double re = hsum(acc_re);
    double im = hsum(_mm256_mul_pd(acc_im, sign));

    for (; i < n; ++i)
    {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

double squared_norm_avx2(const cplx *a, std::size_t n)
{
    const double *pa = as_doubles(a);
    const std::size_t len = 2 * n;

    __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8)
    {
        const __m256d v0 = _mm256_loadu_pd(pa + i);
        const __m256d v1 = _mm256_loadu_pd(pa + i + 4);
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
        acc1 = _mm256_fmadd_pd(v1, v1, acc1);
    }
    for (; i + 4 <= len; i += 4)
    {
        const __m256d v = _mm256_loadu_pd(pa + i);
        acc0 = _mm256_fmadd_pd(v, v, acc0);
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < len; ++i)
        s += pa[i] * pa[i];
    return s;
}

void matvec_hermitian_avx2(const cplx *H, std::size_t rows, std::size_t cols,
                           const cplx *x, cplx *out)
{
    double *po = as_doubles(out);
    const std::size_t len = 2 * cols;
    const std::size_t vec_len = len & ~std::size_t(3);

    for (std::size_t j = 0; j < cols; ++j)
        out[j] = cplx(0.0, 0.0);

    for (std::size_t m = 0; m < rows; ++m)
    {
        const double *row = as_doubles(H + m * cols);
        const double xr = x[m].real(), xi = x[m].imag();
        const __m256d vxr = _mm256_set1_pd(xr);
        const __m256d vxi = _mm256_set1_pd(xi);

        // conj(h) * x = (hr*xr + hi*xi, hr*xi - hi*xr)
        //             = fmsubadd(swap(h), xi, h * xr)
        std::size_t t = 0;
        for (; t < vec_len; t += 4)
        {
            const __m256d h = _mm256_loadu_pd(row + t);
            const __m256d hs = _mm256_permute_pd(h, 0b0101);
            const __m256d v = _mm256_fmsubadd_pd(hs, vxi, _mm256_mul_pd(h, vxr));
            _mm256_storeu_pd(po + t, _mm256_add_pd(_mm256_loadu_pd(po + t), v));
        }
        for (; t < len; t += 2)
        {
            const double hr = row[t], hi = row[t + 1];
            po[t] += hr * xr + hi * xi;
            po[t + 1] += hr * xi - hi * xr;
        }
    }
}

const KernelTable kAvx2Table{
    Isa::Avx2,
    "avx2",
    &hermitian_dot_avx2,
    &squared_norm_avx2,
    &matvec_hermitian_avx2,
};

} // namespace

const KernelTable *avx2_kernels() noexcept
{
    return &kAvx2Table;
}

} // namespace fr3::simd
