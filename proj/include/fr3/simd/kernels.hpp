// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------
//
// Complex double-precision inner-loop kernels. Every kernel has a portable
// scalar reference version; vectorized variants are compiled into separate
// translation units and picked once at runtime from CPU feature flags.
// Interleaved storage (re, im, re, im, ...) matches std::complex<double>.

#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace fr3::simd
{

using cplx = std::complex<double>;

enum class Isa
{
    Scalar,
    Avx2,
};

struct KernelTable
{
    Isa isa;
    const char *name;

    // sum_i conj(a_i) * b_i
    cplx (*hermitian_dot)(const cplx *a, const cplx *b, std::size_t n);

    // sum_i |a_i|^2
    double (*squared_norm)(const cplx *a, std::size_t n);

    // out_j = sum_m conj(H_{m,j}) * x_m for row-major H (rows x cols).
    // `out` has `cols` entries and is overwritten.
    void (*matvec_hermitian)(const cplx *H, std::size_t rows, std::size_t cols,
                             const cplx *x, cplx *out);
};

const KernelTable &scalar_kernels() noexcept;

// nullptr when the variant was not compiled for this target.
const KernelTable *avx2_kernels() noexcept;

bool cpu_supports(Isa isa) noexcept;

// Table used by the numerics layer. Chosen on first call: the widest ISA the
// CPU supports, unless FR3_SIMD=scalar is set in the environment.
const KernelTable &active_kernels() noexcept;

std::string_view isa_name(Isa isa) noexcept;

} // namespace fr3::simd
