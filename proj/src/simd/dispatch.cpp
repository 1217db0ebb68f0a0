// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------

#include "fr3/simd/kernels.hpp"

#include <cstdlib>
#include <string>

namespace fr3::simd
{

#if !defined(FR3_HAVE_AVX2)
const KernelTable *avx2_kernels() noexcept
{
    return nullptr;
}
#endif

bool cpu_supports(Isa isa) noexcept
{
    switch (isa)
    {
    case Isa::Scalar:
        return true;
    case Isa::Avx2:
#if defined(FR3_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    }
    return false;
}

namespace
{

const KernelTable &select_kernels() noexcept
{
    if (const char *env = std::getenv("FR3_SIMD"))
        if (std::string(env) == "scalar")
            return scalar_kernels();

    if (cpu_supports(Isa::Avx2) && avx2_kernels() != nullptr)
        return *avx2_kernels();
    return scalar_kernels();
}

} // namespace

const KernelTable &active_kernels() noexcept
{
    static const KernelTable &table = select_kernels();
    return table;
}

std::string_view isa_name(Isa isa) noexcept
{
    switch (isa)
    {
    case Isa::Scalar:
        return "scalar";
    case Isa::Avx2:
        return "avx2";
    }
    return "unknown";
}

} // namespace fr3::simd
