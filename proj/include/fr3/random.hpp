// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace fr3
{

using Rng = std::mt19937_64;

// Independent streams per realization so results do not depend on which
// worker ran which realization.
enum class Stream : std::uint64_t
{
    Topology = 1,
    Association = 2,
};

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index, Stream stream) noexcept
{
    return splitmix64(master ^ splitmix64(index ^ (static_cast<std::uint64_t>(stream) << 56)));
}

// Uniform integer in [0, n). n must be > 0.
inline std::size_t uniform_index(Rng &rng, std::size_t n)
{
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

} // namespace fr3
