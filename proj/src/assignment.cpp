// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------

#include "fr3/assignment.hpp"

#include "fr3/errors.hpp"

#include <string>

namespace fr3
{

Association::Association(std::size_t num_ius, std::size_t num_riss)
    : ris_of_iu_(num_ius, kNone), iu_of_ris_(num_riss, kNone)
{
}

Association Association::from_matrix(const std::vector<std::vector<int>> &gamma)
{
    if (!satisfies_assignment_constraints(gamma))
        throw ConfigError("association matrix violates the one-to-one constraints");
    const std::size_t K = gamma.size();
    const std::size_t L = K ? gamma[0].size() : 0;
    Association a(K, L);
    for (std::size_t k = 0; k < K; ++k)
        for (std::size_t l = 0; l < L; ++l)
            if (gamma[k][l] == 1)
                a.assign(k, l);
    return a;
}

void Association::assign(std::size_t k, std::size_t l)
{
    if (k >= num_ius() || l >= num_riss())
        throw ConfigError("association: index out of range (iu " + std::to_string(k) + ", ris " +
                          std::to_string(l) + ")");
    if (ris_of_iu_[k] != kNone)
        throw ConfigError("association: IU " + std::to_string(k) + " already has a RIS");
    if (iu_of_ris_[l] != kNone)
        throw ConfigError("association: RIS " + std::to_string(l) + " already serves an IU");
    ris_of_iu_[k] = static_cast<int>(l);
    iu_of_ris_[l] = static_cast<int>(k);
}

void Association::release_iu(std::size_t k)
{
    if (k >= num_ius())
        throw ConfigError("association: IU index out of range");
    if (ris_of_iu_[k] != kNone)
    {
        iu_of_ris_[static_cast<std::size_t>(ris_of_iu_[k])] = kNone;
        ris_of_iu_[k] = kNone;
    }
}

std::optional<std::size_t> Association::ris_of(std::size_t k) const
{
    const int l = ris_of_iu_.at(k);
    if (l == kNone)
        return std::nullopt;
    return static_cast<std::size_t>(l);
}

std::optional<std::size_t> Association::iu_of(std::size_t l) const
{
    const int k = iu_of_ris_.at(l);
    if (k == kNone)
        return std::nullopt;
    return static_cast<std::size_t>(k);
}

int Association::gamma(std::size_t k, std::size_t l) const
{
    return ris_of_iu_.at(k) == static_cast<int>(l) ? 1 : 0;
}

std::vector<std::vector<int>> Association::to_matrix() const
{
    std::vector<std::vector<int>> m(num_ius(), std::vector<int>(num_riss(), 0));
    for (std::size_t k = 0; k < num_ius(); ++k)
        if (ris_of_iu_[k] != kNone)
            m[k][static_cast<std::size_t>(ris_of_iu_[k])] = 1;
    return m;
}

std::size_t Association::matched_count() const noexcept
{
    std::size_t n = 0;
    for (int l : ris_of_iu_)
        n += (l != kNone);
    return n;
}

bool satisfies_assignment_constraints(const std::vector<std::vector<int>> &gamma)
{
    const std::size_t K = gamma.size();
    const std::size_t L = K ? gamma[0].size() : 0;
    std::vector<int> col_sum(L, 0);
    for (const auto &row : gamma)
    {
        if (row.size() != L)
            return false;
        int row_sum = 0;
        for (std::size_t l = 0; l < L; ++l)
        {
            if (row[l] != 0 && row[l] != 1)
                return false;
            row_sum += row[l];
            col_sum[l] += row[l];
        }
        if (row_sum > 1)
            return false;
    }
    for (int s : col_sum)
        if (s > 1)
            return false;
    return true;
}

} // namespace fr3
