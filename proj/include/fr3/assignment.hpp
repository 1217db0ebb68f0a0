// SPDX-License-Identifier: Apache-2.0
//
// fr3-ris: RIS-assisted FR3 downlink resource allocation
// ------------------------------------------------------------------------

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace fr3
{

// One-to-one partial IU <-> RIS assignment (the binary matrix gamma).
//
// Stored as "RIS serving each IU" so that each IU has at most one RIS by
// construction; assign() rejects a second IU on the same RIS.
class Association
{
public:
    Association() = default;
    Association(std::size_t num_ius, std::size_t num_riss);

    // Builds from a K x L 0/1 matrix; throws ConfigError if any row or column
    // holds more than one 1 or an entry is not 0/1.
    static Association from_matrix(const std::vector<std::vector<int>> &gamma);

    std::size_t num_ius() const noexcept { return ris_of_iu_.size(); }
    std::size_t num_riss() const noexcept { return iu_of_ris_.size(); }

    // Throws ConfigError if k or l is out of range or either side is taken.
    void assign(std::size_t k, std::size_t l);
    void release_iu(std::size_t k);

    std::optional<std::size_t> ris_of(std::size_t k) const;
    std::optional<std::size_t> iu_of(std::size_t l) const;

    int gamma(std::size_t k, std::size_t l) const;
    std::vector<std::vector<int>> to_matrix() const;

    std::size_t matched_count() const noexcept;

    bool operator==(const Association &) const = default;

private:
    static constexpr int kNone = -1;
    std::vector<int> ris_of_iu_;
    std::vector<int> iu_of_ris_;
};

// Checks binary entries, at most one RIS per IU and at most one IU per RIS on
// a raw matrix.
bool satisfies_assignment_constraints(const std::vector<std::vector<int>> &gamma);

} // namespace fr3
