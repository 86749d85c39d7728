#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "duval/errors.hpp"

namespace duval {

enum class Family { A, D, E };

char family_letter(Family f);

/// A simply laced Dynkin type: A_m (m >= 1), D_m (m >= 4), E_6/E_7/E_8.
struct DynkinType {
    Family family;
    std::uint32_t index;

    bool operator==(const DynkinType&) const = default;
    /// Orders by family letter, then index.
    bool operator<(const DynkinType& o) const;
};

/// Throws DomainError when the index violates the family constraint.
void validate(DynkinType t);

/// Parses "A5", "D4", "E8".
DynkinType parse_dynkin(std::string_view text);
std::string to_string(DynkinType t);

/// Combinatorics of the dual resolution graph: the tree whose nodes are the
/// exceptional (-2)-curves. node_degrees[i] is the number of neighbours of
/// curve i, equivalently the number of singular points of the exceptional
/// divisor lying on it.
struct DynkinData {
    std::uint32_t curve_count;                 // n = number of nodes
    std::vector<std::uint32_t> node_degrees;   // t_i, each <= 3
    std::uint32_t degree_sum;                  // sum t_i = 2(n-1)
    std::uint32_t h0_theta;                    // 3n - sum t_i
};

DynkinData dynkin_data(DynkinType t);

}  // namespace duval
