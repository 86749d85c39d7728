#include "duval/dynkin.hpp"

#include <numeric>

namespace duval {

char family_letter(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::D: return 'D';
        case Family::E: return 'E';
    }
    throw StructuralError("unreachable family");
}

bool DynkinType::operator<(const DynkinType& o) const {
    if (family != o.family) return static_cast<int>(family) < static_cast<int>(o.family);
    return index < o.index;
}

void validate(DynkinType t) {
    switch (t.family) {
        case Family::A:
            if (t.index >= 1) return;
            break;
        case Family::D:
            if (t.index >= 4) return;
            break;
        case Family::E:
            if (t.index >= 6 && t.index <= 8) return;
            break;
    }
    throw DomainError("invalid Dynkin type " + std::string(1, family_letter(t.family)) +
                      std::to_string(t.index));
}

DynkinType parse_dynkin(std::string_view text) {
    if (text.size() < 2) throw DomainError("cannot parse Dynkin type '" + std::string(text) + "'");
    Family fam;
    switch (text[0]) {
        case 'A': case 'a': fam = Family::A; break;
        case 'D': case 'd': fam = Family::D; break;
        case 'E': case 'e': fam = Family::E; break;
        default:
            throw DomainError("cannot parse Dynkin type '" + std::string(text) + "'");
    }
    std::uint32_t idx = 0;
    for (char c : text.substr(1)) {
        if (c < '0' || c > '9' || idx > 100000) {
            throw DomainError("cannot parse Dynkin type '" + std::string(text) + "'");
        }
        idx = idx * 10 + static_cast<std::uint32_t>(c - '0');
    }
    DynkinType t{fam, idx};
    validate(t);
    return t;
}

std::string to_string(DynkinType t) {
    return std::string(1, family_letter(t.family)) + std::to_string(t.index);
}

namespace {

// Trees realized as a branch node with three arms (D, E) or a plain path (A).
// Arm lengths count nodes beyond the branch.
std::vector<std::uint32_t> tree_degrees(std::uint32_t nodes, std::vector<std::uint32_t> arms) {
    std::vector<std::uint32_t> deg;
    if (arms.empty()) {
        // Path graph.
        deg.assign(nodes, 2);
        if (nodes == 1) {
            deg[0] = 0;
        } else {
            deg.front() = deg.back() = 1;
        }
        return deg;
    }
    deg.assign(nodes, 0);
    deg[0] = static_cast<std::uint32_t>(arms.size());
    std::size_t next = 1;
    for (std::uint32_t len : arms) {
        for (std::uint32_t k = 0; k < len; ++k) {
            deg[next++] = (k + 1 < len) ? 2 : 1;
        }
    }
    return deg;
}

}  // namespace

DynkinData dynkin_data(DynkinType t) {
    validate(t);
    const std::uint32_t n = t.index;
    std::vector<std::uint32_t> degrees;
    switch (t.family) {
        case Family::A:
            degrees = tree_degrees(n, {});
            break;
        case Family::D:
            // Branch node with arms of lengths 1, 1, n-3.
            degrees = tree_degrees(n, {1, 1, n - 3});
            break;
        case Family::E:
            // Branch node with arms of lengths 1, 2, n-4.
            degrees = tree_degrees(n, {1, 2, n - 4});
            break;
    }
    std::uint32_t sum = std::accumulate(degrees.begin(), degrees.end(), 0u);
    if (sum != 2 * (n - 1)) throw StructuralError("degree sum is not 2(n-1)");
    for (auto d : degrees) {
        if (d > 3) throw StructuralError("node degree exceeds 3");
    }
    return DynkinData{n, std::move(degrees), sum, 3 * n - sum};
}

}  // namespace duval
