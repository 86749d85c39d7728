#pragma once

#include <cstdint>
#include <vector>

#include "duval/dynkin.hpp"
#include "duval/poly.hpp"

namespace duval {

/// Where a canonical singularity of the given type sits in characteristic p.
/// A tame quotient is always a linearly reductive quotient; a wild A is the
/// A_m case with p | m+1 (linearly reductive but not tame).
struct ClassificationRecord {
    bool linearly_reductive;
    bool tame;
    bool wild_A;

    bool operator==(const ClassificationRecord&) const = default;
};

ClassificationRecord classify(DynkinType type, std::uint32_t p);

/// A catalog entry: hypersurface normal form g in F_p[x,y,z].
struct SingularityModel {
    DynkinType type;
    std::uint32_t p;
    PolyFp equation;
};

/// Normal forms per family, valid exactly in the linearly reductive range:
///   A_m        xy - z^{m+1}              every p
///   D_m        z^2 - x^2 y - 4 y^{m-1}   p >= 3
///   E_6        x^2 + y^3 + z^4           p >= 5
///   E_7        x^2 + y^3 + y z^3         p >= 5
///   E_8        x^2 + y^3 + z^5           p >= 7
/// Outside that range the normal form is not graph-determined and
/// NotInCatalogError is raised.
SingularityModel equation_for(DynkinType type, std::uint32_t p);

/// (type, p) pairs of the standard survey grid: A_1..A_{maxA}, D_4..D_{maxD},
/// E_6..E_8 against all primes <= max_p, sorted by type then characteristic.
std::vector<std::pair<DynkinType, std::uint32_t>> survey_grid(std::uint32_t max_p,
                                                              std::uint32_t max_a_index = 12,
                                                              std::uint32_t max_d_index = 8);

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound);

}  // namespace duval
