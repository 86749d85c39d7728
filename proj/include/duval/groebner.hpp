#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "duval/poly.hpp"

namespace duval {

/// Generators of an ideal; zeros are dropped at construction and the list
/// must stay non-empty. The order is the one carried by the ring context.
struct IdealSpec {
    std::vector<PolyFp> generators;

    static IdealSpec of(std::vector<PolyFp> gens);
    const RingPtr& ring() const { return generators.front().ring(); }
};

struct BuchbergerOptions {
    /// Hard error when any intermediate polynomial exceeds this total degree.
    std::uint64_t degree_cap = 64;
};

/// Reduced Groebner basis: monic elements, no term of any element divisible
/// by the leading term of another, sorted ascending by leading term.
struct GroebnerBasis {
    std::vector<PolyFp> basis;
    RingPtr ring;
};

GroebnerBasis buchberger(const IdealSpec& ideal, const BuchbergerOptions& opts = {});

/// Unique remainder of f modulo the basis: no term of the result is divisible
/// by any leading term of gb.
PolyFp normal_form(const PolyFp& f, const GroebnerBasis& gb,
                   const BuchbergerOptions& opts = {});

/// S-polynomial of two nonzero polynomials in the same ring.
PolyFp s_polynomial(const PolyFp& f, const PolyFp& g);

/// k-dimension of the quotient algebra, or nullopt for infinite dimension.
/// Finite iff every variable has a pure power among the leading terms; the
/// count is the number of standard monomials.
std::optional<std::uint64_t> quotient_dimension(const GroebnerBasis& gb);

/// True iff the ideal is the unit ideal (reduced basis is {1}).
bool ideal_contains_one(const GroebnerBasis& gb);

}  // namespace duval
