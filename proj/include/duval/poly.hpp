#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "duval/ring.hpp"

namespace duval {

/// Sparse multivariate polynomial over F_p in canonical form: terms sorted in
/// strictly descending monomial order, no zero coefficients. Values are
/// immutable after construction; all operations return fresh polynomials.
class PolyFp {
  public:
    struct Term {
        Monomial mono;
        std::uint32_t coeff;  // in [1, p)
        bool operator==(const Term&) const = default;
    };

    static PolyFp zero(RingPtr ring);
    static PolyFp constant(RingPtr ring, long long c);
    static PolyFp variable(RingPtr ring, std::size_t var);
    static PolyFp monomial(RingPtr ring, Monomial m, long long c);
    /// Canonicalizes an arbitrary term list (merges duplicates, drops zeros).
    static PolyFp from_terms(RingPtr ring, const std::vector<std::pair<Monomial, long long>>& terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Total degree; zero polynomial reports 0.
    std::uint64_t degree() const;
    const Term& leading_term() const;  // throws DomainError on zero

    PolyFp operator+(const PolyFp& o) const;
    PolyFp operator-(const PolyFp& o) const;
    PolyFp operator-() const;
    PolyFp operator*(const PolyFp& o) const;
    PolyFp scaled(std::uint32_t c) const;
    PolyFp times_term(const Monomial& m, std::uint32_t c) const;
    PolyFp pow(std::uint32_t e) const;
    /// Leading coefficient scaled to 1.
    PolyFp monic() const;

    bool operator==(const PolyFp& o) const;
    bool operator!=(const PolyFp& o) const { return !(*this == o); }

    /// Canonical text: descending monomial order, coefficients in [0, p),
    /// '+'-joined. Round-trips through parse_poly.
    std::string to_string() const;

    friend PolyFp poly_partial(const PolyFp& f, std::size_t var);
    friend PolyFp substitute(const PolyFp& f, const std::vector<PolyFp>& images);

  private:
    PolyFp(RingPtr ring, std::vector<Term> terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {}

    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Formal partial derivative with respect to the ring variable `var`.
PolyFp poly_partial(const PolyFp& f, std::size_t var);
PolyFp poly_partial(const PolyFp& f, std::string_view var_name);

/// Simultaneous substitution: images[i] replaces variable i. All images must
/// share one ring context (the target); images.size() must equal the arity.
PolyFp substitute(const PolyFp& f, const std::vector<PolyFp>& images);

/// Name-keyed substitution; every variable occurring in f must be assigned.
PolyFp substitute_named(const PolyFp& f, const std::map<std::string, PolyFp>& assignment,
                        const RingPtr& target);

}  // namespace duval
