#pragma once

#include <cstdint>
#include <vector>

#include "duval/errors.hpp"

namespace duval {

/// Exponent vector of fixed arity. Carries no ring or order of its own.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
    static Monomial one(std::size_t arity) { return Monomial(std::vector<std::uint32_t>(arity, 0)); }

    std::size_t arity() const { return exps_.size(); }
    std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    std::uint64_t degree() const;
    bool is_one() const;

    Monomial operator*(const Monomial& o) const;
    /// Componentwise quotient; requires o | *this.
    Monomial operator/(const Monomial& o) const;
    bool divides(const Monomial& o) const;  // *this | o
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const;
    Monomial pow(std::uint32_t e) const;

    bool operator==(const Monomial&) const = default;

  private:
    std::vector<std::uint32_t> exps_;
};

enum class OrderKind { lex, grevlex };

/// A monomial order: lex or grevlex, with an optional variable precedence
/// permutation (precedence[0] is the most significant variable index).
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    std::vector<std::uint32_t> precedence;  // empty means identity

    bool operator==(const MonomialOrder&) const = default;
};

/// Three-way comparison under the order: negative, zero, positive as a < b,
/// a == b, a > b. Arities must agree.
int compare(const Monomial& a, const Monomial& b, const MonomialOrder& order);

}  // namespace duval
