#pragma once

#include <cstdint>

#include "duval/errors.hpp"

namespace duval {

/// Primality by trial division; valid for any 32-bit input.
bool is_prime(std::uint32_t n);

/// Throws DomainError unless p is prime and below 2^31.
void require_prime(std::uint32_t p);

// Residue arithmetic mod a prime p < 2^31. Inputs must already be reduced;
// products fit in 64 bits without further tricks.
inline std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p) {
    return a == 0 ? 0 : p - a;
}

inline std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t fp_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);

/// Inverse of a nonzero residue (Fermat). Throws DomainError on zero.
std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p);

/// Reduces an arbitrary signed integer into [0, p).
std::uint32_t fp_reduce(long long v, std::uint32_t p);

/// A single residue tagged with its prime modulus. Mixed-modulus arithmetic
/// raises ContextError.
class FpElem {
  public:
    FpElem(long long value, std::uint32_t p);

    std::uint32_t value() const { return value_; }
    std::uint32_t modulus() const { return p_; }

    FpElem operator+(const FpElem& o) const;
    FpElem operator-(const FpElem& o) const;
    FpElem operator*(const FpElem& o) const;
    FpElem operator-() const;
    FpElem inverse() const;

    bool operator==(const FpElem&) const = default;

  private:
    std::uint32_t value_;
    std::uint32_t p_;
};

}  // namespace duval
