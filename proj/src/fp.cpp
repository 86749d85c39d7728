#include "duval/fp.hpp"

namespace duval {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

void require_prime(std::uint32_t p) {
    if (p >= (1u << 31)) {
        throw DomainError("modulus " + std::to_string(p) + " exceeds 2^31");
    }
    if (!is_prime(p)) {
        throw DomainError("modulus " + std::to_string(p) + " is not prime");
    }
}

std::uint32_t fp_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t base = a % p;
    std::uint64_t acc = 1 % p;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw DomainError("division by zero mod " + std::to_string(p));
    return fp_pow(a % p, p - 2, p);
}

std::uint32_t fp_reduce(long long v, std::uint32_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

FpElem::FpElem(long long value, std::uint32_t p) : value_(0), p_(p) {
    require_prime(p);
    value_ = fp_reduce(value, p);
}

namespace {
void require_same_modulus(const FpElem& a, const FpElem& b) {
    if (a.modulus() != b.modulus()) {
        throw ContextError("mixed moduli " + std::to_string(a.modulus()) + " and " +
                           std::to_string(b.modulus()));
    }
}
}  // namespace

FpElem FpElem::operator+(const FpElem& o) const {
    require_same_modulus(*this, o);
    return FpElem(fp_add(value_, o.value_, p_), p_);
}

FpElem FpElem::operator-(const FpElem& o) const {
    require_same_modulus(*this, o);
    return FpElem(fp_sub(value_, o.value_, p_), p_);
}

FpElem FpElem::operator*(const FpElem& o) const {
    require_same_modulus(*this, o);
    return FpElem(fp_mul(value_, o.value_, p_), p_);
}

FpElem FpElem::operator-() const { return FpElem(fp_neg(value_, p_), p_); }

FpElem FpElem::inverse() const { return FpElem(fp_inv(value_, p_), p_); }

}  // namespace duval
