#include "duval/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace duval {

std::uint64_t Monomial::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (arity() != o.arity()) throw ContextError("monomial arity mismatch");
    std::vector<std::uint32_t> r(exps_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.exps_[i];
    return Monomial(std::move(r));
}

Monomial Monomial::operator/(const Monomial& o) const {
    if (arity() != o.arity()) throw ContextError("monomial arity mismatch");
    std::vector<std::uint32_t> r(exps_);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (o.exps_[i] > r[i]) throw DomainError("monomial quotient is not integral");
        r[i] -= o.exps_[i];
    }
    return Monomial(std::move(r));
}

bool Monomial::divides(const Monomial& o) const {
    if (arity() != o.arity()) throw ContextError("monomial arity mismatch");
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > o.exps_[i]) return false;
    }
    return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
    if (arity() != o.arity()) throw ContextError("monomial arity mismatch");
    std::vector<std::uint32_t> r(exps_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], o.exps_[i]);
    return Monomial(std::move(r));
}

bool Monomial::coprime(const Monomial& o) const {
    if (arity() != o.arity()) throw ContextError("monomial arity mismatch");
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] && o.exps_[i]) return false;
    }
    return true;
}

Monomial Monomial::pow(std::uint32_t e) const {
    std::vector<std::uint32_t> r(exps_);
    for (auto& x : r) x *= e;
    return Monomial(std::move(r));
}

int compare(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
    if (a.arity() != b.arity()) throw ContextError("monomial arity mismatch");
    const std::size_t n = a.arity();
    auto at = [&](std::size_t rank) -> std::size_t {
        return order.precedence.empty() ? rank : order.precedence[rank];
    };
    if (!order.precedence.empty() && order.precedence.size() != n) {
        throw ContextError("order precedence arity mismatch");
    }
    if (order.kind == OrderKind::lex) {
        for (std::size_t r = 0; r < n; ++r) {
            std::uint32_t ea = a.exponent(at(r));
            std::uint32_t eb = b.exponent(at(r));
            if (ea != eb) return ea < eb ? -1 : 1;
        }
        return 0;
    }
    // grevlex: total degree first, then the least significant variable with a
    // differing exponent decides, smaller exponent winning.
    std::uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t r = n; r-- > 0;) {
        std::uint32_t ea = a.exponent(at(r));
        std::uint32_t eb = b.exponent(at(r));
        if (ea != eb) return ea > eb ? -1 : 1;
    }
    return 0;
}

}  // namespace duval
