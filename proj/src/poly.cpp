#include "duval/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace duval {

std::optional<std::size_t> RingContext::var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == name) return i;
    }
    return std::nullopt;
}

bool valid_variable_name(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name.substr(1)) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '\'') return false;
    }
    return true;
}

RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars, MonomialOrder order) {
    require_prime(p);
    for (const auto& v : vars) {
        if (!valid_variable_name(v)) throw DomainError("invalid variable name '" + v + "'");
    }
    for (std::size_t i = 0; i < vars.size(); ++i) {
        for (std::size_t j = i + 1; j < vars.size(); ++j) {
            if (vars[i] == vars[j]) throw DomainError("duplicate variable '" + vars[i] + "'");
        }
    }
    if (!order.precedence.empty()) {
        if (order.precedence.size() != vars.size()) {
            throw DomainError("order precedence arity mismatch");
        }
        std::vector<bool> seen(vars.size(), false);
        for (auto i : order.precedence) {
            if (i >= vars.size() || seen[i]) throw DomainError("order precedence is not a permutation");
            seen[i] = true;
        }
    }
    return std::make_shared<RingContext>(RingContext{p, std::move(vars), std::move(order)});
}

RingPtr reorder_ring(const RingPtr& ring, MonomialOrder order) {
    return make_ring(ring->p, ring->vars, std::move(order));
}

bool same_context(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void require_same_context(const RingPtr& a, const RingPtr& b) {
    if (!same_context(a, b)) throw ContextError("ring contexts differ");
}

namespace {

// Descending order over the ring's monomial order, for canonical term maps.
struct Desc {
    const MonomialOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compare(a, b, *order) > 0;
    }
};

using TermMap = std::map<Monomial, std::uint32_t, Desc>;

std::vector<PolyFp::Term> collect(TermMap&& m) {
    std::vector<PolyFp::Term> out;
    out.reserve(m.size());
    for (auto& [mono, c] : m) {
        if (c != 0) out.push_back({mono, c});
    }
    return out;
}

}  // namespace

PolyFp PolyFp::zero(RingPtr ring) { return PolyFp(std::move(ring), {}); }

PolyFp PolyFp::constant(RingPtr ring, long long c) {
    std::uint32_t r = fp_reduce(c, ring->p);
    std::vector<Term> t;
    if (r != 0) t.push_back({Monomial::one(ring->arity()), r});
    return PolyFp(std::move(ring), std::move(t));
}

PolyFp PolyFp::variable(RingPtr ring, std::size_t var) {
    if (var >= ring->arity()) throw ContextError("variable index out of range");
    std::vector<std::uint32_t> e(ring->arity(), 0);
    e[var] = 1;
    return PolyFp(std::move(ring), {{Monomial(std::move(e)), 1}});
}

PolyFp PolyFp::monomial(RingPtr ring, Monomial m, long long c) {
    if (m.arity() != ring->arity()) throw ContextError("monomial arity mismatch");
    std::uint32_t r = fp_reduce(c, ring->p);
    std::vector<Term> t;
    if (r != 0) t.push_back({std::move(m), r});
    return PolyFp(std::move(ring), std::move(t));
}

PolyFp PolyFp::from_terms(RingPtr ring, const std::vector<std::pair<Monomial, long long>>& terms) {
    TermMap acc{Desc{&ring->order}};
    for (const auto& [m, c] : terms) {
        if (m.arity() != ring->arity()) throw ContextError("monomial arity mismatch");
        std::uint32_t r = fp_reduce(c, ring->p);
        auto [it, fresh] = acc.try_emplace(m, r);
        if (!fresh) it->second = fp_add(it->second, r, ring->p);
    }
    return PolyFp(std::move(ring), collect(std::move(acc)));
}

bool PolyFp::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::uint64_t PolyFp::degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

const PolyFp::Term& PolyFp::leading_term() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
    return terms_.front();
}

PolyFp PolyFp::operator+(const PolyFp& o) const {
    require_same_context(ring_, o.ring_);
    // Merge of two descending-sorted term lists.
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    const std::uint32_t p = ring_->p;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = compare(terms_[i].mono, o.terms_[j].mono, ring_->order);
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            std::uint32_t s = fp_add(terms_[i].coeff, o.terms_[j].coeff, p);
            if (s != 0) out.push_back({terms_[i].mono, s});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    return PolyFp(ring_, std::move(out));
}

PolyFp PolyFp::operator-() const {
    std::vector<Term> out(terms_);
    for (auto& t : out) t.coeff = fp_neg(t.coeff, ring_->p);
    return PolyFp(ring_, std::move(out));
}

PolyFp PolyFp::operator-(const PolyFp& o) const { return *this + (-o); }

PolyFp PolyFp::operator*(const PolyFp& o) const {
    require_same_context(ring_, o.ring_);
    TermMap acc{Desc{&ring_->order}};
    const std::uint32_t p = ring_->p;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = a.mono * b.mono;
            std::uint32_t c = fp_mul(a.coeff, b.coeff, p);
            auto [it, fresh] = acc.try_emplace(std::move(m), c);
            if (!fresh) it->second = fp_add(it->second, c, p);
        }
    }
    return PolyFp(ring_, collect(std::move(acc)));
}

PolyFp PolyFp::scaled(std::uint32_t c) const {
    c %= ring_->p;
    if (c == 0) return zero(ring_);
    std::vector<Term> out(terms_);
    for (auto& t : out) t.coeff = fp_mul(t.coeff, c, ring_->p);
    return PolyFp(ring_, std::move(out));
}

PolyFp PolyFp::times_term(const Monomial& m, std::uint32_t c) const {
    c %= ring_->p;
    if (c == 0) return zero(ring_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.mono * m, fp_mul(t.coeff, c, ring_->p)});
    return PolyFp(ring_, std::move(out));
}

PolyFp PolyFp::pow(std::uint32_t e) const {
    PolyFp acc = constant(ring_, 1);
    PolyFp base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

PolyFp PolyFp::monic() const {
    if (is_zero()) return *this;
    return scaled(fp_inv(terms_.front().coeff, ring_->p));
}

bool PolyFp::operator==(const PolyFp& o) const {
    return same_context(ring_, o.ring_) && terms_ == o.terms_;
}

std::string PolyFp::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        if (t.mono.is_one()) {
            os << t.coeff;
            continue;
        }
        bool lead = true;
        if (t.coeff != 1) {
            os << t.coeff;
            lead = false;
        }
        for (std::size_t i = 0; i < t.mono.arity(); ++i) {
            std::uint32_t e = t.mono.exponent(i);
            if (e == 0) continue;
            if (!lead) os << "*";
            lead = false;
            os << ring_->vars[i];
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

PolyFp poly_partial(const PolyFp& f, std::size_t var) {
    if (var >= f.ring_->arity()) throw ContextError("variable index out of range");
    std::vector<std::pair<Monomial, long long>> out;
    for (const auto& t : f.terms_) {
        std::uint32_t e = t.mono.exponent(var);
        if (e == 0) continue;
        std::uint32_t c = fp_mul(t.coeff, e % f.ring_->p, f.ring_->p);
        if (c == 0) continue;  // exponent divisible by p kills the term
        std::vector<std::uint32_t> exps = t.mono.exponents();
        exps[var] -= 1;
        out.emplace_back(Monomial(std::move(exps)), static_cast<long long>(c));
    }
    return PolyFp::from_terms(f.ring_, out);
}

PolyFp poly_partial(const PolyFp& f, std::string_view var_name) {
    auto idx = f.ring()->var_index(var_name);
    if (!idx) throw ContextError("unknown variable '" + std::string(var_name) + "'");
    return poly_partial(f, *idx);
}

PolyFp substitute(const PolyFp& f, const std::vector<PolyFp>& images) {
    if (images.size() != f.ring_->arity()) {
        throw ContextError("substitution must assign every variable");
    }
    if (images.empty()) throw ContextError("substitution into an empty ring");
    RingPtr target = images.front().ring();
    for (const auto& g : images) require_same_context(target, g.ring());
    if (target->p != f.ring_->p) throw ContextError("substitution across different characteristics");

    PolyFp acc = PolyFp::zero(target);
    for (const auto& t : f.terms_) {
        PolyFp term = PolyFp::constant(target, static_cast<long long>(t.coeff));
        for (std::size_t i = 0; i < images.size(); ++i) {
            std::uint32_t e = t.mono.exponent(i);
            if (e) term = term * images[i].pow(e);
        }
        acc = acc + term;
    }
    return acc;
}

PolyFp substitute_named(const PolyFp& f, const std::map<std::string, PolyFp>& assignment,
                        const RingPtr& target) {
    std::vector<PolyFp> images;
    images.reserve(f.ring()->arity());
    for (std::size_t i = 0; i < f.ring()->arity(); ++i) {
        auto it = assignment.find(f.ring()->vars[i]);
        if (it == assignment.end()) {
            // Unused variables may stay unassigned; used ones may not.
            bool used = false;
            for (const auto& t : f.terms()) {
                if (t.mono.exponent(i)) { used = true; break; }
            }
            if (used) throw ContextError("no assignment for variable '" + f.ring()->vars[i] + "'");
            images.push_back(PolyFp::zero(target));
        } else {
            images.push_back(it->second);
        }
    }
    return substitute(f, images);
}

}  // namespace duval
