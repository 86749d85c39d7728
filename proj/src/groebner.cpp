#include "duval/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace duval {

IdealSpec IdealSpec::of(std::vector<PolyFp> gens) {
    std::vector<PolyFp> kept;
    for (auto& g : gens) {
        if (!g.is_zero()) kept.push_back(std::move(g));
    }
    if (kept.empty()) throw DomainError("ideal needs at least one nonzero generator");
    for (const auto& g : kept) require_same_context(kept.front().ring(), g.ring());
    return IdealSpec{std::move(kept)};
}

namespace {

void check_cap(const PolyFp& f, const BuchbergerOptions& opts) {
    if (f.degree() > opts.degree_cap) {
        throw DegreeCapError("intermediate degree " + std::to_string(f.degree()) +
                             " exceeds cap " + std::to_string(opts.degree_cap));
    }
}

// Full reduction against a set of monic divisors. Deterministic: always
// rewrites the order-highest reducible term using the first divisor found.
PolyFp reduce_full(PolyFp f, const std::vector<PolyFp>& divisors, const BuchbergerOptions& opts) {
    const RingPtr& ring = f.ring();
    PolyFp remainder = PolyFp::zero(ring);
    while (!f.is_zero()) {
        check_cap(f, opts);
        const auto& lt = f.leading_term();
        bool rewritten = false;
        for (const auto& g : divisors) {
            const auto& glt = g.leading_term();
            if (glt.mono.divides(lt.mono)) {
                // g is monic, so the cofactor coefficient is just lt.coeff.
                f = f - g.times_term(lt.mono / glt.mono, lt.coeff);
                rewritten = true;
                break;
            }
        }
        if (!rewritten) {
            remainder = remainder + PolyFp::monomial(ring, lt.mono, lt.coeff);
            f = f - PolyFp::monomial(ring, lt.mono, lt.coeff);
        }
    }
    return remainder;
}

struct Pair {
    std::size_t i, j;         // i < j
    Monomial lcm;
    std::uint64_t lcm_degree;
};

}  // namespace

PolyFp s_polynomial(const PolyFp& f, const PolyFp& g) {
    require_same_context(f.ring(), g.ring());
    const auto& fl = f.leading_term();
    const auto& gl = g.leading_term();
    Monomial l = fl.mono.lcm(gl.mono);
    const std::uint32_t p = f.ring()->p;
    PolyFp a = f.times_term(l / fl.mono, fp_inv(fl.coeff, p));
    PolyFp b = g.times_term(l / gl.mono, fp_inv(gl.coeff, p));
    return a - b;
}

GroebnerBasis buchberger(const IdealSpec& ideal, const BuchbergerOptions& opts) {
    const RingPtr& ring = ideal.ring();
    const MonomialOrder& order = ring->order;

    std::vector<PolyFp> g;
    for (const auto& f : ideal.generators) {
        require_same_context(ring, f.ring());
        check_cap(f, opts);
        g.push_back(f.monic());
    }

    auto make_pair = [&](std::size_t i, std::size_t j) {
        Monomial l = g[i].leading_term().mono.lcm(g[j].leading_term().mono);
        std::uint64_t d = l.degree();
        return Pair{i, j, std::move(l), d};
    };

    // Normal selection: smallest lcm first (by degree, then by the order),
    // index pair as the final tie-break for determinism.
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
        int c = compare(a.lcm, b.lcm, order);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> done;
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) pending.push_back(make_pair(i, j));
    }

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), pair_less);
        Pair pr = *it;
        pending.erase(it);
        done.insert({pr.i, pr.j});

        const Monomial& lti = g[pr.i].leading_term().mono;
        const Monomial& ltj = g[pr.j].leading_term().mono;

        // First criterion: coprime leading terms reduce to zero.
        if (lti.coprime(ltj)) continue;

        // Chain criterion: some k with LT(k) | lcm(i,j) and both flanking
        // pairs already handled.
        bool skip = false;
        for (std::size_t k = 0; k < g.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!g[k].leading_term().mono.divides(pr.lcm)) continue;
            auto key = [](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (done.count(key(pr.i, k)) && done.count(key(pr.j, k))) skip = true;
        }
        if (skip) continue;

        PolyFp s = s_polynomial(g[pr.i], g[pr.j]);
        check_cap(s, opts);
        PolyFp r = reduce_full(std::move(s), g, opts);
        if (r.is_zero()) continue;
        g.push_back(r.monic());
        std::size_t n = g.size() - 1;
        for (std::size_t i = 0; i < n; ++i) pending.push_back(make_pair(i, n));
    }

    // Minimize: visit ascending by leading term, dropping anything whose
    // leading term an already-kept element divides.
    std::sort(g.begin(), g.end(), [&](const PolyFp& a, const PolyFp& b) {
        return compare(a.leading_term().mono, b.leading_term().mono, order) < 0;
    });
    std::vector<PolyFp> minimal;
    for (const auto& f : g) {
        const Monomial& lt = f.leading_term().mono;
        bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const PolyFp& h) {
            return h.leading_term().mono.divides(lt);
        });
        if (!redundant) minimal.push_back(f);
    }

    // Tail-reduce each element against the others.
    std::vector<PolyFp> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<PolyFp> others;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(minimal[j]);
        }
        PolyFp r = reduce_full(minimal[i], others, opts);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }

    std::sort(reduced.begin(), reduced.end(), [&](const PolyFp& a, const PolyFp& b) {
        return compare(a.leading_term().mono, b.leading_term().mono, order) < 0;
    });
    return GroebnerBasis{std::move(reduced), ring};
}

PolyFp normal_form(const PolyFp& f, const GroebnerBasis& gb, const BuchbergerOptions& opts) {
    require_same_context(f.ring(), gb.ring);
    return reduce_full(f, gb.basis, opts);
}

std::optional<std::uint64_t> quotient_dimension(const GroebnerBasis& gb) {
    const std::size_t n = gb.ring->arity();
    if (ideal_contains_one(gb)) return 0;

    std::vector<Monomial> lts;
    for (const auto& f : gb.basis) lts.push_back(f.leading_term().mono);

    // Finite dimension needs a pure power of every variable among the
    // leading terms; the minimal such powers bound the standard-monomial box.
    std::vector<std::uint32_t> bound(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        for (const auto& m : lts) {
            bool pure = m.exponent(v) > 0;
            for (std::size_t w = 0; w < n && pure; ++w) {
                if (w != v && m.exponent(w) > 0) pure = false;
            }
            if (pure) {
                std::uint32_t e = m.exponent(v);
                if (bound[v] == 0 || e < bound[v]) bound[v] = e;
            }
        }
        if (bound[v] == 0) return std::nullopt;
    }

    std::uint64_t count = 0;
    std::vector<std::uint32_t> exps(n, 0);
    auto divisible = [&]() {
        Monomial m{std::vector<std::uint32_t>(exps)};
        return std::any_of(lts.begin(), lts.end(), [&](const Monomial& l) { return l.divides(m); });
    };
    for (;;) {
        if (!divisible()) ++count;
        std::size_t v = 0;
        while (v < n) {
            if (++exps[v] < bound[v]) break;
            exps[v] = 0;
            ++v;
        }
        if (v == n) break;
    }
    return count;
}

bool ideal_contains_one(const GroebnerBasis& gb) {
    return std::any_of(gb.basis.begin(), gb.basis.end(),
                       [](const PolyFp& f) { return f.is_constant() && !f.is_zero(); });
}

}  // namespace duval
