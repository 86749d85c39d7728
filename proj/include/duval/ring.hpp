#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "duval/fp.hpp"
#include "duval/monomial.hpp"

namespace duval {

/// Immutable ring context: coefficient prime, variable names, monomial order.
struct RingContext {
    std::uint32_t p;
    std::vector<std::string> vars;
    MonomialOrder order;

    bool operator==(const RingContext&) const = default;

    std::size_t arity() const { return vars.size(); }
    std::optional<std::size_t> var_index(std::string_view name) const;
};

using RingPtr = std::shared_ptr<const RingContext>;

/// Validates the modulus and the variable names (distinct, identifier-shaped).
RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars,
                  MonomialOrder order = MonomialOrder{});

/// Same ring, different monomial order.
RingPtr reorder_ring(const RingPtr& ring, MonomialOrder order);

bool same_context(const RingPtr& a, const RingPtr& b);
void require_same_context(const RingPtr& a, const RingPtr& b);
bool valid_variable_name(std::string_view name);

}  // namespace duval
