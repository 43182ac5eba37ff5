#ifndef OCCSAT_LITERALS_HPP
#define OCCSAT_LITERALS_HPP

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace occsat {

// Variables are positive integers; a literal is a signed variable id,
// DIMACS style: +v is the positive literal, -v the negative one.
using Var = std::int32_t;
using Lit = std::int32_t;

constexpr Var var_of(Lit l) { return l < 0 ? static_cast<Var>(-l) : static_cast<Var>(l); }
constexpr bool is_positive(Lit l) { return l > 0; }
constexpr Lit negated(Lit l) { return -l; }
constexpr Lit positive_lit(Var v) { return static_cast<Lit>(v); }
constexpr Lit negative_lit(Var v) { return -static_cast<Lit>(v); }

// Clause-internal literal order: by variable, positive before negative.
constexpr bool lit_less(Lit a, Lit b) {
    Var va = var_of(a), vb = var_of(b);
    if (va != vb) return va < vb;
    return is_positive(a) && !is_positive(b);
}

// Thrown when a caller violates a documented precondition.
class ContractError : public std::runtime_error {
public:
    explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an internal invariant breaks: always a bug, never user input.
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace occsat

#endif
