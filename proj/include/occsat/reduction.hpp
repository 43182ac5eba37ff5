#ifndef OCCSAT_REDUCTION_HPP
#define OCCSAT_REDUCTION_HPP

#include <optional>
#include <string>

#include "occsat/safe_resolution.hpp"

namespace occsat {

enum class RuleId {
    S3,   // standardization pass
    S4a,  // pure-literal assignment
    S4b,  // (1,1) resolution
    Flip, // polarity convention pass (eliminates nothing)
    S5a,
    S5b,
    S5c,
    S5d,
    S6a,
    S6b,
    S6c,
    S6d,
    S8, // autarky assignment
};

const char* rule_name(RuleId id);

struct RuleOutcome {
    RuleId rule;
    int vars_eliminated = 0;
};

/// Step 4: assigns one pure (k,0)/(0,k) variable, or resolves one (1,1)
/// variable. Fires on at most one variable per call.
std::optional<RuleOutcome> eliminate_low_degree(Formula& f, Journal& j);

/// Flips every variable with more negative than positive occurrences so the
/// (i,j) convention i >= j holds. Not a reduction: eliminates no variables.
std::optional<RuleOutcome> normalize_polarities(Formula& f, Journal& j);

/// Step 5: two variables sharing two clauses; applies the matching case.
std::optional<RuleOutcome> shared_pair_reduction(Formula& f, Journal& j);

/// Steps 6a-6c: the three all-negative-clause reduction patterns, tried in
/// rule order over all-negative clauses ascending by id.
std::optional<RuleOutcome> neg_clause_reductions(Formula& f, Journal& j);

/// Step 8: assigns every variable outside all-negative clauses to 1.
/// Requires the autarky property (each clause with a negative literal of S
/// also holds a positive literal of S); violations raise InternalError.
/// Returns nullopt when S is empty (no change).
std::optional<RuleOutcome> autarky_reduce(Formula& f, Journal& j);

} // namespace occsat

#endif
