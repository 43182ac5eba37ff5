#ifndef OCCSAT_STANDARDIZE_HPP
#define OCCSAT_STANDARDIZE_HPP

#include "occsat/journal.hpp"

namespace occsat {

struct StandardizeResult {
    bool changed = false;
    int vars_eliminated = 0;
};

/// Fixpoint of: unit propagation, trivial-clause removal, duplicate-literal
/// removal, subsumption. Stops immediately once an empty clause appears
/// (the empty clause is the unsatisfiability signal, not an error).
StandardizeResult standardize(Formula& f, Journal& j);

} // namespace occsat

#endif
