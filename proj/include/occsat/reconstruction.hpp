#ifndef OCCSAT_RECONSTRUCTION_HPP
#define OCCSAT_RECONSTRUCTION_HPP

#include <map>

#include "occsat/journal.hpp"

namespace occsat {

using Model = std::map<Var, bool>;

/// Extends a model of the journal's end state back over every eliminated
/// variable by replaying the journal newest-to-oldest. Fresh variables from
/// Introduced records are dropped from the result. Variables never touched
/// by any record keep their value from `partial` (or default to true: their
/// clauses were all satisfiable without them).
Model extend_model(const Journal& journal, const Model& partial);

/// True iff `model` satisfies every clause (unassigned variables count false).
bool satisfies(const std::vector<std::vector<Lit>>& clauses, const Model& model);

} // namespace occsat

#endif
