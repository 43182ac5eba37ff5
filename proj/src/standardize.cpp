#include "occsat/standardize.hpp"

#include <set>

namespace occsat {

namespace {

// Removes clauses subsumed by the clause `id`. Candidates are narrowed to
// clauses sharing the first literal, which every superset must contain.
bool subsume_from(Formula& f, int id) {
    const Clause& c1 = f.clause(id);
    if (c1.empty()) return false;
    Lit probe = c1.lits.front();
    const Formula::Occurrences& o = f.occurrences(var_of(probe));
    std::vector<int> candidates = is_positive(probe) ? o.pos : o.neg;
    bool removed = false;
    for (int other : candidates) {
        if (other == id || !f.has_clause(other)) continue;
        const Clause& c2 = f.clause(other);
        if (c2.size() < c1.size()) continue;
        if (c2.size() == c1.size() && other < id) continue; // keep the older twin
        if (c1.subset_of(c2)) {
            f.remove_clause(other);
            removed = true;
        }
    }
    return removed;
}

} // namespace

StandardizeResult standardize(Formula& f, Journal& j) {
    StandardizeResult result;
    int vars_before = f.num_vars();

    bool progress = true;
    while (progress && !f.has_empty_clause()) {
        progress = false;

        // Unit clauses: reduce F to F[l].
        bool unit_found = true;
        while (unit_found && !f.has_empty_clause()) {
            unit_found = false;
            for (int id : f.clause_ids()) {
                const Clause& c = f.clause(id);
                if (c.size() == 1) {
                    apply_assign(f, j, c.lits.front());
                    unit_found = true;
                    progress = true;
                    result.changed = true;
                    break;
                }
            }
        }
        if (f.has_empty_clause()) break;

        // Trivial clauses and repeated literals.
        for (int id : f.clause_ids()) {
            const Clause& c = f.clause(id);
            if (c.trivial()) {
                f.remove_clause(id);
                journal_vanished(f, j);
                progress = true;
                result.changed = true;
            } else if (c.has_duplicate()) {
                f.dedup_clause(id);
                progress = true;
                result.changed = true;
            }
        }

        // Subsumption.
        for (int id : f.clause_ids()) {
            if (!f.has_clause(id)) continue;
            if (subsume_from(f, id)) {
                journal_vanished(f, j);
                progress = true;
                result.changed = true;
            }
        }
    }

    result.vars_eliminated = vars_before - f.num_vars();
    return result;
}

} // namespace occsat
