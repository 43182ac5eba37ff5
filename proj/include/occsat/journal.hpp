#ifndef OCCSAT_JOURNAL_HPP
#define OCCSAT_JOURNAL_HPP

#include <vector>

#include "occsat/formula.hpp"
#include "occsat/literals.hpp"

namespace occsat {

/// One rewrite event, recorded so a model of the rewritten formula can be
/// extended back over the eliminated variables.
struct Record {
    enum class Kind {
        Assigned,   // literal set true (unit, pure, branch, autarky, vanish)
        Flipped,    // variable's polarity convention flipped everywhere
        Resolved,   // variable resolved away; removed clauses stored verbatim
        Introduced, // fresh variable added by a splitting rewrite
    };

    Kind kind;
    Lit lit = 0; // Assigned
    Var var = 0; // Flipped / Resolved / Introduced
    std::vector<std::vector<Lit>> clauses; // Resolved: removed; Introduced: defining
    // Resolved only: literal known safe to force true when no value of `var`
    // satisfies the removed clauses (used by the rule that drops a resolvent
    // covered by an all-negative clause).
    Lit rescue = 0;

    static Record assigned(Lit l) { return Record{Kind::Assigned, l, 0, {}, 0}; }
    static Record flipped(Var v) { return Record{Kind::Flipped, 0, v, {}, 0}; }
    static Record resolved(Var v, std::vector<std::vector<Lit>> removed, Lit rescue_lit = 0) {
        return Record{Kind::Resolved, 0, v, std::move(removed), rescue_lit};
    }
    static Record introduced(Var v, std::vector<std::vector<Lit>> defining) {
        return Record{Kind::Introduced, 0, v, std::move(defining), 0};
    }
};

using Journal = std::vector<Record>;

// --- journaled primitives ----------------------------------------------
// Every variable elimination flows through these, so the journal alone
// suffices to extend models. Collateral vanishes (a variable losing its
// last occurrence as a side effect) are journaled as Assigned(+v); any
// value satisfies the formula at that point, so true is chosen.

void journal_vanished(Formula& f, Journal& j);
void apply_assign(Formula& f, Journal& j, Lit l);
void apply_flip(Formula& f, Journal& j, Var v);
// Resolves v: adds all nontrivial resolvents, removes v's clauses.
// Returns ids of the added resolvent clauses.
std::vector<int> apply_resolve(Formula& f, Journal& j, Var v, Lit rescue = 0);
// Replaces clauses id_a = (shared ∨ rest_a), id_b = (shared ∨ rest_b) by
// (shared ∨ ~z), (rest_a ∨ z), (rest_b ∨ z) for fresh z. Returns z.
Var apply_split(Formula& f, Journal& j, int id_a, int id_b, const std::vector<Lit>& shared);
// Degree-chaining rewrite: (l ∨ rest_a), (l ∨ rest_b) become
// (z ∨ rest_a), (z ∨ rest_b), (~z ∨ l) for fresh z. Returns z.
Var apply_chain_split(Formula& f, Journal& j, int id_a, int id_b, Lit l);

} // namespace occsat

#endif
