#ifndef OCCSAT_FORMULA_HPP
#define OCCSAT_FORMULA_HPP

#include <optional>
#include <vector>

#include "occsat/clause.hpp"
#include "occsat/literals.hpp"

namespace occsat {

/// Occurrence-indexed CNF clause database.
///
/// Clauses carry stable integer ids that survive unrelated rewrites, so
/// journals can reference them. The index maps every variable to the clause
/// ids of its positive and negative occurrences (with multiplicity while
/// duplicate literals are still present). Mutations that drop a variable's
/// last occurrence record it in a "vanished" list the caller drains, so no
/// variable ever disappears without the surrounding rule noticing.
class Formula {
public:
    struct Occurrences {
        std::vector<int> pos; // ids of clauses containing the positive literal
        std::vector<int> neg; // ids of clauses containing the negative literal
        int pos_count() const { return static_cast<int>(pos.size()); }
        int neg_count() const { return static_cast<int>(neg.size()); }
        int degree() const { return pos_count() + neg_count(); }
        bool absent() const { return pos.empty() && neg.empty(); }
    };

    Formula() = default;

    // --- construction / mutation ------------------------------------------

    int add_clause(std::vector<Lit> lits);
    void remove_clause(int id);
    // Removes every instance of `l` from clause `id` (the clause may empty out).
    void remove_literal(int id, Lit l);
    // Collapses repeated literals in clause `id`, keeping one instance each.
    void dedup_clause(int id);

    // F[l]: removes clauses containing l, deletes all occurrences of ~l.
    void assign(Lit l);

    // Flips the polarity of every occurrence of v.
    void flip_variable(Var v);

    Var fresh_variable() { return next_var_++; }

    // --- queries ------------------------------------------------------------

    bool has_clause(int id) const {
        return id >= 1 && id < static_cast<int>(clauses_.size()) && clauses_[id].has_value();
    }
    const Clause& clause(int id) const;
    int max_clause_id() const { return static_cast<int>(clauses_.size()) - 1; }

    bool contains_var(Var v) const {
        return v >= 1 && v < static_cast<int>(occ_.size()) && !occ_[v].absent();
    }
    const Occurrences& occurrences(Var v) const;
    int degree(Var v) const { return contains_var(v) ? occ_[v].degree() : 0; }

    int num_vars() const { return var_count_; }
    int num_clauses() const { return clause_count_; }
    bool empty() const { return clause_count_ == 0; }
    bool has_empty_clause() const { return empty_clause_count_ > 0; }
    int max_degree() const;

    std::vector<Var> variables() const;
    std::vector<int> clause_ids() const;
    std::vector<std::vector<Lit>> clause_lists() const;

    // N(l): variables sharing a clause with the literal l, excluding var(l).
    std::vector<Var> neighbors(Lit l) const;

    // Ids of clauses containing at least one variable of `vars`.
    std::vector<int> clauses_containing(const std::vector<Var>& vars) const;

    // Variables that lost their last occurrence since the previous drain.
    std::vector<Var> drain_vanished();

    // True iff the occurrence index exactly matches the clause set.
    bool audit() const;

    // Test-only hook: deliberately corrupt the index.
    void corrupt_index_for_test();

private:
    void index_literal(Lit l, int id);
    void unindex_literal(Lit l, int id);
    void note_var_seen(Var v);

    std::vector<std::optional<Clause>> clauses_{std::nullopt}; // id 0 unused
    std::vector<Occurrences> occ_{Occurrences{}};              // var 0 unused
    int clause_count_ = 0;
    int empty_clause_count_ = 0;
    int var_count_ = 0;
    Var next_var_ = 1;
    std::vector<Var> vanished_;
};

} // namespace occsat

#endif
