#ifndef OCCSAT_CLAUSE_HPP
#define OCCSAT_CLAUSE_HPP

#include <algorithm>
#include <vector>

#include "occsat/literals.hpp"

namespace occsat {

// A disjunction of literals, kept sorted by (variable, polarity).
// Duplicate literals and complementary pairs are representable; the
// standardizer removes them. The empty clause means "unsatisfiable".
struct Clause {
    std::vector<Lit> lits;

    Clause() = default;
    explicit Clause(std::vector<Lit> ls) : lits(std::move(ls)) { normalize(); }

    void normalize() { std::sort(lits.begin(), lits.end(), lit_less); }

    std::size_t size() const { return lits.size(); }
    bool empty() const { return lits.empty(); }

    bool contains(Lit l) const {
        return std::binary_search(lits.begin(), lits.end(), l, lit_less);
    }
    bool has_var(Var v) const { return contains(positive_lit(v)) || contains(negative_lit(v)); }

    bool all_negative() const {
        return !lits.empty() &&
               std::none_of(lits.begin(), lits.end(), [](Lit l) { return is_positive(l); });
    }
    bool all_positive() const {
        return !lits.empty() &&
               std::all_of(lits.begin(), lits.end(), [](Lit l) { return is_positive(l); });
    }
    bool has_positive() const {
        return std::any_of(lits.begin(), lits.end(), [](Lit l) { return is_positive(l); });
    }

    // True if some variable occurs in both polarities.
    bool trivial() const {
        for (std::size_t i = 0; i + 1 < lits.size(); ++i)
            if (lits[i] == negated(lits[i + 1])) return true;
        return false;
    }
    bool has_duplicate() const {
        for (std::size_t i = 0; i + 1 < lits.size(); ++i)
            if (lits[i] == lits[i + 1]) return true;
        return false;
    }
    // No duplicate literal and no variable in both polarities.
    bool strict() const {
        for (std::size_t i = 0; i + 1 < lits.size(); ++i)
            if (var_of(lits[i]) == var_of(lits[i + 1])) return false;
        return true;
    }

    // Subset test on literal sets; both clauses must be normalized and strict.
    bool subset_of(const Clause& other) const {
        return std::includes(other.lits.begin(), other.lits.end(), lits.begin(), lits.end(),
                             lit_less);
    }

    bool operator==(const Clause& other) const { return lits == other.lits; }
};

// The literals of `c` whose variables avoid `vs` (which must be sorted).
inline std::vector<Lit> maximal_subclause(const std::vector<Lit>& clause,
                                          const std::vector<Var>& sorted_vars) {
    std::vector<Lit> out;
    for (Lit l : clause)
        if (!std::binary_search(sorted_vars.begin(), sorted_vars.end(), var_of(l)))
            out.push_back(l);
    return out;
}

} // namespace occsat

#endif
