#include "occsat/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace occsat {

namespace {

enum class Tri : char { Unset, True, False };

struct Search {
    std::vector<std::vector<Lit>> clauses;
    std::vector<Var> vars;
    std::map<Var, Tri> value;

    bool lit_true(Lit l) const {
        Tri t = value.at(var_of(l));
        return t != Tri::Unset && (t == Tri::True) == is_positive(l);
    }
    bool lit_false(Lit l) const {
        Tri t = value.at(var_of(l));
        return t != Tri::Unset && (t == Tri::True) != is_positive(l);
    }

    // Returns false on conflict. On success sets `unit` if a unit clause forced
    // an assignment (caller repeats propagation).
    bool propagate_once(bool& forced) {
        forced = false;
        for (const auto& c : clauses) {
            int unassigned = 0;
            Lit last = 0;
            bool satisfied = false;
            for (Lit l : c) {
                if (lit_true(l)) {
                    satisfied = true;
                    break;
                }
                if (!lit_false(l)) {
                    ++unassigned;
                    last = l;
                }
            }
            if (satisfied) continue;
            if (unassigned == 0) return false;
            if (unassigned == 1) {
                value[var_of(last)] = is_positive(last) ? Tri::True : Tri::False;
                forced = true;
            }
        }
        return true;
    }

    bool solve() {
        bool forced = true;
        while (forced)
            if (!propagate_once(forced)) return false;

        Var branch = 0;
        for (Var v : vars)
            if (value[v] == Tri::Unset) {
                branch = v;
                break;
            }
        if (branch == 0) return true; // all assigned, no conflict

        auto saved = value;
        value[branch] = Tri::True;
        if (solve()) return true;
        value = saved;
        value[branch] = Tri::False;
        if (solve()) return true;
        value = saved;
        return false;
    }
};

} // namespace

OracleResult brute_force_sat(const std::vector<std::vector<Lit>>& clauses, int var_cap) {
    std::set<Var> var_set;
    for (const auto& c : clauses)
        for (Lit l : c) var_set.insert(var_of(l));
    if (static_cast<int>(var_set.size()) > var_cap)
        throw ContractError("brute_force_sat: " + std::to_string(var_set.size()) +
                            " variables exceed the cap of " + std::to_string(var_cap));

    Search s;
    s.clauses = clauses;
    s.vars.assign(var_set.begin(), var_set.end());
    for (Var v : s.vars) s.value[v] = Tri::Unset;

    OracleResult result;
    result.satisfiable = s.solve();
    if (result.satisfiable)
        for (Var v : s.vars) result.model[v] = s.value[v] != Tri::False;
    return result;
}

} // namespace occsat
