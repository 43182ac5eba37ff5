#include "occsat/endgame.hpp"

#include <algorithm>
#include <set>

namespace occsat {

EndgameReport check_endgame(const Formula& f) {
    EndgameReport report;
    report.var_count = f.num_vars();

    std::set<Var> neg3_vars;
    for (int id : f.clause_ids()) {
        const Clause& c = f.clause(id);
        if (!c.all_positive() && !c.all_negative())
            report.violations.push_back("clause " + std::to_string(id) + " mixes polarities");
        if (c.size() != 2 && c.size() != 3)
            report.violations.push_back("clause " + std::to_string(id) + " has length " +
                                        std::to_string(c.size()));
        if (c.size() == 3) {
            ++report.three_clause_count;
            if (c.all_negative())
                for (Lit l : c.lits) neg3_vars.insert(var_of(l));
        }
    }
    if (3 * report.three_clause_count > report.var_count)
        report.violations.push_back("3-clause count " + std::to_string(report.three_clause_count) +
                                    " exceeds n/3 with n = " + std::to_string(report.var_count));
    for (Var v : neg3_vars) {
        const Formula::Occurrences& o = f.occurrences(v);
        int in_3 = 0;
        for (int id : o.pos) in_3 += f.clause(id).size() == 3 ? 1 : 0;
        for (int id : o.neg) in_3 += f.clause(id).size() == 3 && !f.clause(id).all_negative() ? 1 : 0;
        if (in_3 > 0)
            report.violations.push_back("variable " + std::to_string(v) +
                                        " of an all-negative 3-clause sits in another 3-clause");
    }
    report.ok = report.violations.empty();
    return report;
}

namespace {

bool dpll(Formula f, Model& model) {
    // Unit propagation and pure literals to a fixpoint.
    for (;;) {
        if (f.has_empty_clause()) return false;
        bool progress = false;
        for (int id : f.clause_ids()) {
            const Clause& c = f.clause(id);
            if (c.size() == 1) {
                Lit l = c.lits.front();
                model[var_of(l)] = is_positive(l);
                f.assign(l);
                progress = true;
                break;
            }
        }
        if (progress) continue;
        for (Var v : f.variables()) {
            const Formula::Occurrences& o = f.occurrences(v);
            if (o.pos_count() == 0 || o.neg_count() == 0) {
                bool value = o.neg_count() == 0;
                model[v] = value;
                f.assign(value ? positive_lit(v) : negative_lit(v));
                progress = true;
                break;
            }
        }
        if (!progress) break;
    }
    if (f.empty()) return true;
    if (f.has_empty_clause()) return false;

    // Branch on the first literal of the shortest clause.
    int best_id = 0;
    std::size_t best_size = SIZE_MAX;
    for (int id : f.clause_ids())
        if (f.clause(id).size() < best_size) {
            best_size = f.clause(id).size();
            best_id = id;
        }
    Lit pick = f.clause(best_id).lits.front();

    Model saved = model;
    Formula branch = f;
    model[var_of(pick)] = is_positive(pick);
    branch.assign(pick);
    if (dpll(std::move(branch), model)) return true;

    model = std::move(saved);
    model[var_of(pick)] = !is_positive(pick);
    f.assign(negated(pick));
    return dpll(std::move(f), model);
}

} // namespace

ThreeSatResult solve_3sat(const Formula& f) {
    ThreeSatResult result;
    Model model;
    std::vector<Var> vars = f.variables();
    result.satisfiable = dpll(f, model);
    if (result.satisfiable) {
        for (Var v : vars) {
            auto it = model.find(v);
            result.model[v] = it == model.end() ? true : it->second;
        }
    }
    return result;
}

} // namespace occsat
