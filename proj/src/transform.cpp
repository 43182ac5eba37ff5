#include "occsat/transform.hpp"

#include <algorithm>

namespace occsat {

TransformResult reduce_degree(Formula& f, Journal& j) {
    TransformResult result;
    std::vector<Var> input_vars = f.variables();
    result.stats.input_vars = f.num_vars();
    long total_deg = 0;
    for (Var v : input_vars) {
        int d = f.degree(v);
        total_deg += d;
        result.stats.input_max_degree = std::max(result.stats.input_max_degree, d);
        result.stats.rep_total += std::max(0, d - 2);
    }
    result.stats.input_avg_degree =
        result.stats.input_vars ? static_cast<double>(total_deg) / result.stats.input_vars : 0.0;

    // Repeated literals and trivial clauses would distort occurrence counts.
    for (int id : f.clause_ids()) {
        const Clause& c = f.clause(id);
        if (c.trivial()) {
            f.remove_clause(id);
            journal_vanished(f, j);
        } else if (c.has_duplicate()) {
            f.dedup_clause(id);
        }
    }

    // Degree <= 2 variables go first: pures by assignment, (1,1) by resolution.
    bool progress = true;
    while (progress && !f.has_empty_clause()) {
        progress = false;
        for (Var v : f.variables()) {
            const Formula::Occurrences& o = f.occurrences(v);
            if (o.degree() > 2) continue;
            if (o.neg_count() == 0)
                apply_assign(f, j, positive_lit(v));
            else if (o.pos_count() == 0)
                apply_assign(f, j, negative_lit(v));
            else
                apply_resolve(f, j, v);
            progress = true;
            break;
        }
    }

    // Majority-polarity convention, then chain splits until degree <= 3.
    std::map<Var, std::vector<Var>> splits;
    std::vector<Var> survivors = f.variables();
    for (Var v : survivors) {
        const Formula::Occurrences& o = f.occurrences(v);
        if (o.neg_count() > o.pos_count()) apply_flip(f, j, v);
    }
    for (Var v : survivors) {
        while (f.degree(v) > 3) {
            const Formula::Occurrences& o = f.occurrences(v);
            Lit l = o.pos_count() >= o.neg_count() ? positive_lit(v) : negative_lit(v);
            std::vector<int> ids = o.pos_count() >= o.neg_count() ? o.pos : o.neg;
            std::sort(ids.begin(), ids.end());
            Var fresh = apply_chain_split(f, j, ids[0], ids[1], l);
            splits[v].push_back(fresh);
        }
    }

    for (Var v : input_vars) {
        if (f.contains_var(v)) {
            result.chains[v] = {v};
            auto it = splits.find(v);
            if (it != splits.end())
                result.chains[v].insert(result.chains[v].end(), it->second.begin(),
                                        it->second.end());
        } else {
            result.chains[v] = {};
        }
    }

    result.stats.output_vars = f.num_vars();
    result.stats.output_max_degree = f.max_degree();
    return result;
}

} // namespace occsat
