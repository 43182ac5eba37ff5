#include "occsat/reconstruction.hpp"

#include <set>

namespace occsat {

namespace {

bool clause_satisfied(const std::vector<Lit>& clause, const Model& m) {
    for (Lit l : clause) {
        auto it = m.find(var_of(l));
        if (it != m.end() && it->second == is_positive(l)) return true;
    }
    return false;
}

// Gives every unassigned variable of `clause` (other than `skip`) a default
// value; any value works for a variable that vanished without a record.
void default_unassigned(const std::vector<Lit>& clause, Model& m, Var skip) {
    for (Lit l : clause) {
        Var v = var_of(l);
        if (v != skip && !m.count(v)) m[v] = true;
    }
}

bool try_resolved_value(const Record& r, Model& m) {
    for (bool value : {true, false}) {
        m[r.var] = value;
        bool ok = true;
        for (const auto& c : r.clauses)
            if (!clause_satisfied(c, m)) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    m.erase(r.var);
    return false;
}

} // namespace

Model extend_model(const Journal& journal, const Model& partial) {
    Model m = partial;
    std::set<Var> fresh;
    for (auto it = journal.rbegin(); it != journal.rend(); ++it) {
        const Record& r = *it;
        switch (r.kind) {
        case Record::Kind::Assigned:
            m[var_of(r.lit)] = is_positive(r.lit);
            break;
        case Record::Kind::Flipped: {
            auto found = m.find(r.var);
            if (found == m.end())
                m[r.var] = false; // unassigned: default true, then flip
            else
                found->second = !found->second;
            break;
        }
        case Record::Kind::Resolved: {
            for (const auto& c : r.clauses) default_unassigned(c, m, r.var);
            if (!try_resolved_value(r, m)) {
                if (r.rescue == 0)
                    throw InternalError("journal corruption: no value satisfies resolved clauses");
                m[var_of(r.rescue)] = is_positive(r.rescue);
                if (!try_resolved_value(r, m))
                    throw InternalError("journal corruption: rescue literal did not help");
            }
            break;
        }
        case Record::Kind::Introduced:
            fresh.insert(r.var);
            break;
        }
    }
    for (Var v : fresh) m.erase(v);
    return m;
}

bool satisfies(const std::vector<std::vector<Lit>>& clauses, const Model& m) {
    for (const auto& c : clauses)
        if (!clause_satisfied(c, m)) return false;
    return true;
}

} // namespace occsat
