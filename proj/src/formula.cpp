#include "occsat/formula.hpp"

#include <algorithm>
#include <set>

namespace occsat {

int Formula::add_clause(std::vector<Lit> lits) {
    Clause c(std::move(lits));
    for (Lit l : c.lits) {
        if (l == 0) throw ContractError("literal 0 is not a literal");
        note_var_seen(var_of(l));
    }
    int id = static_cast<int>(clauses_.size());
    clauses_.push_back(std::move(c));
    ++clause_count_;
    if (clauses_.back()->empty()) ++empty_clause_count_;
    for (Lit l : clauses_.back()->lits) index_literal(l, id);
    return id;
}

void Formula::remove_clause(int id) {
    if (!has_clause(id)) throw ContractError("remove_clause: no such clause");
    for (Lit l : clauses_[id]->lits) unindex_literal(l, id);
    if (clauses_[id]->empty()) --empty_clause_count_;
    clauses_[id].reset();
    --clause_count_;
}

void Formula::remove_literal(int id, Lit l) {
    if (!has_clause(id)) throw ContractError("remove_literal: no such clause");
    Clause& c = *clauses_[id];
    auto it = std::remove(c.lits.begin(), c.lits.end(), l);
    int removed = static_cast<int>(c.lits.end() - it);
    c.lits.erase(it, c.lits.end());
    for (int i = 0; i < removed; ++i) unindex_literal(l, id);
    if (removed > 0 && c.empty()) ++empty_clause_count_;
}

void Formula::dedup_clause(int id) {
    if (!has_clause(id)) throw ContractError("dedup_clause: no such clause");
    Clause& c = *clauses_[id];
    std::vector<Lit> unique_lits;
    for (Lit l : c.lits) {
        if (!unique_lits.empty() && unique_lits.back() == l)
            unindex_literal(l, id);
        else
            unique_lits.push_back(l);
    }
    c.lits = std::move(unique_lits);
}

void Formula::assign(Lit l) {
    Var v = var_of(l);
    if (!contains_var(v)) throw ContractError("assign: variable not in formula");
    const std::vector<int> sat = is_positive(l) ? occ_[v].pos : occ_[v].neg;
    const std::vector<int> shrink = is_positive(l) ? occ_[v].neg : occ_[v].pos;
    std::set<int> sat_ids(sat.begin(), sat.end());
    for (int id : sat_ids) remove_clause(id);
    std::set<int> shrink_ids(shrink.begin(), shrink.end());
    for (int id : shrink_ids)
        if (has_clause(id)) remove_literal(id, negated(l));
}

void Formula::flip_variable(Var v) {
    if (!contains_var(v)) throw ContractError("flip_variable: variable not in formula");
    Occurrences& o = occ_[v];
    std::set<int> ids(o.pos.begin(), o.pos.end());
    ids.insert(o.neg.begin(), o.neg.end());
    for (int id : ids) {
        Clause& c = *clauses_[id];
        for (Lit& l : c.lits)
            if (var_of(l) == v) l = negated(l);
        c.normalize();
    }
    std::swap(o.pos, o.neg);
}

const Clause& Formula::clause(int id) const {
    if (!has_clause(id)) throw ContractError("clause: no such clause");
    return *clauses_[id];
}

const Formula::Occurrences& Formula::occurrences(Var v) const {
    if (!contains_var(v)) throw ContractError("occurrences: variable not in formula");
    return occ_[v];
}

int Formula::max_degree() const {
    int d = 0;
    for (Var v = 1; v < static_cast<int>(occ_.size()); ++v)
        d = std::max(d, occ_[v].degree());
    return d;
}

std::vector<Var> Formula::variables() const {
    std::vector<Var> out;
    out.reserve(var_count_);
    for (Var v = 1; v < static_cast<int>(occ_.size()); ++v)
        if (!occ_[v].absent()) out.push_back(v);
    return out;
}

std::vector<int> Formula::clause_ids() const {
    std::vector<int> out;
    out.reserve(clause_count_);
    for (int id = 1; id < static_cast<int>(clauses_.size()); ++id)
        if (clauses_[id].has_value()) out.push_back(id);
    return out;
}

std::vector<std::vector<Lit>> Formula::clause_lists() const {
    std::vector<std::vector<Lit>> out;
    out.reserve(clause_count_);
    for (int id = 1; id < static_cast<int>(clauses_.size()); ++id)
        if (clauses_[id].has_value()) out.push_back(clauses_[id]->lits);
    return out;
}

std::vector<Var> Formula::neighbors(Lit l) const {
    Var self = var_of(l);
    if (!contains_var(self)) return {};
    const std::vector<int>& ids = is_positive(l) ? occ_[self].pos : occ_[self].neg;
    std::set<Var> vars;
    for (int id : ids)
        for (Lit m : clauses_[id]->lits)
            if (var_of(m) != self) vars.insert(var_of(m));
    return {vars.begin(), vars.end()};
}

std::vector<int> Formula::clauses_containing(const std::vector<Var>& vars) const {
    std::set<int> ids;
    for (Var v : vars) {
        if (!contains_var(v)) continue;
        ids.insert(occ_[v].pos.begin(), occ_[v].pos.end());
        ids.insert(occ_[v].neg.begin(), occ_[v].neg.end());
    }
    return {ids.begin(), ids.end()};
}

std::vector<Var> Formula::drain_vanished() {
    std::vector<Var> out;
    std::swap(out, vanished_);
    return out;
}

bool Formula::audit() const {
    std::vector<Occurrences> rebuilt(occ_.size());
    int clauses_seen = 0, empties = 0;
    for (int id = 1; id < static_cast<int>(clauses_.size()); ++id) {
        if (!clauses_[id]) continue;
        ++clauses_seen;
        if (clauses_[id]->empty()) ++empties;
        std::vector<Lit> sorted = clauses_[id]->lits;
        if (!std::is_sorted(sorted.begin(), sorted.end(), lit_less)) return false;
        for (Lit l : clauses_[id]->lits) {
            Var v = var_of(l);
            if (v <= 0 || v >= static_cast<int>(occ_.size())) return false;
            if (v >= next_var_) return false;
            (is_positive(l) ? rebuilt[v].pos : rebuilt[v].neg).push_back(id);
        }
    }
    if (clauses_seen != clause_count_ || empties != empty_clause_count_) return false;
    int vars_seen = 0;
    for (Var v = 1; v < static_cast<int>(occ_.size()); ++v) {
        std::vector<int> p = occ_[v].pos, n = occ_[v].neg;
        std::sort(p.begin(), p.end());
        std::sort(n.begin(), n.end());
        std::sort(rebuilt[v].pos.begin(), rebuilt[v].pos.end());
        std::sort(rebuilt[v].neg.begin(), rebuilt[v].neg.end());
        if (p != rebuilt[v].pos || n != rebuilt[v].neg) return false;
        if (!occ_[v].absent()) ++vars_seen;
    }
    return vars_seen == var_count_;
}

void Formula::corrupt_index_for_test() {
    for (Var v = 1; v < static_cast<int>(occ_.size()); ++v) {
        if (!occ_[v].absent()) {
            occ_[v].pos.push_back(999999);
            return;
        }
    }
    occ_.push_back(Occurrences{{1}, {}});
}

void Formula::index_literal(Lit l, int id) {
    Var v = var_of(l);
    Occurrences& o = occ_[v];
    bool was_absent = o.absent();
    (is_positive(l) ? o.pos : o.neg).push_back(id);
    if (was_absent) ++var_count_;
}

void Formula::unindex_literal(Lit l, int id) {
    Var v = var_of(l);
    Occurrences& o = occ_[v];
    std::vector<int>& ids = is_positive(l) ? o.pos : o.neg;
    auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end()) throw InternalError("occurrence index out of sync");
    ids.erase(it);
    if (o.absent()) {
        --var_count_;
        vanished_.push_back(v);
    }
}

void Formula::note_var_seen(Var v) {
    if (v >= static_cast<int>(occ_.size())) occ_.resize(static_cast<std::size_t>(v) + 1);
    if (v >= next_var_) next_var_ = v + 1;
}

} // namespace occsat
