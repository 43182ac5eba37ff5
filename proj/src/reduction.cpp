#include "occsat/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace occsat {

const char* rule_name(RuleId id) {
    switch (id) {
    case RuleId::S3: return "S3";
    case RuleId::S4a: return "S4a";
    case RuleId::S4b: return "S4b";
    case RuleId::Flip: return "flip";
    case RuleId::S5a: return "S5a";
    case RuleId::S5b: return "S5b";
    case RuleId::S5c: return "S5c";
    case RuleId::S5d: return "S5d";
    case RuleId::S6a: return "S6a";
    case RuleId::S6b: return "S6b";
    case RuleId::S6c: return "S6c";
    case RuleId::S6d: return "S6d";
    case RuleId::S8: return "S8";
    }
    return "?";
}

std::optional<RuleOutcome> eliminate_low_degree(Formula& f, Journal& j) {
    int before = f.num_vars();
    for (Var v : f.variables()) {
        const Formula::Occurrences& o = f.occurrences(v);
        if (o.neg_count() == 0) {
            apply_assign(f, j, positive_lit(v));
            return RuleOutcome{RuleId::S4a, before - f.num_vars()};
        }
        if (o.pos_count() == 0) {
            apply_assign(f, j, negative_lit(v));
            return RuleOutcome{RuleId::S4a, before - f.num_vars()};
        }
    }
    for (Var v : f.variables()) {
        const Formula::Occurrences& o = f.occurrences(v);
        if (o.pos_count() == 1 && o.neg_count() == 1) {
            apply_resolve(f, j, v);
            return RuleOutcome{RuleId::S4b, before - f.num_vars()};
        }
    }
    return std::nullopt;
}

std::optional<RuleOutcome> normalize_polarities(Formula& f, Journal& j) {
    bool fired = false;
    for (Var v : f.variables()) {
        const Formula::Occurrences& o = f.occurrences(v);
        if (o.neg_count() > o.pos_count()) {
            apply_flip(f, j, v);
            fired = true;
        }
    }
    if (!fired) return std::nullopt;
    return RuleOutcome{RuleId::Flip, 0};
}

namespace {

// Distinguishes the four step-5 cases by the polarity signature of x and y
// inside their two shared clauses. Assumes the (2,1) convention.
struct SharedPair {
    Var x = 0, y = 0;
    int id_a = 0, id_b = 0;
};

std::optional<SharedPair> find_shared_pair(const Formula& f) {
    for (Var x : f.variables()) {
        const Formula::Occurrences& ox = f.occurrences(x);
        std::vector<int> ids(ox.pos.begin(), ox.pos.end());
        ids.insert(ids.end(), ox.neg.begin(), ox.neg.end());
        std::sort(ids.begin(), ids.end());
        std::map<Var, std::vector<int>> partners;
        for (int id : ids)
            for (Lit l : f.clause(id).lits)
                if (var_of(l) != x) partners[var_of(l)].push_back(id);
        for (auto& [y, shared] : partners) {
            if (y < x || shared.size() < 2) continue;
            return SharedPair{x, y, shared[0], shared[1]};
        }
    }
    return std::nullopt;
}

int assert_decrease(const Formula& f, int before, RuleId rule) {
    int eliminated = before - f.num_vars();
    if (eliminated < 1)
        throw InternalError(std::string("rule ") + rule_name(rule) +
                            " failed to decrease the variable count");
    return eliminated;
}

} // namespace

std::optional<RuleOutcome> shared_pair_reduction(Formula& f, Journal& j) {
    auto pair = find_shared_pair(f);
    if (!pair) return std::nullopt;
    Var x = pair->x, y = pair->y;

    auto pos_in = [&](Var v, int id) { return f.clause(id).contains(positive_lit(v)); };
    int px = pos_in(x, pair->id_a) + pos_in(x, pair->id_b);
    int py = pos_in(y, pair->id_a) + pos_in(y, pair->id_b);

    int before = f.num_vars();
    RuleId rule;
    if (px == 2 && py == 2) {
        rule = RuleId::S5a;
    } else if (px == 2 || py == 2) {
        rule = RuleId::S5b;
    } else {
        // Each of x, y is positive in exactly one shared clause. Same clause:
        // resolution case; opposite clauses: both variables can be set true.
        bool same_clause = pos_in(x, pair->id_a) == pos_in(y, pair->id_a);
        rule = same_clause ? RuleId::S5c : RuleId::S5d;
    }

    if (rule == RuleId::S5d) {
        // Setting both true satisfies all four clauses; sound only when each
        // variable's single negative occurrence sits inside the shared pair.
        for (Var v : {x, y}) {
            const Formula::Occurrences& o = f.occurrences(v);
            if (o.pos_count() != 2 || o.neg_count() != 1)
                throw ContractError("shared_pair_reduction requires (2,1) variables");
        }
        apply_assign(f, j, positive_lit(x));
        if (f.contains_var(y)) apply_assign(f, j, positive_lit(y));
    } else {
        safe_resolve(f, j, {x, y});
    }
    return RuleOutcome{rule, assert_decrease(f, before, rule)};
}

namespace {

// Step 6a: all-negative clause (~x | ~y | a), clauses (x | u | b),
// (y | ~u | g), (u | d). Resolving u leaves the resolvent (x | y | b | g),
// which is dropped: a model with x = y = 0 can always flip x to 1 because
// ~x occurs only in the all-negative clause.
bool try_6a(Formula& f, Journal& j, int neg_id, int& eliminated) {
    const Clause neg = f.clause(neg_id);
    for (Lit lx : neg.lits) {
        Var x = var_of(lx);
        const Formula::Occurrences& ox = f.occurrences(x);
        // The drop below relies on ~x occurring only in this clause.
        if (ox.pos_count() != 2 || ox.neg_count() != 1) continue;
        std::vector<int> x_pos = ox.pos;
        std::sort(x_pos.begin(), x_pos.end());
        for (int cx : x_pos) {
            for (Lit lu : f.clause(cx).lits) {
                if (!is_positive(lu) || var_of(lu) == x) continue;
                Var u = var_of(lu);
                const Formula::Occurrences& ou = f.occurrences(u);
                if (ou.pos_count() != 2 || ou.neg_count() != 1) continue;
                int cu = ou.neg.front();
                if (cu == neg_id) continue;
                const Clause& uneg = f.clause(cu);
                Var y = 0;
                for (Lit ly : neg.lits)
                    if (var_of(ly) != x && var_of(ly) != u &&
                        uneg.contains(positive_lit(var_of(ly)))) {
                        y = var_of(ly);
                        break;
                    }
                if (y == 0) continue;

                int before = f.num_vars();
                // Resolvent of (x | u | b) with (y | ~u | g); redundant because
                // a model with x = y = 0 can flip x to 1.
                std::vector<Lit> dropped;
                for (Lit l : f.clause(cx).lits)
                    if (l != positive_lit(u)) dropped.push_back(l);
                for (Lit l : uneg.lits)
                    if (l != negative_lit(u)) dropped.push_back(l);
                std::sort(dropped.begin(), dropped.end(), lit_less);
                dropped.erase(std::unique(dropped.begin(), dropped.end()), dropped.end());

                std::vector<int> added = apply_resolve(f, j, u, positive_lit(x));
                for (int id : added)
                    if (f.has_clause(id) && f.clause(id).lits == dropped) {
                        f.remove_clause(id);
                        journal_vanished(f, j);
                        break;
                    }
                eliminated = before - f.num_vars();
                if (eliminated < 1) throw InternalError("step 6a failed to eliminate");
                return true;
            }
        }
    }
    return false;
}

// Step 6b: all-negative clause (~x | ~y | g) with 2-clauses (x | u), (y | u).
bool try_6b(Formula& f, Journal& j, int neg_id, int& eliminated) {
    const Clause neg = f.clause(neg_id);
    for (Lit lx : neg.lits) {
        Var x = var_of(lx);
        for (int cx : f.occurrences(x).pos) {
            const Clause& a = f.clause(cx);
            if (a.size() != 2) continue;
            Lit lu = a.lits[0] == positive_lit(x) ? a.lits[1] : a.lits[0];
            if (!is_positive(lu)) continue;
            Var u = var_of(lu);
            if (u == x) continue;
            for (Lit ly : neg.lits) {
                Var y = var_of(ly);
                if (y == x || y == u) continue;
                for (int cy : f.occurrences(y).pos) {
                    const Clause& b = f.clause(cy);
                    if (cy == cx || b.size() != 2) continue;
                    if (!b.contains(positive_lit(u))) continue;
                    int before = f.num_vars();
                    safe_resolve(f, j, {x, y});
                    eliminated = assert_decrease(f, before, RuleId::S6b);
                    return true;
                }
            }
        }
    }
    return false;
}

// Step 6c: all-negative 2-clause (~x | ~y) with (x | u) and (y | u | b).
bool try_6c(Formula& f, Journal& j, int neg_id, int& eliminated) {
    const Clause neg = f.clause(neg_id);
    if (neg.size() != 2) return false;
    for (Lit lx : neg.lits) {
        Var x = var_of(lx);
        Var y = var_of(neg.lits[0] == lx ? neg.lits[1] : neg.lits[0]);
        for (int cx : f.occurrences(x).pos) {
            const Clause& a = f.clause(cx);
            if (a.size() != 2) continue;
            Lit lu = a.lits[0] == positive_lit(x) ? a.lits[1] : a.lits[0];
            if (!is_positive(lu) || var_of(lu) == x || var_of(lu) == y) continue;
            Var u = var_of(lu);
            for (int cy : f.occurrences(y).pos) {
                if (cy == cx) continue;
                if (!f.clause(cy).contains(positive_lit(u))) continue;
                int before = f.num_vars();
                safe_resolve(f, j, {x, y});
                eliminated = assert_decrease(f, before, RuleId::S6c);
                return true;
            }
        }
    }
    return false;
}

} // namespace

std::optional<RuleOutcome> neg_clause_reductions(Formula& f, Journal& j) {
    std::vector<int> neg_ids;
    for (int id : f.clause_ids())
        if (f.clause(id).all_negative()) neg_ids.push_back(id);

    int eliminated = 0;
    for (int id : neg_ids)
        if (try_6a(f, j, id, eliminated)) return RuleOutcome{RuleId::S6a, eliminated};
    for (int id : neg_ids)
        if (f.has_clause(id) && try_6b(f, j, id, eliminated))
            return RuleOutcome{RuleId::S6b, eliminated};
    for (int id : neg_ids)
        if (f.has_clause(id) && try_6c(f, j, id, eliminated))
            return RuleOutcome{RuleId::S6c, eliminated};
    return std::nullopt;
}

std::optional<RuleOutcome> autarky_reduce(Formula& f, Journal& j) {
    std::set<Var> in_all_negative;
    for (int id : f.clause_ids()) {
        const Clause& c = f.clause(id);
        if (c.all_negative())
            for (Lit l : c.lits) in_all_negative.insert(var_of(l));
    }
    std::vector<Var> autark;
    for (Var v : f.variables())
        if (!in_all_negative.count(v)) autark.push_back(v);
    if (autark.empty()) return std::nullopt;

    // Audit the autarky property before assigning anything.
    std::set<Var> autark_set(autark.begin(), autark.end());
    for (int id : f.clause_ids()) {
        const Clause& c = f.clause(id);
        bool has_neg_s = false, has_pos_s = false;
        for (Lit l : c.lits) {
            if (!autark_set.count(var_of(l))) continue;
            (is_positive(l) ? has_pos_s : has_neg_s) = true;
        }
        if (has_neg_s && !has_pos_s)
            throw InternalError("autarky precondition violated: clause holds a negative "
                                "autark literal but no positive one (driver bug)");
    }

    int before = f.num_vars();
    for (Var v : autark)
        if (f.contains_var(v)) apply_assign(f, j, positive_lit(v));

    for (int id : f.clause_ids()) {
        const Clause& c = f.clause(id);
        if (!c.all_positive() && !c.all_negative())
            throw InternalError("formula not monotone after autarky reduction (driver bug)");
    }
    return RuleOutcome{RuleId::S8, before - f.num_vars()};
}

} // namespace occsat
