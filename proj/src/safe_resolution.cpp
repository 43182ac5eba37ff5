#include "occsat/safe_resolution.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace occsat {

namespace {

std::vector<Lit> common_subclause(const Clause& a, const Clause& b) {
    std::vector<Lit> inter;
    std::set_intersection(a.lits.begin(), a.lits.end(), b.lits.begin(), b.lits.end(),
                          std::back_inserter(inter), lit_less);
    return inter;
}

// Largest common subclause over clause pairs, ties broken by lowest ids.
// Partners are found through the occurrence lists: only pairs sharing a
// literal can share a subclause. With `require_dirty`, both clauses must
// be in `dirty`.
struct SharedSubclause {
    int id_a = 0, id_b = 0;
    std::vector<Lit> lits;
};

std::optional<SharedSubclause> largest_shared_subclause(const Formula& f,
                                                        const std::set<int>* dirty) {
    std::optional<SharedSubclause> best;
    for (int id : f.clause_ids()) {
        if (dirty && !dirty->count(id)) continue;
        const Clause& c = f.clause(id);
        std::map<int, int> shared_count; // partner id -> shared literal count
        for (Lit l : c.lits) {
            const Formula::Occurrences& o = f.occurrences(var_of(l));
            for (int other : (is_positive(l) ? o.pos : o.neg))
                if (other > id && (!dirty || dirty->count(other))) ++shared_count[other];
        }
        for (const auto& [other, count] : shared_count) {
            if (count < 2) continue;
            if (best && count < static_cast<int>(best->lits.size())) continue;
            std::vector<Lit> inter = common_subclause(c, f.clause(other));
            if (inter.size() < 2) continue;
            bool better = !best || inter.size() > best->lits.size() ||
                          (inter.size() == best->lits.size() &&
                           std::pair(id, other) < std::pair(best->id_a, best->id_b));
            if (better) best = SharedSubclause{id, other, std::move(inter)};
        }
    }
    return best;
}

struct DegreeTarget {
    int id_a = 0, id_b = 0;
    std::vector<Lit> shared;
};

// Picks the split that lowers the worst over-degree variable: the pair of
// its surplus-literal clauses with the largest common subclause. Freshly
// rewritten (dirty) occurrences are preferred so the restoration stays
// inside the clauses the rewrite produced.
std::optional<DegreeTarget> degree_split_target(const Formula& f, const std::set<int>* dirty) {
    Var worst = 0;
    int deg = 3;
    for (Var v : f.variables())
        if (f.degree(v) > deg) {
            deg = f.degree(v);
            worst = v;
        }
    if (worst == 0) return std::nullopt;

    const Formula::Occurrences& o = f.occurrences(worst);
    auto dirty_count = [&](const std::vector<int>& ids) {
        if (!dirty) return 0;
        int n = 0;
        for (int id : ids) n += dirty->count(id) ? 1 : 0;
        return n;
    };
    bool use_pos;
    if (dirty_count(o.pos) >= 2 || dirty_count(o.neg) >= 2)
        use_pos = dirty_count(o.pos) >= dirty_count(o.neg);
    else
        use_pos = o.pos_count() >= o.neg_count();
    Lit l = use_pos ? positive_lit(worst) : negative_lit(worst);
    std::vector<int> ids = use_pos ? o.pos : o.neg;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    DegreeTarget best;
    int best_dirty = -1;
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t k = i + 1; k < ids.size(); ++k) {
            std::vector<Lit> shared = common_subclause(f.clause(ids[i]), f.clause(ids[k]));
            int d = (dirty && dirty->count(ids[i]) ? 1 : 0) +
                    (dirty && dirty->count(ids[k]) ? 1 : 0);
            bool better = best.id_a == 0 || shared.size() > best.shared.size() ||
                          (shared.size() == best.shared.size() && d > best_dirty);
            if (better) {
                best = DegreeTarget{ids[i], ids[k], std::move(shared)};
                best_dirty = d;
            }
        }
    if (best.id_a == 0) throw InternalError("over-degree variable with no splittable pair");
    if (best.shared.empty()) best.shared = {l};
    return best;
}

int renormalize_impl(Formula& f, Journal& j, std::set<int>* dirty) {
    int introduced = 0;
    int guard = 0;
    for (;;) {
        if (++guard > 10000 + 10 * f.num_clauses())
            throw InternalError("renormalization failed to reach a fixpoint");
        standardize(f, j);
        if (f.has_empty_clause()) break;

        if (auto shared = largest_shared_subclause(f, dirty)) {
            int before = f.max_clause_id();
            apply_split(f, j, shared->id_a, shared->id_b, shared->lits);
            if (dirty)
                for (int id = before + 1; id <= f.max_clause_id(); ++id) dirty->insert(id);
            ++introduced;
            continue;
        }
        if (f.max_degree() > 3) {
            auto target = degree_split_target(f, dirty);
            int before = f.max_clause_id();
            apply_split(f, j, target->id_a, target->id_b, target->shared);
            if (dirty)
                for (int id = before + 1; id <= f.max_clause_id(); ++id) dirty->insert(id);
            ++introduced;
            continue;
        }
        break;
    }
    return introduced;
}

} // namespace

int renormalize(Formula& f, Journal& j) { return renormalize_impl(f, j, nullptr); }

bool safe_resolve(Formula& f, Journal& j, std::vector<Var> vars, const SafeResolveOptions& opts) {
    vars.erase(std::remove_if(vars.begin(), vars.end(),
                              [&](Var v) { return !f.contains_var(v); }),
               vars.end());
    std::sort(vars.begin(), vars.end(), [&](Var a, Var b) {
        return std::pair(f.degree(a), a) < std::pair(f.degree(b), b);
    });

    int initial_contain = static_cast<int>(f.clauses_containing(vars).size());
    std::set<int> dirty;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        Var v = vars[i];
        if (!f.contains_var(v)) continue; // vanished during an earlier resolution
        for (int id : apply_resolve(f, j, v)) dirty.insert(id);
        if (opts.max_growth_factor > 0) {
            std::vector<Var> rest(vars.begin() + static_cast<long>(i) + 1, vars.end());
            int now = static_cast<int>(f.clauses_containing(rest).size());
            if (now > opts.max_growth_factor * std::max(1, initial_contain)) return false;
        }
    }
    // Shared-subclause splits stay among the clauses the resolution
    // produced; repeated subclauses elsewhere belong to later step-5 fires.
    // Degree restoration is global, as only touched variables can overflow.
    renormalize_impl(f, j, &dirty);
    return true;
}

int count_maximal_nonempty(const Formula& f, const std::vector<Var>& vars) {
    std::vector<Var> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    std::set<std::vector<Lit>> distinct;
    for (int id : f.clauses_containing(sorted)) {
        std::vector<Lit> rest = maximal_subclause(f.clause(id).lits, sorted);
        if (!rest.empty()) distinct.insert(std::move(rest));
    }
    return static_cast<int>(distinct.size());
}

std::uint64_t candidate_fingerprint(const Formula& f, const std::vector<Var>& vars) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t x) {
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (Var v : vars) mix(static_cast<std::uint64_t>(v));
    mix(0xffffffffull);
    std::set<Var> touched;
    for (int id : f.clauses_containing(vars)) {
        for (Lit l : f.clause(id).lits) {
            mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(l) + (1ll << 32)));
            touched.insert(var_of(l));
        }
        mix(0xabcdefull);
    }
    // Degrees outside the local clauses decide whether the restoration must
    // introduce fresh variables, so they are part of the key.
    for (Var v : touched) {
        const Formula::Occurrences& o = f.occurrences(v);
        mix((static_cast<std::uint64_t>(o.pos_count()) << 8) |
            static_cast<std::uint64_t>(o.neg_count()));
    }
    return h;
}

std::optional<Step6dOutcome> step6d_search(Formula& f, Journal& j, const Step6dConfig& cfg,
                                           Step6dMemo& memo) {
    std::deque<std::vector<Var>> queue;
    std::set<std::vector<Var>> seen;

    for (int id : f.clause_ids()) {
        const Clause& c = f.clause(id);
        if (!c.all_negative()) continue;
        std::vector<Var> seed;
        for (Lit l : c.lits) seed.push_back(var_of(l));
        std::sort(seed.begin(), seed.end());
        if (static_cast<int>(seed.size()) > cfg.max_subset) continue;
        if (seen.insert(seed).second) queue.push_back(std::move(seed));
    }

    int budget = cfg.candidate_budget;
    while (!queue.empty() && budget > 0) {
        std::vector<Var> vars = std::move(queue.front());
        queue.pop_front();
        --budget;

        std::uint64_t key = candidate_fingerprint(f, vars);
        if (!memo.rejected(key)) {
            Formula scratch = f;
            Journal scratch_journal;
            SafeResolveOptions opts;
            opts.max_growth_factor = 4;
            bool ok = safe_resolve(scratch, scratch_journal, vars, opts);
            if (ok && scratch.num_vars() < f.num_vars()) {
                Step6dOutcome outcome;
                outcome.resolved = vars;
                outcome.vars_eliminated = f.num_vars() - scratch.num_vars();
                f = std::move(scratch);
                j.insert(j.end(), scratch_journal.begin(), scratch_journal.end());
                return outcome;
            }
            memo.reject(key);
        }

        if (static_cast<int>(vars.size()) < cfg.max_subset) {
            std::set<Var> frontier;
            for (Var v : vars) {
                for (Var w : f.neighbors(positive_lit(v))) frontier.insert(w);
                for (Var w : f.neighbors(negative_lit(v))) frontier.insert(w);
            }
            for (Var v : vars) frontier.erase(v);
            for (Var w : frontier) {
                std::vector<Var> child = vars;
                child.insert(std::lower_bound(child.begin(), child.end(), w), w);
                if (seen.insert(child).second) queue.push_back(std::move(child));
            }
        }
    }
    return std::nullopt;
}

} // namespace occsat
