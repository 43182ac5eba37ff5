#include "occsat/solver.hpp"

#include <algorithm>
#include <cassert>

#include "occsat/endgame.hpp"
#include "occsat/transform.hpp"

namespace occsat {

namespace {

// Step 1 and 2 outcomes: empty formula or empty clause, or every clause
// holding a positive literal (all-ones satisfies).
enum class Leaf { None, Sat, Unsat, AllPositive };

Leaf leaf_check(const Formula& f) {
    if (f.has_empty_clause()) return Leaf::Unsat;
    if (f.empty()) return Leaf::Sat;
    for (int id : f.clause_ids())
        if (!f.clause(id).has_positive()) return Leaf::None;
    return Leaf::AllPositive;
}

void emit_trace(Searcher& searcher, const TraceEvent& event) {
    if (searcher.options().trace) searcher.options().trace(event);
}

int step_of(RuleId rule) {
    switch (rule) {
    case RuleId::S3: return 3;
    case RuleId::S4a:
    case RuleId::S4b:
    case RuleId::Flip: return 4;
    case RuleId::S5a:
    case RuleId::S5b:
    case RuleId::S5c:
    case RuleId::S5d: return 5;
    case RuleId::S6a:
    case RuleId::S6b:
    case RuleId::S6c:
    case RuleId::S6d: return 6;
    case RuleId::S8: return 8;
    }
    return 0;
}

} // namespace

std::optional<RuleOutcome> apply_first_reduction(Formula& f, Journal& j, Searcher& searcher) {
    // Step 3.
    StandardizeResult std_result = standardize(f, j);
    if (std_result.changed) return RuleOutcome{RuleId::S3, std_result.vars_eliminated};
    if (f.has_empty_clause() || f.empty()) return std::nullopt;
    // Step 4 plus the polarity convention.
    if (auto r = eliminate_low_degree(f, j)) return r;
    if (auto r = normalize_polarities(f, j)) return r;
    // Step 5.
    if (auto r = shared_pair_reduction(f, j)) return r;
    // Steps 6a-6c.
    if (auto r = neg_clause_reductions(f, j)) return r;
    // Step 6d.
    if (auto outcome = step6d_search(f, j, searcher.options().step6d, searcher.memo()))
        return RuleOutcome{RuleId::S6d, outcome->vars_eliminated};
    return std::nullopt;
}

Simulation simulate_branch(const Formula& f, const std::vector<Lit>& literals,
                           Searcher& searcher) {
    ++searcher.stats().simulations;
    Formula scratch = f;
    Journal scratch_journal;
    int before = scratch.num_vars();

    for (Lit l : literals)
        if (scratch.contains_var(var_of(l))) apply_assign(scratch, scratch_journal, l);

    Simulation sim;
    for (;;) {
        Leaf leaf = leaf_check(scratch);
        if (leaf != Leaf::None) {
            sim.verdict = leaf != Leaf::Unsat;
            sim.eliminated = before;
            return sim;
        }
        if (!apply_first_reduction(scratch, scratch_journal, searcher)) break;
    }
    sim.eliminated = before - scratch.num_vars();
    return sim;
}

namespace {

// Evaluates one candidate branch set; updates `search` and returns true
// when the candidate passes the gate.
bool consider(const Formula& f, Searcher& searcher, int step,
              std::vector<std::vector<Lit>> branches, BranchSearch& search) {
    BranchDecision decision;
    decision.step = step;
    for (const auto& branch : branches) {
        Simulation sim = simulate_branch(f, branch, searcher);
        decision.vector.push_back(std::max(1, sim.eliminated));
        decision.simulated_verdicts.push_back(sim.verdict);
    }
    decision.literals_per_branch = std::move(branches);
    decision.factor = tau(decision.vector);
    if (!search.best || decision.factor < search.best->factor) search.best = decision;
    if (decision.factor <= kTauGate + kTauSlack) {
        search.accepted = decision;
        return true;
    }
    return false;
}

} // namespace

BranchSearch step7_branch(const Formula& f, Searcher& searcher) {
    BranchSearch search;
    std::vector<int> neg_ids;
    for (int id : f.clause_ids())
        if (f.clause(id).all_negative()) neg_ids.push_back(id);
    std::stable_sort(neg_ids.begin(), neg_ids.end(), [&](int a, int b) {
        return std::pair(f.clause(a).size(), a) < std::pair(f.clause(b).size(), b);
    });

    for (int id : neg_ids) {
        std::vector<Var> vars;
        for (Lit l : f.clause(id).lits) vars.push_back(var_of(l));
        std::sort(vars.begin(), vars.end());
        for (Var w : vars) {
            if (consider(f, searcher, 7,
                         {{positive_lit(w)}, {negative_lit(w)}}, search))
                return search;
        }
    }
    return search;
}

BranchSearch step9_branch(const Formula& f, Searcher& searcher) {
    BranchSearch search;
    for (int id : f.clause_ids()) {
        const Clause& c = f.clause(id);
        if (!c.all_negative() || c.size() != 2) continue;
        Var x = var_of(c.lits[0]), y = var_of(c.lits[1]);
        for (Var first : {std::min(x, y), std::max(x, y)}) {
            for (Var z : f.neighbors(positive_lit(first))) {
                if (z == x || z == y) continue;
                if (consider(f, searcher, 9,
                             {{negative_lit(first), positive_lit(z)},
                              {negative_lit(first), negative_lit(z)},
                              {positive_lit(first)}},
                             search))
                    return search;
            }
        }
    }
    return search;
}

namespace {

struct Driver {
    Searcher& searcher;
    Journal& journal;

    const SolveOptions& options() const { return searcher.options(); }
    SolveStats& stats() { return searcher.stats(); }

    void record_rule(const RuleOutcome& outcome, int depth) {
        stats().rule_fires[rule_name(outcome.rule)]++;
        emit_trace(searcher, TraceEvent{step_of(outcome.rule), rule_name(outcome.rule),
                                        outcome.vars_eliminated, {}, 0.0, depth});
    }

    void note_violation(const std::string&) { ++stats().invariant_violations; }

    void check_step6_invariants(const Formula& f) {
        if (!options().check_invariants) return;
        bool ok = true;
        for (Var v : f.variables()) {
            const Formula::Occurrences& o = f.occurrences(v);
            if (o.pos_count() != 2 || o.neg_count() != 1) ok = false;
        }
        if (!ok) note_violation("step-6 reduced formula has a non-(2,1) variable");
        assert(ok && "step-6 reduced formula must be (2,1)-regular");
    }

    void check_degree_invariant(const Formula& f) {
        if (!options().check_invariants) return;
        bool ok = f.max_degree() <= 3;
        if (!ok) note_violation("degree above 3 after a step");
        assert(ok && "max degree must stay at 3");
    }

    Verdict branch(Formula& f, const BranchDecision& decision, int depth,
                   std::optional<Model>& model_out) {
        ++stats().branches;
        stats().max_accepted_tau = std::max(stats().max_accepted_tau, decision.factor);
        emit_trace(searcher, TraceEvent{decision.step,
                                        decision.step == 7 ? "branch7" : "branch9", 0,
                                        decision.vector, decision.factor, depth});

        // Explore the branch with the larger elimination count first; a
        // branch whose simulation already reached SAT goes first of all.
        std::vector<std::size_t> order(decision.literals_per_branch.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            bool sat_a = decision.simulated_verdicts[a] == std::optional<bool>(true);
            bool sat_b = decision.simulated_verdicts[b] == std::optional<bool>(true);
            if (sat_a != sat_b) return sat_a;
            return decision.vector[a] > decision.vector[b];
        });

        bool any_unknown = false;
        for (std::size_t idx : order) {
            Formula child = f;
            std::size_t checkpoint = journal.size();
            for (Lit l : decision.literals_per_branch[idx])
                if (child.contains_var(var_of(l))) apply_assign(child, journal, l);
            Verdict v = run(std::move(child), depth + 1, model_out);
            if (v == Verdict::Sat) return Verdict::Sat;
            journal.resize(checkpoint);
            if (v == Verdict::Unknown) any_unknown = true;
        }
        return any_unknown ? Verdict::Unknown : Verdict::Unsat;
    }

    Verdict run(Formula f, int depth, std::optional<Model>& model_out) {
        ++stats().nodes;
        if (options().node_budget > 0 && stats().nodes > options().node_budget)
            return Verdict::Unknown;

        for (;;) {
            // Steps 1 and 2.
            Leaf leaf = leaf_check(f);
            if (leaf == Leaf::Unsat) return Verdict::Unsat;
            if (leaf == Leaf::Sat || leaf == Leaf::AllPositive) {
                if (options().want_model) {
                    Model partial;
                    for (Var v : f.variables()) partial[v] = true;
                    model_out = partial;
                }
                return Verdict::Sat;
            }
            // Steps 3-6.
            auto outcome = apply_first_reduction(f, journal, searcher);
            if (outcome) {
                record_rule(*outcome, depth);
                check_degree_invariant(f);
                continue;
            }
            break;
        }
        check_step6_invariants(f);

        // Step 7: primary branching. An all-negative clause exists here,
        // otherwise step 2 would have answered.
        BranchSearch primary = step7_branch(f, searcher);
        if (primary.accepted) return branch(f, *primary.accepted, depth, model_out);

        // Step 8: autarky assignment makes the formula monotone.
        if (auto outcome = autarky_reduce(f, journal)) {
            record_rule(*outcome, depth);
            return run(std::move(f), depth, model_out);
        }
        if (options().check_invariants) {
            bool monotone = true;
            for (int id : f.clause_ids()) {
                const Clause& c = f.clause(id);
                if (!c.all_positive() && !c.all_negative()) monotone = false;
            }
            if (!monotone) note_violation("formula not monotone at step 9 entry");
            assert(monotone && "step-8 reduced formula must be monotone");
        }

        // Step 9: secondary branching.
        BranchSearch secondary = step9_branch(f, searcher);
        if (secondary.accepted) return branch(f, *secondary.accepted, depth, model_out);

        // Step 10: the 3-SAT endgame.
        EndgameReport report = check_endgame(f);
        if (report.ok) {
            ++stats().endgame_entries;
            ThreeSatResult sub = solve_3sat(f);
            if (!sub.satisfiable) return Verdict::Unsat;
            if (options().want_model) model_out = sub.model;
            return Verdict::Sat;
        }

        // The endgame preconditions failed although steps 7 and 9 found no
        // admissible branch; the analysis says this cannot happen. Branch on
        // the best decision seen anyway and flag the node loudly.
        for (const std::string& v : report.violations) note_violation(v);
        assert(report.ok && "endgame preconditions must hold when steps 7 and 9 pass");
        ++stats().fallback_count;
        std::optional<BranchDecision> fallback = primary.best;
        if (secondary.best && (!fallback || secondary.best->factor < fallback->factor))
            fallback = secondary.best;
        if (fallback) {
            emit_trace(searcher, TraceEvent{10, "fallback", 0, fallback->vector,
                                            fallback->factor, depth});
            return branch(f, *fallback, depth, model_out);
        }
        throw InternalError("no branch candidate available at fallback");
    }
};

} // namespace

SolveResult solve(const Formula& input, const SolveOptions& options) {
    SolveResult result;
    Searcher searcher(options);
    Journal journal;
    Formula f = input;
    std::vector<Var> original_vars = f.variables();
    std::vector<std::vector<Lit>> original_clauses = f.clause_lists();

    if (f.max_degree() > 3) {
        reduce_degree(f, journal);
        searcher.stats().rule_fires["transform"]++;
    }

    Driver driver{searcher, journal};
    std::optional<Model> leaf_model;
    Verdict verdict = driver.run(std::move(f), 0, leaf_model);

    result.verdict = verdict;
    result.stats = searcher.stats();
    if (verdict == Verdict::Sat && options.want_model) {
        Model full = extend_model(journal, leaf_model.value_or(Model{}));
        Model trimmed;
        for (Var v : original_vars) {
            auto it = full.find(v);
            trimmed[v] = it == full.end() ? true : it->second;
        }
        if (!satisfies(original_clauses, trimmed))
            throw InternalError("reconstructed model does not satisfy the input formula");
        result.model = trimmed;
    }
    return result;
}

} // namespace occsat
