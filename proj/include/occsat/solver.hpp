#ifndef OCCSAT_SOLVER_HPP
#define OCCSAT_SOLVER_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "occsat/reconstruction.hpp"
#include "occsat/reduction.hpp"
#include "occsat/tau.hpp"

namespace occsat {

enum class Verdict { Sat, Unsat, Unknown };

struct BranchDecision {
    int step = 0; // 7 or 9
    std::vector<std::vector<Lit>> literals_per_branch;
    std::vector<int> vector; // per-branch elimination counts
    double factor = 0.0;
    // Verdict reached while simulating a branch, if any (true = SAT).
    std::vector<std::optional<bool>> simulated_verdicts;
};

struct TraceEvent {
    int step = 0;                 // algorithm step that fired
    std::string rule;             // rule id or "branch7"/"branch9"/"fallback"
    int vars_eliminated = 0;      // reductions only
    std::vector<int> vector;      // branches only
    double factor = 0.0;          // branches only
    int depth = 0;
};

using TraceSink = std::function<void(const TraceEvent&)>;

struct SolveOptions {
    bool want_model = true;
    long node_budget = 0; // 0 = unlimited
    Step6dConfig step6d;
    TraceSink trace;          // optional
    bool check_invariants = true;
};

struct SolveStats {
    long nodes = 0;
    long branches = 0;
    long simulations = 0;
    double max_accepted_tau = 0.0;
    long fallback_count = 0;
    long invariant_violations = 0;
    long endgame_entries = 0;
    std::map<std::string, long> rule_fires;
};

struct SolveResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<Model> model; // over the input formula's variables
    SolveStats stats;
};

/// Decides satisfiability with the branch-and-reduce loop. Accepts general
/// CNF: inputs with a variable above degree 3 pass through the degree
/// reducer first.
SolveResult solve(const Formula& input, const SolveOptions& options = {});

// --- exposed pieces (driver internals with stable contracts) -----------

struct Simulation {
    int eliminated = 0;
    std::optional<bool> verdict;
};

class Searcher; // shares the step-6d memo and counters across a solve

/// Applies `literals`, then runs the reduction pipeline (steps 1-6) to a
/// fixpoint on a scratch copy; reports eliminated variables, or the full
/// variable count when the scratch reaches a verdict.
Simulation simulate_branch(const Formula& f, const std::vector<Lit>& literals, Searcher& searcher);

struct BranchSearch {
    std::optional<BranchDecision> accepted;
    std::optional<BranchDecision> best; // lowest factor seen, even if gated out
};

/// Step 7: two-way branches (w, ~w) over all-negative-clause variables,
/// gated at tau <= 1.1199 + 1e-9.
BranchSearch step7_branch(const Formula& f, Searcher& searcher);

/// Step 9: three-way branches (x), (~x, z), (~x, ~z) for all-negative
/// 2-clauses, z ranging over N(x) and N(y), same gate.
BranchSearch step9_branch(const Formula& f, Searcher& searcher);

/// Runs one driver iteration worth of reductions: steps 3-6 plus the
/// polarity convention pass; returns the first fired rule or nullopt when
/// the formula is step-6 reduced. Exposed for the per-rule test harness.
std::optional<RuleOutcome> apply_first_reduction(Formula& f, Journal& j, Searcher& searcher);

class Searcher {
public:
    explicit Searcher(const SolveOptions& options) : options_(options) {}
    const SolveOptions& options() const { return options_; }
    Step6dMemo& memo() { return memo_; }
    SolveStats& stats() { return stats_; }

private:
    SolveOptions options_;
    Step6dMemo memo_;
    SolveStats stats_;
};

} // namespace occsat

#endif
