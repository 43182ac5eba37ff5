#ifndef OCCSAT_SAFE_RESOLUTION_HPP
#define OCCSAT_SAFE_RESOLUTION_HPP

#include <cstdint>
#include <optional>
#include <unordered_set>

#include "occsat/journal.hpp"
#include "occsat/standardize.hpp"

namespace occsat {

/// Restores the 3-occurrence invariant after resolutions. Fixpoint of:
///   1. standardize;
///   2. while the largest subclause appearing in two separate clauses has
///      size >= 2, split it out through a fresh variable;
///   3. while some variable has degree >= 4, split two same-polarity
///      occurrences through a fresh variable.
/// Returns the number of fresh variables introduced.
int renormalize(Formula& f, Journal& j);

struct SafeResolveOptions {
    // Abort when the clauses still touching unresolved target variables
    // grow past this multiple of the initial |F_contain V|. 0 = unlimited.
    int max_growth_factor = 0;
};

/// Resolves every variable of `vars` (ascending degree, then id), then
/// renormalizes. Returns false only on a growth abort, in which case the
/// formula is left in an intermediate state and must be discarded.
bool safe_resolve(Formula& f, Journal& j, std::vector<Var> vars,
                  const SafeResolveOptions& opts = {});

struct SubsetCandidate {
    std::vector<Var> vars;
    int maximal_nonempty = 0; // distinct nonempty maximal subclauses of F_contain V
};

struct Step6dConfig {
    int max_subset = 10;
    int candidate_budget = 50000;
};

/// Rejection memo keyed by the candidate set plus the local clause
/// structure; safe to share across formulas since a stale entry can only
/// suppress a retry, never accept a bad candidate.
class Step6dMemo {
public:
    bool rejected(std::uint64_t key) const { return keys_.count(key) != 0; }
    void reject(std::uint64_t key) { keys_.insert(key); }
    std::size_t size() const { return keys_.size(); }

private:
    std::unordered_set<std::uint64_t> keys_;
};

std::uint64_t candidate_fingerprint(const Formula& f, const std::vector<Var>& vars);

int count_maximal_nonempty(const Formula& f, const std::vector<Var>& vars);

struct Step6dOutcome {
    std::vector<Var> resolved;
    int vars_eliminated = 0;
};

/// Enumerates connected variable subsets seeded at each all-negative
/// clause, growing by neighbor expansion up to `max_subset`, and applies
/// the first safe resolution that strictly decreases the variable count.
std::optional<Step6dOutcome> step6d_search(Formula& f, Journal& j, const Step6dConfig& cfg,
                                           Step6dMemo& memo);

} // namespace occsat

#endif
