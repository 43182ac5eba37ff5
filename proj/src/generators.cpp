#include "occsat/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace occsat {

namespace {

// Bounded draws through the raw engine keep output identical across
// platforms; std::uniform_int_distribution is implementation-defined.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return bound == 0 ? 0 : rng() % bound;
}

double draw_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int pick_weighted(std::mt19937_64& rng, const std::vector<double>& weights) {
    double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    double r = draw_unit(rng) * total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        r -= weights[i];
        if (r <= 0) return static_cast<int>(i);
    }
    return static_cast<int>(weights.size()) - 1;
}

struct Slots {
    std::vector<int> pos; // remaining positive occurrences per variable (1-based)
    std::vector<int> neg;
    int total = 0;

    int avail(Var v, bool positive) const { return positive ? pos[v] : neg[v]; }
    void take(Var v, bool positive) {
        (positive ? pos[v] : neg[v])--;
        --total;
    }
};

// Builds one clause of up to `len` literals from the remaining slots,
// avoiding variable repetition. May come out shorter when slots run dry.
std::vector<Lit> build_clause(Slots& slots, int len, bool force_negative, double neg_prob,
                              std::mt19937_64& rng) {
    std::vector<Lit> lits;
    std::vector<Var> in_clause;
    for (int i = 0; i < len; ++i) {
        std::vector<Var> pool;
        for (Var v = 1; v < static_cast<Var>(slots.pos.size()); ++v) {
            if (std::find(in_clause.begin(), in_clause.end(), v) != in_clause.end()) continue;
            if (force_negative ? slots.neg[v] > 0 : (slots.pos[v] + slots.neg[v]) > 0)
                pool.push_back(v);
        }
        if (pool.empty()) break;
        Var v = pool[draw(rng, pool.size())];
        bool positive;
        if (force_negative)
            positive = false;
        else if (slots.pos[v] == 0)
            positive = false;
        else if (slots.neg[v] == 0)
            positive = true;
        else
            positive = draw_unit(rng) >= neg_prob;
        slots.take(v, positive);
        in_clause.push_back(v);
        lits.push_back(positive ? positive_lit(v) : negative_lit(v));
    }
    return lits;
}

} // namespace

Formula random_3occur(int n, const ThreeOccurProfile& profile, std::uint64_t seed) {
    if (n < 3) throw GenerationError("random_3occur: need n >= 3");
    if (profile.length_weights.empty()) throw GenerationError("random_3occur: empty length profile");
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0x7f4a7c15ull);

    Slots slots;
    slots.pos.assign(static_cast<std::size_t>(n) + 1, 0);
    slots.neg.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Var v = 1; v <= n; ++v) {
        if (profile.regular_21) {
            slots.pos[v] = 2;
            slots.neg[v] = 1;
        } else {
            int deg = 1 + pick_weighted(rng, profile.degree_weights);
            int negs = 0;
            for (int i = 0; i < deg; ++i)
                if (draw_unit(rng) < 0.5) ++negs;
            // Keep the paper's convention i >= j at generation time.
            if (negs * 2 > deg) negs = deg - negs;
            slots.pos[v] = deg - negs;
            slots.neg[v] = negs;
        }
        slots.total += slots.pos[v] + slots.neg[v];
    }

    Formula f;
    int guard = 0;
    while (slots.total >= profile.min_length && ++guard < 100000) {
        int len = profile.min_length + pick_weighted(rng, profile.length_weights);
        bool all_neg = draw_unit(rng) < profile.all_negative_fraction;
        std::vector<Lit> clause =
            build_clause(slots, len, all_neg, profile.negative_literal_prob, rng);
        if (static_cast<int>(clause.size()) < profile.min_length) {
            if (!all_neg) break; // slots exhausted for real
            continue;            // negative slots dried up; retry mixed
        }
        f.add_clause(clause);
    }
    if (f.num_clauses() == 0) throw GenerationError("random_3occur: profile produced no clauses");
    if (f.max_degree() > 3) throw InternalError("random_3occur: degree bound violated");
    return f;
}

Formula random_cnf(int n, int m, int k, std::uint64_t seed) {
    if (n < 1 || k < 1 || m < 0) throw GenerationError("random_cnf: need n, k >= 1 and m >= 0");
    if (k > n) throw GenerationError("random_cnf: clause length exceeds variable count");
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0xc2b2ae3d27d4eb4full);

    Formula f;
    std::vector<Var> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    for (int c = 0; c < m; ++c) {
        // Partial Fisher-Yates: the first k entries become the clause.
        for (int i = 0; i < k; ++i) {
            std::size_t pick = static_cast<std::size_t>(i) + draw(rng, pool.size() - i);
            std::swap(pool[i], pool[pick]);
        }
        std::vector<Lit> clause;
        for (int i = 0; i < k; ++i)
            clause.push_back(draw_unit(rng) < 0.5 ? negative_lit(pool[i]) : positive_lit(pool[i]));
        f.add_clause(clause);
    }
    return f;
}

Formula random_cnf_degrees(int n, int min_degree, int max_degree, int min_len, int max_len,
                           std::uint64_t seed) {
    if (n < max_len || min_degree < 1 || max_degree < min_degree || min_len < 1 ||
        max_len < min_len)
        throw GenerationError("random_cnf_degrees: inconsistent parameters");
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0x165667b19e3779f9ull);

    Slots slots;
    slots.pos.assign(static_cast<std::size_t>(n) + 1, 0);
    slots.neg.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Var v = 1; v <= n; ++v) {
        int deg = v == 1 ? max_degree
                         : min_degree + static_cast<int>(draw(
                               rng, static_cast<std::uint64_t>(max_degree - min_degree + 1)));
        int negs = 0;
        for (int i = 0; i < deg; ++i)
            if (draw_unit(rng) < 0.5) ++negs;
        if (negs == deg) --negs; // keep at least one positive occurrence
        slots.pos[v] = deg - negs;
        slots.neg[v] = negs;
        slots.total += deg;
    }

    std::vector<std::vector<Lit>> built;
    int guard = 0;
    while (slots.total >= min_len && ++guard < 100000) {
        int len = min_len + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_len - min_len + 1)));
        std::vector<Lit> clause = build_clause(slots, len, false, 0.5, rng);
        if (static_cast<int>(clause.size()) < min_len) break;
        built.push_back(clause);
    }
    if (built.empty()) throw GenerationError("random_cnf_degrees: no clauses produced");

    // Place leftover occurrences into clauses that lack the variable, so the
    // drawn degree sequence is realized exactly.
    auto clause_has_var = [](const std::vector<Lit>& c, Var v) {
        return std::any_of(c.begin(), c.end(), [&](Lit l) { return var_of(l) == v; });
    };
    for (Var v = 1; v <= n; ++v) {
        for (bool positive : {true, false}) {
            while (slots.avail(v, positive) > 0) {
                bool placed = false;
                for (auto& c : built)
                    if (!clause_has_var(c, v)) {
                        c.push_back(positive ? positive_lit(v) : negative_lit(v));
                        slots.take(v, positive);
                        placed = true;
                        break;
                    }
                if (!placed)
                    throw GenerationError("random_cnf_degrees: could not place all occurrences");
            }
        }
    }

    Formula f;
    for (auto& c : built) f.add_clause(std::move(c));
    return f;
}

} // namespace occsat
