#ifndef OCCSAT_GENERATORS_HPP
#define OCCSAT_GENERATORS_HPP

#include <cstdint>

#include "occsat/formula.hpp"

namespace occsat {

class GenerationError : public std::runtime_error {
public:
    explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

struct ThreeOccurProfile {
    // Relative weights for clause lengths 2, 3, 4, ...
    std::vector<double> length_weights = {0.35, 0.5, 0.15};
    int min_length = 2;
    // Fraction of clauses built all-negative.
    double all_negative_fraction = 0.3;
    // Polarity used when a clause is not forced all-negative.
    double negative_literal_prob = 0.25;
    // Force every variable to be a (2,1) variable.
    bool regular_21 = false;
    // Weights for variable degrees 1, 2, 3 (ignored when regular_21).
    std::vector<double> degree_weights = {0.05, 0.2, 0.75};
};

/// Seed-deterministic random formula with every variable degree <= 3.
Formula random_3occur(int n, const ThreeOccurProfile& profile, std::uint64_t seed);

/// Uniform random k-CNF: m clauses over n variables, distinct variables per
/// clause, coin-flip polarities.
Formula random_cnf(int n, int m, int k, std::uint64_t seed);

/// Random CNF with a prescribed degree range [min_degree, max_degree]; at
/// least one variable reaches max_degree. Clause lengths drawn from
/// [min_len, max_len]. Used to exercise the degree reducer.
Formula random_cnf_degrees(int n, int min_degree, int max_degree, int min_len, int max_len,
                           std::uint64_t seed);

} // namespace occsat

#endif
