#ifndef OCCSAT_TRANSFORM_HPP
#define OCCSAT_TRANSFORM_HPP

#include <map>

#include "occsat/journal.hpp"

namespace occsat {

struct DegreeStats {
    int input_vars = 0;
    int input_max_degree = 0;
    double input_avg_degree = 0.0;
    int rep_total = 0; // sum over input variables of max(0, deg - 2)
    int output_vars = 0;
    int output_max_degree = 0;
};

struct TransformResult {
    DegreeStats stats;
    // Original variable -> chain variables standing in for it (reverse
    // resolution); variables eliminated outright map to an empty list.
    std::map<Var, std::vector<Var>> chains;
};

/// Reverse resolution: rewrites F into an equisatisfiable formula of max
/// degree <= 3. Variables of degree <= 2 are eliminated first (pure
/// assignment or resolution); each remaining occurrence overflow is split
/// off through a fresh chain variable. For an input of max degree d >= 3
/// the output has at most (d-2)*n variables.
TransformResult reduce_degree(Formula& f, Journal& j);

} // namespace occsat

#endif
