#ifndef OCCSAT_ORACLE_HPP
#define OCCSAT_ORACLE_HPP

#include <optional>

#include "occsat/reconstruction.hpp"

namespace occsat {

struct OracleResult {
    bool satisfiable = false;
    Model model; // empty unless satisfiable
};

/// Brute-force satisfiability oracle: plain backtracking with unit
/// propagation over raw clause lists. Deliberately independent of the
/// formula database and rewrite machinery it is used to check.
/// Refuses instances above `var_cap` distinct variables.
OracleResult brute_force_sat(const std::vector<std::vector<Lit>>& clauses, int var_cap = 24);

} // namespace occsat

#endif
