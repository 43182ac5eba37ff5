#ifndef OCCSAT_ENDGAME_HPP
#define OCCSAT_ENDGAME_HPP

#include "occsat/reconstruction.hpp"

namespace occsat {

struct EndgameReport {
    bool ok = true;
    std::vector<std::string> violations;
    int three_clause_count = 0;
    int var_count = 0;
};

/// Verifies the structure a step-9 reduced formula must have before the
/// 3-SAT endgame: monotone, clause lengths in {2, 3}, at most n/3 clauses
/// of length 3, and all-negative 3-clause variables in no other 3-clause.
EndgameReport check_endgame(const Formula& f);

struct ThreeSatResult {
    bool satisfiable = false;
    Model model;
};

/// Correct unit-propagating branching solver for clauses of length <= 3.
/// A stand-in for the fast 3-SAT endgame: same verdicts, larger constant.
ThreeSatResult solve_3sat(const Formula& f);

} // namespace occsat

#endif
