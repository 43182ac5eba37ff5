#ifndef OCCSAT_TAU_HPP
#define OCCSAT_TAU_HPP

#include <vector>

namespace occsat {

/// Branching factor tau(n1, ..., nk): the unique positive root of
/// sum_i x^(-n_i) = 1, found by bisection to 1e-12. Entries must be >= 1.
double tau(const std::vector<int>& eliminations);

// The branching gate from steps 7 and 9, with slack for the root finder.
inline constexpr double kTauGate = 1.1199;
inline constexpr double kTauSlack = 1e-9;

} // namespace occsat

#endif
