#ifndef OCCSAT_DIMACS_HPP
#define OCCSAT_DIMACS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "occsat/formula.hpp"

namespace occsat {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + message),
          line(line), column(column) {}
    int line;
    int column;
};

struct DimacsDocument {
    int num_vars_declared = 0;
    int num_clauses_declared = 0;
    std::vector<std::vector<Lit>> clauses;
    std::vector<std::string> comments;
};

struct ParseResult {
    DimacsDocument document;
    Formula formula;
    std::vector<std::string> warnings; // clause-count mismatch, degree-0 variables
};

ParseResult parse_dimacs(std::istream& in);
ParseResult parse_dimacs(const std::string& text);

// Emits valid DIMACS with variables densely renumbered 1..n (ascending
// original id); the map appears as "c map <new> <old>" comment lines.
std::string emit_dimacs(const Formula& f);

} // namespace occsat

#endif
