#include "occsat/dimacs.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace occsat {

namespace {

struct Cursor {
    std::istream& in;
    int line = 1;
    int col = 0;

    int get() {
        int c = in.get();
        if (c == '\n') {
            ++line;
            col = 0;
        } else if (c != EOF) {
            ++col;
        }
        return c;
    }
    int peek() { return in.peek(); }
};

void skip_spaces(Cursor& cur) {
    while (cur.peek() == ' ' || cur.peek() == '\t' || cur.peek() == '\r' || cur.peek() == '\n')
        cur.get();
}

long read_int(Cursor& cur, const char* what) {
    skip_spaces(cur);
    int start_line = cur.line, start_col = cur.col + 1;
    std::string tok;
    while (cur.peek() != EOF && !std::isspace(cur.peek())) tok.push_back(static_cast<char>(cur.get()));
    if (tok.empty()) throw ParseError(start_line, start_col, std::string("expected ") + what);
    std::size_t pos = 0;
    long value = 0;
    try {
        value = std::stol(tok, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != tok.size())
        throw ParseError(start_line, start_col, "non-integer token '" + tok + "'");
    return value;
}

} // namespace

ParseResult parse_dimacs(std::istream& in) {
    Cursor cur{in};
    ParseResult result;
    DimacsDocument& doc = result.document;

    bool saw_header = false;
    for (;;) {
        skip_spaces(cur);
        int c = cur.peek();
        if (c == EOF) throw ParseError(cur.line, cur.col + 1, "missing 'p cnf' header");
        if (c == 'c') {
            std::string text;
            while (cur.peek() != EOF && cur.peek() != '\n') text.push_back(static_cast<char>(cur.get()));
            doc.comments.push_back(text);
            continue;
        }
        if (c == 'p') {
            cur.get();
            std::string kw;
            skip_spaces(cur);
            while (cur.peek() != EOF && !std::isspace(cur.peek())) kw.push_back(static_cast<char>(cur.get()));
            if (kw != "cnf") throw ParseError(cur.line, cur.col, "expected 'p cnf' header");
            long n = read_int(cur, "variable count");
            long m = read_int(cur, "clause count");
            if (n < 0 || m < 0) throw ParseError(cur.line, cur.col, "negative header counts");
            doc.num_vars_declared = static_cast<int>(n);
            doc.num_clauses_declared = static_cast<int>(m);
            saw_header = true;
            break;
        }
        throw ParseError(cur.line, cur.col + 1, "missing 'p cnf' header");
    }
    if (!saw_header) throw ParseError(cur.line, cur.col, "missing 'p cnf' header");

    std::vector<Lit> current;
    bool open_clause = false;
    for (;;) {
        skip_spaces(cur);
        int c = cur.peek();
        if (c == EOF) break;
        if (c == 'c') {
            std::string text;
            while (cur.peek() != EOF && cur.peek() != '\n') text.push_back(static_cast<char>(cur.get()));
            doc.comments.push_back(text);
            continue;
        }
        int at_line = cur.line, at_col = cur.col + 1;
        long v = read_int(cur, "literal");
        if (v == 0) {
            doc.clauses.push_back(current);
            current.clear();
            open_clause = false;
            continue;
        }
        long mag = v < 0 ? -v : v;
        if (mag > doc.num_vars_declared)
            throw ParseError(at_line, at_col,
                             "literal " + std::to_string(v) + " out of declared range 1.." +
                                 std::to_string(doc.num_vars_declared));
        current.push_back(static_cast<Lit>(v));
        open_clause = true;
    }
    if (open_clause) throw ParseError(cur.line, cur.col, "unterminated final clause (missing 0)");

    if (static_cast<int>(doc.clauses.size()) != doc.num_clauses_declared)
        result.warnings.push_back("clause count mismatch: header declares " +
                                  std::to_string(doc.num_clauses_declared) + ", file has " +
                                  std::to_string(doc.clauses.size()));

    std::set<Var> used;
    for (const auto& c : doc.clauses) {
        result.formula.add_clause(c);
        for (Lit l : c) used.insert(var_of(l));
    }
    int unused = doc.num_vars_declared - static_cast<int>(used.size());
    if (unused > 0)
        result.warnings.push_back(std::to_string(unused) +
                                  " declared variable(s) occur in no clause and were dropped");
    return result;
}

ParseResult parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

std::string emit_dimacs(const Formula& f) {
    if (!f.audit()) throw ContractError("emit_dimacs: formula failed audit");
    std::map<Var, int> renumber;
    int next = 1;
    for (Var v : f.variables()) renumber[v] = next++;

    std::ostringstream out;
    for (const auto& [old_id, new_id] : renumber) out << "c map " << new_id << " " << old_id << "\n";
    out << "p cnf " << renumber.size() << " " << f.num_clauses() << "\n";
    for (int id : f.clause_ids()) {
        for (Lit l : f.clause(id).lits) {
            int mapped = renumber.at(var_of(l));
            out << (is_positive(l) ? mapped : -mapped) << " ";
        }
        out << "0\n";
    }
    return out.str();
}

} // namespace occsat
