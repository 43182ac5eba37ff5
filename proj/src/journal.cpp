#include "occsat/journal.hpp"

#include <algorithm>

namespace occsat {

namespace {

// Merge two clause sides into a resolvent, dropping duplicates.
// Returns nullopt for a trivial (tautological) resolvent.
std::optional<std::vector<Lit>> merge_resolvent(const std::vector<Lit>& a, Lit drop_a,
                                                const std::vector<Lit>& b, Lit drop_b) {
    std::vector<Lit> out;
    out.reserve(a.size() + b.size());
    for (Lit l : a)
        if (l != drop_a) out.push_back(l);
    for (Lit l : b)
        if (l != drop_b) out.push_back(l);
    std::sort(out.begin(), out.end(), lit_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i] == negated(out[i + 1])) return std::nullopt;
    return out;
}

} // namespace

void journal_vanished(Formula& f, Journal& j) {
    for (Var v : f.drain_vanished()) j.push_back(Record::assigned(positive_lit(v)));
}

void apply_assign(Formula& f, Journal& j, Lit l) {
    f.assign(l);
    j.push_back(Record::assigned(l));
    Var self = var_of(l);
    for (Var v : f.drain_vanished())
        if (v != self) j.push_back(Record::assigned(positive_lit(v)));
}

void apply_flip(Formula& f, Journal& j, Var v) {
    f.flip_variable(v);
    j.push_back(Record::flipped(v));
}

std::vector<int> apply_resolve(Formula& f, Journal& j, Var v, Lit rescue) {
    const Formula::Occurrences& o = f.occurrences(v);
    std::vector<int> ids(o.pos.begin(), o.pos.end());
    ids.insert(ids.end(), o.neg.begin(), o.neg.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    std::vector<std::vector<Lit>> pos_lits, neg_lits, removed;
    for (int id : ids) {
        const Clause& c = f.clause(id);
        removed.push_back(c.lits);
        if (c.contains(positive_lit(v))) pos_lits.push_back(c.lits);
        if (c.contains(negative_lit(v))) neg_lits.push_back(c.lits);
    }
    for (int id : ids) f.remove_clause(id);

    std::vector<int> added;
    for (const auto& p : pos_lits)
        for (const auto& n : neg_lits)
            if (auto r = merge_resolvent(p, positive_lit(v), n, negative_lit(v)))
                added.push_back(f.add_clause(std::move(*r)));

    j.push_back(Record::resolved(v, std::move(removed), rescue));
    for (Var w : f.drain_vanished())
        if (w != v) j.push_back(Record::assigned(positive_lit(w)));
    return added;
}

Var apply_split(Formula& f, Journal& j, int id_a, int id_b, const std::vector<Lit>& shared) {
    std::vector<Lit> rest_a, rest_b;
    for (Lit l : f.clause(id_a).lits)
        if (!std::binary_search(shared.begin(), shared.end(), l, lit_less)) rest_a.push_back(l);
    for (Lit l : f.clause(id_b).lits)
        if (!std::binary_search(shared.begin(), shared.end(), l, lit_less)) rest_b.push_back(l);
    if (rest_a.empty() || rest_b.empty())
        throw InternalError("split of a clause equal to its shared part");

    Var z = f.fresh_variable();
    f.remove_clause(id_a);
    f.remove_clause(id_b);
    std::vector<Lit> c0 = shared;
    c0.push_back(negative_lit(z));
    rest_a.push_back(positive_lit(z));
    rest_b.push_back(positive_lit(z));
    f.add_clause(c0);
    f.add_clause(rest_a);
    f.add_clause(rest_b);

    std::vector<Lit> sorted_c0(c0);
    std::sort(sorted_c0.begin(), sorted_c0.end(), lit_less);
    j.push_back(Record::introduced(z, {sorted_c0}));
    journal_vanished(f, j);
    return z;
}

Var apply_chain_split(Formula& f, Journal& j, int id_a, int id_b, Lit l) {
    std::vector<Lit> a = f.clause(id_a).lits;
    std::vector<Lit> b = f.clause(id_b).lits;
    auto strip = [&](std::vector<Lit>& c) {
        c.erase(std::remove(c.begin(), c.end(), l), c.end());
    };
    strip(a);
    strip(b);
    if (a.empty() || b.empty()) throw InternalError("chain split of a unit clause");

    Var z = f.fresh_variable();
    f.remove_clause(id_a);
    f.remove_clause(id_b);
    a.push_back(positive_lit(z));
    b.push_back(positive_lit(z));
    f.add_clause(a);
    f.add_clause(b);
    f.add_clause({negative_lit(z), l});
    j.push_back(Record::introduced(z, {{negative_lit(z), l}}));
    journal_vanished(f, j);
    return z;
}

} // namespace occsat
