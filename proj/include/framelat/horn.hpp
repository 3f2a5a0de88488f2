#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "framelat/lattice.hpp"

namespace framelat {

// Term over the pure lattice signature: a variable leaf or a binary meet or
// join node.
struct Term {
    enum class Kind { Var, Meet, Join };

    Kind kind = Kind::Var;
    int var = -1;            // Kind::Var only: index into the variable list
    std::vector<Term> args;  // Kind::Meet / Kind::Join: exactly two

    static Term variable(int v);
    static Term meet(Term a, Term b);
    static Term join(Term a, Term b);
};

bool operator==(const Term& a, const Term& b);
inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }

struct Equation {
    Term lhs, rhs;
};

// Compact premise block: full meet and join tables over the first
// meet.size() variables. Cell (a, b) stands for the premise
// (op x_a x_b) = x_{table[a][b]}.
struct OperationTables {
    std::vector<std::vector<int>> meet;
    std::vector<std::vector<int>> join;
};

// Premises are the table block (when present) followed by the free-form
// equations. Variables are referenced by index everywhere; the names matter
// only for serialization.
struct Quasiequation {
    std::vector<std::string> variables;
    std::optional<OperationTables> tables;
    std::vector<Equation> premises;
    Equation conclusion;
};

// The defining quasiequation of a subdirectly irreducible lattice: one
// variable per element, the full meet and join tables as premises, and the
// monolith pair as conclusion. A valuation satisfying the premises is
// exactly a lattice morphism, and it falsifies the conclusion exactly when
// its kernel misses the monolith, i.e. when it is injective; so a lattice
// satisfies the result iff L has no embedding into it. Throws NotSI.
Quasiequation build_phi(const FiniteLattice& L);

// Premises in serialization order: meet table row-major, join table
// row-major, then the free-form premises.
std::vector<Equation> expanded_premises(const Quasiequation& q);

struct EvalResult {
    bool holds = true;
    std::vector<int> falsifying;  // variable index -> element of K; set when !holds
};

// Decides K |= q by scanning valuations in lexicographic order. Prefixes
// that already violate a premise are pruned, and a variable whose value a
// table row determines from earlier variables is computed rather than
// scanned, so table-shaped premises restrict the scan to lattice morphisms.
// The pruning only skips valuations that fail a premise, so the verdict and
// the first falsifying valuation match the full scan. Throws
// SizeCapExceeded after cap assignment steps.
EvalResult eval_quasiequation(const FiniteLattice& K, const Quasiequation& q,
                              std::int64_t cap = 100000000);

// Value of a term under a full valuation. The term must be valid for the
// valuation's length.
int eval_term(const Term& t, const FiniteLattice& K, const std::vector<int>& valuation);

// "(meet x (join y z))" with names from variables.
std::string term_text(const Term& t, const std::vector<std::string>& variables);

// Inverse of term_text. Throws MalformedTerm on syntax errors (offset
// annotated) and UnknownVariable on names outside variables.
Term parse_term(const std::string& text, const std::vector<std::string>& variables);

}  // namespace framelat
