#include "framelat/horn.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "framelat/congruence.hpp"
#include "framelat/error.hpp"

namespace framelat {

Term Term::variable(int v) {
    Term t;
    t.kind = Kind::Var;
    t.var = v;
    return t;
}

Term Term::meet(Term a, Term b) {
    Term t;
    t.kind = Kind::Meet;
    t.args.push_back(std::move(a));
    t.args.push_back(std::move(b));
    return t;
}

Term Term::join(Term a, Term b) {
    Term t;
    t.kind = Kind::Join;
    t.args.push_back(std::move(a));
    t.args.push_back(std::move(b));
    return t;
}

bool operator==(const Term& a, const Term& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Term::Kind::Var) return a.var == b.var;
    return a.args == b.args;
}

namespace {

void check_term(const Term& t, std::size_t n_vars) {
    if (t.kind == Term::Kind::Var) {
        if (t.var < 0 || static_cast<std::size_t>(t.var) >= n_vars)
            throw Error(ErrorKind::UnknownVariable,
                        "term references variable index " + std::to_string(t.var) +
                            " outside the declared range of " + std::to_string(n_vars));
        return;
    }
    if (t.args.size() != 2)
        throw Error(ErrorKind::MalformedTerm, "meet and join nodes take exactly two arguments");
    check_term(t.args[0], n_vars);
    check_term(t.args[1], n_vars);
}

int max_var(const Term& t) {
    if (t.kind == Term::Kind::Var) return t.var;
    return std::max(max_var(t.args[0]), max_var(t.args[1]));
}

void check_tables(const OperationTables& t, std::size_t n_vars) {
    std::size_t n = t.meet.size();
    if (t.join.size() != n)
        throw Error(ErrorKind::MalformedTerm, "meet and join tables differ in size");
    if (n > n_vars)
        throw Error(ErrorKind::MalformedTerm, "premise tables are wider than the variable list");
    for (const auto* tab : {&t.meet, &t.join})
        for (const auto& row : *tab) {
            if (row.size() != n)
                throw Error(ErrorKind::MalformedTerm, "premise tables are not square");
            for (int e : row)
                if (e < 0 || static_cast<std::size_t>(e) >= n_vars)
                    throw Error(ErrorKind::UnknownVariable,
                                "table entry " + std::to_string(e) + " is not a variable index");
        }
}

void check_quasiequation(const Quasiequation& q) {
    std::size_t n_vars = q.variables.size();
    if (q.tables) check_tables(*q.tables, n_vars);
    for (const auto& e : q.premises) {
        check_term(e.lhs, n_vars);
        check_term(e.rhs, n_vars);
    }
    check_term(q.conclusion.lhs, n_vars);
    check_term(q.conclusion.rhs, n_vars);
}

}  // namespace

Quasiequation build_phi(const FiniteLattice& L) {
    auto rep = is_subdirectly_irreducible(L);
    if (!rep.si)
        throw Error(ErrorKind::NotSI,
                    "the defining quasiequation needs a subdirectly irreducible lattice");
    Quasiequation q;
    int n = L.size();
    q.variables.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) q.variables.push_back("x" + std::to_string(i));
    q.tables = OperationTables{L.meet_t, L.join_t};
    auto [a, b] = *rep.monolith_pair;
    q.conclusion = {Term::variable(a), Term::variable(b)};
    return q;
}

std::vector<Equation> expanded_premises(const Quasiequation& q) {
    check_quasiequation(q);
    std::vector<Equation> out;
    if (q.tables) {
        int n = static_cast<int>(q.tables->meet.size());
        out.reserve(static_cast<std::size_t>(2 * n * n) + q.premises.size());
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                out.push_back({Term::meet(Term::variable(a), Term::variable(b)),
                               Term::variable(q.tables->meet[static_cast<std::size_t>(a)]
                                                            [static_cast<std::size_t>(b)])});
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                out.push_back({Term::join(Term::variable(a), Term::variable(b)),
                               Term::variable(q.tables->join[static_cast<std::size_t>(a)]
                                                            [static_cast<std::size_t>(b)])});
    }
    out.insert(out.end(), q.premises.begin(), q.premises.end());
    return out;
}

int eval_term(const Term& t, const FiniteLattice& K, const std::vector<int>& valuation) {
    if (t.kind == Term::Kind::Var) return valuation[static_cast<std::size_t>(t.var)];
    int a = eval_term(t.args[0], K, valuation);
    int b = eval_term(t.args[1], K, valuation);
    return t.kind == Term::Kind::Meet ? K.meet(a, b) : K.join(a, b);
}

namespace {

// One table premise (op x_a x_b) = x_res, evaluated without a term walk.
struct Triple {
    bool is_meet = true;
    int a = 0, b = 0, res = 0;
};

struct Scan {
    const FiniteLattice& K;
    const std::vector<std::vector<Triple>>& table_at;
    const std::vector<std::optional<Triple>>& forced;
    const std::vector<std::vector<const Equation*>>& prem_at;
    const Equation& conclusion;
    int nv;
    std::int64_t cap;
    std::int64_t steps = 0;
    std::vector<int> val;

    int apply(const Triple& t) {
        int x = val[static_cast<std::size_t>(t.a)];
        int y = val[static_cast<std::size_t>(t.b)];
        return t.is_meet ? K.meet(x, y) : K.join(x, y);
    }

    bool ok_at(int d) {
        for (const Triple& t : table_at[static_cast<std::size_t>(d)])
            if (apply(t) != val[static_cast<std::size_t>(t.res)]) return false;
        for (const Equation* e : prem_at[static_cast<std::size_t>(d)])
            if (eval_term(e->lhs, K, val) != eval_term(e->rhs, K, val)) return false;
        return true;
    }

    void bump() {
        if (++steps > cap)
            throw Error(ErrorKind::SizeCapExceeded,
                        "valuation scan exceeded " + std::to_string(cap) + " steps");
    }

    // Depth-first over variables in index order, values ascending; true when
    // a falsifying valuation has been found (left in val).
    bool run(int d) {
        if (d == nv)
            return eval_term(conclusion.lhs, K, val) != eval_term(conclusion.rhs, K, val);
        std::size_t sd = static_cast<std::size_t>(d);
        if (forced[sd]) {
            bump();
            val[sd] = apply(*forced[sd]);
            if (ok_at(d) && run(d + 1)) return true;
            val[sd] = -1;
            return false;
        }
        for (int v = 0; v < K.size(); ++v) {
            bump();
            val[sd] = v;
            if (ok_at(d) && run(d + 1)) return true;
        }
        val[sd] = -1;
        return false;
    }
};

}  // namespace

EvalResult eval_quasiequation(const FiniteLattice& K, const Quasiequation& q, std::int64_t cap) {
    check_quasiequation(q);
    const int nv = static_cast<int>(q.variables.size());

    // Bucket every premise by its last variable so it is checked as soon as
    // all its variables are assigned. A table row whose result variable
    // comes after both arguments determines that variable's value; the first
    // such row per variable is used for forcing, the rest are checks.
    std::vector<std::vector<Triple>> table_at(static_cast<std::size_t>(nv));
    std::vector<std::optional<Triple>> forced(static_cast<std::size_t>(nv));
    if (q.tables) {
        int n = static_cast<int>(q.tables->meet.size());
        auto add = [&](bool is_meet, const std::vector<std::vector<int>>& tab) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    Triple tr{is_meet, a, b,
                              tab[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]};
                    int last = std::max({tr.a, tr.b, tr.res});
                    if (tr.a < tr.res && tr.b < tr.res &&
                        !forced[static_cast<std::size_t>(tr.res)])
                        forced[static_cast<std::size_t>(tr.res)] = tr;
                    else
                        table_at[static_cast<std::size_t>(last)].push_back(tr);
                }
        };
        add(true, q.tables->meet);
        add(false, q.tables->join);
    }
    std::vector<std::vector<const Equation*>> prem_at(static_cast<std::size_t>(nv));
    for (const auto& e : q.premises) {
        int last = std::max(max_var(e.lhs), max_var(e.rhs));
        prem_at[static_cast<std::size_t>(last)].push_back(&e);
    }

    Scan scan{K,  table_at, forced, prem_at,
              q.conclusion, nv, cap, 0,
              std::vector<int>(static_cast<std::size_t>(nv), -1)};
    if (scan.run(0)) return {false, scan.val};
    return {true, {}};
}

namespace {

struct Token {
    std::string text;
    std::size_t pos = 0;
    bool open = false;
    bool close = false;
};

std::vector<Token> lex_term(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '(' || c == ')') {
            out.push_back({std::string(1, c), i, c == '(', c == ')'});
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '(' && s[j] != ')' &&
               !std::isspace(static_cast<unsigned char>(s[j])))
            ++j;
        out.push_back({s.substr(i, j - i), i, false, false});
        i = j;
    }
    return out;
}

struct TermParser {
    const std::vector<Token>& toks;
    const std::vector<std::string>& variables;
    std::size_t end_offset;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw Error(ErrorKind::MalformedTerm, msg + " at offset " + std::to_string(at));
    }

    std::size_t here() const { return pos < toks.size() ? toks[pos].pos : end_offset; }

    Term parse() {
        if (pos >= toks.size()) fail("unexpected end of term", end_offset);
        const Token& t = toks[pos];
        if (t.close) fail("unexpected ')'", t.pos);
        if (t.open) {
            ++pos;
            if (pos >= toks.size()) fail("missing operator after '('", end_offset);
            const Token op = toks[pos];
            if (op.open || op.close || (op.text != "meet" && op.text != "join"))
                fail("expected meet or join", op.pos);
            ++pos;
            Term a = parse();
            Term b = parse();
            if (pos >= toks.size() || !toks[pos].close) fail("expected ')'", here());
            ++pos;
            return op.text == "meet" ? Term::meet(std::move(a), std::move(b))
                                     : Term::join(std::move(a), std::move(b));
        }
        auto it = std::find(variables.begin(), variables.end(), t.text);
        if (it == variables.end())
            throw Error(ErrorKind::UnknownVariable, "unknown variable '" + t.text + "'");
        ++pos;
        return Term::variable(static_cast<int>(it - variables.begin()));
    }
};

std::string render_term(const Term& t, const std::vector<std::string>& variables) {
    if (t.kind == Term::Kind::Var) return variables[static_cast<std::size_t>(t.var)];
    std::string op = t.kind == Term::Kind::Meet ? "meet" : "join";
    return "(" + op + " " + render_term(t.args[0], variables) + " " +
           render_term(t.args[1], variables) + ")";
}

}  // namespace

std::string term_text(const Term& t, const std::vector<std::string>& variables) {
    check_term(t, variables.size());
    return render_term(t, variables);
}

Term parse_term(const std::string& text, const std::vector<std::string>& variables) {
    auto toks = lex_term(text);
    TermParser p{toks, variables, text.size()};
    Term t = p.parse();
    if (p.pos != toks.size()) p.fail("trailing input", toks[p.pos].pos);
    return t;
}

}  // namespace framelat
