#include "framelat/morphism.hpp"

#include <algorithm>

namespace framelat {

bool is_lattice_morphism(const FiniteLattice& L, const FiniteLattice& M, const std::vector<int>& f) {
    if (f.size() != static_cast<std::size_t>(L.size())) return false;
    for (int v : f)
        if (v < 0 || v >= M.size()) return false;
    for (int x = 0; x < L.size(); ++x)
        for (int y = x; y < L.size(); ++y) {
            auto sx = static_cast<std::size_t>(x), sy = static_cast<std::size_t>(y);
            if (M.meet(f[sx], f[sy]) != f[static_cast<std::size_t>(L.meet(x, y))]) return false;
            if (M.join(f[sx], f[sy]) != f[static_cast<std::size_t>(L.join(x, y))]) return false;
        }
    return true;
}

bool is_bound_preserving(const FiniteLattice& L, const FiniteLattice& M, const std::vector<int>& f) {
    return f[static_cast<std::size_t>(L.bottom)] == M.bottom &&
           f[static_cast<std::size_t>(L.top)] == M.top;
}

bool is_injective(const std::vector<int>& f) {
    std::vector<int> s(f);
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

bool is_embedding(const FiniteLattice& L, const FiniteLattice& M, const std::vector<int>& f) {
    return is_injective(f) && is_lattice_morphism(L, M, f);
}

namespace {

// Backtracking search for injective meet/join-preserving maps, assigning L's
// elements in index order and trying target elements ascending; the first
// complete witness is therefore the lexicographically least image vector.
struct EmbedSearch {
    const FiniteLattice& L;
    const FiniteLattice& M;
    bool pin_bounds = false;
    const std::vector<int>* invL = nullptr;  // iso mode: invariant classes
    const std::vector<int>* invM = nullptr;
    std::vector<int> f, owner;

    EmbedSearch(const FiniteLattice& l, const FiniteLattice& m)
        : L(l), M(m), f(static_cast<std::size_t>(l.size()), -1),
          owner(static_cast<std::size_t>(m.size()), -1) {}

    // Partial-assignment checks against every earlier element: the final map
    // must be an order isomorphism onto its image, and meets/joins whose
    // operands are assigned must land on the image of the operation result
    // (or at least on an element nobody else owns, when the result is not
    // assigned yet).
    bool consistent(int x) {
        auto sx = static_cast<std::size_t>(x);
        for (int y = 0; y < x; ++y) {
            auto sy = static_cast<std::size_t>(y);
            if (L.leq(x, y) != M.leq(f[sx], f[sy])) return false;
            if (L.leq(y, x) != M.leq(f[sy], f[sx])) return false;
            int lm = L.meet(x, y), lj = L.join(x, y);
            int mm = M.meet(f[sx], f[sy]), mj = M.join(f[sx], f[sy]);
            if (lm <= x) {
                if (f[static_cast<std::size_t>(lm)] != mm) return false;
            } else if (owner[static_cast<std::size_t>(mm)] >= 0 &&
                       owner[static_cast<std::size_t>(mm)] != lm) {
                return false;
            }
            if (lj <= x) {
                if (f[static_cast<std::size_t>(lj)] != mj) return false;
            } else if (owner[static_cast<std::size_t>(mj)] >= 0 &&
                       owner[static_cast<std::size_t>(mj)] != lj) {
                return false;
            }
        }
        return true;
    }

    bool dfs(int x) {
        if (x == L.size()) return is_lattice_morphism(L, M, f);
        auto sx = static_cast<std::size_t>(x);
        for (int m = 0; m < M.size(); ++m) {
            auto sm = static_cast<std::size_t>(m);
            if (owner[sm] >= 0) continue;
            if (pin_bounds && ((x == L.bottom) != (m == M.bottom))) continue;
            if (pin_bounds && ((x == L.top) != (m == M.top))) continue;
            if (invL && (*invL)[sx] != (*invM)[sm]) continue;
            f[sx] = m;
            owner[sm] = x;
            if (consistent(x) && dfs(x + 1)) return true;
            owner[sm] = -1;
            f[sx] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_embedding(const FiniteLattice& L, const FiniteLattice& M,
                                               bool bound_preserving) {
    if (L.size() > M.size()) return std::nullopt;
    EmbedSearch s(L, M);
    s.pin_bounds = bound_preserving;
    if (s.dfs(0)) return s.f;
    return std::nullopt;
}

std::optional<std::vector<int>> find_isomorphism(const FiniteLattice& L, const FiniteLattice& M) {
    if (L.size() != M.size()) return std::nullopt;
    auto inv = [](const FiniteLattice& K) {
        std::vector<int> v(static_cast<std::size_t>(K.size()));
        for (std::size_t x = 0; x < v.size(); ++x)
            v[x] = static_cast<int>(K.down[x].count() * 100000 + K.up[x].count());
        return v;
    };
    std::vector<int> invL = inv(L), invM = inv(M);
    {
        auto a = invL, b = invM;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    EmbedSearch s(L, M);
    s.invL = &invL;
    s.invM = &invM;
    if (s.dfs(0)) return s.f;
    return std::nullopt;
}

std::vector<int> left_adjoint(const FiniteLattice& L, const FiniteLattice& M,
                              const std::vector<int>& f) {
    if (!is_lattice_morphism(L, M, f))
        throw Error(ErrorKind::NotAMorphism, "map does not preserve meet and join");
    if (!is_bound_preserving(L, M, f))
        throw Error(ErrorKind::NotBoundPreserving, "map does not preserve bottom and top");
    std::vector<int> mu(static_cast<std::size_t>(M.size()), -1);
    for (int m = 0; m < M.size(); ++m) {
        int acc = L.top;
        for (int l = 0; l < L.size(); ++l)
            if (M.leq(m, f[static_cast<std::size_t>(l)])) acc = L.meet(acc, l);
        mu[static_cast<std::size_t>(m)] = acc;
    }
    for (int m = 0; m < M.size(); ++m)
        for (int l = 0; l < L.size(); ++l)
            if (L.leq(mu[static_cast<std::size_t>(m)], l) != M.leq(m, f[static_cast<std::size_t>(l)]))
                throw Error(ErrorKind::InternalCheckFailed, "adjunction law failed");
    return mu;
}

}  // namespace framelat
