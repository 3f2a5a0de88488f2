#include "framelat/od_graph.hpp"

#include <algorithm>

namespace framelat {

JiProfile ji_profile(const FiniteLattice& L) {
    std::size_t n = static_cast<std::size_t>(L.size());
    JiProfile p;
    p.position.assign(n, -1);
    for (std::size_t x = 0; x < n; ++x) {
        Bits strict = L.down[x];
        strict.reset(x);
        int below_join = L.join_set(strict);
        if (below_join != static_cast<int>(x)) {
            p.position[x] = static_cast<int>(p.jis.size());
            p.jis.push_back(static_cast<int>(x));
            p.lower_cover.push_back(below_join);
        }
    }
    std::size_t k = p.jis.size();
    p.atoms = Bits(k);
    p.join_primes = Bits(k);
    for (std::size_t q = 0; q < k; ++q) {
        if (p.lower_cover[q] == L.bottom && p.jis[q] != L.bottom) p.atoms.set(q);
        int j = p.jis[q];
        bool prime = true;
        for (int y = 0; y < L.size() && prime; ++y)
            for (int z = y; z < L.size() && prime; ++z)
                if (L.leq(j, L.join(y, z)) && !L.leq(j, y) && !L.leq(j, z)) prime = false;
        if (prime) p.join_primes.set(q);
    }
    p.atomistic = true;
    for (std::size_t x = 0; x < n && p.atomistic; ++x) {
        Bits at(n);
        p.atoms.for_each([&](std::size_t q) {
            int a = p.jis[q];
            if (L.leq(a, static_cast<int>(x))) at.set(static_cast<std::size_t>(a));
        });
        if (L.join_set(at) != static_cast<int>(x)) p.atomistic = false;
    }
    return p;
}

namespace {

// join of every subset of ji positions, indexed by position mask
std::vector<int> subset_joins(const FiniteLattice& L, const JiProfile& prof, std::size_t cap) {
    std::size_t k = prof.jis.size();
    if (k >= 64 || (std::size_t(1) << k) > cap)
        throw Error(ErrorKind::SizeCapExceeded,
                    "too many join-irreducibles for cover enumeration (" + std::to_string(k) + ")");
    std::vector<int> jo(std::size_t(1) << k);
    jo[0] = L.bottom;
    for (std::size_t m = 1; m < jo.size(); ++m) {
        std::size_t low = static_cast<std::size_t>(__builtin_ctzll(m));
        jo[m] = L.join(jo[m & (m - 1)], prof.jis[low]);
    }
    return jo;
}

std::vector<std::uint64_t> down_masks(const FiniteLattice& L, const JiProfile& prof) {
    std::size_t k = prof.jis.size();
    std::vector<std::uint64_t> dm(k, 0);
    for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = 0; q < k; ++q)
            if (L.leq(prof.jis[q], prof.jis[p])) dm[p] |= std::uint64_t(1) << q;
    return dm;
}

std::vector<Bits> minimal_covers_impl(const FiniteLattice& L, int j,
                                      const std::vector<int>& jo,
                                      const std::vector<std::uint64_t>& dm, std::size_t k) {
    std::vector<Bits> out;
    for (std::uint64_t m = 0; m < jo.size(); ++m) {
        if (!L.leq(j, jo[m])) continue;
        // minimal iff dropping any member from the refinement hull breaks covering
        std::uint64_t hull = 0;
        for (std::uint64_t t = m; t; t &= t - 1)
            hull |= dm[static_cast<std::size_t>(__builtin_ctzll(t))];
        bool minimal = true;
        for (std::uint64_t t = m; t && minimal; t &= t - 1) {
            std::uint64_t c = t & (~t + 1);
            if (L.leq(j, jo[hull & ~c])) minimal = false;
        }
        if (minimal) out.push_back(Bits::from_mask(k, m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Bits> minimal_join_covers(const FiniteLattice& L, int j, const JiProfile& prof,
                                      std::size_t cap) {
    auto jo = subset_joins(L, prof, cap);
    auto dm = down_masks(L, prof);
    return minimal_covers_impl(L, j, jo, dm, prof.jis.size());
}

ODGraph od_graph(const FiniteLattice& L, std::size_t cap) {
    JiProfile prof = ji_profile(L);
    std::size_t k = prof.jis.size();
    auto jo = subset_joins(L, prof, cap);
    auto dm = down_masks(L, prof);
    ODGraph g;
    g.ji_elem = prof.jis;
    g.lower_cover_elem = prof.lower_cover;
    g.labels.reserve(k);
    g.below.assign(k, Bits(k));
    for (std::size_t p = 0; p < k; ++p) {
        g.labels.push_back(L.labels[static_cast<std::size_t>(prof.jis[p])]);
        for (std::size_t q = 0; q < k; ++q)
            if (L.leq(prof.jis[q], prof.jis[p])) g.below[p].set(q);
    }
    g.covers.resize(k);
    for (std::size_t p = 0; p < k; ++p) {
        Bits trivial = Bits::singleton(k, p);
        for (auto& c : minimal_covers_impl(L, prof.jis[p], jo, dm, k))
            if (c != trivial) g.covers[p].push_back(c);
    }
    return g;
}

bool refines(const ODGraph& g, const Bits& X, const Bits& Y) {
    for (std::size_t p = X.first(); p < X.size(); p = X.next(p)) {
        bool ok = false;
        for (std::size_t q = Y.first(); q < Y.size() && !ok; q = Y.next(q))
            if (g.below[q].test(p)) ok = true;
        if (!ok) return false;
    }
    return true;
}

MooreLattice lattice_from_od_graph(const ODGraph& g, std::size_t cap) {
    std::size_t k = g.labels.size();
    if (k >= 64 || (std::size_t(1) << k) > cap)
        throw Error(ErrorKind::SizeCapExceeded,
                    "too many join-irreducibles for reconstruction (" + std::to_string(k) + ")");
    std::vector<std::uint64_t> below(k, 0), cover_mask;
    std::vector<std::size_t> cover_owner;
    for (std::size_t p = 0; p < k; ++p) {
        for (std::size_t q = 0; q < k; ++q)
            if (g.below[p].test(q)) below[p] |= std::uint64_t(1) << q;
        for (const auto& c : g.covers[p]) {
            std::uint64_t m = 0;
            c.for_each([&](std::size_t q) { m |= std::uint64_t(1) << q; });
            cover_mask.push_back(m);
            cover_owner.push_back(p);
        }
    }
    MooreFamily mf;
    mf.ground = g.labels;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << k); ++m) {
        bool closed = true;
        for (std::uint64_t t = m; t && closed; t &= t - 1)
            if ((below[static_cast<std::size_t>(__builtin_ctzll(t))] & ~m) != 0) closed = false;
        for (std::size_t c = 0; c < cover_mask.size() && closed; ++c)
            if ((cover_mask[c] & ~m) == 0 && !((m >> cover_owner[c]) & 1)) closed = false;
        if (closed) mf.members.push_back(Bits::from_mask(k, m));
    }
    return lattice_from_moore(mf);
}

DGraph join_dependency(const FiniteLattice& L) {
    JiProfile prof = ji_profile(L);
    std::size_t k = prof.jis.size();
    DGraph g;
    g.ji_elem = prof.jis;
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            if (a == b) continue;
            int j = prof.jis[a], kk = prof.jis[b], kstar = prof.lower_cover[b];
            for (int p = 0; p < L.size(); ++p) {
                if (L.leq(j, L.join(p, kk)) && !L.leq(j, L.join(p, kstar))) {
                    g.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
                    break;
                }
            }
        }
    }
    return g;
}

bool dgraph_rooted(const DGraph& g, std::size_t node_count) {
    if (node_count == 0) return false;
    std::vector<std::vector<int>> adj(node_count);
    for (auto [a, b] : g.edges) adj[static_cast<std::size_t>(a)].push_back(b);
    for (std::size_t r = 0; r < node_count; ++r) {
        std::vector<char> seen(node_count, 0);
        std::vector<int> stack{static_cast<int>(r)};
        seen[r] = 1;
        std::size_t cnt = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[static_cast<std::size_t>(x)])
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    ++cnt;
                    stack.push_back(y);
                }
        }
        if (cnt == node_count) return true;
    }
    return false;
}

}  // namespace framelat
