#include "framelat/quotient.hpp"

#include <algorithm>

namespace framelat {

namespace {

void check_dclosed(const ODGraph& g, const Bits& S) {
    for (std::size_t p = S.first(); p < S.size(); p = S.next(p)) {
        if (!g.below[p].subset_of(S))
            throw Error(ErrorKind::NotDClosed, "'" + g.labels[p] + "' is in the set but a ji below it is not");
        }
    for (std::size_t p = 0; p < g.labels.size(); ++p) {
        if (S.test(p)) continue;
        for (const auto& c : g.covers[p])
            if (c.subset_of(S))
                throw Error(ErrorKind::NotDClosed,
                            "cover of '" + g.labels[p] + "' lies in the set but the ji does not");
    }
}

}  // namespace

Quotient quotient_by_dclosed(const FiniteLattice& L, const ODGraph& g, const Bits& S) {
    check_dclosed(g, S);
    std::size_t n = static_cast<std::size_t>(L.size());
    // elements: all joins of subsets of S
    std::vector<char> in(n, 0);
    in[static_cast<std::size_t>(L.bottom)] = 1;
    std::vector<int> work{L.bottom};
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        for (std::size_t p = S.first(); p < S.size(); p = S.next(p)) {
            int y = L.join(x, g.ji_elem[p]);
            if (!in[static_cast<std::size_t>(y)]) {
                in[static_cast<std::size_t>(y)] = 1;
                work.push_back(y);
            }
        }
    }
    Quotient q;
    for (std::size_t x = 0; x < n; ++x)
        if (in[x]) q.elem_of.push_back(static_cast<int>(x));
    std::vector<int> idx(n, -1);
    for (std::size_t i = 0; i < q.elem_of.size(); ++i) idx[static_cast<std::size_t>(q.elem_of[i])] = static_cast<int>(i);

    // pi(l) = join of the jis of S below l
    q.pi.assign(n, -1);
    for (std::size_t l = 0; l < n; ++l) {
        int acc = L.bottom;
        for (std::size_t p = S.first(); p < S.size(); p = S.next(p))
            if (L.leq(g.ji_elem[p], static_cast<int>(l))) acc = L.join(acc, g.ji_elem[p]);
        q.pi[l] = idx[static_cast<std::size_t>(acc)];
    }

    std::size_t m = q.elem_of.size();
    FiniteLattice& Q = q.lat;
    Q.up.assign(m, Bits(m));
    Q.down.assign(m, Bits(m));
    Q.labels.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Q.labels.push_back(L.labels[static_cast<std::size_t>(q.elem_of[i])]);
        for (std::size_t j = 0; j < m; ++j)
            if (L.leq(q.elem_of[i], q.elem_of[j])) {
                Q.up[i].set(j);
                Q.down[j].set(i);
            }
    }
    Q.meet_t.assign(m, std::vector<int>(m, -1));
    Q.join_t.assign(m, std::vector<int>(m, -1));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            int jj = idx[static_cast<std::size_t>(L.join(q.elem_of[i], q.elem_of[j]))];
            int mm = q.pi[static_cast<std::size_t>(L.meet(q.elem_of[i], q.elem_of[j]))];
            Q.join_t[i][j] = Q.join_t[j][i] = jj;
            Q.meet_t[i][j] = Q.meet_t[j][i] = mm;
        }
    Q.bottom = idx[static_cast<std::size_t>(L.bottom)];
    Q.top = q.pi[static_cast<std::size_t>(L.top)];
    return q;
}

Sublattice principal_ideal(const FiniteLattice& L, int x) {
    Sublattice s;
    std::size_t n = static_cast<std::size_t>(L.size());
    s.index_in.assign(n, -1);
    for (std::size_t y = 0; y < n; ++y)
        if (L.leq(static_cast<int>(y), x)) {
            s.index_in[y] = static_cast<int>(s.elem_of.size());
            s.elem_of.push_back(static_cast<int>(y));
        }
    std::size_t m = s.elem_of.size();
    FiniteLattice& I = s.lat;
    I.up.assign(m, Bits(m));
    I.down.assign(m, Bits(m));
    for (std::size_t i = 0; i < m; ++i) {
        I.labels.push_back(L.labels[static_cast<std::size_t>(s.elem_of[i])]);
        for (std::size_t j = 0; j < m; ++j)
            if (L.leq(s.elem_of[i], s.elem_of[j])) {
                I.up[i].set(j);
                I.down[j].set(i);
            }
    }
    I.meet_t.assign(m, std::vector<int>(m, -1));
    I.join_t.assign(m, std::vector<int>(m, -1));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            I.meet_t[i][j] = I.meet_t[j][i] = s.index_in[static_cast<std::size_t>(L.meet(s.elem_of[i], s.elem_of[j]))];
            I.join_t[i][j] = I.join_t[j][i] = s.index_in[static_cast<std::size_t>(L.join(s.elem_of[i], s.elem_of[j]))];
        }
    I.bottom = s.index_in[static_cast<std::size_t>(L.bottom)];
    I.top = s.index_in[static_cast<std::size_t>(x)];
    return s;
}

SubdirectDecomposition subdirect_decomposition(const FiniteLattice& L, const ODGraph& g,
                                               const std::vector<Bits>& family, std::size_t cap) {
    std::size_t k = g.labels.size();
    Bits covered(k);
    for (const auto& S : family) {
        if (S.size() != k) throw Error(ErrorKind::DomainMismatch, "family member width differs from ji count");
        covered |= S;
    }
    if (covered != Bits::full(k))
        throw Error(ErrorKind::NotACover, "the D-closed family does not cover all jis");

    SubdirectDecomposition d;
    std::size_t prod = 1;
    for (const auto& S : family) {
        d.components.push_back(quotient_by_dclosed(L, g, S));
        prod *= d.components.back().lat.labels.size();
        if (prod > cap) throw Error(ErrorKind::SizeCapExceeded, "product lattice too large");
    }

    // product lattice, tuples in row-major order (last component fastest)
    std::size_t m = prod, nc = family.size();
    auto decode = [&](std::size_t t) {
        std::vector<int> tuple(nc);
        for (std::size_t c = nc; c-- > 0;) {
            std::size_t sz = d.components[c].lat.labels.size();
            tuple[c] = static_cast<int>(t % sz);
            t /= sz;
        }
        return tuple;
    };
    auto encode = [&](const std::vector<int>& tuple) {
        std::size_t t = 0;
        for (std::size_t c = 0; c < nc; ++c)
            t = t * d.components[c].lat.labels.size() + static_cast<std::size_t>(tuple[c]);
        return t;
    };

    FiniteLattice& P = d.product;
    P.labels.reserve(m);
    std::vector<std::vector<int>> tuples(m);
    for (std::size_t t = 0; t < m; ++t) {
        tuples[t] = decode(t);
        std::string lbl = "(";
        for (std::size_t c = 0; c < nc; ++c) {
            if (c) lbl += ',';
            lbl += d.components[c].lat.labels[static_cast<std::size_t>(tuples[t][c])];
        }
        lbl += ')';
        P.labels.push_back(lbl);
    }
    P.up.assign(m, Bits(m));
    P.down.assign(m, Bits(m));
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t) {
            bool le = true;
            for (std::size_t c = 0; c < nc && le; ++c)
                le = d.components[c].lat.leq(tuples[s][c], tuples[t][c]);
            if (le) {
                P.up[s].set(t);
                P.down[t].set(s);
            }
        }
    P.meet_t.assign(m, std::vector<int>(m, -1));
    P.join_t.assign(m, std::vector<int>(m, -1));
    std::vector<int> mt(nc), jt(nc);
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = s; t < m; ++t) {
            for (std::size_t c = 0; c < nc; ++c) {
                mt[c] = d.components[c].lat.meet(tuples[s][c], tuples[t][c]);
                jt[c] = d.components[c].lat.join(tuples[s][c], tuples[t][c]);
            }
            P.meet_t[s][t] = P.meet_t[t][s] = static_cast<int>(encode(mt));
            P.join_t[s][t] = P.join_t[t][s] = static_cast<int>(encode(jt));
        }
    std::vector<int> bt(nc), tt(nc);
    for (std::size_t c = 0; c < nc; ++c) {
        bt[c] = d.components[c].lat.bottom;
        tt[c] = d.components[c].lat.top;
    }
    P.bottom = static_cast<int>(encode(bt));
    P.top = static_cast<int>(encode(tt));

    d.map.assign(static_cast<std::size_t>(L.size()), -1);
    std::vector<int> img(nc);
    for (int l = 0; l < L.size(); ++l) {
        for (std::size_t c = 0; c < nc; ++c) img[c] = d.components[c].pi[static_cast<std::size_t>(l)];
        d.map[static_cast<std::size_t>(l)] = static_cast<int>(encode(img));
    }
    for (int a = 0; a < L.size(); ++a)
        for (int b = a + 1; b < L.size(); ++b)
            if (d.map[static_cast<std::size_t>(a)] == d.map[static_cast<std::size_t>(b)])
                throw Error(ErrorKind::InternalCheckFailed,
                            "subdirect tuple map is not injective despite a covering family");
    return d;
}

}  // namespace framelat
