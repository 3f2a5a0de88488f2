#include "framelat/reduction.hpp"

#include <algorithm>

#include "framelat/congruence.hpp"
#include "framelat/frame_lattice.hpp"
#include "framelat/morphism.hpp"
#include "framelat/od_graph.hpp"

namespace framelat {

namespace {

// the attrs of R(D,B) at which two tuples differ
Bits tuple_delta(const RelationalLattice& ra, int f, int g) {
    Bits d(static_cast<std::size_t>(ra.n_attrs()));
    for (int a = 0; a < ra.n_attrs(); ++a)
        if (ra.digit(f, a) != ra.digit(g, a)) d.set(static_cast<std::size_t>(a));
    return d;
}

}  // namespace

ReducedSpace reduced_space(const FiniteLattice& L, const RelationalLattice& ra,
                           const std::vector<int>& j) {
    if (static_cast<int>(j.size()) != L.size())
        throw Error(ErrorKind::DomainMismatch, "map length differs from the lattice");
    if (!is_subdirectly_irreducible(L).si)
        throw Error(ErrorKind::NotSI, "the reduction needs a subdirectly irreducible source");
    JiProfile prof = ji_profile(L);
    if (!prof.atomistic)
        throw Error(ErrorKind::NotAtomistic, "the reduction needs an atomistic source");
    if (!is_embedding(L, ra.g.lat, j))
        throw Error(ErrorKind::NotAnEmbedding, "the given map is not a lattice embedding");
    if (j[static_cast<std::size_t>(L.bottom)] != ra.g.lat.bottom ||
        j[static_cast<std::size_t>(L.top)] != ra.g.lat.top)
        throw Error(ErrorKind::NotBoundPreserving, "the embedding must preserve both bounds");
    if (prof.join_primes.count() == prof.jis.size())
        throw Error(ErrorKind::LIsBoolean,
                    "every atom is join-prime, so the lattice is Boolean");

    ReducedSpace rs;
    rs.mu = left_adjoint(L, ra.g.lat, j);
    auto mu_of = [&](int elem) { return rs.mu[static_cast<std::size_t>(elem)]; };

    // attrs of the space: the join-prime atoms of L
    std::vector<int> jp_pos(static_cast<std::size_t>(L.size()), -1);
    std::vector<std::string> attr_labels;
    prof.join_primes.for_each([&](std::size_t p) {
        int elem = prof.jis[p];
        jp_pos[static_cast<std::size_t>(elem)] = static_cast<int>(rs.attr_elem.size());
        rs.attr_elem.push_back(elem);
        attr_labels.push_back(L.labels[static_cast<std::size_t>(elem)]);
    });

    // the adjoint sends every attribute atom of R(D,B) to a join-prime atom
    std::vector<int> mu_b(static_cast<std::size_t>(ra.n_attrs()));
    for (int b = 0; b < ra.n_attrs(); ++b) {
        int m = mu_of(ra.g.attr_atom[static_cast<std::size_t>(b)]);
        if (jp_pos[static_cast<std::size_t>(m)] < 0)
            throw Error(ErrorKind::InternalCheckFailed,
                        "adjoint image of an attribute atom is not join-prime");
        mu_b[static_cast<std::size_t>(b)] = jp_pos[static_cast<std::size_t>(m)];
    }

    // points: tuples whose adjoint image is a non-join-prime atom
    std::vector<std::string> point_labels;
    for (int t = 0; t < ra.n_tuples(); ++t) {
        int m = mu_of(ra.g.point_atom[static_cast<std::size_t>(t)]);
        int pos = prof.position[static_cast<std::size_t>(m)];
        if (pos >= 0 && !prof.join_primes.test(static_cast<std::size_t>(pos))) {
            rs.point_tuple.push_back(t);
            rs.point_elem.push_back(m);
            point_labels.push_back(ra.g.point_labels[static_cast<std::size_t>(t)]);
        }
    }
    if (rs.point_tuple.empty())
        throw Error(ErrorKind::EmptyF0,
                    "no tuple maps to a non-join-prime atom; the input is inconsistent");

    // whenever the adjoint image of a tuple is join-reducible, some witness
    // tuple h with join-irreducible image reassembles it across the distance
    for (int g = 0; g < ra.n_tuples(); ++g) {
        int mg = mu_of(ra.g.point_atom[static_cast<std::size_t>(g)]);
        if (mg == L.bottom)
            throw Error(ErrorKind::InternalCheckFailed, "adjoint sends an atom to bottom");
        if (prof.position[static_cast<std::size_t>(mg)] >= 0) continue;
        bool found = false;
        for (int h = 0; h < ra.n_tuples() && !found; ++h) {
            int mh = mu_of(ra.g.point_atom[static_cast<std::size_t>(h)]);
            if (prof.position[static_cast<std::size_t>(mh)] < 0) continue;
            int acc = mh;
            tuple_delta(ra, g, h).for_each([&](std::size_t b) {
                acc = L.join(acc, rs.attr_elem[static_cast<std::size_t>(mu_b[b])]);
            });
            found = acc == mg;
        }
        if (!found)
            throw Error(ErrorKind::InternalCheckFailed,
                        "reducible adjoint image admits no join-irreducible witness");
    }

    // distance: push each differing attribute through the adjoint
    const int n = static_cast<int>(rs.point_tuple.size());
    std::vector<std::vector<Bits>> dist(static_cast<std::size_t>(n),
                                        std::vector<Bits>(static_cast<std::size_t>(n)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Bits d(attr_labels.size());
            tuple_delta(ra, rs.point_tuple[static_cast<std::size_t>(x)],
                        rs.point_tuple[static_cast<std::size_t>(y)])
                .for_each([&](std::size_t b) { d.set(static_cast<std::size_t>(mu_b[b])); });
            dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = std::move(d);
        }
    rs.space = build_space(attr_labels, point_labels, dist);
    if (!is_pairwise_complete(rs.space).complete)
        throw Error(ErrorKind::InternalCheckFailed, "reduced space is not pairwise complete");
    return rs;
}

RegularEmbedding regularize_embedding(const FiniteLattice& L, const RelationalLattice& ra,
                                      const std::vector<int>& j, std::int64_t cap) {
    RegularEmbedding out;
    out.rs = reduced_space(L, ra, j);
    out.target = lattice_of_space(out.rs.space, cap);

    // nu reaches every join-irreducible of L
    JiProfile prof = ji_profile(L);
    {
        std::vector<char> hit(static_cast<std::size_t>(L.size()), 0);
        for (int e : out.rs.attr_elem) hit[static_cast<std::size_t>(e)] = 1;
        for (int e : out.rs.point_elem) hit[static_cast<std::size_t>(e)] = 1;
        for (int ji : prof.jis)
            if (!hit[static_cast<std::size_t>(ji)])
                throw Error(ErrorKind::InternalCheckFailed,
                            "a join-irreducible is outside the image of nu");
    }

    for (int l = 0; l < L.size(); ++l) {
        Bits attrs(out.rs.attr_elem.size());
        for (std::size_t p = 0; p < out.rs.attr_elem.size(); ++p)
            if (L.leq(out.rs.attr_elem[p], l)) attrs.set(p);
        Bits points(out.rs.point_elem.size());
        for (std::size_t x = 0; x < out.rs.point_elem.size(); ++x)
            if (L.leq(out.rs.point_elem[x], l)) points.set(x);
        int idx = out.target.index_of_parts(attrs, points);
        if (idx < 0)
            throw Error(ErrorKind::InternalCheckFailed,
                        "the set of irreducibles below an element is not closed");
        out.embed.push_back(idx);
    }
    if (!is_embedding(L, out.target.lat, out.embed) ||
        out.embed[static_cast<std::size_t>(L.bottom)] != out.target.lat.bottom ||
        out.embed[static_cast<std::size_t>(L.top)] != out.target.lat.top)
        throw Error(ErrorKind::InternalCheckFailed,
                    "regularization did not yield a bound-preserving embedding");
    return out;
}

ExtractedCover extract_pmorphism(const Frame& f, const RelationalLattice& ra,
                                 const std::vector<int>& j, std::int64_t cap) {
    FrameProperties props = frame_properties(f);
    if (!props.s4) throw Error(ErrorKind::FrameNotS4, props.s4_failure);
    if (!props.rooted) throw Error(ErrorKind::FrameNotRooted, "the frame has no root");
    if (!props.full)
        throw Error(ErrorKind::FrameNotFull,
                    "some action relates no two distinct worlds");

    GroundedLattice lf = lattice_of_frame(f, cap);

    ExtractedCover out;
    if (lf.lat.size() == 2) {
        // an actionless singleton frame; the one-world product covers it
        if (!is_embedding(lf.lat, ra.g.lat, j))
            throw Error(ErrorKind::NotAnEmbedding, "the given map is not a lattice embedding");
        out.u = universal_product_frame(f.actions, {}, cap);
        out.psi = PMorphism{out.u.frame, f, {0}};
    } else {
        auto nt = normalize_top(lf.lat, ra, j, cap);
        auto nb = normalize_bot(lf.lat, nt.target, nt.embed, cap);
        if (nb.boolean_case)
            throw Error(ErrorKind::InternalCheckFailed,
                        "a full frame cannot have a 2-element lattice");

        ReducedSpace rs = reduced_space(lf.lat, nb.target, nb.embed);
        if (static_cast<int>(rs.attr_elem.size()) != f.n_actions())
            throw Error(ErrorKind::InternalCheckFailed,
                        "join-prime atom count differs from the action count");

        Representation rep = represent(rs.space);
        if (!rep.surjective)
            throw Error(ErrorKind::InternalCheckFailed,
                        "representation of a pairwise complete space is not onto");
        std::vector<int> inv(static_cast<std::size_t>(rep.sec.space.n_points()), -1);
        for (int x = 0; x < rs.space.n_points(); ++x)
            inv[static_cast<std::size_t>(rep.iso[static_cast<std::size_t>(x)])] = x;

        out.u = universal_product_frame(f.actions, rep.sec.fibers, cap);
        if (out.u.frame.n_worlds() != rep.sec.space.n_points())
            throw Error(ErrorKind::InternalCheckFailed, "product frame size mismatch");

        std::vector<int> map;
        for (int w = 0; w < out.u.frame.n_worlds(); ++w) {
            int x = inv[static_cast<std::size_t>(w)];
            if (x < 0)
                throw Error(ErrorKind::InternalCheckFailed, "section point has no preimage");
            int atom = rs.point_elem[static_cast<std::size_t>(x)];
            map.push_back(
                static_cast<int>(lf.elem_points[static_cast<std::size_t>(atom)].first()));
        }
        out.psi = PMorphism{out.u.frame, f, std::move(map)};
    }

    auto rep2 = validate_pmorphism(out.psi.map, out.u.frame, f);
    if (!rep2.valid)
        throw Error(ErrorKind::InternalCheckFailed,
                    "extracted map is not a p-morphism: " + rep2.failure);
    if (!is_surjective_map(out.psi.map, f.n_worlds()))
        throw Error(ErrorKind::InternalCheckFailed, "extracted map is not surjective");
    return out;
}

CoverSearch cover_search(const Frame& f, int max_component, std::int64_t cap) {
    CoverSearch out;
    // p-morphic images of products of equivalences are reflexive and
    // transitive per action, so anything else is hopeless at every size
    if (!frame_properties(f).s4) return out;

    const int nf = f.n_worlds();
    for (int k = 1; k <= max_component; ++k) {
        std::vector<std::vector<std::string>> comps;
        for (int a = 0; a < f.n_actions(); ++a) {
            std::vector<std::string> labels;
            for (int v = 0; v < k; ++v) labels.push_back(std::to_string(v));
            comps.push_back(std::move(labels));
        }
        ProductFrame u = universal_product_frame(f.actions, comps, cap);
        const int n = u.frame.n_worlds();
        if (n < nf) continue;  // no surjection exists

        std::vector<int> psi(static_cast<std::size_t>(n), -1);
        std::vector<int> covered(static_cast<std::size_t>(nf), 0);
        int distinct = 0;

        // lexicographic depth-first scan with forth-condition pruning
        auto consistent = [&](int w) {
            for (int a = 0; a < f.n_actions(); ++a) {
                const Bits& row = u.frame.rel[static_cast<std::size_t>(a)]
                                             [static_cast<std::size_t>(w)];
                for (int w2 = 0; w2 < w; ++w2) {
                    if (!row.test(static_cast<std::size_t>(w2))) continue;
                    // relations of the product are symmetric, check both ways
                    if (!f.related(a, psi[static_cast<std::size_t>(w)],
                                   psi[static_cast<std::size_t>(w2)]) ||
                        !f.related(a, psi[static_cast<std::size_t>(w2)],
                                   psi[static_cast<std::size_t>(w)]))
                        return false;
                }
            }
            return true;
        };

        int w = 0;
        while (w >= 0) {
            if (w == n) {
                auto rep = validate_pmorphism(psi, u.frame, f);
                if (rep.valid && is_surjective_map(psi, nf)) {
                    out.found = true;
                    out.component = k;
                    out.u = u;
                    out.psi = PMorphism{u.frame, f, psi};
                    return out;
                }
                --w;
                continue;
            }
            int y = psi[static_cast<std::size_t>(w)];
            if (y >= 0) {  // undo before advancing
                if (--covered[static_cast<std::size_t>(y)] == 0) --distinct;
            }
            ++y;
            bool advanced = false;
            for (; y < nf; ++y) {
                psi[static_cast<std::size_t>(w)] = y;
                // enough slots must remain to cover the missing worlds
                int missing = nf - distinct - (covered[static_cast<std::size_t>(y)] ? 0 : 1);
                if (missing > n - w - 1) continue;
                if (!consistent(w)) continue;
                if (covered[static_cast<std::size_t>(y)]++ == 0) ++distinct;
                advanced = true;
                break;
            }
            if (advanced) {
                ++w;
            } else {
                psi[static_cast<std::size_t>(w)] = -1;
                --w;
            }
        }
    }
    return out;
}

RaFrame ra_frame(const RelAlgAtoms& ra) {
    const int n = static_cast<int>(ra.atoms.size());
    if (n == 0) throw Error(ErrorKind::EmptyInput, "no atoms");
    validate_labels(ra.atoms);
    if (ra.identity.size() != static_cast<std::size_t>(n))
        throw Error(ErrorKind::InvalidAtomStructure, "identity mask width differs from atoms");
    if (static_cast<int>(ra.converse.size()) != n)
        throw Error(ErrorKind::InvalidAtomStructure, "converse must act on every atom");
    for (int t = 0; t < n; ++t) {
        int c = ra.converse[static_cast<std::size_t>(t)];
        if (c < 0 || c >= n)
            throw Error(ErrorKind::InvalidAtomStructure, "converse image out of range");
        if (ra.converse[static_cast<std::size_t>(c)] != t)
            throw Error(ErrorKind::InvalidAtomStructure,
                        "converse is not an involution at '" +
                            ra.atoms[static_cast<std::size_t>(t)] + "'");
    }
    if (ra.allowed.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw Error(ErrorKind::InvalidAtomStructure, "allowed table must cover every atom pair");
    for (const Bits& row : ra.allowed)
        if (row.size() != static_cast<std::size_t>(n))
            throw Error(ErrorKind::InvalidAtomStructure, "allowed row width differs from atoms");

    auto al = [&](int t0, int t1, int t2) {
        return ra.allowed[static_cast<std::size_t>(t0) * static_cast<std::size_t>(n) +
                          static_cast<std::size_t>(t1)]
            .test(static_cast<std::size_t>(t2));
    };
    auto cv = [&](int t) { return ra.converse[static_cast<std::size_t>(t)]; };
    // the six Peircean transforms of a triple must agree
    for (int t0 = 0; t0 < n; ++t0)
        for (int t1 = 0; t1 < n; ++t1)
            for (int t2 = 0; t2 < n; ++t2) {
                bool v = al(t0, t1, t2);
                if (al(cv(t1), cv(t0), cv(t2)) != v || al(cv(t0), cv(t2), cv(t1)) != v ||
                    al(cv(t2), cv(t1), cv(t0)) != v || al(t2, t0, t1) != v ||
                    al(t1, t2, t0) != v)
                    throw Error(ErrorKind::InvalidAtomStructure,
                                "cycle law fails at (" + ra.atoms[static_cast<std::size_t>(t0)] +
                                    "," + ra.atoms[static_cast<std::size_t>(t1)] + "," +
                                    ra.atoms[static_cast<std::size_t>(t2)] + ")");
            }

    RaFrame out;
    std::vector<std::string> worlds;
    for (int t0 = 0; t0 < n; ++t0)
        for (int t1 = 0; t1 < n; ++t1)
            for (int t2 = 0; t2 < n; ++t2)
                if (al(t0, t1, t2)) {
                    out.world_triples.push_back({t0, t1, t2});
                    worlds.push_back("(" + ra.atoms[static_cast<std::size_t>(t0)] + "," +
                                     ra.atoms[static_cast<std::size_t>(t1)] + "," +
                                     ra.atoms[static_cast<std::size_t>(t2)] + ")");
                }

    std::vector<std::tuple<int, int, int>> edges;
    const int m = static_cast<int>(worlds.size());
    for (int i = 0; i < 3; ++i)
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                if (out.world_triples[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)] ==
                    out.world_triples[static_cast<std::size_t>(y)][static_cast<std::size_t>(i)])
                    edges.emplace_back(i, x, y);
    out.frame = build_frame({"0", "1", "2"}, worlds, edges);
    out.props = frame_properties(out.frame);
    return out;
}

}  // namespace framelat
