#include "framelat/frame_lattice.hpp"

#include "framelat/morphism.hpp"

namespace framelat {

FrameSubset closure(const Frame& f, const FrameSubset& z) {
    const int n = f.n_worlds();
    if (z.attrs.size() != static_cast<std::size_t>(f.n_actions()) ||
        z.points.size() != static_cast<std::size_t>(n))
        throw Error(ErrorKind::DomainMismatch, "subset widths do not match the frame");
    FrameSubset out;
    out.attrs = z.attrs;
    out.points = Bits(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        if (alpha_reachable(f, x, z.attrs).intersects(z.points))
            out.points.set(static_cast<std::size_t>(x));
    return out;
}

GroundedLattice lattice_of_frame(const Frame& f, std::int64_t cap) {
    const int na = f.n_actions();
    const int nx = f.n_worlds();
    if (na + nx > 24)
        throw Error(ErrorKind::SizeCapExceeded,
                    "closed-set enumeration over " + std::to_string(na + nx) +
                        " ground bits is beyond desk scale");

    std::vector<Bits> members;
    std::vector<Bits> reach(static_cast<std::size_t>(nx));
    for (std::uint64_t am = 0; am < (std::uint64_t(1) << na); ++am) {
        Bits alpha = Bits::from_mask(static_cast<std::size_t>(na), am);
        for (int x = 0; x < nx; ++x)
            reach[static_cast<std::size_t>(x)] = alpha_reachable(f, x, alpha);
        for (std::uint64_t ym = 0; ym < (std::uint64_t(1) << nx); ++ym) {
            Bits y = Bits::from_mask(static_cast<std::size_t>(nx), ym);
            bool closed = true;
            for (int x = 0; x < nx && closed; ++x)
                if (!y.test(static_cast<std::size_t>(x)) &&
                    reach[static_cast<std::size_t>(x)].intersects(y))
                    closed = false;
            if (!closed) continue;
            Bits m(static_cast<std::size_t>(na + nx));
            alpha.for_each([&](std::size_t a) { m.set(a); });
            y.for_each([&](std::size_t p) { m.set(static_cast<std::size_t>(na) + p); });
            members.push_back(std::move(m));
            if (static_cast<std::int64_t>(members.size()) > cap)
                throw Error(ErrorKind::SizeCapExceeded,
                            "more than " + std::to_string(cap) + " closed subsets");
        }
    }
    return grounded_from_members(f.actions, f.worlds, members);
}

InducedLatticeMorphism lattice_of_pmorphism(const PMorphism& psi, std::int64_t cap) {
    auto rep = validate_pmorphism(psi.map, psi.source, psi.target);
    if (!rep.valid) throw Error(ErrorKind::InvalidPMorphism, rep.failure);

    InducedLatticeMorphism out;
    out.dom = lattice_of_frame(psi.target, cap);
    out.cod = lattice_of_frame(psi.source, cap);

    const std::size_t n0 = static_cast<std::size_t>(psi.source.n_worlds());
    out.map.resize(static_cast<std::size_t>(out.dom.lat.size()));
    for (int i = 0; i < out.dom.lat.size(); ++i) {
        Bits pre(n0);
        for (std::size_t x = 0; x < n0; ++x)
            if (out.dom.elem_points[static_cast<std::size_t>(i)].test(
                    static_cast<std::size_t>(psi.map[x])))
                pre.set(x);
        int img = out.cod.index_of_parts(out.dom.elem_attrs[static_cast<std::size_t>(i)], pre);
        if (img < 0)
            throw Error(ErrorKind::InternalCheckFailed,
                        "inverse image of a closed set is not closed");
        out.map[static_cast<std::size_t>(i)] = img;
    }
    return out;
}

CoverEmbedding embedding_from_cover(const ProductFrame& u, const std::vector<int>& psi,
                                    const Frame& f, std::int64_t cap) {
    auto rep = validate_pmorphism(psi, u.frame, f);
    if (!rep.valid) throw Error(ErrorKind::InvalidPMorphism, rep.failure);
    if (!is_surjective_map(psi, f.n_worlds()))
        throw Error(ErrorKind::NotSurjective, "cover must reach every world of the base frame");

    Uniformization uni = uniformize(u, cap);
    PMorphism composed;
    composed.source = uni.uniform.frame;
    composed.target = f;
    composed.map.resize(static_cast<std::size_t>(uni.uniform.frame.n_worlds()));
    for (std::size_t w = 0; w < composed.map.size(); ++w)
        composed.map[w] =
            psi[static_cast<std::size_t>(uni.onto_original.map[w])];

    CoverEmbedding out;
    auto ind = lattice_of_pmorphism(composed, cap);
    out.uniform = std::move(uni.uniform);
    out.lf = std::move(ind.dom);
    out.lu = std::move(ind.cod);
    out.embed = std::move(ind.map);

    if (!is_embedding(out.lf.lat, out.lu.lat, out.embed))
        throw Error(ErrorKind::InternalCheckFailed, "induced map is not an embedding");
    if (out.embed[static_cast<std::size_t>(out.lf.lat.bottom)] != out.lu.lat.bottom ||
        out.embed[static_cast<std::size_t>(out.lf.lat.top)] != out.lu.lat.top)
        throw Error(ErrorKind::InternalCheckFailed, "induced embedding does not preserve bounds");
    return out;
}

}  // namespace framelat
