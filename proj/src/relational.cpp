#include "framelat/relational.hpp"

#include <algorithm>

#include "framelat/congruence.hpp"
#include "framelat/frame.hpp"
#include "framelat/morphism.hpp"
#include "framelat/od_graph.hpp"
#include "framelat/quotient.hpp"
#include "framelat/ultrametric.hpp"

namespace framelat {

int RelationalLattice::digit(int tuple, int a) const {
    int s = 1;
    for (int k = n_attrs() - 1; k > a; --k) s *= dom_size();
    return (tuple / s) % dom_size();
}

int RelationalLattice::tuple_of(const std::vector<int>& digits) const {
    int t = 0;
    for (int d : digits) t = t * dom_size() + d;
    return t;
}

namespace {

std::string tuple_label(const std::vector<std::string>& dom, const std::vector<int>& digits) {
    if (digits.empty()) return "()";
    bool compact = true;
    for (const auto& v : dom)
        if (v.size() != 1) compact = false;
    std::string s;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (!compact && i) s += ".";
        s += dom[static_cast<std::size_t>(digits[i])];
    }
    return s;
}

std::int64_t checked_pow(std::int64_t base, int exp, std::int64_t cap) {
    std::int64_t v = 1;
    for (int i = 0; i < exp; ++i) {
        v *= base;
        if (v > cap)
            throw Error(ErrorKind::SizeCapExceeded,
                        "tuple count exceeds " + std::to_string(cap));
    }
    return v;
}

}  // namespace

RelationalLattice relational_lattice(const std::vector<std::string>& dom,
                                     const std::vector<std::string>& attrs, std::int64_t cap) {
    if (dom.empty()) throw Error(ErrorKind::EmptyInput, "value domain is empty");
    validate_labels(dom);
    validate_labels(attrs);

    RelationalLattice ra;
    ra.dom_labels = dom;
    const int na = static_cast<int>(attrs.size());
    const int d = static_cast<int>(dom.size());
    const int nt = static_cast<int>(checked_pow(d, na, cap));

    std::vector<std::string> tuples(static_cast<std::size_t>(nt));
    {
        std::vector<int> digits(static_cast<std::size_t>(na));
        for (int t = 0; t < nt; ++t) {
            int rest = t;
            for (int a = na - 1; a >= 0; --a) {
                digits[static_cast<std::size_t>(a)] = rest % d;
                rest /= d;
            }
            tuples[static_cast<std::size_t>(t)] = tuple_label(dom, digits);
        }
    }

    std::vector<int> stride(static_cast<std::size_t>(na));
    {
        int s = 1;
        for (int a = na - 1; a >= 0; --a) {
            stride[static_cast<std::size_t>(a)] = s;
            s *= d;
        }
    }
    auto digit = [&](int t, int a) { return (t / stride[static_cast<std::size_t>(a)]) % d; };

    // members: for each attribute subset, the closed tuple sets are unions of
    // classes of "agree outside alpha"
    std::vector<Bits> members;
    for (std::uint64_t am = 0; am < (std::uint64_t(1) << na); ++am) {
        Bits alpha = Bits::from_mask(static_cast<std::size_t>(na), am);
        std::vector<Bits> class_tuples;
        {
            std::vector<int> cls(static_cast<std::size_t>(nt), -1);
            for (int t = 0; t < nt; ++t) {
                if (cls[static_cast<std::size_t>(t)] >= 0) continue;
                const int id = static_cast<int>(class_tuples.size());
                Bits blk(static_cast<std::size_t>(nt));
                for (int u = t; u < nt; ++u) {
                    if (cls[static_cast<std::size_t>(u)] >= 0) continue;
                    // same class iff digits agree at every attribute outside alpha
                    bool same = true;
                    for (int a = 0; a < na && same; ++a)
                        if (!alpha.test(static_cast<std::size_t>(a)) && digit(t, a) != digit(u, a))
                            same = false;
                    if (same) {
                        cls[static_cast<std::size_t>(u)] = id;
                        blk.set(static_cast<std::size_t>(u));
                    }
                }
                class_tuples.push_back(std::move(blk));
            }
        }
        const std::size_t k = class_tuples.size();
        if (k > 62)
            throw Error(ErrorKind::SizeCapExceeded, "more than 62 tuple classes in one layer");
        if (static_cast<std::int64_t>(members.size()) +
                static_cast<std::int64_t>(std::uint64_t(1) << k) >
            cap)
            throw Error(ErrorKind::SizeCapExceeded,
                        "more than " + std::to_string(cap) + " elements");
        for (std::uint64_t um = 0; um < (std::uint64_t(1) << k); ++um) {
            Bits m(static_cast<std::size_t>(na + nt));
            alpha.for_each([&](std::size_t a) { m.set(a); });
            for (std::size_t c = 0; c < k; ++c)
                if ((um >> c) & 1)
                    class_tuples[c].for_each(
                        [&](std::size_t t) { m.set(static_cast<std::size_t>(na) + t); });
            members.push_back(std::move(m));
        }
    }
    ra.g = grounded_from_members(attrs, tuples, members);
    return ra;
}

RelElement element_parts(const RelationalLattice& ra, int index) {
    RelElement e;
    e.attrs = ra.g.elem_attrs[static_cast<std::size_t>(index)];
    e.tuples = ra.g.elem_points[static_cast<std::size_t>(index)];
    return e;
}

int element_index(const RelationalLattice& ra, const RelElement& e) {
    int i = ra.g.index_of_parts(e.attrs, e.tuples);
    if (i < 0) throw Error(ErrorKind::UnknownLabel, "pair is not an element of the lattice");
    return i;
}

namespace {

void check_b(const RelationalLattice& ra, const Bits& b) {
    if (b.size() != static_cast<std::size_t>(ra.n_attrs()))
        throw Error(ErrorKind::NotASubset,
                    "attribute mask width does not match the lattice");
}

void check_element(const RelationalLattice& ra, const RelElement& e) {
    if (e.attrs.size() != static_cast<std::size_t>(ra.n_attrs()) ||
        e.tuples.size() != static_cast<std::size_t>(ra.n_tuples()))
        throw Error(ErrorKind::DomainMismatch, "element widths do not match the lattice");
}

// tuple of R(D,A) restricted to the attributes selected by sel (ascending)
int restrict_tuple(const RelationalLattice& ra, const std::vector<std::size_t>& sel, int t) {
    int r = 0;
    for (std::size_t a : sel) r = r * ra.dom_size() + ra.digit(t, static_cast<int>(a));
    return r;
}

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t v = 1;
    while (e-- > 0) v *= b;
    return v;
}

}  // namespace

RelElement psi_projection(const RelationalLattice& ra, const Bits& b, const RelElement& e) {
    check_b(ra, b);
    check_element(ra, e);
    const std::vector<std::size_t> sel = b.indices();
    RelElement out;
    out.attrs = Bits(sel.size());
    for (std::size_t i = 0; i < sel.size(); ++i)
        if (e.attrs.test(sel[i])) out.attrs.set(i);
    out.tuples = Bits(static_cast<std::size_t>(ipow(ra.dom_size(), static_cast<int>(sel.size()))));
    e.tuples.for_each([&](std::size_t t) {
        out.tuples.set(static_cast<std::size_t>(restrict_tuple(ra, sel, static_cast<int>(t))));
    });
    return out;
}

RelElement adjoint_section(const RelationalLattice& ra, const Bits& b, const RelElement& e) {
    check_b(ra, b);
    const std::vector<std::size_t> sel = b.indices();
    if (e.attrs.size() != sel.size() ||
        e.tuples.size() != static_cast<std::size_t>(ipow(ra.dom_size(), static_cast<int>(sel.size()))))
        throw Error(ErrorKind::DomainMismatch, "element widths do not match the selected slice");
    RelElement out;
    out.attrs = Bits::full(static_cast<std::size_t>(ra.n_attrs()));
    for (std::size_t i = 0; i < sel.size(); ++i)
        if (!e.attrs.test(i)) out.attrs.reset(sel[i]);
    out.tuples = Bits(static_cast<std::size_t>(ra.n_tuples()));
    for (int t = 0; t < ra.n_tuples(); ++t)
        if (e.tuples.test(static_cast<std::size_t>(restrict_tuple(ra, sel, t))))
            out.tuples.set(static_cast<std::size_t>(t));
    return out;
}

namespace {

std::vector<std::string> select_labels(const std::vector<std::string>& all, const Bits& mask) {
    std::vector<std::string> out;
    mask.for_each([&](std::size_t i) { out.push_back(all[i]); });
    return out;
}

// ball of tuple f: all tuples whose digits differ only inside alpha
Bits ball_of(const RelationalLattice& ra, const Bits& alpha, int f) {
    Bits out(static_cast<std::size_t>(ra.n_tuples()));
    for (int t = 0; t < ra.n_tuples(); ++t) {
        bool inside = true;
        for (int a = 0; a < ra.n_attrs() && inside; ++a)
            if (!alpha.test(static_cast<std::size_t>(a)) && ra.digit(t, a) != ra.digit(f, a))
                inside = false;
        if (inside) out.set(static_cast<std::size_t>(t));
    }
    return out;
}

// transport an element of the ideal below (alpha, Y) into R(D, alpha):
// keep the attrs (compacted), restrict every tuple to alpha
int transport_to_target(const RelationalLattice& ra, const RelationalLattice& target,
                        const std::vector<std::size_t>& sel, int ra_elem) {
    Bits attrs(sel.size());
    for (std::size_t i = 0; i < sel.size(); ++i)
        if (ra.g.elem_attrs[static_cast<std::size_t>(ra_elem)].test(sel[i])) attrs.set(i);
    Bits tuples(static_cast<std::size_t>(target.n_tuples()));
    ra.g.elem_points[static_cast<std::size_t>(ra_elem)].for_each([&](std::size_t t) {
        tuples.set(static_cast<std::size_t>(restrict_tuple(ra, sel, static_cast<int>(t))));
    });
    return target.g.index_of_parts(attrs, tuples);
}

}  // namespace

TopNormalization normalize_top(const FiniteLattice& L, const RelationalLattice& ra,
                               const std::vector<int>& i, std::int64_t cap) {
    if (static_cast<int>(i.size()) != L.size())
        throw Error(ErrorKind::DomainMismatch, "map length differs from the lattice");
    if (!is_subdirectly_irreducible(L).si)
        throw Error(ErrorKind::NotSI, "top normalization needs a subdirectly irreducible source");
    if (!is_embedding(L, ra.g.lat, i))
        throw Error(ErrorKind::NotAnEmbedding, "the given map is not a lattice embedding");

    TopNormalization out;
    const int itop = i[static_cast<std::size_t>(L.top)];
    const Bits alpha = ra.g.elem_attrs[static_cast<std::size_t>(itop)];
    const Bits y = ra.g.elem_points[static_cast<std::size_t>(itop)];
    out.alpha = alpha;
    out.target = relational_lattice(ra.dom_labels, select_labels(ra.g.attr_labels, alpha), cap);

    if (itop == ra.g.lat.top) {
        out.unchanged = true;
        out.embed = i;
        return out;
    }

    const std::vector<std::size_t> sel = alpha.indices();

    if (y.none()) {
        // the ideal below (alpha, {}) is Boolean, so L is the 2-element chain
        if (L.size() != 2)
            throw Error(ErrorKind::InternalCheckFailed,
                        "SI lattice embedded in a Boolean ideal must be the 2-element chain");
        out.embed.assign(2, 0);
        out.embed[static_cast<std::size_t>(L.bottom)] = out.target.g.lat.bottom;
        out.embed[static_cast<std::size_t>(L.top)] = out.target.g.lat.top;
        return out;
    }

    Sublattice ideal = principal_ideal(ra.g.lat, itop);
    ODGraph od = od_graph(ideal.lat);
    JiProfile prof = ji_profile(ideal.lat);

    // decompose over the balls B(f, alpha), first injective component wins
    for (std::size_t f = y.first(); f < y.size(); f = y.next(f)) {
        Bits s(od.ji_elem.size());
        alpha.for_each([&](std::size_t a) {
            int atom = ideal.index_in[static_cast<std::size_t>(ra.g.attr_atom[a])];
            s.set(static_cast<std::size_t>(prof.position[static_cast<std::size_t>(atom)]));
        });
        ball_of(ra, alpha, static_cast<int>(f)).for_each([&](std::size_t t) {
            int atom = ideal.index_in[static_cast<std::size_t>(ra.g.point_atom[t])];
            s.set(static_cast<std::size_t>(prof.position[static_cast<std::size_t>(atom)]));
        });

        Quotient q = quotient_by_dclosed(ideal.lat, od, s);
        std::vector<int> cand(static_cast<std::size_t>(L.size()));
        for (int l = 0; l < L.size(); ++l)
            cand[static_cast<std::size_t>(l)] =
                q.pi[static_cast<std::size_t>(ideal.index_in[static_cast<std::size_t>(
                    i[static_cast<std::size_t>(l)])])];
        if (!is_injective(cand)) continue;

        // explicit isomorphism from the quotient onto R(D, alpha)
        if (q.lat.size() != out.target.g.lat.size())
            throw Error(ErrorKind::InternalCheckFailed, "ball quotient has unexpected size");
        std::vector<int> iso(static_cast<std::size_t>(q.lat.size()));
        for (int e = 0; e < q.lat.size(); ++e) {
            int idx = transport_to_target(
                ra, out.target, sel,
                ideal.elem_of[static_cast<std::size_t>(q.elem_of[static_cast<std::size_t>(e)])]);
            if (idx < 0)
                throw Error(ErrorKind::InternalCheckFailed,
                            "quotient element fails to restrict into the target");
            iso[static_cast<std::size_t>(e)] = idx;
        }
        if (!is_injective(iso))
            throw Error(ErrorKind::InternalCheckFailed, "ball quotient transport not injective");
        for (int x = 0; x < q.lat.size(); ++x)
            for (int z = 0; z < q.lat.size(); ++z)
                if (q.lat.leq(x, z) !=
                    out.target.g.lat.leq(iso[static_cast<std::size_t>(x)],
                                         iso[static_cast<std::size_t>(z)]))
                    throw Error(ErrorKind::InternalCheckFailed,
                                "ball quotient transport does not preserve order");

        out.embed.resize(static_cast<std::size_t>(L.size()));
        for (int l = 0; l < L.size(); ++l)
            out.embed[static_cast<std::size_t>(l)] =
                iso[static_cast<std::size_t>(cand[static_cast<std::size_t>(l)])];
        if (!is_embedding(L, out.target.g.lat, out.embed) ||
            out.embed[static_cast<std::size_t>(L.top)] != out.target.g.lat.top)
            throw Error(ErrorKind::InternalCheckFailed,
                        "normalized map is not a top-preserving embedding");
        return out;
    }
    throw Error(ErrorKind::NoInjectiveComponent,
                "no ball component embeds the lattice; input is inconsistent");
}

BotNormalization normalize_bot(const FiniteLattice& L, const RelationalLattice& ra,
                               const std::vector<int>& i, std::int64_t cap) {
    if (static_cast<int>(i.size()) != L.size())
        throw Error(ErrorKind::DomainMismatch, "map length differs from the lattice");
    if (!is_subdirectly_irreducible(L).si)
        throw Error(ErrorKind::NotSI, "bound normalization needs a subdirectly irreducible source");
    if (!ji_profile(L).atomistic)
        throw Error(ErrorKind::NotAtomistic, "bound normalization needs an atomistic source");
    if (!is_embedding(L, ra.g.lat, i))
        throw Error(ErrorKind::NotAnEmbedding, "the given map is not a lattice embedding");
    if (i[static_cast<std::size_t>(L.top)] != ra.g.lat.top)
        throw Error(ErrorKind::NotTopPreserving, "embedding must send top to top");

    BotNormalization out;
    const int ibot = i[static_cast<std::size_t>(L.bottom)];
    const Bits gamma = ra.g.elem_attrs[static_cast<std::size_t>(ibot)];
    const Bits x = ra.g.elem_points[static_cast<std::size_t>(ibot)];
    out.b = Bits::full(static_cast<std::size_t>(ra.n_attrs())) - gamma;
    out.target = relational_lattice(ra.dom_labels, select_labels(ra.g.attr_labels, out.b), cap);

    if (ibot == ra.g.lat.bottom) {
        out.unchanged = true;
        out.embed = i;
        return out;
    }

    if (x.any()) {
        // after projection the image of bottom keeps a tuple, which forces L
        // to be the 2-element Boolean algebra; embed it directly
        if (L.size() != 2)
            throw Error(ErrorKind::InternalCheckFailed,
                        "nonempty tuple part at bottom with more than 2 elements");
        out.boolean_case = true;
        out.embed.assign(2, 0);
        out.embed[static_cast<std::size_t>(L.bottom)] = out.target.g.lat.bottom;
        out.embed[static_cast<std::size_t>(L.top)] = out.target.g.lat.top;
        return out;
    }

    out.embed.resize(static_cast<std::size_t>(L.size()));
    for (int l = 0; l < L.size(); ++l) {
        RelElement img = psi_projection(ra, out.b,
                                        element_parts(ra, i[static_cast<std::size_t>(l)]));
        int idx = out.target.g.index_of_parts(img.attrs, img.tuples);
        if (idx < 0)
            throw Error(ErrorKind::InternalCheckFailed, "projected element left the lattice");
        out.embed[static_cast<std::size_t>(l)] = idx;
    }
    if (!is_embedding(L, out.target.g.lat, out.embed) ||
        out.embed[static_cast<std::size_t>(L.bottom)] != out.target.g.lat.bottom ||
        out.embed[static_cast<std::size_t>(L.top)] != out.target.g.lat.top)
        throw Error(ErrorKind::InternalCheckFailed,
                    "projection did not yield a bound-preserving embedding");
    return out;
}

namespace {

unsigned __int128 two_pow(std::size_t e) {
    if (e > 126) throw Error(ErrorKind::SizeCapExceeded, "count exceeds 128 bits");
    return static_cast<unsigned __int128>(1) << e;
}

}  // namespace

RelationalCount relational_count(int dom_size, int n_attrs) {
    if (dom_size < 1 || n_attrs < 1)
        throw Error(ErrorKind::EmptyInput, "need a nonempty domain and attribute set");
    std::int64_t nt = 1;
    for (int a = 0; a < n_attrs; ++a) {
        nt *= dom_size;
        if (nt > 64)
            throw Error(ErrorKind::SizeCapExceeded,
                        "counting supports up to 64 tuples");
    }

    RelationalCount rc;

    // route 1: sum over the retained attribute count k of
    // (ways to choose k) * 2^(classes of the dropped part)
    {
        std::vector<std::vector<unsigned __int128>> choose(
            static_cast<std::size_t>(n_attrs + 1),
            std::vector<unsigned __int128>(static_cast<std::size_t>(n_attrs + 1), 0));
        for (int n = 0; n <= n_attrs; ++n) {
            choose[static_cast<std::size_t>(n)][0] = 1;
            for (int k = 1; k <= n; ++k)
                choose[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
                    choose[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
                    (k <= n - 1
                         ? choose[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)]
                         : 0);
        }
        for (int k = 0; k <= n_attrs; ++k) {
            std::size_t classes = 1;
            for (int a = 0; a < n_attrs - k; ++a) classes *= static_cast<std::size_t>(dom_size);
            rc.formula +=
                choose[static_cast<std::size_t>(n_attrs)][static_cast<std::size_t>(k)] *
                two_pow(classes);
        }
    }

    // labels shared by the two structural routes
    std::vector<std::string> dom, attrs;
    for (int v = 0; v < dom_size; ++v) dom.push_back(std::to_string(v));
    for (int a = 0; a < n_attrs; ++a) attrs.push_back("a" + std::to_string(a));

    // route 2: class counting on the Hamming space
    {
        UltraSpace h = hamming_space(dom, attrs);
        const int n = h.n_points();
        for (std::uint64_t am = 0; am < (std::uint64_t(1) << n_attrs); ++am) {
            Bits alpha = Bits::from_mask(static_cast<std::size_t>(n_attrs), am);
            std::vector<char> seen(static_cast<std::size_t>(n), 0);
            std::size_t classes = 0;
            for (int f = 0; f < n; ++f) {
                if (seen[static_cast<std::size_t>(f)]) continue;
                ++classes;
                for (int g = f; g < n; ++g)
                    if (h.d(f, g).subset_of(alpha)) seen[static_cast<std::size_t>(g)] = 1;
            }
            rc.space_route += two_pow(classes);
        }
    }

    // route 3: connected components of the universal product frame
    {
        std::vector<std::vector<std::string>> comps(static_cast<std::size_t>(n_attrs), dom);
        ProductFrame u = universal_product_frame(attrs, comps);
        const int n = u.frame.n_worlds();
        for (std::uint64_t am = 0; am < (std::uint64_t(1) << n_attrs); ++am) {
            Bits alpha = Bits::from_mask(static_cast<std::size_t>(n_attrs), am);
            Bits seen(static_cast<std::size_t>(n));
            std::size_t components = 0;
            for (int w = 0; w < n; ++w) {
                if (seen.test(static_cast<std::size_t>(w))) continue;
                ++components;
                seen |= alpha_reachable(u.frame, w, alpha);
            }
            rc.frame_route += two_pow(components);
        }
    }

    rc.agree = rc.formula == rc.space_route && rc.space_route == rc.frame_route;
    return rc;
}

std::string u128_to_string(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s += static_cast<char>('0' + static_cast<int>(v % 10));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace framelat
