#include "framelat/ultrametric.hpp"

#include <algorithm>
#include <numeric>

namespace framelat {

UltraSpace build_space(const std::vector<std::string>& attr_labels,
                       const std::vector<std::string>& point_labels,
                       const std::vector<std::vector<Bits>>& dist) {
    validate_labels(attr_labels);
    validate_labels(point_labels);
    UltraSpace s;
    s.attr_labels = attr_labels;
    s.point_labels = point_labels;
    s.dist = dist;
    const int n = s.n_points();
    if (static_cast<int>(dist.size()) != n)
        throw Error(ErrorKind::ParseError, "distance table has wrong row count");
    for (const auto& row : dist) {
        if (static_cast<int>(row.size()) != n)
            throw Error(ErrorKind::ParseError, "distance table has a short row");
        for (const auto& cell : row)
            if (cell.size() != attr_labels.size())
                throw Error(ErrorKind::ParseError, "distance entry has wrong width");
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if ((x == y) != s.d(x, y).none())
                throw Error(ErrorKind::NotReduced,
                            "distance between '" + point_labels[static_cast<std::size_t>(x)] +
                                "' and '" + point_labels[static_cast<std::size_t>(y)] +
                                (x == y ? "' is nonzero" : "' is empty"));
            if (s.d(x, y) != s.d(y, x))
                throw Error(ErrorKind::NotSymmetric,
                            "distance between '" + point_labels[static_cast<std::size_t>(x)] +
                                "' and '" + point_labels[static_cast<std::size_t>(y)] +
                                "' is direction-dependent");
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int h = 0; h < n; ++h)
                if (!s.d(x, y).subset_of(s.d(x, h) | s.d(h, y)))
                    throw Error(ErrorKind::TriangleViolation,
                                "d(" + point_labels[static_cast<std::size_t>(x)] + "," +
                                    point_labels[static_cast<std::size_t>(y)] +
                                    ") escapes the union through '" +
                                    point_labels[static_cast<std::size_t>(h)] + "'");
    return s;
}

namespace {

std::string tuple_label(const std::vector<std::vector<std::string>>& fibers,
                        const std::vector<int>& tuple) {
    bool compact = true;
    for (const auto& fib : fibers)
        for (const auto& v : fib)
            if (v.size() != 1) compact = false;
    std::string s;
    for (std::size_t a = 0; a < fibers.size(); ++a) {
        if (!compact && a) s += ".";
        s += fibers[a][static_cast<std::size_t>(tuple[a])];
    }
    return s;
}

}  // namespace

int SectionSpace::point_of(const std::vector<int>& tuple) const {
    std::int64_t p = 0;
    for (std::size_t a = 0; a < fiber_size.size(); ++a) p += stride[a] * tuple[a];
    return static_cast<int>(p);
}

SectionSpace section_space(const std::vector<std::string>& attr_labels,
                           const std::vector<std::vector<std::string>>& fibers,
                           std::int64_t cap) {
    if (fibers.size() != attr_labels.size())
        throw Error(ErrorKind::DomainMismatch, "need one fiber per attribute");
    const int na = static_cast<int>(attr_labels.size());
    if (na == 0) throw Error(ErrorKind::EmptyInput, "a section space needs an attribute");

    SectionSpace ss;
    ss.fibers = fibers;
    ss.fiber_size.resize(static_cast<std::size_t>(na));
    ss.stride.resize(static_cast<std::size_t>(na));
    std::int64_t total = 1;
    for (int a = na - 1; a >= 0; --a) {
        const auto& fib = fibers[static_cast<std::size_t>(a)];
        if (fib.empty())
            throw Error(ErrorKind::EmptyFiber, "fiber over attribute '" +
                                                   attr_labels[static_cast<std::size_t>(a)] +
                                                   "' is empty");
        validate_labels(fib);
        ss.fiber_size[static_cast<std::size_t>(a)] = static_cast<int>(fib.size());
        ss.stride[static_cast<std::size_t>(a)] = total;
        total *= static_cast<std::int64_t>(fib.size());
        if (total > cap)
            throw Error(ErrorKind::SizeCapExceeded,
                        "section space would exceed " + std::to_string(cap) + " points");
    }

    const int n = static_cast<int>(total);
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    std::vector<int> tuple(static_cast<std::size_t>(na));
    for (int p = 0; p < n; ++p) {
        for (int a = 0; a < na; ++a) tuple[static_cast<std::size_t>(a)] = ss.coord(p, a);
        labels[static_cast<std::size_t>(p)] = tuple_label(fibers, tuple);
    }

    UltraSpace s;
    s.attr_labels = attr_labels;
    s.point_labels = std::move(labels);
    s.dist.assign(static_cast<std::size_t>(n),
                  std::vector<Bits>(static_cast<std::size_t>(n),
                                    Bits(static_cast<std::size_t>(na))));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int a = 0; a < na; ++a)
                if (ss.coord(x, a) != ss.coord(y, a))
                    s.dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)].set(
                        static_cast<std::size_t>(a));
    ss.space = std::move(s);
    return ss;
}

UltraSpace hamming_space(const std::vector<std::string>& dom,
                         const std::vector<std::string>& attr_labels, std::int64_t cap) {
    if (dom.empty()) throw Error(ErrorKind::EmptyInput, "value domain is empty");
    std::vector<std::vector<std::string>> fibers(attr_labels.size(), dom);
    return section_space(attr_labels, fibers, cap).space;
}

PairwiseReport is_pairwise_complete(const UltraSpace& s) {
    const int n = s.n_points();
    PairwiseReport r;
    for (int f = 0; f < n; ++f)
        for (int g = f + 1; g < n; ++g) {
            const Bits& d = s.d(f, g);
            std::vector<std::size_t> bits = d.indices();
            const std::size_t k = bits.size();
            if (k > 62)
                throw Error(ErrorKind::SizeCapExceeded, "distance has more than 62 attributes");
            for (std::uint64_t m = 0; m < (std::uint64_t(1) << k); ++m) {
                Bits alpha(d.size());
                for (std::size_t i = 0; i < k; ++i)
                    if ((m >> i) & 1) alpha.set(bits[i]);
                Bits beta = d - alpha;
                bool found = false;
                for (int h = 0; h < n && !found; ++h)
                    if (s.d(f, h).subset_of(alpha) && s.d(h, g).subset_of(beta)) found = true;
                if (!found) {
                    r.complete = false;
                    r.f = f;
                    r.g = g;
                    r.alpha = alpha;
                    r.beta = beta;
                    return r;
                }
            }
        }
    r.complete = true;
    return r;
}

Representation represent(const UltraSpace& s) {
    const int na = s.n_attrs();
    const int n = s.n_points();
    if (na == 0) throw Error(ErrorKind::EmptyInput, "representation needs an attribute");

    Representation rep;
    rep.class_of.assign(static_cast<std::size_t>(na), std::vector<int>(static_cast<std::size_t>(n), -1));
    std::vector<std::vector<std::string>> fibers(static_cast<std::size_t>(na));
    for (int a = 0; a < na; ++a) {
        auto& cls = rep.class_of[static_cast<std::size_t>(a)];
        int next = 0;
        for (int f = 0; f < n; ++f) {
            if (cls[static_cast<std::size_t>(f)] >= 0) continue;
            cls[static_cast<std::size_t>(f)] = next;
            // class of f at a: all g with a not in d(f,g); an equivalence
            // because the triangle law makes "agree at a" transitive
            for (int g = f + 1; g < n; ++g)
                if (cls[static_cast<std::size_t>(g)] < 0 &&
                    !s.d(f, g).test(static_cast<std::size_t>(a)))
                    cls[static_cast<std::size_t>(g)] = next;
            fibers[static_cast<std::size_t>(a)].push_back(
                s.point_labels[static_cast<std::size_t>(f)]);
            ++next;
        }
    }

    rep.sec = section_space(s.attr_labels, fibers);

    rep.iso.resize(static_cast<std::size_t>(n));
    std::vector<int> tuple(static_cast<std::size_t>(na));
    for (int f = 0; f < n; ++f) {
        for (int a = 0; a < na; ++a)
            tuple[static_cast<std::size_t>(a)] =
                rep.class_of[static_cast<std::size_t>(a)][static_cast<std::size_t>(f)];
        rep.iso[static_cast<std::size_t>(f)] = rep.sec.point_of(tuple);
    }

    // the balls B(f, attrs minus a) partition the space only because the
    // triangle law holds; the theorem then makes this map an isometry
    for (int f = 0; f < n; ++f)
        for (int g = 0; g < n; ++g)
            if (rep.sec.space.d(rep.iso[static_cast<std::size_t>(f)],
                                rep.iso[static_cast<std::size_t>(g)]) != s.d(f, g))
                throw Error(ErrorKind::InternalCheckFailed,
                            "representation failed to be an isometry at (" +
                                s.point_labels[static_cast<std::size_t>(f)] + "," +
                                s.point_labels[static_cast<std::size_t>(g)] + ")");

    std::vector<char> hit(static_cast<std::size_t>(rep.sec.space.n_points()), 0);
    for (int f = 0; f < n; ++f) hit[static_cast<std::size_t>(rep.iso[static_cast<std::size_t>(f)])] = 1;
    for (int p = 0; p < rep.sec.space.n_points(); ++p)
        if (!hit[static_cast<std::size_t>(p)]) rep.missing.push_back(p);
    rep.surjective = rep.missing.empty();
    return rep;
}

void validate_module(const MetricModule& m) {
    const int n = m.base.n_points();
    if (static_cast<int>(m.v.size()) != n)
        throw Error(ErrorKind::DomainMismatch, "module value table has wrong length");
    for (int f = 0; f < n; ++f)
        for (int g = 0; g < n; ++g)
            if (!m.v[static_cast<std::size_t>(f)].subset_of(m.base.d(f, g) |
                                                            m.v[static_cast<std::size_t>(g)]))
                throw Error(ErrorKind::ModuleLawViolation,
                            "v(" + m.base.point_labels[static_cast<std::size_t>(f)] +
                                ") escapes d | v at '" +
                                m.base.point_labels[static_cast<std::size_t>(g)] + "'");
}

MetricModule vv_module(const UltraSpace& s, const Bits& y) {
    if (y.size() != static_cast<std::size_t>(s.n_points()))
        throw Error(ErrorKind::DomainMismatch, "subset width does not match the space");
    MetricModule m;
    m.base = s;
    const std::size_t na = static_cast<std::size_t>(s.n_attrs());
    m.v.assign(static_cast<std::size_t>(s.n_points()), Bits::full(na));
    for (int f = 0; f < s.n_points(); ++f)
        y.for_each([&](std::size_t g) {
            m.v[static_cast<std::size_t>(f)] &= s.d(f, static_cast<int>(g));
        });
    validate_module(m);
    return m;
}

Bits kernel_subspace(const MetricModule& m) {
    validate_module(m);
    Bits k(static_cast<std::size_t>(m.base.n_points()));
    for (std::size_t f = 0; f < m.v.size(); ++f)
        if (m.v[f].none()) k.set(f);
    return k;
}

bool is_continuous(const UltraSpace& s, const Bits& y) {
    MetricModule m = vv_module(s, y);
    for (std::size_t f = 0; f < m.v.size(); ++f)
        if (m.v[f].none() && !y.test(f)) return false;
    return true;
}

GroundedLattice lattice_of_space(const UltraSpace& s, std::int64_t cap) {
    const int na = s.n_attrs();
    const int n = s.n_points();
    if (na > 24)
        throw Error(ErrorKind::SizeCapExceeded, "attribute-set enumeration is beyond desk scale");

    std::vector<Bits> members;
    for (std::uint64_t am = 0; am < (std::uint64_t(1) << na); ++am) {
        Bits alpha = Bits::from_mask(static_cast<std::size_t>(na), am);
        // classes of "d(x,y) inside alpha" (an equivalence by the triangle law)
        std::vector<int> cls(static_cast<std::size_t>(n), -1);
        std::vector<Bits> class_points;
        for (int f = 0; f < n; ++f) {
            if (cls[static_cast<std::size_t>(f)] >= 0) continue;
            const int id = static_cast<int>(class_points.size());
            cls[static_cast<std::size_t>(f)] = id;
            Bits blk(static_cast<std::size_t>(n));
            blk.set(static_cast<std::size_t>(f));
            for (int g = f + 1; g < n; ++g)
                if (cls[static_cast<std::size_t>(g)] < 0 && s.d(f, g).subset_of(alpha)) {
                    cls[static_cast<std::size_t>(g)] = id;
                    blk.set(static_cast<std::size_t>(g));
                }
            class_points.push_back(std::move(blk));
        }
        const std::size_t k = class_points.size();
        if (k > 62)
            throw Error(ErrorKind::SizeCapExceeded, "more than 62 classes at one attribute set");
        for (std::uint64_t um = 0; um < (std::uint64_t(1) << k); ++um) {
            Bits m(static_cast<std::size_t>(na + n));
            alpha.for_each([&](std::size_t a) { m.set(a); });
            for (std::size_t c = 0; c < k; ++c)
                if ((um >> c) & 1)
                    class_points[c].for_each(
                        [&](std::size_t p) { m.set(static_cast<std::size_t>(na) + p); });
            members.push_back(std::move(m));
            if (static_cast<std::int64_t>(members.size()) > cap)
                throw Error(ErrorKind::SizeCapExceeded,
                            "more than " + std::to_string(cap) + " closed subsets");
        }
    }
    return grounded_from_members(s.attr_labels, s.point_labels, members);
}

}  // namespace framelat
