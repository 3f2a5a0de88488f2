#include "framelat/grounded.hpp"

namespace framelat {

Bits GroundedLattice::combine(const Bits& attrs, const Bits& points) const {
    const std::size_t na = attr_labels.size();
    Bits m(na + point_labels.size());
    attrs.for_each([&](std::size_t a) { m.set(a); });
    points.for_each([&](std::size_t x) { m.set(na + x); });
    return m;
}

int GroundedLattice::index_of_parts(const Bits& attrs, const Bits& points) const {
    auto it = member_index.find(combine(attrs, points));
    return it == member_index.end() ? -1 : it->second;
}

std::string grounded_label(const std::vector<std::string>& attr_labels,
                           const std::vector<std::string>& point_labels, const Bits& attrs,
                           const Bits& points) {
    std::string s = "{";
    bool first = true;
    attrs.for_each([&](std::size_t a) {
        if (!first) s += ",";
        s += attr_labels[a];
        first = false;
    });
    s += ";";
    first = true;
    points.for_each([&](std::size_t x) {
        if (!first) s += ",";
        s += point_labels[x];
        first = false;
    });
    s += "}";
    return s;
}

GroundedLattice grounded_from_members(const std::vector<std::string>& attr_labels,
                                      const std::vector<std::string>& point_labels,
                                      const std::vector<Bits>& members) {
    const std::size_t na = attr_labels.size();
    const std::size_t nx = point_labels.size();

    MooreFamily mf;
    mf.ground = attr_labels;
    mf.ground.insert(mf.ground.end(), point_labels.begin(), point_labels.end());
    mf.members = members;
    MooreLattice ml = lattice_from_moore(mf);

    GroundedLattice g;
    g.lat = std::move(ml.lat);
    g.attr_labels = attr_labels;
    g.point_labels = point_labels;
    g.member_index = std::move(ml.elem_index);

    const int n = g.lat.size();
    g.elem_attrs.reserve(static_cast<std::size_t>(n));
    g.elem_points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Bits& m = ml.elem[static_cast<std::size_t>(i)];
        Bits attrs(na), points(nx);
        m.for_each([&](std::size_t b) {
            if (b < na)
                attrs.set(b);
            else
                points.set(b - na);
        });
        g.lat.labels[static_cast<std::size_t>(i)] =
            grounded_label(attr_labels, point_labels, attrs, points);
        g.elem_attrs.push_back(std::move(attrs));
        g.elem_points.push_back(std::move(points));
    }

    g.attr_atom.assign(na, -1);
    for (std::size_t a = 0; a < na; ++a)
        g.attr_atom[a] = g.index_of_parts(Bits::singleton(na, a), Bits(nx));
    g.point_atom.assign(nx, -1);
    for (std::size_t x = 0; x < nx; ++x)
        g.point_atom[x] = g.index_of_parts(Bits(na), Bits::singleton(nx, x));
    return g;
}

}  // namespace framelat
