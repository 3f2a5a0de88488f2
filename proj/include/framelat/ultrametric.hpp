#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "framelat/bits.hpp"
#include "framelat/error.hpp"
#include "framelat/grounded.hpp"

namespace framelat {

// Generalized ultrametric space: distances are subsets of the attribute set,
// reduced (zero iff equal), symmetric, with the triangle law
// d(f,g) <= d(f,h) | d(h,g).
struct UltraSpace {
    std::vector<std::string> attr_labels;
    std::vector<std::string> point_labels;
    std::vector<std::vector<Bits>> dist;  // [x][y], width |attrs|

    int n_attrs() const { return static_cast<int>(attr_labels.size()); }
    int n_points() const { return static_cast<int>(point_labels.size()); }
    const Bits& d(int x, int y) const {
        return dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
    }
};

// Validates the three space axioms; throws NotReduced / NotSymmetric /
// TriangleViolation naming witnesses.
UltraSpace build_space(const std::vector<std::string>& attr_labels,
                       const std::vector<std::string>& point_labels,
                       const std::vector<std::vector<Bits>>& dist);

// All functions attrs -> dom with distance "the attrs where they differ".
// Point order is lexicographic (first attribute most significant); labels are
// concatenated value labels when all are single characters, dot-joined else.
UltraSpace hamming_space(const std::vector<std::string>& dom,
                         const std::vector<std::string>& attr_labels,
                         std::int64_t cap = 1000000);

// Product of one nonempty fiber per attribute, with Hamming-style distance.
// Constant fibers give exactly hamming_space.
struct SectionSpace {
    UltraSpace space;
    std::vector<std::vector<std::string>> fibers;  // per attr
    std::vector<int> fiber_size;
    std::vector<std::int64_t> stride;

    int coord(int point, int a) const {
        return static_cast<int>((point / stride[static_cast<std::size_t>(a)]) %
                                fiber_size[static_cast<std::size_t>(a)]);
    }
    int point_of(const std::vector<int>& tuple) const;
};

SectionSpace section_space(const std::vector<std::string>& attr_labels,
                           const std::vector<std::vector<std::string>>& fibers,
                           std::int64_t cap = 1000000);

// Pairwise completeness: every distance split d(f,g) = alpha | beta with
// alpha, beta disjoint admits an interpolant h with d(f,h) <= alpha and
// d(h,g) <= beta. (Disjoint splits suffice; larger covers reduce to them.)
struct PairwiseReport {
    bool complete = false;
    int f = -1, g = -1;  // witness pair when incomplete
    Bits alpha, beta;    // failing split
};

PairwiseReport is_pairwise_complete(const UltraSpace& s);

// The canonical representation into a section space: fiber at attribute a
// is the set of balls B(f, attrs minus a), i.e. classes of "agrees at a up
// to distance". The map is a verified isometry; it is onto exactly when the
// space is pairwise complete.
struct Representation {
    SectionSpace sec;
    std::vector<int> iso;                    // ambient point -> section point
    std::vector<std::vector<int>> class_of;  // per attr: point -> fiber class
    bool surjective = false;
    std::vector<int> missing;  // section points outside the image
};

Representation represent(const UltraSpace& s);

// Metric module: v(f) <= d(f,g) | v(g) for all f,g.
struct MetricModule {
    UltraSpace base;
    std::vector<Bits> v;  // per point, width |attrs|
};

void validate_module(const MetricModule& m);  // ModuleLawViolation with witness

// v(f) = intersection of d(f,g) over g in y; constantly attrs when y is empty.
MetricModule vv_module(const UltraSpace& s, const Bits& y);

// Zero set of v. Always a continuous subspace of the base.
Bits kernel_subspace(const MetricModule& m);

// y is continuous when vv_y(f) empty forces f into y.
bool is_continuous(const UltraSpace& s, const Bits& y);

// Lattice of closed Z <= attrs + points: x joins Z whenever some y in Z has
// d(x,y) inside Z's attrs. Closed point sets for fixed attrs alpha are the
// unions of classes of the equivalence "d(x,y) <= alpha".
GroundedLattice lattice_of_space(const UltraSpace& s, std::int64_t cap = 1000000);

}  // namespace framelat
