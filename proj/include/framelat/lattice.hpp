#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "framelat/bits.hpp"
#include "framelat/error.hpp"

namespace framelat {

// Finite bounded lattice with an explicit order matrix and full meet/join
// tables. Elements are identified by index; labels are for i/o only.
struct FiniteLattice {
    std::vector<std::string> labels;
    std::vector<Bits> up;    // up[x]   = { y : x <= y }
    std::vector<Bits> down;  // down[x] = { y : y <= x }
    std::vector<std::vector<int>> meet_t, join_t;
    int bottom = -1;
    int top = -1;

    int size() const { return static_cast<int>(labels.size()); }
    bool leq(int x, int y) const { return up[static_cast<std::size_t>(x)].test(static_cast<std::size_t>(y)); }
    int meet(int x, int y) const { return meet_t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
    int join(int x, int y) const { return join_t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }

    // Join of a set of element indices; empty set gives bottom.
    int join_set(const Bits& xs) const;
    // Meet of a set of element indices; empty set gives top.
    int meet_set(const Bits& xs) const;

    int index_of(const std::string& label) const;  // UnknownLabel if absent

    // y covers x in the order (x < y with nothing strictly between).
    std::vector<std::pair<int, int>> cover_pairs() const;
};

// Reject labels that would break the line-oriented formats.
void validate_labels(const std::vector<std::string>& labels);

// Builds a lattice from labels and a set of order pairs (x <= y). The
// reflexive-transitive closure is taken, so listing cover pairs is enough.
// Throws NotAPoset / NotALattice with witnesses.
FiniteLattice build_lattice(const std::vector<std::string>& labels,
                            const std::vector<std::pair<int, int>>& leq_pairs);

// Closure system on a finite ground set: contains the ground set and is
// closed under pairwise (hence all nonempty) intersections.
struct MooreFamily {
    std::vector<std::string> ground;
    std::vector<Bits> members;  // each of width ground.size()
};

void validate_moore(const MooreFamily& mf);  // InvalidMooreFamily with witness

// Lattice of a closure system: order is inclusion, meet is intersection,
// join is the least member containing the union. Elements are the members
// sorted ascending as bit values, so bottom is index 0 and top is last.
struct MooreLattice {
    FiniteLattice lat;
    std::vector<Bits> elem;  // member of each element, canonical order
    int index_of_set(const Bits& member) const;  // -1 if not a member
    std::unordered_map<Bits, int, BitsHash> elem_index;
};

MooreLattice lattice_from_moore(const MooreFamily& mf);

// Label helper for set-valued elements: "{x,y}" in ground order.
std::string set_label(const std::vector<std::string>& ground, const Bits& s);

}  // namespace framelat
