#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "framelat/bits.hpp"
#include "framelat/error.hpp"

namespace framelat {

// Multimodal frame: one binary relation per action, stored as successor
// rows. Worlds and actions are identified by index; labels are for i/o.
struct Frame {
    std::vector<std::string> actions;
    std::vector<std::string> worlds;
    // rel[a][x] = successors of world x under action a
    std::vector<std::vector<Bits>> rel;

    int n_actions() const { return static_cast<int>(actions.size()); }
    int n_worlds() const { return static_cast<int>(worlds.size()); }
    bool related(int a, int x, int y) const {
        return rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)].test(
            static_cast<std::size_t>(y));
    }
    int action_index(const std::string& label) const;  // UnknownAction if absent
    int world_index(const std::string& label) const;   // UnknownWorld if absent
};

// Edge list form: (action, source, target) triples by index.
Frame build_frame(const std::vector<std::string>& actions,
                  const std::vector<std::string>& worlds,
                  const std::vector<std::tuple<int, int, int>>& edges);

struct FrameProperties {
    bool s4 = false;
    bool rooted = false;
    bool full = false;
    // witnesses, meaningful when the corresponding flag is true
    int root = -1;                                   // a world reaching all others
    std::vector<std::pair<int, int>> full_pairs;     // per action: distinct related pair
    // failure evidence, meaningful when the flag is false
    std::string s4_failure;                          // empty when s4 holds
};

FrameProperties frame_properties(const Frame& f);

// Worlds reachable from x along edges whose action lies in alpha.
// Includes x itself (empty path).
Bits alpha_reachable(const Frame& f, int x, const Bits& alpha);

struct PMorphism {
    Frame source;
    Frame target;
    std::vector<int> map;  // source world index -> target world index
};

struct PMorphismReport {
    bool valid = false;
    std::string failure;  // names the failing clause and witnesses
};

// Checks the forth clause (x R_a y implies psi(x) R_a psi(y)) and the back
// clause (psi(x) R_a z implies x R_a y for some y with psi(y) = z).
// Source and target must share the same action list.
PMorphismReport validate_pmorphism(const std::vector<int>& psi, const Frame& source,
                                   const Frame& target);

bool is_surjective_map(const std::vector<int>& psi, int target_size);

// Product of one finite component per action. World i encodes the tuple of
// mixed-radix digits of i: coordinate for action a is (i / stride[a]) % size[a].
// Relation a holds between tuples agreeing at every coordinate other than a,
// so each relation is an equivalence.
struct ProductFrame {
    Frame frame;
    std::vector<std::vector<std::string>> components;  // per action: component labels
    std::vector<int> comp_size;
    std::vector<std::int64_t> stride;

    int coord(int world, int a) const {
        return static_cast<int>((world / stride[static_cast<std::size_t>(a)]) %
                                comp_size[static_cast<std::size_t>(a)]);
    }
    int world_of(const std::vector<int>& tuple) const;
};

ProductFrame universal_product_frame(const std::vector<std::string>& actions,
                                     const std::vector<std::vector<std::string>>& components,
                                     std::int64_t cap = 1000000);

// Replaces U by the uniform product on its largest component (first such by
// action order), together with a surjective p-morphism onto U. Coordinate
// surjections are identity on the shared prefix and clamp the rest to the
// last element. Already-uniform input returns the identity morphism.
struct Uniformization {
    ProductFrame uniform;
    PMorphism onto_original;
};

Uniformization uniformize(const ProductFrame& u, std::int64_t cap = 1000000);

}  // namespace framelat
