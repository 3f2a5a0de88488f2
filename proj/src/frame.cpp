#include "framelat/frame.hpp"

#include <algorithm>
#include <tuple>

#include "framelat/lattice.hpp"

namespace framelat {

int Frame::action_index(const std::string& label) const {
    for (int a = 0; a < n_actions(); ++a)
        if (actions[static_cast<std::size_t>(a)] == label) return a;
    throw Error(ErrorKind::UnknownAction, "no action labeled '" + label + "'");
}

int Frame::world_index(const std::string& label) const {
    for (int x = 0; x < n_worlds(); ++x)
        if (worlds[static_cast<std::size_t>(x)] == label) return x;
    throw Error(ErrorKind::UnknownWorld, "no world labeled '" + label + "'");
}

Frame build_frame(const std::vector<std::string>& actions,
                  const std::vector<std::string>& worlds,
                  const std::vector<std::tuple<int, int, int>>& edges) {
    validate_labels(actions);
    validate_labels(worlds);
    Frame f;
    f.actions = actions;
    f.worlds = worlds;
    const int n = f.n_worlds();
    f.rel.assign(actions.size(), std::vector<Bits>(static_cast<std::size_t>(n),
                                                   Bits(static_cast<std::size_t>(n))));
    for (const auto& [a, x, y] : edges) {
        if (a < 0 || a >= f.n_actions())
            throw Error(ErrorKind::UnknownAction, "action index " + std::to_string(a) +
                                                      " out of range");
        if (x < 0 || x >= n)
            throw Error(ErrorKind::UnknownWorld, "world index " + std::to_string(x) +
                                                     " out of range");
        if (y < 0 || y >= n)
            throw Error(ErrorKind::UnknownWorld, "world index " + std::to_string(y) +
                                                     " out of range");
        f.rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)].set(
            static_cast<std::size_t>(y));
    }
    return f;
}

FrameProperties frame_properties(const Frame& f) {
    FrameProperties p;
    const int n = f.n_worlds();

    p.s4 = true;
    for (int a = 0; a < f.n_actions() && p.s4; ++a) {
        for (int x = 0; x < n && p.s4; ++x) {
            if (!f.related(a, x, x)) {
                p.s4 = false;
                p.s4_failure = "relation '" + f.actions[static_cast<std::size_t>(a)] +
                               "' is not reflexive at world '" +
                               f.worlds[static_cast<std::size_t>(x)] + "'";
                break;
            }
            const Bits& succ = f.rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)];
            for (std::size_t y = succ.first(); y < succ.size(); y = succ.next(y)) {
                if (!f.rel[static_cast<std::size_t>(a)][y].subset_of(succ)) {
                    std::size_t z = (f.rel[static_cast<std::size_t>(a)][y] - succ).first();
                    p.s4 = false;
                    p.s4_failure = "relation '" + f.actions[static_cast<std::size_t>(a)] +
                                   "' is not transitive: " +
                                   f.worlds[static_cast<std::size_t>(x)] + " -> " +
                                   f.worlds[y] + " -> " + f.worlds[z] + " but not " +
                                   f.worlds[static_cast<std::size_t>(x)] + " -> " + f.worlds[z];
                    break;
                }
            }
        }
    }

    Bits all_actions = Bits::full(static_cast<std::size_t>(f.n_actions()));
    p.rooted = false;
    for (int x = 0; x < n; ++x) {
        if (alpha_reachable(f, x, all_actions).count() == static_cast<std::size_t>(n)) {
            p.rooted = true;
            p.root = x;
            break;
        }
    }

    p.full = true;  // vacuous when there are no actions
    p.full_pairs.clear();
    for (int a = 0; a < f.n_actions(); ++a) {
        bool found = false;
        for (int x = 0; x < n && !found; ++x) {
            const Bits& succ = f.rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)];
            for (std::size_t y = succ.first(); y < succ.size(); y = succ.next(y)) {
                if (static_cast<int>(y) != x) {
                    p.full_pairs.emplace_back(x, static_cast<int>(y));
                    found = true;
                    break;
                }
            }
        }
        if (!found) {
            p.full = false;
            p.full_pairs.clear();
            break;
        }
    }

    return p;
}

Bits alpha_reachable(const Frame& f, int x, const Bits& alpha) {
    const int n = f.n_worlds();
    if (x < 0 || x >= n)
        throw Error(ErrorKind::UnknownWorld, "world index " + std::to_string(x) +
                                                 " out of range");
    if (alpha.size() != static_cast<std::size_t>(f.n_actions()))
        throw Error(ErrorKind::DomainMismatch, "action set width " +
                                                   std::to_string(alpha.size()) +
                                                   " does not match frame");
    Bits seen(static_cast<std::size_t>(n));
    seen.set(static_cast<std::size_t>(x));
    std::vector<int> queue{x};
    while (!queue.empty()) {
        int cur = queue.back();
        queue.pop_back();
        alpha.for_each([&](std::size_t a) {
            const Bits& succ = f.rel[a][static_cast<std::size_t>(cur)];
            for (std::size_t y = succ.first(); y < succ.size(); y = succ.next(y)) {
                if (!seen.test(y)) {
                    seen.set(y);
                    queue.push_back(static_cast<int>(y));
                }
            }
        });
    }
    return seen;
}

PMorphismReport validate_pmorphism(const std::vector<int>& psi, const Frame& source,
                                   const Frame& target) {
    if (source.actions != target.actions)
        throw Error(ErrorKind::DomainMismatch, "source and target action lists differ");
    const int n = source.n_worlds();
    if (static_cast<int>(psi.size()) != n)
        throw Error(ErrorKind::DomainMismatch, "map covers " + std::to_string(psi.size()) +
                                                   " worlds, source has " + std::to_string(n));
    for (int x = 0; x < n; ++x)
        if (psi[static_cast<std::size_t>(x)] < 0 ||
            psi[static_cast<std::size_t>(x)] >= target.n_worlds())
            throw Error(ErrorKind::UnknownWorld,
                        "image of world '" + source.worlds[static_cast<std::size_t>(x)] +
                            "' is out of range");

    PMorphismReport r;
    for (int a = 0; a < source.n_actions(); ++a) {
        for (int x = 0; x < n; ++x) {
            const int px = psi[static_cast<std::size_t>(x)];
            // forth
            const Bits& succ = source.rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)];
            for (std::size_t y = succ.first(); y < succ.size(); y = succ.next(y)) {
                const int py = psi[y];
                if (!target.related(a, px, py)) {
                    r.failure = "forth fails for action '" +
                                source.actions[static_cast<std::size_t>(a)] + "': " +
                                source.worlds[static_cast<std::size_t>(x)] + " -> " +
                                source.worlds[y] + " in the source but " +
                                target.worlds[static_cast<std::size_t>(px)] + " -> " +
                                target.worlds[static_cast<std::size_t>(py)] +
                                " fails in the target";
                    return r;
                }
            }
            // back
            const Bits& tsucc =
                target.rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(px)];
            for (std::size_t z = tsucc.first(); z < tsucc.size(); z = tsucc.next(z)) {
                bool witness = false;
                for (std::size_t y = succ.first(); y < succ.size(); y = succ.next(y)) {
                    if (psi[y] == static_cast<int>(z)) {
                        witness = true;
                        break;
                    }
                }
                if (!witness) {
                    r.failure = "back fails for action '" +
                                source.actions[static_cast<std::size_t>(a)] + "': " +
                                target.worlds[static_cast<std::size_t>(px)] + " -> " +
                                target.worlds[z] + " in the target but no source successor of " +
                                source.worlds[static_cast<std::size_t>(x)] + " maps to " +
                                target.worlds[z];
                    return r;
                }
            }
        }
    }
    r.valid = true;
    return r;
}

bool is_surjective_map(const std::vector<int>& psi, int target_size) {
    std::vector<char> hit(static_cast<std::size_t>(target_size), 0);
    for (int v : psi)
        if (v >= 0 && v < target_size) hit[static_cast<std::size_t>(v)] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

int ProductFrame::world_of(const std::vector<int>& tuple) const {
    std::int64_t w = 0;
    for (std::size_t a = 0; a < comp_size.size(); ++a)
        w += stride[a] * tuple[a];
    return static_cast<int>(w);
}

ProductFrame universal_product_frame(const std::vector<std::string>& actions,
                                     const std::vector<std::vector<std::string>>& components,
                                     std::int64_t cap) {
    if (components.size() != actions.size())
        throw Error(ErrorKind::DomainMismatch, "need one component per action");
    const int na = static_cast<int>(actions.size());
    if (na == 0) throw Error(ErrorKind::EmptyInput, "product frame needs at least one action");

    ProductFrame pf;
    pf.components = components;
    pf.comp_size.resize(static_cast<std::size_t>(na));
    pf.stride.resize(static_cast<std::size_t>(na));
    std::int64_t total = 1;
    // Last action varies fastest, so world order is lexicographic on tuples.
    for (int a = na - 1; a >= 0; --a) {
        const auto& comp = components[static_cast<std::size_t>(a)];
        if (comp.empty())
            throw Error(ErrorKind::EmptyComponent,
                        "component for action '" + actions[static_cast<std::size_t>(a)] +
                            "' is empty");
        validate_labels(comp);
        pf.comp_size[static_cast<std::size_t>(a)] = static_cast<int>(comp.size());
        pf.stride[static_cast<std::size_t>(a)] = total;
        total *= static_cast<std::int64_t>(comp.size());
        if (total > cap)
            throw Error(ErrorKind::SizeCapExceeded,
                        "product frame would exceed " + std::to_string(cap) + " worlds");
    }

    const int n = static_cast<int>(total);
    std::vector<std::string> worlds(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) {
        std::string s = "(";
        for (int a = 0; a < na; ++a) {
            if (a) s += ",";
            s += components[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                pf.coord(w, a))];
        }
        s += ")";
        worlds[static_cast<std::size_t>(w)] = s;
    }

    Frame f;
    f.actions = actions;
    f.worlds = std::move(worlds);
    f.rel.assign(static_cast<std::size_t>(na),
                 std::vector<Bits>(static_cast<std::size_t>(n), Bits(static_cast<std::size_t>(n))));
    for (int a = 0; a < na; ++a) {
        for (int x = 0; x < n; ++x) {
            // Vary coordinate a only: x R_a y iff x,y agree off a.
            const std::int64_t base =
                x - pf.coord(x, a) * pf.stride[static_cast<std::size_t>(a)];
            for (int v = 0; v < pf.comp_size[static_cast<std::size_t>(a)]; ++v) {
                const std::int64_t y = base + v * pf.stride[static_cast<std::size_t>(a)];
                f.rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)].set(
                    static_cast<std::size_t>(y));
            }
        }
    }
    pf.frame = std::move(f);
    return pf;
}

Uniformization uniformize(const ProductFrame& u, std::int64_t cap) {
    const int na = u.frame.n_actions();
    if (na == 0) throw Error(ErrorKind::EmptyInput, "product frame needs at least one action");
    int a0 = 0;
    for (int a = 1; a < na; ++a)
        if (u.comp_size[static_cast<std::size_t>(a)] > u.comp_size[static_cast<std::size_t>(a0)])
            a0 = a;

    bool already_uniform = true;
    for (int a = 0; a < na; ++a)
        if (u.comp_size[static_cast<std::size_t>(a)] != u.comp_size[static_cast<std::size_t>(a0)])
            already_uniform = false;

    Uniformization out;
    if (already_uniform) {
        out.uniform = u;
        out.onto_original.source = u.frame;
        out.onto_original.target = u.frame;
        out.onto_original.map.resize(static_cast<std::size_t>(u.frame.n_worlds()));
        for (int w = 0; w < u.frame.n_worlds(); ++w)
            out.onto_original.map[static_cast<std::size_t>(w)] = w;
        return out;
    }

    const auto& big = u.components[static_cast<std::size_t>(a0)];
    std::vector<std::vector<std::string>> comps(static_cast<std::size_t>(na), big);
    out.uniform = universal_product_frame(u.frame.actions, comps, cap);

    // p_a: identity on the shared prefix, clamp the rest to the last element.
    out.onto_original.source = out.uniform.frame;
    out.onto_original.target = u.frame;
    const int n = out.uniform.frame.n_worlds();
    out.onto_original.map.resize(static_cast<std::size_t>(n));
    std::vector<int> tuple(static_cast<std::size_t>(na));
    for (int w = 0; w < n; ++w) {
        for (int a = 0; a < na; ++a)
            tuple[static_cast<std::size_t>(a)] =
                std::min(out.uniform.coord(w, a), u.comp_size[static_cast<std::size_t>(a)] - 1);
        out.onto_original.map[static_cast<std::size_t>(w)] = u.world_of(tuple);
    }

    auto rep = validate_pmorphism(out.onto_original.map, out.uniform.frame, u.frame);
    if (!rep.valid)
        throw Error(ErrorKind::InternalCheckFailed,
                    "uniformization map is not a p-morphism: " + rep.failure);
    if (!is_surjective_map(out.onto_original.map, u.frame.n_worlds()))
        throw Error(ErrorKind::InternalCheckFailed, "uniformization map is not surjective");
    return out;
}

}  // namespace framelat
