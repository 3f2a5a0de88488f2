#include "framelat/lattice.hpp"

#include <algorithm>
#include <unordered_set>

namespace framelat {

int FiniteLattice::join_set(const Bits& xs) const {
    int acc = bottom;
    xs.for_each([&](std::size_t i) { acc = join(acc, static_cast<int>(i)); });
    return acc;
}

int FiniteLattice::meet_set(const Bits& xs) const {
    int acc = top;
    xs.for_each([&](std::size_t i) { acc = meet(acc, static_cast<int>(i)); });
    return acc;
}

int FiniteLattice::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels[static_cast<std::size_t>(i)] == label) return i;
    throw Error(ErrorKind::UnknownLabel, "no element labelled '" + label + "'");
}

std::vector<std::pair<int, int>> FiniteLattice::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    int n = size();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x == y || !leq(x, y)) continue;
            bool cover = true;
            for (int z = 0; z < n && cover; ++z)
                if (z != x && z != y && leq(x, z) && leq(z, y)) cover = false;
            if (cover) out.emplace_back(x, y);
        }
    }
    return out;
}

void validate_labels(const std::vector<std::string>& labels) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
        if (l.empty()) throw Error(ErrorKind::ParseError, "empty label");
        for (char c : l)
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ':')
                throw Error(ErrorKind::ParseError, "label '" + l + "' contains a reserved character");
        if (!seen.insert(l).second) throw Error(ErrorKind::DuplicateLabel, "label '" + l + "' repeats");
    }
}

namespace {

// Greatest element of cand, if cand has one; -1 otherwise.
int greatest_of(const std::vector<Bits>& down, const Bits& cand) {
    for (std::size_t g = cand.first(); g < cand.size(); g = cand.next(g))
        if (cand.subset_of(down[g])) return static_cast<int>(g);
    return -1;
}

}  // namespace

FiniteLattice build_lattice(const std::vector<std::string>& labels,
                            const std::vector<std::pair<int, int>>& leq_pairs) {
    validate_labels(labels);
    std::size_t n = labels.size();
    if (n == 0) throw Error(ErrorKind::EmptyInput, "a lattice needs at least one element");

    FiniteLattice L;
    L.labels = labels;
    L.up.assign(n, Bits(n));
    for (std::size_t x = 0; x < n; ++x) L.up[x].set(x);
    for (auto [x, y] : leq_pairs) {
        if (x < 0 || y < 0 || x >= static_cast<int>(n) || y >= static_cast<int>(n))
            throw Error(ErrorKind::UnknownLabel, "order pair index out of range");
        L.up[static_cast<std::size_t>(x)].set(static_cast<std::size_t>(y));
    }
    // transitive closure
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t x = 0; x < n; ++x)
            if (L.up[x].test(k)) L.up[x] |= L.up[k];
    // antisymmetry
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (L.up[x].test(y) && L.up[y].test(x))
                throw Error(ErrorKind::NotAPoset,
                            "order cycle through '" + labels[x] + "' and '" + labels[y] + "'");
    L.down.assign(n, Bits(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (L.up[x].test(y)) L.down[y].set(x);

    L.meet_t.assign(n, std::vector<int>(n, -1));
    L.join_t.assign(n, std::vector<int>(n, -1));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x; y < n; ++y) {
            int m = greatest_of(L.down, L.down[x] & L.down[y]);
            if (m < 0)
                throw Error(ErrorKind::NotALattice, "no greatest lower bound for '" + labels[x] +
                                                        "' and '" + labels[y] + "'");
            // least upper bound: greatest of the down-sets dualized
            Bits ub = L.up[x] & L.up[y];
            int j = -1;
            for (std::size_t g = ub.first(); g < ub.size(); g = ub.next(g))
                if (ub.subset_of(L.up[g])) {
                    j = static_cast<int>(g);
                    break;
                }
            if (j < 0)
                throw Error(ErrorKind::NotALattice, "no least upper bound for '" + labels[x] +
                                                        "' and '" + labels[y] + "'");
            L.meet_t[x][y] = L.meet_t[y][x] = m;
            L.join_t[x][y] = L.join_t[y][x] = j;
        }
    }
    int bot = 0, top = 0;
    for (std::size_t x = 1; x < n; ++x) {
        bot = L.meet_t[static_cast<std::size_t>(bot)][x];
        top = L.join_t[static_cast<std::size_t>(top)][x];
    }
    L.bottom = bot;
    L.top = top;
    return L;
}

void validate_moore(const MooreFamily& mf) {
    validate_labels(mf.ground);
    std::size_t g = mf.ground.size();
    if (mf.members.empty()) throw Error(ErrorKind::EmptyInput, "closure system has no members");
    std::unordered_set<Bits, BitsHash> set;
    for (const auto& m : mf.members) {
        if (m.size() != g)
            throw Error(ErrorKind::InvalidMooreFamily, "member width differs from ground set");
        set.insert(m);
    }
    if (!set.count(Bits::full(g)))
        throw Error(ErrorKind::InvalidMooreFamily, "ground set is not a member");
    std::vector<Bits> ms(set.begin(), set.end());
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (!set.count(ms[i] & ms[j]))
                throw Error(ErrorKind::InvalidMooreFamily,
                            "not intersection-closed: " + set_label(mf.ground, ms[i]) + " and " +
                                set_label(mf.ground, ms[j]));
}

int MooreLattice::index_of_set(const Bits& member) const {
    auto it = elem_index.find(member);
    return it == elem_index.end() ? -1 : it->second;
}

MooreLattice lattice_from_moore(const MooreFamily& mf) {
    validate_moore(mf);
    MooreLattice ml;
    {
        std::unordered_set<Bits, BitsHash> set(mf.members.begin(), mf.members.end());
        ml.elem.assign(set.begin(), set.end());
    }
    std::sort(ml.elem.begin(), ml.elem.end());
    std::size_t n = ml.elem.size();
    for (std::size_t i = 0; i < n; ++i) ml.elem_index.emplace(ml.elem[i], static_cast<int>(i));

    FiniteLattice& L = ml.lat;
    L.labels.reserve(n);
    for (const auto& m : ml.elem) L.labels.push_back(set_label(mf.ground, m));
    L.up.assign(n, Bits(n));
    L.down.assign(n, Bits(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (ml.elem[x].subset_of(ml.elem[y])) {
                L.up[x].set(y);
                L.down[y].set(x);
            }
    // member_with_bit[b] = set of elements containing ground bit b
    std::vector<Bits> with_bit(mf.ground.size(), Bits(n));
    for (std::size_t x = 0; x < n; ++x)
        ml.elem[x].for_each([&](std::size_t b) { with_bit[b].set(x); });

    L.meet_t.assign(n, std::vector<int>(n, -1));
    L.join_t.assign(n, std::vector<int>(n, -1));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x; y < n; ++y) {
            int m = ml.index_of_set(ml.elem[x] & ml.elem[y]);
            if (m < 0)
                throw Error(ErrorKind::InvalidMooreFamily, "intersection escaped the family");
            // join: numerically least member containing the union; supersets of a
            // set are numerically >= it, so the first candidate is the closure.
            Bits cand = Bits::full(n);
            (ml.elem[x] | ml.elem[y]).for_each([&](std::size_t b) { cand &= with_bit[b]; });
            int j = static_cast<int>(cand.first());
            L.meet_t[x][y] = L.meet_t[y][x] = m;
            L.join_t[x][y] = L.join_t[y][x] = j;
        }
    }
    L.bottom = 0;
    L.top = static_cast<int>(n) - 1;
    return ml;
}

std::string set_label(const std::vector<std::string>& ground, const Bits& s) {
    std::string out = "{";
    bool sep = false;
    s.for_each([&](std::size_t b) {
        if (sep) out += ',';
        out += ground[b];
        sep = true;
    });
    out += '}';
    return out;
}

}  // namespace framelat
