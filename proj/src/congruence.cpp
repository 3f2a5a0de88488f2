#include "framelat/congruence.hpp"

#include <algorithm>
#include <numeric>

namespace framelat {

namespace {

std::vector<int> normalize_blocks(const std::vector<int>& raw) {
    std::vector<int> out(raw.size(), -1), remap;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        int r = raw[i];
        int id = -1;
        for (std::size_t k = 0; k < remap.size(); ++k)
            if (remap[k] == r) {
                id = static_cast<int>(k);
                break;
            }
        if (id < 0) {
            id = static_cast<int>(remap.size());
            remap.push_back(r);
        }
        out[i] = id;
    }
    return out;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        return true;
    }
};

}  // namespace

bool Congruence::trivial() const {
    for (std::size_t i = 0; i < block.size(); ++i)
        if (block[i] != static_cast<int>(i)) return false;
    return true;
}

bool Congruence::total() const {
    for (int b : block)
        if (b != 0) return false;
    return !block.empty();
}

bool Congruence::refines(const Congruence& o) const {
    for (std::size_t i = 0; i < block.size(); ++i)
        for (std::size_t j = i + 1; j < block.size(); ++j)
            if (block[i] == block[j] && o.block[i] != o.block[j]) return false;
    return true;
}

Congruence intersect(const Congruence& a, const Congruence& b) {
    std::vector<int> raw(a.block.size());
    int stride = 1 + *std::max_element(b.block.begin(), b.block.end());
    for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = a.block[i] * stride + b.block[i];
    return Congruence{normalize_blocks(raw)};
}

Congruence principal_congruence(const FiniteLattice& L, int a, int b) {
    std::size_t n = static_cast<std::size_t>(L.size());
    Dsu dsu(n);
    std::vector<std::pair<int, int>> work;
    auto merge = [&](int x, int y) {
        if (dsu.unite(x, y)) work.emplace_back(x, y);
    };
    merge(a, b);
    while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        for (int c = 0; c < L.size(); ++c) {
            merge(L.meet(x, c), L.meet(y, c));
            merge(L.join(x, c), L.join(y, c));
        }
    }
    std::vector<int> raw(n);
    for (std::size_t i = 0; i < n; ++i) raw[i] = dsu.find(static_cast<int>(i));
    return Congruence{normalize_blocks(raw)};
}

std::optional<Monolith> monolith(const FiniteLattice& L) {
    int n = L.size();
    std::optional<Congruence> acc;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Congruence c = principal_congruence(L, a, b);
            acc = acc ? intersect(*acc, c) : c;
        }
    if (!acc || acc->trivial()) return std::nullopt;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (acc->same(a, b) && principal_congruence(L, a, b) == *acc)
                return Monolith{*acc, {a, b}};
    throw Error(ErrorKind::InternalCheckFailed, "monolith is not principal");
}

SiReport is_subdirectly_irreducible(const FiniteLattice& L) {
    DGraph d = join_dependency(L);
    bool by_graph = dgraph_rooted(d, ji_profile(L).jis.size());
    auto mono = monolith(L);
    if (by_graph != mono.has_value())
        throw Error(ErrorKind::MethodDisagreement,
                    "join-dependency rootedness and monolith existence disagree");
    SiReport r;
    r.si = by_graph;
    if (mono) r.monolith_pair = mono->pair;
    return r;
}

}  // namespace framelat
