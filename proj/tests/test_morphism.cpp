#include <doctest.h>

#include "framelat/morphism.hpp"
#include "support/corpus.hpp"

using namespace framelat;

TEST_CASE("embedding a chain into a boolean square") {
    auto L = corpus::chain(2);
    auto M = corpus::boolean(2);
    auto f = find_embedding(L, M, true);
    REQUIRE(f.has_value());
    CHECK(*f == std::vector<int>{0, 3});
    // without bound pinning the lexicographically first witness starts lower
    auto g = find_embedding(L, M, false);
    REQUIRE(g.has_value());
    CHECK(*g == std::vector<int>{0, 1});
}

TEST_CASE("the diamond does not embed into a distributive lattice") {
    CHECK(!find_embedding(corpus::m3(), corpus::boolean(3), false).has_value());
    CHECK(!find_embedding(corpus::m3(), corpus::boolean(4), false).has_value());
    CHECK(!find_embedding(corpus::n5(), corpus::boolean(4), false).has_value());
}

TEST_CASE("first chain embedding into the pentagon") {
    auto f = find_embedding(corpus::chain(3), corpus::n5(), false);
    REQUIRE(f.has_value());
    CHECK(*f == std::vector<int>{0, 1, 3});  // bot, a, c
}

TEST_CASE("embeddings found are verified embeddings") {
    auto lats = corpus::all_lattices_upto(5);
    for (const auto& L : lats)
        for (const auto& M : lats) {
            auto f = find_embedding(L, M, true);
            if (f) {
                CHECK(is_embedding(L, M, *f));
                CHECK(is_bound_preserving(L, M, *f));
            }
            // an embedding of L into itself always exists: the identity
            if (&L == &M) CHECK(f.has_value());
        }
}

TEST_CASE("isomorphism search") {
    auto m3 = corpus::m3();
    auto relabeled = build_lattice({"t", "p", "q", "r", "b"},
                                   {{4, 1}, {4, 2}, {4, 3}, {1, 0}, {2, 0}, {3, 0}});
    auto f = find_isomorphism(m3, relabeled);
    REQUIRE(f.has_value());
    CHECK(is_embedding(m3, relabeled, *f));
    CHECK(!find_isomorphism(m3, corpus::n5()).has_value());
    CHECK(!find_isomorphism(corpus::chain(4), corpus::boolean(2)).has_value());
}

TEST_CASE("left adjoint of a chain embedding") {
    auto L = corpus::chain(2);
    auto M = corpus::boolean(2);
    std::vector<int> f{0, 3};
    auto mu = left_adjoint(L, M, f);
    CHECK(mu == std::vector<int>{0, 1, 1, 1});
    for (int m = 0; m < M.size(); ++m)
        for (int l = 0; l < L.size(); ++l)
            CHECK(L.leq(mu[static_cast<std::size_t>(m)], l) ==
                  M.leq(m, f[static_cast<std::size_t>(l)]));
}

TEST_CASE("left adjoint input validation") {
    auto c3 = corpus::chain(3);
    auto c2 = corpus::chain(2);
    try {
        left_adjoint(c3, c2, {0, 1, 0});
        FAIL("expected NotAMorphism");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAMorphism);
    }
    try {
        left_adjoint(c2, c3, {0, 1});
        FAIL("expected NotBoundPreserving");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotBoundPreserving);
    }
}

TEST_CASE("left adjoint exists for every bound-preserving morphism on the census") {
    auto lats = corpus::all_lattices_upto(4);
    for (const auto& L : lats)
        for (const auto& M : lats) {
            // enumerate all maps L -> M and adjoin the valid ones
            std::size_t n = static_cast<std::size_t>(L.size());
            std::vector<int> f(n, 0);
            while (true) {
                if (is_lattice_morphism(L, M, f) && is_bound_preserving(L, M, f))
                    CHECK_NOTHROW(left_adjoint(L, M, f));
                std::size_t i = 0;
                while (i < n && ++f[i] == M.size()) f[i++] = 0;
                if (i == n) break;
            }
        }
}
