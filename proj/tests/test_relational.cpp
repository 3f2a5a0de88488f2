#include "framelat/relational.hpp"

#include <doctest.h>

#include "framelat/frame.hpp"
#include "framelat/frame_lattice.hpp"
#include "framelat/morphism.hpp"
#include "framelat/ultrametric.hpp"
#include "support/corpus.hpp"

using namespace framelat;

namespace {

std::vector<std::string> dom(int n) {
    std::vector<std::string> out;
    for (int v = 0; v < n; ++v) out.push_back(std::to_string(v));
    return out;
}

RelElement re(const RelationalLattice& ra, std::uint64_t attrs, std::initializer_list<int> tuples) {
    RelElement e;
    e.attrs = Bits::from_mask(static_cast<std::size_t>(ra.n_attrs()), attrs);
    e.tuples = Bits(static_cast<std::size_t>(ra.n_tuples()));
    for (int t : tuples) e.tuples.set(static_cast<std::size_t>(t));
    return e;
}

int idx(const RelationalLattice& ra, std::uint64_t attrs, std::initializer_list<int> tuples) {
    return element_index(ra, re(ra, attrs, tuples));
}

// embedding of R(D,B) into R(D,A) picking the all-zeros extension off B:
// (beta, Z) |-> (beta, tuples over A restricting into Z with zero digits off B)
std::vector<int> ball_embedding(const RelationalLattice& small, const RelationalLattice& big,
                                const Bits& b) {
    auto sel = b.indices();
    std::vector<int> out;
    for (int l = 0; l < small.g.lat.size(); ++l) {
        RelElement e;
        e.attrs = Bits(static_cast<std::size_t>(big.n_attrs()));
        for (std::size_t i = 0; i < sel.size(); ++i)
            if (small.g.elem_attrs[static_cast<std::size_t>(l)].test(i)) e.attrs.set(sel[i]);
        e.tuples = Bits(static_cast<std::size_t>(big.n_tuples()));
        small.g.elem_points[static_cast<std::size_t>(l)].for_each([&](std::size_t z) {
            std::vector<int> digits(static_cast<std::size_t>(big.n_attrs()), 0);
            for (std::size_t i = sel.size(); i-- > 0;) {
                digits[sel[i]] = static_cast<int>(z) % small.dom_size();
                z /= static_cast<std::size_t>(small.dom_size());
            }
            e.tuples.set(static_cast<std::size_t>(big.tuple_of(digits)));
        });
        out.push_back(element_index(big, e));
    }
    return out;
}

std::vector<int> section_embedding(const RelationalLattice& small, const RelationalLattice& big,
                                   const Bits& b) {
    std::vector<int> out;
    for (int l = 0; l < small.g.lat.size(); ++l)
        out.push_back(element_index(big, adjoint_section(big, b, element_parts(small, l))));
    return out;
}

}  // namespace

TEST_CASE("relation lattice sizes, bounds, and atoms") {
    struct Row {
        int d, na, size;
    };
    for (Row r : {Row{2, 1, 6}, Row{2, 2, 26}, Row{3, 1, 10}, Row{2, 3, 318}, Row{3, 2, 530}}) {
        std::vector<std::string> attrs;
        for (int a = 0; a < r.na; ++a) attrs.push_back(std::string(1, static_cast<char>('a' + a)));
        auto ra = relational_lattice(dom(r.d), attrs);
        CAPTURE(r.d);
        CAPTURE(r.na);
        CHECK(ra.g.lat.size() == r.size);
        // bottom is the empty pair, top the full one
        CHECK(ra.g.elem_attrs[static_cast<std::size_t>(ra.g.lat.bottom)].none());
        CHECK(ra.g.elem_points[static_cast<std::size_t>(ra.g.lat.bottom)].none());
        CHECK(ra.g.elem_attrs[static_cast<std::size_t>(ra.g.lat.top)].count() ==
              static_cast<std::size_t>(r.na));
        CHECK(ra.g.elem_points[static_cast<std::size_t>(ra.g.lat.top)].count() ==
              static_cast<std::size_t>(ra.n_tuples()));
        for (int a = 0; a < r.na; ++a) CHECK(ra.g.attr_atom[static_cast<std::size_t>(a)] >= 0);
        for (int t = 0; t < ra.n_tuples(); ++t)
            CHECK(ra.g.point_atom[static_cast<std::size_t>(t)] >= 0);
    }

    auto r2 = relational_lattice(dom(2), {"a", "b"});
    CHECK(r2.g.lat.labels[static_cast<std::size_t>(r2.g.lat.bottom)] == "{;}");
    CHECK(r2.g.lat.labels[static_cast<std::size_t>(r2.g.lat.top)] == "{a,b;00,01,10,11}");

    // no attributes: only the empty pair and the single empty tuple
    auto r0 = relational_lattice(dom(2), {});
    CHECK(r0.g.lat.size() == 2);
    CHECK(r0.n_tuples() == 1);
    CHECK(r0.g.point_labels[0] == "()");

    CHECK_THROWS_WITH_AS(relational_lattice(dom(2), {"a", "b", "c"}, 100),
                         doctest::Contains("100"), Error);
    CHECK_THROWS_AS(relational_lattice({}, {"a"}), Error);
}

TEST_CASE("relation lattice agrees with the Hamming space lattice elementwise") {
    struct Row {
        int d, na;
    };
    for (Row r : {Row{2, 1}, Row{2, 2}, Row{3, 1}, Row{3, 2}}) {
        std::vector<std::string> attrs;
        for (int a = 0; a < r.na; ++a) attrs.push_back(std::string(1, static_cast<char>('a' + a)));
        auto ra = relational_lattice(dom(r.d), attrs);
        auto ls = lattice_of_space(hamming_space(dom(r.d), attrs));
        CAPTURE(r.d);
        CAPTURE(r.na);
        REQUIRE(ra.g.lat.size() == ls.lat.size());
        CHECK(ra.g.point_labels == ls.point_labels);
        for (int e = 0; e < ra.g.lat.size(); ++e) {
            CHECK(ra.g.elem_attrs[static_cast<std::size_t>(e)] ==
                  ls.elem_attrs[static_cast<std::size_t>(e)]);
            CHECK(ra.g.elem_points[static_cast<std::size_t>(e)] ==
                  ls.elem_points[static_cast<std::size_t>(e)]);
        }
        for (int x = 0; x < ra.g.lat.size(); ++x)
            for (int y = 0; y < ra.g.lat.size(); ++y)
                CHECK(ra.g.lat.join(x, y) == ls.lat.join(x, y));
    }
}

TEST_CASE("element parts and index round trip") {
    auto ra = relational_lattice(dom(2), {"a", "b"});
    for (int e = 0; e < ra.g.lat.size(); ++e)
        CHECK(element_index(ra, element_parts(ra, e)) == e);
    // {00} alone is not closed under changing a
    CHECK_THROWS_AS(element_index(ra, re(ra, 0b01, {0})), Error);

    for (int t = 0; t < ra.n_tuples(); ++t) {
        std::vector<int> digits;
        for (int a = 0; a < ra.n_attrs(); ++a) digits.push_back(ra.digit(t, a));
        CHECK(ra.tuple_of(digits) == t);
    }
    // first attribute is the most significant digit
    CHECK(ra.digit(2, 0) == 1);
    CHECK(ra.digit(2, 1) == 0);
}

TEST_CASE("projection and its right adjoint form the slice adjunction") {
    auto ra = relational_lattice(dom(2), {"a", "b"});
    auto rb = relational_lattice(dom(2), {"a"});
    Bits b = Bits::from_mask(2, 0b01);  // keep attribute a

    // ({b}; {00,01}) restricts to (; {0})
    RelElement p = psi_projection(ra, b, re(ra, 0b10, {0, 1}));
    CHECK(element_index(rb, p) == idx(rb, 0, {0}));

    // top goes to top, and every image lands in the smaller lattice
    CHECK(element_index(rb, psi_projection(ra, b, element_parts(ra, ra.g.lat.top))) ==
          rb.g.lat.top);
    std::vector<int> proj;
    for (int e = 0; e < ra.g.lat.size(); ++e)
        proj.push_back(element_index(rb, psi_projection(ra, b, element_parts(ra, e))));

    // section then projection is the identity
    std::vector<int> sect;
    for (int e = 0; e < rb.g.lat.size(); ++e) {
        RelElement s = adjoint_section(ra, b, element_parts(rb, e));
        sect.push_back(element_index(ra, s));
        CHECK(element_index(rb, psi_projection(ra, b, s)) == e);
    }

    // psi(x) <= y iff x <= section(y)
    for (int x = 0; x < ra.g.lat.size(); ++x)
        for (int y = 0; y < rb.g.lat.size(); ++y)
            CHECK(rb.g.lat.leq(proj[static_cast<std::size_t>(x)], y) ==
                  ra.g.lat.leq(x, sect[static_cast<std::size_t>(y)]));

    // restricted to the filter above (A minus B; ), psi is an isomorphism
    int z = idx(ra, 0b10, {});
    std::vector<int> filt;
    for (int x = 0; x < ra.g.lat.size(); ++x)
        if (ra.g.lat.leq(z, x)) filt.push_back(x);
    REQUIRE(static_cast<int>(filt.size()) == rb.g.lat.size());
    std::vector<int> image;
    for (int x : filt) image.push_back(proj[static_cast<std::size_t>(x)]);
    CHECK(is_injective(image));
    for (std::size_t i = 0; i < filt.size(); ++i)
        for (std::size_t j = 0; j < filt.size(); ++j)
            CHECK(ra.g.lat.leq(filt[i], filt[j]) == rb.g.lat.leq(image[i], image[j]));

    CHECK_THROWS_AS(psi_projection(ra, Bits::from_mask(3, 0b01), element_parts(ra, 0)), Error);
}

TEST_CASE("top normalization leaves top-preserving embeddings alone") {
    auto ra = relational_lattice(dom(2), {"a"});
    std::vector<int> id;
    for (int e = 0; e < ra.g.lat.size(); ++e) id.push_back(e);
    auto n = normalize_top(ra.g.lat, ra, id);
    CHECK(n.unchanged);
    CHECK(n.embed == id);
    CHECK(n.alpha == Bits::full(1));
    CHECK(n.target.g.lat.size() == 6);
}

TEST_CASE("top normalization of a 2-chain onto a ball") {
    auto ra = relational_lattice(dom(2), {"a", "b"});
    auto L = corpus::chain(2);
    // top goes to ({a}; ball of 00 in direction a)
    std::vector<int> i{idx(ra, 0, {}), idx(ra, 0b01, {0, 2})};
    REQUIRE(is_embedding(L, ra.g.lat, i));

    auto n = normalize_top(L, ra, i);
    CHECK(!n.unchanged);
    CHECK(n.alpha == Bits::from_mask(2, 0b01));
    CHECK(n.target.g.lat.size() == 6);
    CHECK(n.embed[static_cast<std::size_t>(L.top)] == n.target.g.lat.top);
    CHECK(n.embed[static_cast<std::size_t>(L.bottom)] == n.target.g.lat.bottom);
    CHECK(is_embedding(L, n.target.g.lat, n.embed));
}

TEST_CASE("top normalization when the image of top has no tuples") {
    auto ra = relational_lattice(dom(2), {"a", "b"});
    auto L = corpus::chain(2);
    std::vector<int> i{idx(ra, 0, {}), idx(ra, 0b01, {})};
    REQUIRE(is_embedding(L, ra.g.lat, i));

    auto n = normalize_top(L, ra, i);
    CHECK(!n.unchanged);
    CHECK(n.target.g.lat.size() == 6);
    CHECK(n.embed[static_cast<std::size_t>(L.bottom)] == n.target.g.lat.bottom);
    CHECK(n.embed[static_cast<std::size_t>(L.top)] == n.target.g.lat.top);
}

TEST_CASE("top normalization rejects bad inputs") {
    auto ra = relational_lattice(dom(2), {"a"});
    auto b2 = corpus::boolean(2);
    std::vector<int> i{idx(ra, 0, {}), idx(ra, 0, {0}), idx(ra, 0, {1}), idx(ra, 0, {0, 1})};
    REQUIRE(is_embedding(b2, ra.g.lat, i));
    CHECK_THROWS_WITH_AS(normalize_top(b2, ra, i),
                         doctest::Contains("subdirectly irreducible"), Error);

    auto L = corpus::chain(2);
    std::vector<int> bad{ra.g.lat.top, ra.g.lat.top};
    CHECK_THROWS_WITH_AS(normalize_top(L, ra, bad), doctest::Contains("embedding"), Error);
}

TEST_CASE("top normalization moves an ideal embedding onto the full lattice") {
    auto rb = relational_lattice(dom(2), {"a"});
    auto ra = relational_lattice(dom(2), {"a", "b"});
    std::vector<int> i = ball_embedding(rb, ra, Bits::from_mask(2, 0b01));
    REQUIRE(is_embedding(rb.g.lat, ra.g.lat, i));
    REQUIRE(i[static_cast<std::size_t>(rb.g.lat.top)] != ra.g.lat.top);

    auto n = normalize_top(rb.g.lat, ra, i);
    CHECK(!n.unchanged);
    CHECK(n.alpha == Bits::from_mask(2, 0b01));
    REQUIRE(n.target.g.lat.size() == 6);
    // transporting the ideal back identifies it with the one-attribute lattice
    std::vector<int> id{0, 1, 2, 3, 4, 5};
    CHECK(n.embed == id);
}

TEST_CASE("bound normalization leaves bound-preserving embeddings alone") {
    auto ra = relational_lattice(dom(2), {"a"});
    std::vector<int> id;
    for (int e = 0; e < ra.g.lat.size(); ++e) id.push_back(e);
    auto n = normalize_bot(ra.g.lat, ra, id);
    CHECK(n.unchanged);
    CHECK(!n.boolean_case);
    CHECK(n.embed == id);
    CHECK(n.b == Bits::full(1));
}

TEST_CASE("bound normalization projects away the attrs at bottom") {
    auto rb = relational_lattice(dom(2), {"a"});
    auto ra = relational_lattice(dom(2), {"a", "b"});
    std::vector<int> i = section_embedding(rb, ra, Bits::from_mask(2, 0b01));
    REQUIRE(is_embedding(rb.g.lat, ra.g.lat, i));
    REQUIRE(i[static_cast<std::size_t>(rb.g.lat.top)] == ra.g.lat.top);
    REQUIRE(i[static_cast<std::size_t>(rb.g.lat.bottom)] == idx(ra, 0b10, {}));

    auto n = normalize_bot(rb.g.lat, ra, i);
    CHECK(!n.unchanged);
    CHECK(!n.boolean_case);
    CHECK(n.b == Bits::from_mask(2, 0b01));
    std::vector<int> id{0, 1, 2, 3, 4, 5};
    CHECK(n.embed == id);
}

TEST_CASE("bound normalization collapses a leftover tuple to the Boolean case") {
    auto ra = relational_lattice(dom(2), {"a", "b"});
    auto L = corpus::chain(2);
    std::vector<int> i{idx(ra, 0, {0}), ra.g.lat.top};
    REQUIRE(is_embedding(L, ra.g.lat, i));

    auto n = normalize_bot(L, ra, i);
    CHECK(n.boolean_case);
    CHECK(n.b == Bits::full(2));
    CHECK(n.target.g.lat.size() == 26);
    CHECK(n.embed[static_cast<std::size_t>(L.bottom)] == n.target.g.lat.bottom);
    CHECK(n.embed[static_cast<std::size_t>(L.top)] == n.target.g.lat.top);
}

TEST_CASE("bound normalization rejects bad inputs") {
    auto rb = relational_lattice(dom(2), {"a"});
    auto ra = relational_lattice(dom(2), {"a", "b"});

    std::vector<int> ideal = ball_embedding(rb, ra, Bits::from_mask(2, 0b01));
    CHECK_THROWS_WITH_AS(normalize_bot(rb.g.lat, ra, ideal), doctest::Contains("top"), Error);

    auto n5 = corpus::n5();
    std::vector<int> dummy{0, 1, 2, 3, 4};
    CHECK_THROWS_WITH_AS(normalize_bot(n5, ra, dummy), doctest::Contains("atomistic"), Error);

    auto b2 = corpus::boolean(2);
    std::vector<int> sq{idx(rb, 0, {}), idx(rb, 0, {0}), idx(rb, 0, {1}), idx(rb, 0, {0, 1})};
    CHECK_THROWS_WITH_AS(normalize_bot(b2, rb, sq), doctest::Contains("subdirectly"), Error);
}

TEST_CASE("normalizing top then bottom lands a twisted embedding on the nose") {
    auto rb = relational_lattice(dom(2), {"a"});
    auto r2 = relational_lattice(dom(2), {"a", "b"});
    auto r3 = relational_lattice(dom(2), {"a", "b", "c"});

    std::vector<int> i1 = ball_embedding(rb, r2, Bits::from_mask(2, 0b01));
    std::vector<int> i2 = section_embedding(r2, r3, Bits::from_mask(3, 0b011));
    std::vector<int> i;
    for (int l : i1) i.push_back(i2[static_cast<std::size_t>(l)]);
    REQUIRE(is_embedding(rb.g.lat, r3.g.lat, i));
    REQUIRE(i[static_cast<std::size_t>(rb.g.lat.top)] != r3.g.lat.top);
    REQUIRE(i[static_cast<std::size_t>(rb.g.lat.bottom)] != r3.g.lat.bottom);

    auto nt = normalize_top(rb.g.lat, r3, i);
    CHECK(nt.alpha == Bits::from_mask(3, 0b101));  // keeps a and c
    CHECK(nt.target.g.lat.size() == 26);
    CHECK(nt.embed[static_cast<std::size_t>(rb.g.lat.top)] == nt.target.g.lat.top);
    CHECK(nt.embed[static_cast<std::size_t>(rb.g.lat.bottom)] != nt.target.g.lat.bottom);

    auto nb = normalize_bot(rb.g.lat, nt.target, nt.embed);
    CHECK(nb.b == Bits::from_mask(2, 0b01));  // keeps a within {a,c}
    REQUIRE(nb.target.g.lat.size() == 6);
    std::vector<int> id{0, 1, 2, 3, 4, 5};
    CHECK(nb.embed == id);
}

TEST_CASE("three counting routes agree and match the frozen sizes") {
    struct Row {
        int d, na;
        unsigned long long size;
    };
    for (Row r : {Row{2, 1, 6}, Row{2, 2, 26}, Row{3, 1, 10}, Row{2, 3, 318}, Row{3, 2, 530}}) {
        auto rc = relational_count(r.d, r.na);
        CAPTURE(r.d);
        CAPTURE(r.na);
        CHECK(rc.agree);
        CHECK(rc.formula == r.size);
        CHECK(rc.space_route == r.size);
        CHECK(rc.frame_route == r.size);
    }

    // 64 tuples overflows 64-bit counts but not the formula
    auto big = relational_count(2, 6);
    CHECK(big.agree);
    CHECK(u128_to_string(big.formula) == "18446744099480343818");

    for (auto [d, na] : {std::pair{4, 3}, {5, 2}, {8, 2}, {64, 1}})
        CHECK(relational_count(d, na).agree);

    CHECK_THROWS_AS(relational_count(2, 7), Error);
    CHECK_THROWS_AS(relational_count(3, 4), Error);
    CHECK_THROWS_AS(relational_count(65, 1), Error);
    CHECK_THROWS_AS(relational_count(0, 1), Error);
    CHECK_THROWS_AS(relational_count(2, 0), Error);
    CHECK(u128_to_string(0) == "0");
}
