#include <doctest.h>

#include <functional>
#include <string>
#include <variant>

#include "framelat/document.hpp"
#include "framelat/frame_lattice.hpp"
#include "framelat/morphism.hpp"
#include "framelat/relational.hpp"
#include "framelat/reduction.hpp"
#include "framelat/ultrametric.hpp"

#include "support/corpus.hpp"

using namespace framelat;

namespace {

std::string rt(const std::string& text) {
    return serialize_document(parse_document(text));
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::ParseError;
}

bool same_lattice(const FiniteLattice& a, const FiniteLattice& b) {
    return a.labels == b.labels && a.up == b.up;
}

bool same_frame(const Frame& a, const Frame& b) {
    return a.actions == b.actions && a.worlds == b.worlds && a.rel == b.rel;
}

bool same_eq(const Equation& a, const Equation& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
}

bool same_eqs(const std::vector<Equation>& a, const std::vector<Equation>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!same_eq(a[i], b[i])) return false;
    return true;
}

}  // namespace

TEST_CASE("frame documents round trip") {
    Frame f = build_frame({"a", "b"}, {"u", "v"},
                          {{0, 0, 0}, {0, 0, 1}, {1, 1, 1}, {1, 1, 0}});
    std::string text = serialize_document(Document{f});
    Document d = parse_document(text);
    REQUIRE(d.kind() == DocKind::Frame);
    CHECK(same_frame(std::get<Frame>(d.payload), f));
    CHECK(rt(text) == text);

    SUBCASE("edges are written sorted") {
        CHECK(text ==
              "frame\n"
              "actions: a b\n"
              "worlds: u v\n"
              "rel a: u u\n"
              "rel a: u v\n"
              "rel b: v u\n"
              "rel b: v v\n");
    }

    SUBCASE("comments and spacing are ignored") {
        std::string noisy =
            "# a frame\n\nframe\n  actions:  a   b\nworlds: u v\n"
            "rel b: v v\nrel a: u v\n# mid comment\nrel a: u u\nrel b: v u\n";
        CHECK(same_frame(std::get<Frame>(parse_document(noisy).payload), f));
    }
}

TEST_CASE("lattice documents round trip through cover pairs") {
    for (const FiniteLattice& L :
         {corpus::chain(1), corpus::chain(4), corpus::m3(), corpus::n5(),
          corpus::boolean(3)}) {
        std::string text = serialize_document(Document{L});
        Document d = parse_document(text);
        REQUIRE(d.kind() == DocKind::Lattice);
        CHECK(same_lattice(std::get<FiniteLattice>(d.payload), L));
        CHECK(rt(text) == text);
    }
}

TEST_CASE("moore form lattices canonicalize to elem and leq lines") {
    std::string text =
        "lattice\n"
        "ground: x y\n"
        "moore:\n"
        "moore: x\n"
        "moore: y\n"
        "moore: x y\n";
    Document d = parse_document(text);
    const auto& L = std::get<FiniteLattice>(d.payload);
    CHECK(L.size() == 4);
    CHECK(L.labels[static_cast<std::size_t>(L.bottom)] == "{}");
    std::string canon = serialize_document(d);
    CHECK(canon.find("moore") == std::string::npos);
    CHECK(canon.find("elem:") != std::string::npos);
    CHECK(rt(canon) == canon);
}

TEST_CASE("space documents round trip") {
    UltraSpace s = hamming_space({"0", "1"}, {"a", "b"}, 100);
    std::string text = serialize_document(Document{s});
    Document d = parse_document(text);
    REQUIRE(d.kind() == DocKind::Space);
    const auto& t = std::get<UltraSpace>(d.payload);
    CHECK(t.attr_labels == s.attr_labels);
    CHECK(t.point_labels == s.point_labels);
    CHECK(t.dist == s.dist);
    CHECK(rt(text) == text);

    SUBCASE("symmetric duplicates must agree") {
        std::string bad =
            "space\nattrs: a\npoints: p q\ndist p q: a\ndist q p:\n";
        CHECK_THROWS_WITH_AS(parse_document(bad), doctest::Contains("conflicting distance"),
                             Error);
    }
}

TEST_CASE("ra documents round trip") {
    std::string text =
        "ra\n"
        "atoms: e d\n"
        "identity: e\n"
        "converse: e e\n"
        "converse: d d\n"
        "allowed e e: e\n"
        "allowed e d: d\n"
        "allowed d e: d\n"
        "allowed d d: e d\n";
    Document d = parse_document(text);
    REQUIRE(d.kind() == DocKind::Ra);
    const auto& ra = std::get<RelAlgAtoms>(d.payload);
    CHECK(ra.atoms == std::vector<std::string>{"e", "d"});
    CHECK(ra.identity.count() == 1);
    CHECK(ra.converse == std::vector<int>{0, 1});
    CHECK(ra.allowed[3].count() == 2);
    CHECK(rt(text) == text);

    SUBCASE("every ordered pair needs an allowed line") {
        std::string bad =
            "ra\natoms: e d\nidentity: e\nconverse: e e\nconverse: d d\n"
            "allowed e e: e\nallowed e d: d\nallowed d e: d\n";
        CHECK_THROWS_WITH_AS(parse_document(bad), doctest::Contains("missing 'allowed d d:'"),
                             Error);
    }

    SUBCASE("duplicate converse lines are rejected") {
        std::string bad =
            "ra\natoms: e\nidentity: e\nconverse: e e\nconverse: e e\nallowed e e: e\n";
        CHECK_THROWS_WITH_AS(parse_document(bad),
                             doctest::Contains("duplicate converse for atom 'e'"), Error);
    }
}

TEST_CASE("quasiequation documents round trip") {
    Quasiequation q = build_phi(corpus::m3());
    std::string text = serialize_document(Document{q});
    Document d = parse_document(text);
    REQUIRE(d.kind() == DocKind::Quasiequation);
    const auto& p = std::get<Quasiequation>(d.payload);
    CHECK(p.variables == q.variables);
    CHECK(same_eqs(expanded_premises(p), expanded_premises(q)));
    CHECK(same_eq(p.conclusion, q.conclusion));
    CHECK(rt(text) == text);

    SUBCASE("equations need exactly one equals sign") {
        CHECK_THROWS_WITH_AS(
            parse_document("quasiequation\nvars: x\nconclusion: x\n"),
            doctest::Contains("expected '<term> = <term>'"), Error);
        CHECK_THROWS_WITH_AS(
            parse_document("quasiequation\nvars: x\nconclusion: x = x = x\n"),
            doctest::Contains("more than one '='"), Error);
    }

    SUBCASE("variable names exclude term syntax") {
        CHECK_THROWS_WITH_AS(
            parse_document("quasiequation\nvars: a(b\nconclusion: a(b = a(b\n"),
            doctest::Contains("reserved character"), Error);
    }

    SUBCASE("term errors surface with the line number") {
        CHECK_THROWS_WITH_AS(
            parse_document("quasiequation\nvars: x\nconclusion: (meet x) = x\n"),
            doctest::Contains("line 3:"), Error);
    }
}

TEST_CASE("embedding documents round trip") {
    FiniteLattice L = corpus::chain(2);
    RelationalLattice ra = relational_lattice({"0", "1"}, {"a"}, 1000);
    auto found = find_embedding(L, ra.g.lat, false);
    REQUIRE(found.has_value());
    EmbeddingDoc e{{"0", "1"}, {"a"}, L, {}};
    for (int x : *found) e.image.push_back(ra.g.lat.labels[static_cast<std::size_t>(x)]);
    std::string text = serialize_document(Document{e});
    Document d = parse_document(text);
    REQUIRE(d.kind() == DocKind::Embedding);
    const auto& p = std::get<EmbeddingDoc>(d.payload);
    CHECK(p.dom_labels == e.dom_labels);
    CHECK(p.attr_labels == e.attr_labels);
    CHECK(same_lattice(p.lattice, L));
    CHECK(p.image == e.image);
    CHECK(rt(text) == text);

    SUBCASE("each element is mapped exactly once") {
        std::string dup =
            "embedding\ndom: 0\nattrs: a\nelem: b t\nleq: b t\n"
            "map: b {;}\nmap: b {a;}\n";
        CHECK_THROWS_WITH_AS(parse_document(dup), doctest::Contains("duplicate map for 'b'"),
                             Error);
        std::string missing =
            "embedding\ndom: 0\nattrs: a\nelem: b t\nleq: b t\nmap: b {;}\n";
        CHECK_THROWS_WITH_AS(parse_document(missing),
                             doctest::Contains("no map line for element 't'"), Error);
    }
}

TEST_CASE("pmorphism documents round trip") {
    Frame f = build_frame({"a", "b"}, {"u", "v"},
                          {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1},
                           {1, 0, 0}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}});
    CoverSearch cs = cover_search(f, 2, 100000);
    REQUIRE(cs.found);
    PMorphismDoc doc{f.actions, cs.u.components, f, cs.psi.map};
    std::string text = serialize_document(Document{doc});
    Document d = parse_document(text);
    REQUIRE(d.kind() == DocKind::PMorphism);
    const auto& p = std::get<PMorphismDoc>(d.payload);
    CHECK(p.actions == doc.actions);
    CHECK(p.components == doc.components);
    CHECK(same_frame(p.target, f));
    CHECK(p.map == doc.map);
    CHECK(rt(text) == text);

    SUBCASE("the parsed map is a valid p-morphism") {
        ProductFrame u = universal_product_frame(p.actions, p.components, 1000);
        CHECK(validate_pmorphism(p.map, u.frame, p.target).valid);
    }

    SUBCASE("every product world is mapped") {
        std::string missing =
            "pmorphism\nactions: a\ncomponent a: 0 1\nworlds: w\nrel a: w w\n"
            "map: (0) w\n";
        CHECK_THROWS_WITH_AS(parse_document(missing),
                             doctest::Contains("no map line for product world '(1)'"), Error);
    }
}

TEST_CASE("documents reject malformed shells") {
    CHECK_THROWS_WITH_AS(parse_document(""), doctest::Contains("empty document"), Error);
    CHECK_THROWS_WITH_AS(parse_document("# only comments\n"),
                         doctest::Contains("empty document"), Error);
    CHECK_THROWS_WITH_AS(parse_document("widget\nelem: a\n"),
                         doctest::Contains("unknown document kind 'widget'"), Error);
    CHECK_THROWS_WITH_AS(parse_document("two words\n"),
                         doctest::Contains("expected a document kind"), Error);
    CHECK_THROWS_WITH_AS(parse_document("lattice\nelem a\n"),
                         doctest::Contains("line 2: expected 'key ...: fields'"), Error);
    CHECK_THROWS_WITH_AS(parse_document("frame\nactions: a\nworlds: u\nworlds: u\n"),
                         doctest::Contains("line 4: duplicate 'worlds:' line"), Error);
    CHECK_THROWS_WITH_AS(parse_document("frame\nactions: a\n"),
                         doctest::Contains("missing 'worlds:' line"), Error);
    CHECK_THROWS_WITH_AS(parse_document("frame\nactions: a\nworlds: u\nrel a: u x\n"),
                         doctest::Contains("unknown world 'x'"), Error);
    CHECK(kind_of([] { parse_document("lattice\nelem: a\nleq: a a\nground: a\n"); }) ==
          ErrorKind::ParseError);
}

TEST_CASE("dot export renders lattices bottom up") {
    std::string dot = export_dot(Document{corpus::chain(2)});
    CHECK(dot ==
          "digraph lattice {\n"
          "  rankdir=BT;\n"
          "  n0 [label=\"c0\"];\n"
          "  n1 [label=\"c1\"];\n"
          "  n0 -> n1;\n"
          "}\n");

    std::string m3dot = export_dot(Document{corpus::m3()});
    std::size_t nodes = 0, edges = 0, at = 0;
    while ((at = m3dot.find("label=", at)) != std::string::npos) ++nodes, ++at;
    at = 0;
    while ((at = m3dot.find("->", at)) != std::string::npos) ++edges, ++at;
    CHECK(nodes == 5);
    CHECK(edges == 6);
}

TEST_CASE("dot export labels frame edges by action") {
    Frame f = build_frame({"a"}, {"u", "v"}, {{0, 0, 1}});
    std::string dot = export_dot(Document{f});
    CHECK(dot ==
          "digraph frame {\n"
          "  n0 [label=\"u\"];\n"
          "  n1 [label=\"v\"];\n"
          "  n0 -> n1 [label=\"a\"];\n"
          "}\n");

    UltraSpace s = hamming_space({"0", "1"}, {"a"}, 100);
    CHECK(kind_of([&] { export_dot(Document{s}); }) == ErrorKind::UnsupportedKind);
}
