#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "framelat/congruence.hpp"
#include "framelat/document.hpp"
#include "framelat/frame_lattice.hpp"
#include "framelat/horn.hpp"
#include "framelat/morphism.hpp"
#include "framelat/reduction.hpp"
#include "framelat/relational.hpp"
#include "framelat/ultrametric.hpp"

namespace py = pybind11;
using namespace framelat;

namespace {

Bits bits_from_labels(const std::vector<std::string>& all,
                      const std::vector<std::string>& chosen, const char* what) {
    Bits out(all.size());
    for (const auto& c : chosen) {
        auto it = std::find(all.begin(), all.end(), c);
        if (it == all.end())
            throw Error(ErrorKind::ParseError, std::string("unknown ") + what + " '" + c + "'");
        out.set(static_cast<std::size_t>(it - all.begin()));
    }
    return out;
}

std::vector<std::string> labels_of_bits(const std::vector<std::string>& all, const Bits& b) {
    std::vector<std::string> out;
    for (std::size_t i = b.first(); i < b.size(); i = b.next(i)) out.push_back(all[i]);
    return out;
}

std::vector<std::string> numbered_dom(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
    return out;
}

struct PyRepresentation {
    bool surjective = false;
    std::vector<std::string> section_points;
    std::vector<std::string> map;      // per ambient point, its section label
    std::vector<std::string> missing;  // section points outside the image
};

struct PyCover {
    bool found = false;
    int component = 0;
    std::vector<std::string> product_worlds;
    std::vector<std::string> map;  // per product world, its image label
};

struct PySi {
    bool si = false;
    std::optional<std::pair<std::string, std::string>> monolith;
};

struct PyEval {
    bool holds = true;
    std::optional<std::vector<std::string>> falsifying;  // element labels per variable
};

}  // namespace

PYBIND11_MODULE(framelat, m) {
    m.doc() = "finite lattices, multimodal frames, relational lattices, ultrametric spaces";

    py::register_exception<Error>(m, "Error");

    py::class_<FiniteLattice>(m, "FiniteLattice")
        .def_readonly("labels", &FiniteLattice::labels)
        .def_readonly("bottom", &FiniteLattice::bottom)
        .def_readonly("top", &FiniteLattice::top)
        .def("size", &FiniteLattice::size)
        .def("__len__", [](const FiniteLattice& L) { return L.size(); })
        .def("leq", &FiniteLattice::leq, py::arg("x"), py::arg("y"))
        .def("meet", &FiniteLattice::meet, py::arg("x"), py::arg("y"))
        .def("join", &FiniteLattice::join, py::arg("x"), py::arg("y"))
        .def("index_of", &FiniteLattice::index_of, py::arg("label"))
        .def("cover_pairs", &FiniteLattice::cover_pairs)
        .def("__repr__", [](const FiniteLattice& L) {
            return "<FiniteLattice of " + std::to_string(L.size()) + " elements>";
        });

    py::class_<Frame>(m, "Frame")
        .def_readonly("actions", &Frame::actions)
        .def_readonly("worlds", &Frame::worlds)
        .def("related", &Frame::related, py::arg("action"), py::arg("source"),
             py::arg("target"))
        .def("__repr__", [](const Frame& f) {
            return "<Frame with " + std::to_string(f.n_worlds()) + " worlds, " +
                   std::to_string(f.n_actions()) + " actions>";
        });

    py::class_<UltraSpace>(m, "UltraSpace")
        .def_readonly("attrs", &UltraSpace::attr_labels)
        .def_readonly("points", &UltraSpace::point_labels)
        .def(
            "distance",
            [](const UltraSpace& s, int f, int g) {
                return labels_of_bits(s.attr_labels, s.d(f, g));
            },
            py::arg("f"), py::arg("g"))
        .def("__repr__", [](const UltraSpace& s) {
            return "<UltraSpace with " + std::to_string(s.n_points()) + " points over " +
                   std::to_string(s.n_attrs()) + " attributes>";
        });

    py::class_<Quasiequation>(m, "Quasiequation")
        .def_readonly("variables", &Quasiequation::variables)
        .def("__repr__", [](const Quasiequation& q) {
            return "<Quasiequation in " + std::to_string(q.variables.size()) + " variables>";
        });

    py::class_<RelAlgAtoms>(m, "RelAlgAtoms")
        .def_readonly("atoms", &RelAlgAtoms::atoms)
        .def("__repr__", [](const RelAlgAtoms& ra) {
            return "<RelAlgAtoms with " + std::to_string(ra.atoms.size()) + " atoms>";
        });

    py::class_<FrameProperties>(m, "FrameProperties")
        .def_readonly("s4", &FrameProperties::s4)
        .def_readonly("rooted", &FrameProperties::rooted)
        .def_readonly("full", &FrameProperties::full)
        .def_readonly("root", &FrameProperties::root)
        .def_readonly("s4_failure", &FrameProperties::s4_failure);

    py::class_<PySi>(m, "SiReport")
        .def_readonly("si", &PySi::si)
        .def_readonly("monolith", &PySi::monolith);

    py::class_<PyEval>(m, "EvalResult")
        .def_readonly("holds", &PyEval::holds)
        .def_readonly("falsifying", &PyEval::falsifying);

    py::class_<PyRepresentation>(m, "Representation")
        .def_readonly("surjective", &PyRepresentation::surjective)
        .def_readonly("section_points", &PyRepresentation::section_points)
        .def_readonly("map", &PyRepresentation::map)
        .def_readonly("missing", &PyRepresentation::missing);

    py::class_<PyCover>(m, "CoverResult")
        .def_readonly("found", &PyCover::found)
        .def_readonly("component", &PyCover::component)
        .def_readonly("product_worlds", &PyCover::product_worlds)
        .def_readonly("map", &PyCover::map);

    // constructors
    m.def("build_lattice", &build_lattice, py::arg("labels"), py::arg("leq_pairs"),
          "Finite lattice from element labels and generating order pairs (by index).");
    m.def("build_frame", &build_frame, py::arg("actions"), py::arg("worlds"), py::arg("edges"),
          "Multimodal frame from (action, source, target) index triples.");
    m.def(
        "build_space",
        [](const std::vector<std::string>& attrs, const std::vector<std::string>& points,
           const std::vector<std::vector<std::vector<std::string>>>& dist) {
            std::vector<std::vector<Bits>> d;
            for (const auto& row : dist) {
                d.emplace_back();
                for (const auto& cell : row)
                    d.back().push_back(bits_from_labels(attrs, cell, "attribute"));
            }
            return build_space(attrs, points, d);
        },
        py::arg("attrs"), py::arg("points"), py::arg("dist"),
        "Ultrametric space; dist[i][j] lists the attributes where points i and j differ.");
    m.def(
        "hamming_space",
        [](const std::vector<std::string>& dom, const std::vector<std::string>& attrs) {
            return hamming_space(dom, attrs);
        },
        py::arg("dom"), py::arg("attrs"),
        "Hamming space of all functions from attributes to the domain.");
    m.def(
        "build_ra",
        [](const std::vector<std::string>& atoms, const std::vector<std::string>& identity,
           const std::vector<std::pair<std::string, std::string>>& converse,
           const std::vector<std::tuple<std::string, std::string, std::vector<std::string>>>&
               allowed) {
            RelAlgAtoms ra;
            ra.atoms = atoms;
            std::size_t n = atoms.size();
            ra.identity = bits_from_labels(atoms, identity, "atom");
            ra.converse.assign(n, -1);
            auto idx = [&](const std::string& a) {
                auto it = std::find(atoms.begin(), atoms.end(), a);
                if (it == atoms.end())
                    throw Error(ErrorKind::ParseError, "unknown atom '" + a + "'");
                return static_cast<int>(it - atoms.begin());
            };
            for (const auto& [x, y] : converse) ra.converse[static_cast<std::size_t>(idx(x))] = idx(y);
            for (int x = 0; x < static_cast<int>(n); ++x)
                if (ra.converse[static_cast<std::size_t>(x)] < 0)
                    throw Error(ErrorKind::ParseError,
                                "no converse given for atom '" + atoms[static_cast<std::size_t>(x)] + "'");
            ra.allowed.assign(n * n, Bits(n));
            std::vector<bool> seen(n * n, false);
            for (const auto& [t0, t1, t2s] : allowed) {
                std::size_t cell = static_cast<std::size_t>(idx(t0)) * n +
                                   static_cast<std::size_t>(idx(t1));
                ra.allowed[cell] = bits_from_labels(atoms, t2s, "atom");
                seen[cell] = true;
            }
            for (std::size_t cell = 0; cell < n * n; ++cell)
                if (!seen[cell])
                    throw Error(ErrorKind::ParseError,
                                "no allowed entry for '" + atoms[cell / n] + " " +
                                    atoms[cell % n] + "'");
            return ra;
        },
        py::arg("atoms"), py::arg("identity"), py::arg("converse"), py::arg("allowed"),
        "Relation algebra atom structure; allowed lists (t0, t1, composites) triples.");

    // documents
    m.def(
        "parse_document",
        [](const std::string& text) -> py::object {
            Document d = parse_document(text);
            if (auto* f = std::get_if<Frame>(&d.payload)) return py::cast(std::move(*f));
            if (auto* l = std::get_if<FiniteLattice>(&d.payload)) return py::cast(std::move(*l));
            if (auto* s = std::get_if<UltraSpace>(&d.payload)) return py::cast(std::move(*s));
            if (auto* r = std::get_if<RelAlgAtoms>(&d.payload)) return py::cast(std::move(*r));
            if (auto* q = std::get_if<Quasiequation>(&d.payload)) return py::cast(std::move(*q));
            throw Error(ErrorKind::UnsupportedKind,
                        "python bindings parse frame, lattice, space, ra, and quasiequation "
                        "documents; got " +
                            std::string(kind_name(d.kind())));
        },
        py::arg("text"), "Parse a document; returns the object it describes.");
    m.def("serialize", [](const Frame& f) { return serialize_document(Document{f}); });
    m.def("serialize", [](const FiniteLattice& l) { return serialize_document(Document{l}); });
    m.def("serialize", [](const UltraSpace& s) { return serialize_document(Document{s}); });
    m.def("serialize", [](const RelAlgAtoms& r) { return serialize_document(Document{r}); });
    m.def("serialize", [](const Quasiequation& q) { return serialize_document(Document{q}); });
    m.def("export_dot", [](const Frame& f) { return export_dot(Document{f}); });
    m.def("export_dot", [](const FiniteLattice& l) { return export_dot(Document{l}); });

    // frames
    m.def("frame_properties", &frame_properties, py::arg("frame"));
    m.def(
        "lattice_of_frame",
        [](const Frame& f, std::int64_t cap) { return lattice_of_frame(f, cap).lat; },
        py::arg("frame"), py::arg("cap") = 1000000,
        "Lattice of closed subsets of a frame.");
    m.def(
        "universal_product_frame",
        [](const std::vector<std::string>& actions,
           const std::vector<std::vector<std::string>>& components) {
            return universal_product_frame(actions, components).frame;
        },
        py::arg("actions"), py::arg("components"),
        "Product frame where action i moves coordinate i freely.");
    m.def(
        "ra_frame", [](const RelAlgAtoms& ra) { return ra_frame(ra).frame; }, py::arg("ra"),
        "Frame of consistent triples of a relation algebra atom structure.");

    // spaces
    m.def(
        "is_pairwise_complete",
        [](const UltraSpace& s) { return is_pairwise_complete(s).complete; }, py::arg("space"));
    m.def(
        "represent",
        [](const UltraSpace& s) {
            Representation rep = represent(s);
            PyRepresentation out;
            out.surjective = rep.surjective;
            out.section_points = rep.sec.space.point_labels;
            for (int x = 0; x < s.n_points(); ++x)
                out.map.push_back(rep.sec.space.point_labels[static_cast<std::size_t>(
                    rep.iso[static_cast<std::size_t>(x)])]);
            for (int miss : rep.missing)
                out.missing.push_back(
                    rep.sec.space.point_labels[static_cast<std::size_t>(miss)]);
            return out;
        },
        py::arg("space"), "Canonical section space representation.");
    m.def(
        "lattice_of_space",
        [](const UltraSpace& s, std::int64_t cap) { return lattice_of_space(s, cap).lat; },
        py::arg("space"), py::arg("cap") = 1000000,
        "Lattice of closed subsets of an ultrametric space.");

    // relational lattices
    m.def(
        "relational_lattice",
        [](int dom_size, const std::vector<std::string>& attrs, std::int64_t cap) {
            return relational_lattice(numbered_dom(dom_size), attrs, cap).g.lat;
        },
        py::arg("dom_size"), py::arg("attrs"), py::arg("cap") = 1000000,
        "The relational lattice R(D, A) over a domain of the given size.");
    m.def(
        "relational_count",
        [](int dom_size, int n_attrs) {
            RelationalCount rc = relational_count(dom_size, n_attrs);
            py::dict out;
            out["formula"] = u128_to_string(rc.formula);
            out["space_route"] = u128_to_string(rc.space_route);
            out["frame_route"] = u128_to_string(rc.frame_route);
            out["agree"] = rc.agree;
            return out;
        },
        py::arg("dom_size"), py::arg("n_attrs"),
        "Element count of R(D, A) along three independent routes.");

    // lattice structure
    m.def(
        "is_subdirectly_irreducible",
        [](const FiniteLattice& L) {
            SiReport rep = is_subdirectly_irreducible(L);
            PySi out;
            out.si = rep.si;
            if (rep.si)
                out.monolith = {L.labels[static_cast<std::size_t>(rep.monolith_pair->first)],
                                L.labels[static_cast<std::size_t>(rep.monolith_pair->second)]};
            return out;
        },
        py::arg("lattice"));
    m.def("find_embedding", &find_embedding, py::arg("source"), py::arg("target"),
          py::arg("bound_preserving") = false,
          "Lexicographically first lattice embedding, or None.");
    m.def("find_isomorphism", &find_isomorphism, py::arg("source"), py::arg("target"));
    m.def("is_embedding", &is_embedding, py::arg("source"), py::arg("target"), py::arg("map"));
    m.def("is_bound_preserving", &is_bound_preserving, py::arg("source"), py::arg("target"),
          py::arg("map"));

    // quasiequations
    m.def("build_phi", &build_phi, py::arg("lattice"),
          "Defining quasiequation of a subdirectly irreducible lattice.");
    m.def(
        "eval_quasiequation",
        [](const FiniteLattice& K, const Quasiequation& q, std::int64_t cap) {
            EvalResult r = eval_quasiequation(K, q, cap);
            PyEval out;
            out.holds = r.holds;
            if (!r.holds) {
                std::vector<std::string> vals;
                for (int v : r.falsifying)
                    vals.push_back(K.labels[static_cast<std::size_t>(v)]);
                out.falsifying = std::move(vals);
            }
            return out;
        },
        py::arg("lattice"), py::arg("quasiequation"), py::arg("cap") = 100000000);

    // covers and normalization
    m.def(
        "cover_search",
        [](const Frame& f, int max_component, std::int64_t cap) {
            CoverSearch cs = cover_search(f, max_component, cap);
            PyCover out;
            out.found = cs.found;
            if (cs.found) {
                out.component = cs.component;
                out.product_worlds = cs.u.frame.worlds;
                for (int w : cs.psi.map)
                    out.map.push_back(f.worlds[static_cast<std::size_t>(w)]);
            }
            return out;
        },
        py::arg("frame"), py::arg("max_component"), py::arg("cap") = 1000000,
        "Smallest uniform product cover of the frame, up to the given component size.");
    m.def(
        "normalize_embedding",
        [](const FiniteLattice& L, int dom_size, const std::vector<std::string>& attrs,
           const std::vector<std::string>& image, std::int64_t cap) {
            RelationalLattice ra = relational_lattice(numbered_dom(dom_size), attrs, cap);
            std::vector<int> i;
            for (const auto& label : image) i.push_back(ra.g.lat.index_of(label));
            TopNormalization nt = normalize_top(L, ra, i, cap);
            BotNormalization nb = normalize_bot(L, nt.target, nt.embed, cap);
            std::vector<std::string> out_image;
            for (int e : nb.embed)
                out_image.push_back(nb.target.g.lat.labels[static_cast<std::size_t>(e)]);
            return py::make_tuple(nb.target.g.attr_labels, nb.target.g.lat, out_image);
        },
        py::arg("lattice"), py::arg("dom_size"), py::arg("attrs"), py::arg("image"),
        py::arg("cap") = 1000000,
        "Make an embedding into R(D, A) bound preserving; returns (attrs, target, image).");
    m.def(
        "extract_cover",
        [](const Frame& f, int dom_size, const std::vector<std::string>& attrs,
           const std::vector<std::string>& image, std::int64_t cap) {
            RelationalLattice ra = relational_lattice(numbered_dom(dom_size), attrs, cap);
            std::vector<int> i;
            for (const auto& label : image) i.push_back(ra.g.lat.index_of(label));
            ExtractedCover ec = extract_pmorphism(f, ra, i, cap);
            std::vector<std::string> map;
            for (int w : ec.psi.map) map.push_back(f.worlds[static_cast<std::size_t>(w)]);
            return py::make_tuple(ec.u.frame.worlds, map);
        },
        py::arg("frame"), py::arg("dom_size"), py::arg("attrs"), py::arg("image"),
        py::arg("cap") = 1000000,
        "Surjective p-morphism behind an embedding of the frame's lattice into R(D, A); "
        "returns (product_worlds, map).");
}
