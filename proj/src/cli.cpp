#include "framelat/cli.hpp"

#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "framelat/congruence.hpp"
#include "framelat/document.hpp"
#include "framelat/error.hpp"
#include "framelat/frame_lattice.hpp"
#include "framelat/horn.hpp"
#include "framelat/morphism.hpp"
#include "framelat/od_graph.hpp"
#include "framelat/quotient.hpp"
#include "framelat/relational.hpp"

namespace framelat {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
    out << content;
}

std::string strip_kind(const char* what) {
    std::string w = what;
    std::size_t p = w.find(": ");
    return p == std::string::npos ? w : w.substr(p + 2);
}

Document load(const std::string& path) {
    std::string text = read_file(path);
    try {
        return parse_document(text);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError)
            throw Error(ErrorKind::ParseError, "'" + path + "': " + strip_kind(e.what()));
        throw;
    }
}

[[noreturn]] void wrong_kind(const Document& d, const std::string& path,
                             const std::string& wanted) {
    throw Error(ErrorKind::UnsupportedKind, "'" + path + "' is a " + kind_name(d.kind()) +
                                                " document, expected " + wanted);
}

Frame load_frame(const std::string& path) {
    Document d = load(path);
    if (auto* f = std::get_if<Frame>(&d.payload)) return std::move(*f);
    wrong_kind(d, path, "frame");
}

FiniteLattice load_lattice(const std::string& path) {
    Document d = load(path);
    if (auto* l = std::get_if<FiniteLattice>(&d.payload)) return std::move(*l);
    wrong_kind(d, path, "lattice");
}

UltraSpace load_space(const std::string& path) {
    Document d = load(path);
    if (auto* s = std::get_if<UltraSpace>(&d.payload)) return std::move(*s);
    wrong_kind(d, path, "space");
}

RelAlgAtoms load_ra(const std::string& path) {
    Document d = load(path);
    if (auto* r = std::get_if<RelAlgAtoms>(&d.payload)) return std::move(*r);
    wrong_kind(d, path, "ra");
}

Quasiequation load_quasiequation(const std::string& path) {
    Document d = load(path);
    if (auto* q = std::get_if<Quasiequation>(&d.payload)) return std::move(*q);
    wrong_kind(d, path, "quasiequation");
}

EmbeddingDoc load_embedding(const std::string& path) {
    Document d = load(path);
    if (auto* e = std::get_if<EmbeddingDoc>(&d.payload)) return std::move(*e);
    wrong_kind(d, path, "embedding");
}

const char* yn(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> numbered_dom(int n) {
    if (n < 1) throw Error(ErrorKind::EmptyInput, "the domain needs at least one value");
    std::vector<std::string> dom;
    dom.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) dom.push_back(std::to_string(i));
    return dom;
}

// Shared output shape. Verdict commands print `text` (and stash `written`
// when -o produced a file); document commands print the document itself
// unless -o redirects it to a file, leaving the report on stdout.
struct Ctx {
    std::ostream& out;
    bool json = false;
};

void emit(const Ctx& c, const json& j, const std::string& text) {
    if (c.json)
        c.out << j.dump(2) << "\n";
    else
        c.out << text;
}

void emit_doc(const Ctx& c, json j, std::string report, const Document& doc,
              const std::string& opath) {
    std::string body = serialize_document(doc);
    if (!opath.empty()) {
        write_file(opath, body);
        j["written"] = opath;
        report += "written: " + opath + "\n";
        emit(c, j, report);
    } else if (c.json) {
        j["document"] = body;
        c.out << j.dump(2) << "\n";
    } else {
        c.out << body;
    }
}

// resolve an embedding document against its relational lattice
std::vector<int> resolve_image(const EmbeddingDoc& e, const RelationalLattice& ra) {
    std::vector<int> map;
    map.reserve(e.image.size());
    for (const auto& label : e.image) map.push_back(ra.g.lat.index_of(label));
    return map;
}

int cmd_frame_check(const Ctx& c, const std::string& path) {
    Frame f = load_frame(path);
    FrameProperties p = frame_properties(f);
    json j{{"s4", p.s4}, {"rooted", p.rooted}, {"full", p.full}};
    std::string text = std::string("S4: ") + yn(p.s4) + ", rooted: " + yn(p.rooted) +
                       ", full: " + yn(p.full) + "\n";
    if (p.rooted) {
        j["root"] = f.worlds[static_cast<std::size_t>(p.root)];
        text += "root: " + f.worlds[static_cast<std::size_t>(p.root)] + "\n";
    }
    if (!p.s4) {
        j["s4_failure"] = p.s4_failure;
        text += "s4 failure: " + p.s4_failure + "\n";
    }
    emit(c, j, text);
    return p.s4 && p.rooted && p.full ? 0 : 1;
}

int cmd_frame_lattice(const Ctx& c, const std::string& path, const std::string& opath,
                      std::int64_t cap) {
    Frame f = load_frame(path);
    GroundedLattice gl = lattice_of_frame(f, cap);
    json j{{"elements", gl.lat.size()}};
    std::string report = "elements: " + std::to_string(gl.lat.size()) + "\n";
    emit_doc(c, j, report, Document{std::move(gl.lat)}, opath);
    return 0;
}

int cmd_lattice_analyze(const Ctx& c, const std::string& path) {
    FiniteLattice L = load_lattice(path);
    JiProfile prof = ji_profile(L);
    std::size_t covers = L.cover_pairs().size();
    json j{{"elements", L.size()},
           {"bottom", L.labels[static_cast<std::size_t>(L.bottom)]},
           {"top", L.labels[static_cast<std::size_t>(L.top)]},
           {"atomistic", prof.atomistic},
           {"join_irreducibles", prof.jis.size()},
           {"join_primes", prof.join_primes.count()},
           {"covers", covers}};
    std::ostringstream text;
    text << "elements: " << L.size() << "\n"
         << "bottom: " << L.labels[static_cast<std::size_t>(L.bottom)] << "\n"
         << "top: " << L.labels[static_cast<std::size_t>(L.top)] << "\n"
         << "atomistic: " << yn(prof.atomistic) << "\n"
         << "join irreducibles: " << prof.jis.size() << "\n"
         << "join primes: " << prof.join_primes.count() << "\n"
         << "covers: " << covers << "\n";
    emit(c, j, text.str());
    return 0;
}

int cmd_lattice_od(const Ctx& c, const std::string& path, std::int64_t cap) {
    FiniteLattice L = load_lattice(path);
    ODGraph g = od_graph(L, static_cast<std::size_t>(cap));
    json j;
    j["jis"] = g.labels;
    std::ostringstream text;
    text << "jis:";
    for (const auto& l : g.labels) text << " " << l;
    text << "\n";
    json below = json::array();
    for (std::size_t p = 0; p < g.labels.size(); ++p) {
        json row = json::array();
        text << "below " << g.labels[p] << ":";
        for (std::size_t q = g.below[p].first(); q < g.below[p].size(); q = g.below[p].next(q)) {
            row.push_back(g.labels[q]);
            text << " " << g.labels[q];
        }
        below.push_back(row);
        text << "\n";
    }
    j["below"] = below;
    json covers = json::array();
    for (std::size_t p = 0; p < g.covers.size(); ++p)
        for (const Bits& cv : g.covers[p]) {
            json one{{"of", g.labels[p]}, {"cover", json::array()}};
            text << "cover " << g.labels[p] << ":";
            for (std::size_t q = cv.first(); q < cv.size(); q = cv.next(q)) {
                one["cover"].push_back(g.labels[q]);
                text << " " << g.labels[q];
            }
            covers.push_back(one);
            text << "\n";
        }
    j["covers"] = covers;
    emit(c, j, text.str());
    return 0;
}

int cmd_lattice_si(const Ctx& c, const std::string& path) {
    FiniteLattice L = load_lattice(path);
    SiReport rep = is_subdirectly_irreducible(L);
    json j{{"si", rep.si}};
    std::string text = std::string("si: ") + yn(rep.si) + "\n";
    if (rep.si) {
        auto [a, b] = *rep.monolith_pair;
        j["monolith"] = {L.labels[static_cast<std::size_t>(a)],
                         L.labels[static_cast<std::size_t>(b)]};
        text += "monolith: " + L.labels[static_cast<std::size_t>(a)] + " " +
                L.labels[static_cast<std::size_t>(b)] + "\n";
    }
    emit(c, j, text);
    return rep.si ? 0 : 1;
}

int cmd_lattice_ideal(const Ctx& c, const std::string& path, const std::string& label,
                      const std::string& opath) {
    FiniteLattice L = load_lattice(path);
    Sublattice sub = principal_ideal(L, L.index_of(label));
    json j{{"elements", sub.lat.size()}};
    std::string report = "elements: " + std::to_string(sub.lat.size()) + "\n";
    emit_doc(c, j, report, Document{std::move(sub.lat)}, opath);
    return 0;
}

int cmd_rel_enum(const Ctx& c, int dom, const std::vector<std::string>& attrs,
                 std::int64_t cap, const std::string& opath) {
    RelationalLattice ra = relational_lattice(numbered_dom(dom), attrs, cap);
    json j{{"elements", ra.g.lat.size()}, {"dom", dom}, {"attrs", attrs}};
    std::string text = "elements: " + std::to_string(ra.g.lat.size()) + "\n";
    if (!opath.empty()) {
        write_file(opath, serialize_document(Document{std::move(ra.g.lat)}));
        j["written"] = opath;
        text += "written: " + opath + "\n";
    }
    emit(c, j, text);
    return 0;
}

int cmd_space_check(const Ctx& c, const std::string& path) {
    UltraSpace s = load_space(path);
    PairwiseReport pr = is_pairwise_complete(s);
    json j{{"valid", true}, {"pairwise_complete", pr.complete}};
    std::string text = std::string("valid: yes\npairwise complete: ") + yn(pr.complete) + "\n";
    if (!pr.complete) {
        j["witness"] = {s.point_labels[static_cast<std::size_t>(pr.f)],
                        s.point_labels[static_cast<std::size_t>(pr.g)]};
        json alpha = json::array(), beta = json::array();
        std::string at, bt;
        for (std::size_t a = pr.alpha.first(); a < pr.alpha.size(); a = pr.alpha.next(a)) {
            alpha.push_back(s.attr_labels[a]);
            at += " " + s.attr_labels[a];
        }
        for (std::size_t b = pr.beta.first(); b < pr.beta.size(); b = pr.beta.next(b)) {
            beta.push_back(s.attr_labels[b]);
            bt += " " + s.attr_labels[b];
        }
        j["alpha"] = alpha;
        j["beta"] = beta;
        text += "witness: " + s.point_labels[static_cast<std::size_t>(pr.f)] + " " +
                s.point_labels[static_cast<std::size_t>(pr.g)] + "\n";
        text += "alpha:" + at + "\nbeta:" + bt + "\n";
    }
    emit(c, j, text);
    return pr.complete ? 0 : 1;
}

int cmd_space_represent(const Ctx& c, const std::string& path) {
    UltraSpace s = load_space(path);
    Representation rep = represent(s);
    json j;
    json fibers = json::array();
    std::string ft;
    for (const auto& f : rep.sec.fibers) {
        fibers.push_back(f.size());
        ft += " " + std::to_string(f.size());
    }
    j["fibers"] = fibers;
    j["section_points"] = rep.sec.space.n_points();
    j["surjective"] = rep.surjective;
    std::ostringstream text;
    text << "fibers:" << ft << "\n"
         << "section points: " << rep.sec.space.n_points() << "\n"
         << "surjective: " << yn(rep.surjective) << "\n";
    json jmap;
    for (int x = 0; x < s.n_points(); ++x) {
        const std::string& sec_label =
            rep.sec.space.point_labels[static_cast<std::size_t>(rep.iso[static_cast<std::size_t>(x)])];
        jmap[s.point_labels[static_cast<std::size_t>(x)]] = sec_label;
        text << "map: " << s.point_labels[static_cast<std::size_t>(x)] << " " << sec_label
             << "\n";
    }
    j["map"] = jmap;
    if (!rep.surjective) {
        json missing = json::array();
        text << "missing:";
        for (int m : rep.missing) {
            missing.push_back(rep.sec.space.point_labels[static_cast<std::size_t>(m)]);
            text << " " << rep.sec.space.point_labels[static_cast<std::size_t>(m)];
        }
        text << "\n";
        j["missing"] = missing;
    }
    emit(c, j, text.str());
    return rep.surjective ? 0 : 1;
}

int cmd_space_lattice(const Ctx& c, const std::string& path, const std::string& opath,
                      std::int64_t cap) {
    UltraSpace s = load_space(path);
    GroundedLattice gl = lattice_of_space(s, cap);
    json j{{"elements", gl.lat.size()}};
    std::string report = "elements: " + std::to_string(gl.lat.size()) + "\n";
    emit_doc(c, j, report, Document{std::move(gl.lat)}, opath);
    return 0;
}

int cmd_cover_search(const Ctx& c, const std::string& path, int maxk, std::int64_t cap,
                     const std::string& opath) {
    Frame f = load_frame(path);
    CoverSearch cs = cover_search(f, maxk, cap);
    if (!cs.found) {
        emit(c, json{{"found", false}}, "found: no\n");
        return 1;
    }
    json j{{"found", true}, {"component", cs.component}};
    std::ostringstream text;
    text << "found: yes\ncomponent: " << cs.component << "\n";
    json jmap;
    for (std::size_t w = 0; w < cs.psi.map.size(); ++w) {
        const std::string& src = cs.u.frame.worlds[w];
        const std::string& dst = f.worlds[static_cast<std::size_t>(cs.psi.map[w])];
        jmap[src] = dst;
        text << "map: " << src << " " << dst << "\n";
    }
    j["map"] = jmap;
    if (!opath.empty()) {
        PMorphismDoc doc{f.actions, cs.u.components, f, cs.psi.map};
        write_file(opath, serialize_document(Document{std::move(doc)}));
        j["written"] = opath;
        text << "written: " << opath << "\n";
    }
    emit(c, j, text.str());
    return 0;
}

int cmd_embed_search(const Ctx& c, const std::string& path, int dom,
                     const std::vector<std::string>& attrs, bool bounds, std::int64_t cap,
                     const std::string& opath) {
    FiniteLattice L = load_lattice(path);
    RelationalLattice ra = relational_lattice(numbered_dom(dom), attrs, cap);
    auto found = find_embedding(L, ra.g.lat, bounds);
    if (!found) {
        emit(c, json{{"found", false}}, "found: no\n");
        return 1;
    }
    json j{{"found", true}};
    std::ostringstream text;
    text << "found: yes\n";
    json jmap;
    std::vector<std::string> image;
    for (std::size_t l = 0; l < found->size(); ++l) {
        const std::string& dst = ra.g.lat.labels[static_cast<std::size_t>((*found)[l])];
        image.push_back(dst);
        jmap[L.labels[l]] = dst;
        text << "map: " << L.labels[l] << " " << dst << "\n";
    }
    j["map"] = jmap;
    if (!opath.empty()) {
        EmbeddingDoc doc{numbered_dom(dom), attrs, L, image};
        write_file(opath, serialize_document(Document{std::move(doc)}));
        j["written"] = opath;
        text << "written: " << opath << "\n";
    }
    emit(c, j, text.str());
    return 0;
}

int cmd_embed_normalize(const Ctx& c, const std::string& path, std::int64_t cap,
                        const std::string& opath) {
    EmbeddingDoc e = load_embedding(path);
    RelationalLattice ra = relational_lattice(e.dom_labels, e.attr_labels, cap);
    std::vector<int> i = resolve_image(e, ra);
    TopNormalization nt = normalize_top(e.lattice, ra, i, cap);
    BotNormalization nb = normalize_bot(e.lattice, nt.target, nt.embed, cap);
    json j{{"attrs", nb.target.g.attr_labels}, {"elements", nb.target.g.lat.size()}};
    std::ostringstream text;
    text << "attrs:";
    for (const auto& a : nb.target.g.attr_labels) text << " " << a;
    text << "\nelements: " << nb.target.g.lat.size() << "\n";
    json jmap;
    std::vector<std::string> image;
    for (std::size_t l = 0; l < nb.embed.size(); ++l) {
        const std::string& dst =
            nb.target.g.lat.labels[static_cast<std::size_t>(nb.embed[l])];
        image.push_back(dst);
        jmap[e.lattice.labels[l]] = dst;
        text << "map: " << e.lattice.labels[l] << " " << dst << "\n";
    }
    j["map"] = jmap;
    if (!opath.empty()) {
        EmbeddingDoc doc{e.dom_labels, nb.target.g.attr_labels, e.lattice, image};
        write_file(opath, serialize_document(Document{std::move(doc)}));
        j["written"] = opath;
        text << "written: " << opath << "\n";
    }
    emit(c, j, text.str());
    return 0;
}

int cmd_reduce_extract(const Ctx& c, const std::string& embpath, const std::string& framepath,
                       std::int64_t cap, const std::string& opath) {
    EmbeddingDoc e = load_embedding(embpath);
    Frame f = load_frame(framepath);
    GroundedLattice lf = lattice_of_frame(f, cap);
    if (e.lattice.labels != lf.lat.labels || !(e.lattice.up == lf.lat.up))
        throw Error(ErrorKind::DomainMismatch,
                    "the embedding domain differs from the frame's lattice of closed sets");
    RelationalLattice ra = relational_lattice(e.dom_labels, e.attr_labels, cap);
    std::vector<int> i = resolve_image(e, ra);
    ExtractedCover ec = extract_pmorphism(f, ra, i, cap);
    json j{{"worlds", ec.u.frame.n_worlds()}};
    std::ostringstream text;
    text << "worlds: " << ec.u.frame.n_worlds() << "\ncomponents:";
    json comps = json::array();
    for (int k : ec.u.comp_size) {
        comps.push_back(k);
        text << " " << k;
    }
    j["components"] = comps;
    text << "\nsurjective: yes\n";
    j["surjective"] = true;
    json jmap;
    for (std::size_t w = 0; w < ec.psi.map.size(); ++w) {
        const std::string& src = ec.u.frame.worlds[w];
        const std::string& dst = f.worlds[static_cast<std::size_t>(ec.psi.map[w])];
        jmap[src] = dst;
        text << "map: " << src << " " << dst << "\n";
    }
    j["map"] = jmap;
    if (!opath.empty()) {
        PMorphismDoc doc{f.actions, ec.u.components, f, ec.psi.map};
        write_file(opath, serialize_document(Document{std::move(doc)}));
        j["written"] = opath;
        text << "written: " << opath << "\n";
    }
    emit(c, j, text.str());
    return 0;
}

int cmd_ra_frame(const Ctx& c, const std::string& path, const std::string& opath) {
    RelAlgAtoms ra = load_ra(path);
    RaFrame rf = ra_frame(ra);
    json j{{"worlds", rf.frame.n_worlds()},
           {"s4", rf.props.s4},
           {"rooted", rf.props.rooted},
           {"full", rf.props.full}};
    std::string report = "worlds: " + std::to_string(rf.frame.n_worlds()) + "\nS4: " +
                         yn(rf.props.s4) + ", rooted: " + yn(rf.props.rooted) +
                         ", full: " + yn(rf.props.full) + "\n";
    emit_doc(c, j, report, Document{std::move(rf.frame)}, opath);
    return 0;
}

int cmd_horn_phi(const Ctx& c, const std::string& path, const std::string& opath) {
    FiniteLattice L = load_lattice(path);
    Quasiequation q = build_phi(L);
    std::size_t premises = expanded_premises(q).size();
    json j{{"variables", q.variables.size()}, {"premises", premises}};
    std::string report = "variables: " + std::to_string(q.variables.size()) +
                         "\npremises: " + std::to_string(premises) + "\n";
    emit_doc(c, j, report, Document{std::move(q)}, opath);
    return 0;
}

int cmd_horn_eval(const Ctx& c, const std::string& qpath, const std::string& latpath,
                  std::int64_t cap) {
    Quasiequation q = load_quasiequation(qpath);
    FiniteLattice K = load_lattice(latpath);
    EvalResult r = eval_quasiequation(K, q, cap);
    if (r.holds) {
        emit(c, json{{"holds", true}}, "holds: yes\n");
        return 0;
    }
    json j{{"holds", false}};
    std::ostringstream text;
    text << "holds: no\n";
    json jval;
    for (std::size_t v = 0; v < q.variables.size(); ++v) {
        const std::string& value = K.labels[static_cast<std::size_t>(r.falsifying[v])];
        jval[q.variables[v]] = value;
        text << q.variables[v] << " = " << value << "\n";
    }
    j["falsifying"] = jval;
    emit(c, j, text.str());
    return 1;
}

int cmd_export_dot(const Ctx& c, const std::string& path, const std::string& opath) {
    Document doc = load(path);
    std::string dot = export_dot(doc);
    if (!opath.empty()) {
        write_file(opath, dot);
        emit(c, json{{"written", opath}}, "written: " + opath + "\n");
    } else if (c.json) {
        emit(c, json{{"dot", dot}}, dot);
    } else {
        c.out << dot;
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite lattices, multimodal frames, and relational lattice tools"};
    app.require_subcommand(0, 1);

    bool json_flag = false;
    app.add_flag("--json", json_flag, "emit machine readable reports");

    std::string file, second, elem_label, opath;
    int dom = 2, maxk = 1;
    bool bounds = false;
    std::vector<std::string> attrs;
    std::int64_t cap = 1000000;

    int verdict = 0;
    bool ran = false;
    Ctx ctx{out, false};

    auto leaf = [&](CLI::App* sub) {
        sub->fallthrough();
        sub->add_option("--cap", cap, "largest object count to enumerate")
            ->capture_default_str();
        return sub;
    };
    auto run_cmd = [&](auto fn) {
        return [&, fn]() {
            ctx.json = json_flag;
            verdict = fn();
            ran = true;
        };
    };

    auto* frame = app.add_subcommand("frame", "frame validation and closed set lattices");
    frame->require_subcommand(1)->fallthrough();
    auto* frame_check = leaf(frame->add_subcommand("check", "report S4 / rooted / full"));
    frame_check->add_option("file", file, "frame document")->required();
    frame_check->callback(run_cmd([&] { return cmd_frame_check(ctx, file); }));
    auto* frame_lat = leaf(frame->add_subcommand("lattice", "lattice of closed sets"));
    frame_lat->add_option("file", file, "frame document")->required();
    frame_lat->add_option("-o,--out", opath, "write the lattice document here");
    frame_lat->callback(run_cmd([&] { return cmd_frame_lattice(ctx, file, opath, cap); }));

    auto* lattice = app.add_subcommand("lattice", "finite lattice reports");
    lattice->require_subcommand(1)->fallthrough();
    auto* lat_an = leaf(lattice->add_subcommand("analyze", "size, bounds, irreducibles"));
    lat_an->add_option("file", file, "lattice document")->required();
    lat_an->callback(run_cmd([&] { return cmd_lattice_analyze(ctx, file); }));
    auto* lat_od = leaf(lattice->add_subcommand("od", "join irreducibles with order and covers"));
    lat_od->add_option("file", file, "lattice document")->required();
    lat_od->callback(run_cmd([&] { return cmd_lattice_od(ctx, file, cap); }));
    auto* lat_si = leaf(lattice->add_subcommand("si", "subdirect irreducibility"));
    lat_si->add_option("file", file, "lattice document")->required();
    lat_si->callback(run_cmd([&] { return cmd_lattice_si(ctx, file); }));
    auto* lat_id = leaf(lattice->add_subcommand("ideal", "principal ideal sublattice"));
    lat_id->add_option("file", file, "lattice document")->required();
    lat_id->add_option("element", elem_label, "top of the ideal")->required();
    lat_id->add_option("-o,--out", opath, "write the ideal document here");
    lat_id->callback(run_cmd([&] { return cmd_lattice_ideal(ctx, file, elem_label, opath); }));

    auto* rel = app.add_subcommand("rel", "relational lattices R(D,A)");
    rel->require_subcommand(1)->fallthrough();
    auto* rel_enum = leaf(rel->add_subcommand("enum", "enumerate R(D,A)"));
    rel_enum->add_option("--dom", dom, "domain size")->required();
    rel_enum->add_option("--attrs", attrs, "attribute labels")->delimiter(',')->required();
    rel_enum->add_option("-o,--out", opath, "write the lattice document here");
    rel_enum->callback(run_cmd([&] { return cmd_rel_enum(ctx, dom, attrs, cap, opath); }));

    auto* space = app.add_subcommand("space", "generalized ultrametric spaces");
    space->require_subcommand(1)->fallthrough();
    auto* sp_check = leaf(space->add_subcommand("check", "axioms and pairwise completeness"));
    sp_check->add_option("file", file, "space document")->required();
    sp_check->callback(run_cmd([&] { return cmd_space_check(ctx, file); }));
    auto* sp_rep = leaf(space->add_subcommand("represent", "canonical section space"));
    sp_rep->add_option("file", file, "space document")->required();
    sp_rep->callback(run_cmd([&] { return cmd_space_represent(ctx, file); }));
    auto* sp_lat = leaf(space->add_subcommand("lattice", "lattice of closed sets"));
    sp_lat->add_option("file", file, "space document")->required();
    sp_lat->add_option("-o,--out", opath, "write the lattice document here");
    sp_lat->callback(run_cmd([&] { return cmd_space_lattice(ctx, file, opath, cap); }));

    auto* cover = app.add_subcommand("cover", "surjective p-morphisms from uniform products");
    cover->require_subcommand(1)->fallthrough();
    auto* cov_search = leaf(cover->add_subcommand("search", "search covers up to --max"));
    cov_search->add_option("file", file, "frame document")->required();
    cov_search->add_option("--max", maxk, "largest component size")->required();
    cov_search->add_option("-o,--out", opath, "write the p-morphism document here");
    cov_search->callback(run_cmd([&] { return cmd_cover_search(ctx, file, maxk, cap, opath); }));

    auto* embed = app.add_subcommand("embed", "lattice embeddings into R(D,A)");
    embed->require_subcommand(1)->fallthrough();
    auto* em_search = leaf(embed->add_subcommand("search", "find an embedding"));
    em_search->add_option("file", file, "lattice document")->required();
    em_search->add_option("--dom", dom, "domain size")->required();
    em_search->add_option("--attrs", attrs, "attribute labels")->delimiter(',')->required();
    em_search->add_flag("--bounds", bounds, "require bound preservation");
    em_search->add_option("-o,--out", opath, "write the embedding document here");
    em_search->callback(
        run_cmd([&] { return cmd_embed_search(ctx, file, dom, attrs, bounds, cap, opath); }));
    auto* em_norm = leaf(embed->add_subcommand("normalize", "make an embedding bound preserving"));
    em_norm->add_option("file", file, "embedding document")->required();
    em_norm->add_option("-o,--out", opath, "write the normalized embedding here");
    em_norm->callback(run_cmd([&] { return cmd_embed_normalize(ctx, file, cap, opath); }));

    auto* reduce = app.add_subcommand("reduce", "extract covers from embeddings");
    reduce->require_subcommand(1)->fallthrough();
    auto* rd_ex = leaf(reduce->add_subcommand("extract", "p-morphism behind an embedding"));
    rd_ex->add_option("embedding", file, "embedding document")->required();
    rd_ex->add_option("frame", second, "frame document")->required();
    rd_ex->add_option("-o,--out", opath, "write the p-morphism document here");
    rd_ex->callback(run_cmd([&] { return cmd_reduce_extract(ctx, file, second, cap, opath); }));

    auto* ra = app.add_subcommand("ra", "relation algebra atom structures");
    ra->require_subcommand(1)->fallthrough();
    auto* ra_fr = leaf(ra->add_subcommand("frame", "frame of consistent triples"));
    ra_fr->add_option("file", file, "ra document")->required();
    ra_fr->add_option("-o,--out", opath, "write the frame document here");
    ra_fr->callback(run_cmd([&] { return cmd_ra_frame(ctx, file, opath); }));

    auto* horn = app.add_subcommand("horn", "quasiequations over the lattice signature");
    horn->require_subcommand(1)->fallthrough();
    auto* h_phi = leaf(horn->add_subcommand("phi", "defining quasiequation of an SI lattice"));
    h_phi->add_option("file", file, "lattice document")->required();
    h_phi->add_option("-o,--out", opath, "write the quasiequation here");
    h_phi->callback(run_cmd([&] { return cmd_horn_phi(ctx, file, opath); }));
    auto* h_eval = leaf(horn->add_subcommand("eval", "evaluate on a finite lattice"));
    h_eval->add_option("quasiequation", file, "quasiequation document")->required();
    h_eval->add_option("lattice", second, "lattice document")->required();
    h_eval->callback(run_cmd([&] { return cmd_horn_eval(ctx, file, second, cap); }));

    auto* exp = app.add_subcommand("export", "graph renderings");
    exp->require_subcommand(1)->fallthrough();
    auto* ex_dot = leaf(exp->add_subcommand("dot", "DOT digraph of a frame or lattice"));
    ex_dot->add_option("file", file, "frame or lattice document")->required();
    ex_dot->add_option("-o,--out", opath, "write the DOT text here");
    ex_dot->callback(run_cmd([&] { return cmd_export_dot(ctx, file, opath); }));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
        if (!ran) throw Error(ErrorKind::UnknownCommand, "no subcommand given (see --help)");
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return verdict;
}

}  // namespace framelat
