#include "framelat/document.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "framelat/error.hpp"

namespace framelat {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

struct DocLine {
    int number = 0;
    std::string key;
    std::vector<std::string> head;    // tokens between the key and ':'
    std::string rest;                 // text after ':', trimmed
    std::vector<std::string> fields;  // rest split on whitespace
};

struct Doc {
    std::string kind;
    int kind_line = 0;
    std::vector<DocLine> lines;
};

Doc split_doc(const std::string& text) {
    Doc d;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string raw = end == std::string::npos ? text.substr(start)
                                                   : text.substr(start, end - start);
        start = end == std::string::npos ? text.size() + 1 : end + 1;
        ++number;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (d.kind.empty()) {
            if (line.find(':') != std::string::npos || split_ws(line).size() != 1)
                fail(number, "expected a document kind on the first line");
            d.kind = line;
            d.kind_line = number;
            continue;
        }
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) fail(number, "expected 'key ...: fields'");
        auto keytoks = split_ws(line.substr(0, colon));
        if (keytoks.empty()) fail(number, "missing key before ':'");
        DocLine dl;
        dl.number = number;
        dl.key = keytoks[0];
        dl.head.assign(keytoks.begin() + 1, keytoks.end());
        dl.rest = trim(line.substr(colon + 1));
        dl.fields = split_ws(dl.rest);
        d.lines.push_back(std::move(dl));
    }
    if (d.kind.empty()) fail(1, "empty document");
    return d;
}

struct Lines {
    const Doc& d;

    std::vector<const DocLine*> all(const std::string& key) const {
        std::vector<const DocLine*> out;
        for (const auto& l : d.lines)
            if (l.key == key) out.push_back(&l);
        return out;
    }

    const DocLine& unique(const std::string& key) const {
        auto v = all(key);
        if (v.empty()) fail(d.kind_line, "missing '" + key + ":' line");
        if (v.size() > 1) fail(v[1]->number, "duplicate '" + key + ":' line");
        return *v[0];
    }

    void allow(std::initializer_list<const char*> keys) const {
        for (const auto& l : d.lines) {
            bool known = false;
            for (const char* k : keys)
                if (l.key == k) known = true;
            if (!known) fail(l.number, "unknown key '" + l.key + "'");
        }
    }
};

void no_head(const DocLine& l) {
    if (!l.head.empty()) fail(l.number, "unexpected token '" + l.head[0] + "' before ':'");
}

const std::string& head1(const DocLine& l) {
    if (l.head.size() != 1)
        fail(l.number, "expected exactly one token between '" + l.key + "' and ':'");
    return l.head[0];
}

struct Index {
    std::unordered_map<std::string, int> map;
    std::string what;

    Index(const std::vector<std::string>& labels, std::string what_) : what(std::move(what_)) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            map.emplace(labels[i], static_cast<int>(i));
    }

    int at(const std::string& label, int line) const {
        auto it = map.find(label);
        if (it == map.end()) fail(line, "unknown " + what + " '" + label + "'");
        return it->second;
    }
};

// --- frame ---

Frame parse_frame_section(const Lines& ls, const std::vector<std::string>& actions) {
    const DocLine& wl = ls.unique("worlds");
    no_head(wl);
    Index ai(actions, "action");
    Index wi(wl.fields, "world");
    std::vector<std::tuple<int, int, int>> edges;
    for (const DocLine* l : ls.all("rel")) {
        int a = ai.at(head1(*l), l->number);
        if (l->fields.size() != 2) fail(l->number, "expected two world labels");
        edges.emplace_back(a, wi.at(l->fields[0], l->number), wi.at(l->fields[1], l->number));
    }
    return build_frame(actions, wl.fields, edges);
}

Frame parse_frame_doc(const Doc& d) {
    Lines ls{d};
    ls.allow({"actions", "worlds", "rel"});
    const DocLine& al = ls.unique("actions");
    no_head(al);
    return parse_frame_section(ls, al.fields);
}

void write_frame_section(std::ostringstream& os, const Frame& f) {
    os << "worlds:";
    for (const auto& w : f.worlds) os << " " << w;
    os << "\n";
    for (int a = 0; a < f.n_actions(); ++a)
        for (int x = 0; x < f.n_worlds(); ++x) {
            const Bits& row = f.rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)];
            for (std::size_t y = row.first(); y < row.size(); y = row.next(y))
                os << "rel " << f.actions[static_cast<std::size_t>(a)] << ": "
                   << f.worlds[static_cast<std::size_t>(x)] << " " << f.worlds[y] << "\n";
        }
}

void write_frame_doc(std::ostringstream& os, const Frame& f) {
    os << "frame\n";
    os << "actions:";
    for (const auto& a : f.actions) os << " " << a;
    os << "\n";
    write_frame_section(os, f);
}

// --- lattice ---

FiniteLattice parse_lattice_section(const Lines& ls) {
    auto elems = ls.all("elem");
    auto moores = ls.all("moore");
    if (!elems.empty() && !moores.empty())
        fail(moores[0]->number, "mix of elem/leq and ground/moore forms");
    if (!elems.empty()) {
        if (elems.size() > 1) fail(elems[1]->number, "duplicate 'elem:' line");
        auto grounds = ls.all("ground");
        if (!grounds.empty()) fail(grounds[0]->number, "'ground:' needs the moore form");
        const DocLine& el = *elems[0];
        no_head(el);
        Index ei(el.fields, "element");
        std::vector<std::pair<int, int>> pairs;
        for (const DocLine* l : ls.all("leq")) {
            no_head(*l);
            if (l->fields.size() != 2) fail(l->number, "expected two element labels");
            pairs.emplace_back(ei.at(l->fields[0], l->number), ei.at(l->fields[1], l->number));
        }
        return build_lattice(el.fields, pairs);
    }
    const DocLine& gl = ls.unique("ground");
    no_head(gl);
    auto leqs = ls.all("leq");
    if (!leqs.empty()) fail(leqs[0]->number, "'leq:' needs the elem form");
    if (moores.empty()) fail(ls.d.kind_line, "missing 'elem:' or 'moore:' lines");
    Index gi(gl.fields, "ground label");
    MooreFamily mf;
    mf.ground = gl.fields;
    for (const DocLine* l : moores) {
        no_head(*l);
        Bits m(gl.fields.size());
        for (const auto& f : l->fields) m.set(static_cast<std::size_t>(gi.at(f, l->number)));
        mf.members.push_back(m);
    }
    return lattice_from_moore(mf).lat;
}

FiniteLattice parse_lattice_doc(const Doc& d) {
    Lines ls{d};
    ls.allow({"elem", "leq", "ground", "moore"});
    return parse_lattice_section(ls);
}

void write_lattice_section(std::ostringstream& os, const FiniteLattice& L) {
    os << "elem:";
    for (const auto& l : L.labels) os << " " << l;
    os << "\n";
    for (auto [x, y] : L.cover_pairs())
        os << "leq: " << L.labels[static_cast<std::size_t>(x)] << " "
           << L.labels[static_cast<std::size_t>(y)] << "\n";
}

// --- space ---

UltraSpace parse_space_doc(const Doc& d) {
    Lines ls{d};
    ls.allow({"attrs", "points", "dist"});
    const DocLine& al = ls.unique("attrs");
    no_head(al);
    const DocLine& pl = ls.unique("points");
    no_head(pl);
    Index ai(al.fields, "attribute");
    Index pi(pl.fields, "point");
    std::size_t n = pl.fields.size();
    std::vector<std::vector<Bits>> dist(n, std::vector<Bits>(n, Bits(al.fields.size())));
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    for (const DocLine* l : ls.all("dist")) {
        if (l->head.size() != 2) fail(l->number, "expected 'dist <point> <point>:'");
        std::size_t x = static_cast<std::size_t>(pi.at(l->head[0], l->number));
        std::size_t y = static_cast<std::size_t>(pi.at(l->head[1], l->number));
        Bits b(al.fields.size());
        for (const auto& f : l->fields) b.set(static_cast<std::size_t>(ai.at(f, l->number)));
        if (seen[x][y] && !(dist[x][y] == b)) fail(l->number, "conflicting distance");
        dist[x][y] = b;
        dist[y][x] = b;
        seen[x][y] = seen[y][x] = true;
    }
    return build_space(al.fields, pl.fields, dist);
}

void write_space_doc(std::ostringstream& os, const UltraSpace& s) {
    os << "space\nattrs:";
    for (const auto& a : s.attr_labels) os << " " << a;
    os << "\npoints:";
    for (const auto& p : s.point_labels) os << " " << p;
    os << "\n";
    for (int x = 0; x < s.n_points(); ++x)
        for (int y = x + 1; y < s.n_points(); ++y) {
            os << "dist " << s.point_labels[static_cast<std::size_t>(x)] << " "
               << s.point_labels[static_cast<std::size_t>(y)] << ":";
            const Bits& b = s.d(x, y);
            for (std::size_t a = b.first(); a < b.size(); a = b.next(a))
                os << " " << s.attr_labels[a];
            os << "\n";
        }
}

// --- relation algebra atoms ---

RelAlgAtoms parse_ra_doc(const Doc& d) {
    Lines ls{d};
    ls.allow({"atoms", "identity", "converse", "allowed"});
    const DocLine& al = ls.unique("atoms");
    no_head(al);
    std::size_t n = al.fields.size();
    Index ti(al.fields, "atom");

    RelAlgAtoms ra;
    ra.atoms = al.fields;

    const DocLine& il = ls.unique("identity");
    no_head(il);
    ra.identity = Bits(n);
    for (const auto& f : il.fields) ra.identity.set(static_cast<std::size_t>(ti.at(f, il.number)));

    ra.converse.assign(n, -1);
    for (const DocLine* l : ls.all("converse")) {
        no_head(*l);
        if (l->fields.size() != 2) fail(l->number, "expected 'converse: <atom> <atom>'");
        int x = ti.at(l->fields[0], l->number);
        if (ra.converse[static_cast<std::size_t>(x)] != -1)
            fail(l->number, "duplicate converse for atom '" + l->fields[0] + "'");
        ra.converse[static_cast<std::size_t>(x)] = ti.at(l->fields[1], l->number);
    }
    for (std::size_t x = 0; x < n; ++x)
        if (ra.converse[x] == -1)
            fail(d.kind_line, "no converse line for atom '" + ra.atoms[x] + "'");

    ra.allowed.assign(n * n, Bits(n));
    std::vector<bool> seen(n * n, false);
    for (const DocLine* l : ls.all("allowed")) {
        if (l->head.size() != 2) fail(l->number, "expected 'allowed <atom> <atom>:'");
        std::size_t t0 = static_cast<std::size_t>(ti.at(l->head[0], l->number));
        std::size_t t1 = static_cast<std::size_t>(ti.at(l->head[1], l->number));
        if (seen[t0 * n + t1]) fail(l->number, "duplicate allowed line");
        seen[t0 * n + t1] = true;
        for (const auto& f : l->fields)
            ra.allowed[t0 * n + t1].set(static_cast<std::size_t>(ti.at(f, l->number)));
    }
    for (std::size_t t0 = 0; t0 < n; ++t0)
        for (std::size_t t1 = 0; t1 < n; ++t1)
            if (!seen[t0 * n + t1])
                fail(d.kind_line, "missing 'allowed " + ra.atoms[t0] + " " + ra.atoms[t1] +
                                      ":' line");
    return ra;
}

void write_ra_doc(std::ostringstream& os, const RelAlgAtoms& ra) {
    std::size_t n = ra.atoms.size();
    os << "ra\natoms:";
    for (const auto& a : ra.atoms) os << " " << a;
    os << "\nidentity:";
    for (std::size_t i = ra.identity.first(); i < ra.identity.size(); i = ra.identity.next(i))
        os << " " << ra.atoms[i];
    os << "\n";
    for (std::size_t x = 0; x < n; ++x)
        os << "converse: " << ra.atoms[x] << " "
           << ra.atoms[static_cast<std::size_t>(ra.converse[x])] << "\n";
    for (std::size_t t0 = 0; t0 < n; ++t0)
        for (std::size_t t1 = 0; t1 < n; ++t1) {
            os << "allowed " << ra.atoms[t0] << " " << ra.atoms[t1] << ":";
            const Bits& b = ra.allowed[t0 * n + t1];
            for (std::size_t t2 = b.first(); t2 < b.size(); t2 = b.next(t2))
                os << " " << ra.atoms[t2];
            os << "\n";
        }
}

// --- quasiequation ---

Equation parse_equation_line(const DocLine& l, const std::vector<std::string>& vars) {
    no_head(l);
    std::size_t eq = l.rest.find('=');
    if (eq == std::string::npos) fail(l.number, "expected '<term> = <term>'");
    if (l.rest.find('=', eq + 1) != std::string::npos) fail(l.number, "more than one '='");
    try {
        Term lhs = parse_term(trim(l.rest.substr(0, eq)), vars);
        Term rhs = parse_term(trim(l.rest.substr(eq + 1)), vars);
        return {std::move(lhs), std::move(rhs)};
    } catch (const Error& e) {
        fail(l.number, e.what());
    }
}

Quasiequation parse_quasiequation_doc(const Doc& d) {
    Lines ls{d};
    ls.allow({"vars", "premise", "conclusion"});
    const DocLine& vl = ls.unique("vars");
    no_head(vl);
    if (vl.fields.empty()) fail(vl.number, "a quasiequation needs at least one variable");
    std::unordered_map<std::string, int> seen;
    for (const auto& v : vl.fields) {
        if (v.find_first_of("()=") != std::string::npos)
            fail(vl.number, "variable '" + v + "' contains a reserved character");
        if (!seen.emplace(v, 1).second) fail(vl.number, "variable '" + v + "' repeats");
    }
    Quasiequation q;
    q.variables = vl.fields;
    for (const DocLine* l : ls.all("premise"))
        q.premises.push_back(parse_equation_line(*l, q.variables));
    q.conclusion = parse_equation_line(ls.unique("conclusion"), q.variables);
    return q;
}

void write_quasiequation_doc(std::ostringstream& os, const Quasiequation& q) {
    os << "quasiequation\nvars:";
    for (const auto& v : q.variables) os << " " << v;
    os << "\n";
    for (const auto& e : expanded_premises(q))
        os << "premise: " << term_text(e.lhs, q.variables) << " = "
           << term_text(e.rhs, q.variables) << "\n";
    os << "conclusion: " << term_text(q.conclusion.lhs, q.variables) << " = "
       << term_text(q.conclusion.rhs, q.variables) << "\n";
}

// --- embedding ---

EmbeddingDoc parse_embedding_doc(const Doc& d) {
    Lines ls{d};
    ls.allow({"dom", "attrs", "elem", "leq", "ground", "moore", "map"});
    const DocLine& dl = ls.unique("dom");
    no_head(dl);
    const DocLine& al = ls.unique("attrs");
    no_head(al);
    EmbeddingDoc e;
    e.dom_labels = dl.fields;
    e.attr_labels = al.fields;
    e.lattice = parse_lattice_section(ls);
    Index ei(e.lattice.labels, "element");
    e.image.assign(e.lattice.labels.size(), "");
    for (const DocLine* l : ls.all("map")) {
        no_head(*l);
        if (l->fields.size() != 2) fail(l->number, "expected 'map: <element> <image>'");
        std::size_t i = static_cast<std::size_t>(ei.at(l->fields[0], l->number));
        if (!e.image[i].empty()) fail(l->number, "duplicate map for '" + l->fields[0] + "'");
        e.image[i] = l->fields[1];
    }
    for (std::size_t i = 0; i < e.image.size(); ++i)
        if (e.image[i].empty())
            fail(d.kind_line, "no map line for element '" + e.lattice.labels[i] + "'");
    return e;
}

void write_embedding_doc(std::ostringstream& os, const EmbeddingDoc& e) {
    os << "embedding\ndom:";
    for (const auto& l : e.dom_labels) os << " " << l;
    os << "\nattrs:";
    for (const auto& l : e.attr_labels) os << " " << l;
    os << "\n";
    write_lattice_section(os, e.lattice);
    for (std::size_t i = 0; i < e.image.size(); ++i)
        os << "map: " << e.lattice.labels[i] << " " << e.image[i] << "\n";
}

// --- p-morphism ---

PMorphismDoc parse_pmorphism_doc(const Doc& d) {
    Lines ls{d};
    ls.allow({"actions", "component", "worlds", "rel", "map"});
    const DocLine& al = ls.unique("actions");
    no_head(al);
    Index ai(al.fields, "action");

    PMorphismDoc p;
    p.actions = al.fields;
    p.components.assign(p.actions.size(), {});
    std::vector<bool> have(p.actions.size(), false);
    for (const DocLine* l : ls.all("component")) {
        std::size_t a = static_cast<std::size_t>(ai.at(head1(*l), l->number));
        if (have[a]) fail(l->number, "duplicate component for action '" + p.actions[a] + "'");
        if (l->fields.empty()) fail(l->number, "empty component");
        have[a] = true;
        p.components[a] = l->fields;
    }
    for (std::size_t a = 0; a < p.actions.size(); ++a)
        if (!have[a]) fail(d.kind_line, "no component line for action '" + p.actions[a] + "'");

    p.target = parse_frame_section(ls, p.actions);

    std::int64_t total = 1;
    for (const auto& c : p.components) {
        total *= static_cast<std::int64_t>(c.size());
        if (total > 10000000) fail(d.kind_line, "product frame too large for a document");
    }
    ProductFrame u = universal_product_frame(p.actions, p.components, total);
    Index ui(u.frame.worlds, "product world");
    Index wi(p.target.worlds, "world");
    p.map.assign(static_cast<std::size_t>(total), -1);
    for (const DocLine* l : ls.all("map")) {
        no_head(*l);
        if (l->fields.size() != 2) fail(l->number, "expected 'map: <product world> <world>'");
        std::size_t w = static_cast<std::size_t>(ui.at(l->fields[0], l->number));
        if (p.map[w] != -1) fail(l->number, "duplicate map for '" + l->fields[0] + "'");
        p.map[w] = wi.at(l->fields[1], l->number);
    }
    for (std::size_t w = 0; w < p.map.size(); ++w)
        if (p.map[w] == -1)
            fail(d.kind_line, "no map line for product world '" + u.frame.worlds[w] + "'");
    return p;
}

void write_pmorphism_doc(std::ostringstream& os, const PMorphismDoc& p) {
    os << "pmorphism\nactions:";
    for (const auto& a : p.actions) os << " " << a;
    os << "\n";
    for (std::size_t a = 0; a < p.actions.size(); ++a) {
        os << "component " << p.actions[a] << ":";
        for (const auto& c : p.components[a]) os << " " << c;
        os << "\n";
    }
    write_frame_section(os, p.target);
    std::int64_t total = 1;
    for (const auto& c : p.components) total *= static_cast<std::int64_t>(c.size());
    ProductFrame u = universal_product_frame(p.actions, p.components, total);
    for (std::size_t w = 0; w < p.map.size(); ++w)
        os << "map: " << u.frame.worlds[w] << " "
           << p.target.worlds[static_cast<std::size_t>(p.map[w])] << "\n";
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string kind_name(DocKind k) {
    switch (k) {
        case DocKind::Frame: return "frame";
        case DocKind::Lattice: return "lattice";
        case DocKind::Space: return "space";
        case DocKind::Ra: return "ra";
        case DocKind::Quasiequation: return "quasiequation";
        case DocKind::Embedding: return "embedding";
        case DocKind::PMorphism: return "pmorphism";
    }
    return "unknown";
}

Document parse_document(const std::string& text) {
    Doc d = split_doc(text);
    if (d.kind == "frame") return {parse_frame_doc(d)};
    if (d.kind == "lattice") return {parse_lattice_doc(d)};
    if (d.kind == "space") return {parse_space_doc(d)};
    if (d.kind == "ra") return {parse_ra_doc(d)};
    if (d.kind == "quasiequation") return {parse_quasiequation_doc(d)};
    if (d.kind == "embedding") return {parse_embedding_doc(d)};
    if (d.kind == "pmorphism") return {parse_pmorphism_doc(d)};
    fail(d.kind_line, "unknown document kind '" + d.kind + "'");
}

std::string serialize_document(const Document& doc) {
    std::ostringstream os;
    switch (doc.kind()) {
        case DocKind::Frame:
            write_frame_doc(os, std::get<Frame>(doc.payload));
            break;
        case DocKind::Lattice:
            os << "lattice\n";
            write_lattice_section(os, std::get<FiniteLattice>(doc.payload));
            break;
        case DocKind::Space:
            write_space_doc(os, std::get<UltraSpace>(doc.payload));
            break;
        case DocKind::Ra:
            write_ra_doc(os, std::get<RelAlgAtoms>(doc.payload));
            break;
        case DocKind::Quasiequation:
            write_quasiequation_doc(os, std::get<Quasiequation>(doc.payload));
            break;
        case DocKind::Embedding:
            write_embedding_doc(os, std::get<EmbeddingDoc>(doc.payload));
            break;
        case DocKind::PMorphism:
            write_pmorphism_doc(os, std::get<PMorphismDoc>(doc.payload));
            break;
    }
    return os.str();
}

std::string export_dot(const Document& doc) {
    std::ostringstream os;
    if (doc.kind() == DocKind::Lattice) {
        const auto& L = std::get<FiniteLattice>(doc.payload);
        os << "digraph lattice {\n  rankdir=BT;\n";
        for (int i = 0; i < L.size(); ++i)
            os << "  n" << i << " [label=\""
               << dot_escape(L.labels[static_cast<std::size_t>(i)]) << "\"];\n";
        for (auto [x, y] : L.cover_pairs()) os << "  n" << x << " -> n" << y << ";\n";
        os << "}\n";
        return os.str();
    }
    if (doc.kind() == DocKind::Frame) {
        const auto& f = std::get<Frame>(doc.payload);
        os << "digraph frame {\n";
        for (int x = 0; x < f.n_worlds(); ++x)
            os << "  n" << x << " [label=\""
               << dot_escape(f.worlds[static_cast<std::size_t>(x)]) << "\"];\n";
        for (int a = 0; a < f.n_actions(); ++a)
            for (int x = 0; x < f.n_worlds(); ++x) {
                const Bits& row =
                    f.rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)];
                for (std::size_t y = row.first(); y < row.size(); y = row.next(y))
                    os << "  n" << x << " -> n" << y << " [label=\""
                       << dot_escape(f.actions[static_cast<std::size_t>(a)]) << "\"];\n";
            }
        os << "}\n";
        return os.str();
    }
    throw Error(ErrorKind::UnsupportedKind,
                "dot export supports frame and lattice documents, not " +
                    kind_name(doc.kind()));
}

}  // namespace framelat
