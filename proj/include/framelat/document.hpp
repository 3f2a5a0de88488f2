#pragma once

#include <string>
#include <variant>
#include <vector>

#include "framelat/frame.hpp"
#include "framelat/horn.hpp"
#include "framelat/lattice.hpp"
#include "framelat/reduction.hpp"
#include "framelat/ultrametric.hpp"

namespace framelat {

// Embedding of a finite lattice into the relational lattice over the given
// domain and attribute labels. Images are element labels of R(D,A), so the
// file stands alone; resolve them against relational_lattice(dom_labels,
// attr_labels) when the lattice is needed.
struct EmbeddingDoc {
    std::vector<std::string> dom_labels;
    std::vector<std::string> attr_labels;
    FiniteLattice lattice;
    std::vector<std::string> image;  // per lattice element, in element order
};

// Map from a universal product frame (one component per action) onto an
// explicit target frame over the same actions.
struct PMorphismDoc {
    std::vector<std::string> actions;
    std::vector<std::vector<std::string>> components;  // per action
    Frame target;
    std::vector<int> map;  // product world index -> target world index
};

enum class DocKind { Frame, Lattice, Space, Ra, Quasiequation, Embedding, PMorphism };

struct Document {
    std::variant<Frame, FiniteLattice, UltraSpace, RelAlgAtoms, Quasiequation, EmbeddingDoc,
                 PMorphismDoc>
        payload;

    DocKind kind() const { return static_cast<DocKind>(payload.index()); }
};

// The kind word written on the first line of a document file.
std::string kind_name(DocKind k);

// Line-oriented text formats, one document per file. The first meaningful
// line names the kind; lines starting with '#' and blank lines are skipped;
// every other line reads `key [head...]: fields...`. parse(serialize(doc))
// reproduces the document and serialize(parse(text)) canonicalizes the
// text. Throws ParseError with line numbers on malformed input; payload
// validation errors (bad posets, distance axioms, ...) surface as their own
// kinds.
Document parse_document(const std::string& text);
std::string serialize_document(const Document& doc);

// Deterministic DOT digraph: Hasse covers for lattices (edge x -> y when y
// covers x), labeled action edges for frames. Throws UnsupportedKind for
// other kinds.
std::string export_dot(const Document& doc);

}  // namespace framelat
