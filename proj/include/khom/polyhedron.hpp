#pragma once
// Combinatorics of the defining polyhedron: parse the Coxeter matrix, derive
// the quotient cell complex (faces / edges / spherical vertices), validate it
// as the boundary sphere of a compact polyhedron, and fix orientations.

#include "khom/repring.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace khom {

using Edge = std::pair<int, int>;      // face pair, first < second
using Vertex = std::array<int, 3>;     // face triple, ascending

struct CoxeterMatrix {
    std::string name;
    int faces = 0;
    std::map<Edge, int> entries;  // {i<j} -> m_ij >= 2; absent = infinity

    // m_ab, or 0 when the two faces are disjoint (m = infinity).
    int angle(int a, int b) const;
};

// Parses the input document: { "name": string, "faces": n, "coxeter":
// [[i, j, m], ...] } with 1 <= i < j <= n, m >= 2 (1-based face indices).
// Unknown fields and duplicate pairs are rejected.
CoxeterMatrix parse_coxeter(const std::string& text);
CoxeterMatrix load_coxeter(const std::string& path);

// One face's traversal of an edge: from vertex `src` to vertex `dst`.
struct Traversal {
    Vertex src, dst;
};

struct CellComplex {
    CoxeterMatrix cm;
    std::vector<Edge> edges;        // sorted; all finite pairs
    std::vector<Vertex> vertices;   // sorted; all spherical triples

    // Oriented cycle of neighboring faces around each face.
    std::map<int, std::vector<int>> cycle;
    // Per edge, how each of its two faces traverses it.
    std::map<Edge, std::map<int, Traversal>> trav;
    // Edge orientation: source = lexicographically smaller endpoint triple.
    std::map<Edge, Vertex> esrc, edst;

    int angle(int a, int b) const { return cm.angle(a, b); }
    std::vector<Vertex> edge_endpoints(const Edge& e) const;
    StabilizerType vertex_type(const Vertex& v) const;
    // +1 if face f traverses edge e from source to target, else -1.
    int eps(const Edge& e, int f) const;
    // The three faces of vertex v in role order (i, j, k) for its type's
    // generator conventions.
    std::array<int, 3> vertex_roles(const Vertex& v) const;
};

struct BuildResult {
    std::optional<CellComplex> complex;  // set iff diagnostics is empty
    std::vector<std::string> diagnostics;
};

// Derives the cell complex and collects every invariant violation found
// (edge endpoint counts, face links, Euler characteristic, orientability).
BuildResult try_build_complex(const CoxeterMatrix& cm);

// As above but throws std::runtime_error with the joined diagnostics.
CellComplex build_complex(const CoxeterMatrix& cm);

}  // namespace khom
