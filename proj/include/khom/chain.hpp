#pragma once
// Assembly of the Bredon chain complex 0 -> C3 -> C2 -> C1 -> C0 -> 0 of a
// validated cell complex, as three exact integer matrices with orientation
// signs, in the standard (irreducible-character) or transformed basis.

#include "khom/intmatrix.hpp"
#include "khom/polyhedron.hpp"
#include "khom/repring.hpp"

#include <cstddef>
#include <vector>

namespace khom {

enum class BasisKind { Standard, Transformed };

struct VertexCell {
    Vertex v;
    StabilizerType type;
    std::array<int, 3> role_faces;  // the faces playing roles i, j, k
    std::size_t offset = 0;         // row offset of this vertex's block in C0
    std::size_t dim = 0;            // = class_count(type)
};

struct EdgeCell {
    Edge e;
    int m = 0;
    std::size_t offset = 0;  // offset of this edge's block in C1
    std::size_t dim = 0;     // = class_count(D_m)
};

struct ChainComplex {
    BasisKind basis = BasisKind::Standard;
    CellComplex cells;
    std::vector<VertexCell> vcells;  // sorted by vertex triple
    std::vector<EdgeCell> ecells;    // sorted by face pair
    std::size_t n0 = 0, n1 = 0, n2 = 0, n3 = 1;
    // d1: C1 -> C0 (n0 x n1); d2: C2 -> C1 (n1 x n2); d3: C3 -> C2 (n2 x 1).
    IntMatrix d1, d2, d3;

    const VertexCell& vertex_cell(const Vertex& v) const;
    const EdgeCell& edge_cell(const Edge& e) const;
};

ChainComplex assemble(const CellComplex& cc, BasisKind basis);

// True iff d1 * d2 = 0 and d2 * d3 = 0 exactly.
bool verify(const ChainComplex& chain);

}  // namespace khom
