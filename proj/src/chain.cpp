#include "khom/chain.hpp"

#include "khom/induction.hpp"

#include <algorithm>
#include <stdexcept>

namespace khom {

namespace {

// Role pair and generator-order flag of edge e at a vertex with the given
// role assignment. The edge's first generator is the reflection of its
// lex-smaller face; `swapped` records that this is the later role letter.
struct EdgePosition {
    EdgeRole role;
    bool swapped;
};

EdgePosition edge_position(const VertexCell& vc, const Edge& e) {
    auto role_of = [&](int f) {
        for (int t = 0; t < 3; ++t)
            if (vc.role_faces[t] == f) return t;
        throw std::logic_error("edge face not at vertex");
    };
    int a = role_of(e.first), b = role_of(e.second);
    bool swapped = a > b;
    if (swapped) std::swap(a, b);
    EdgeRole role = (a == 0) ? (b == 1 ? EdgeRole::IJ : EdgeRole::IK)
                             : EdgeRole::JK;
    return {role, swapped};
}

}  // namespace

const VertexCell& ChainComplex::vertex_cell(const Vertex& v) const {
    for (const VertexCell& vc : vcells)
        if (vc.v == v) return vc;
    throw std::invalid_argument("no such vertex");
}

const EdgeCell& ChainComplex::edge_cell(const Edge& e) const {
    for (const EdgeCell& ec : ecells)
        if (ec.e == e) return ec;
    throw std::invalid_argument("no such edge");
}

ChainComplex assemble(const CellComplex& cc, BasisKind basis) {
    ChainComplex ch;
    ch.basis = basis;
    ch.cells = cc;
    bool transformed = (basis == BasisKind::Transformed);

    std::size_t off = 0;
    for (const Vertex& v : cc.vertices) {
        VertexCell vc;
        vc.v = v;
        vc.type = cc.vertex_type(v);
        vc.role_faces = cc.vertex_roles(v);
        vc.offset = off;
        vc.dim = static_cast<std::size_t>(class_count(vc.type));
        off += vc.dim;
        ch.vcells.push_back(vc);
    }
    ch.n0 = off;
    off = 0;
    for (const Edge& e : cc.edges) {
        EdgeCell ec;
        ec.e = e;
        ec.m = cc.angle(e.first, e.second);
        ec.offset = off;
        ec.dim = static_cast<std::size_t>(class_count(dihedral_type(ec.m)));
        off += ec.dim;
        ch.ecells.push_back(ec);
    }
    ch.n1 = off;
    ch.n2 = 2 * static_cast<std::size_t>(cc.cm.faces);
    ch.n3 = 1;

    IntMatrix xc2 = face_basis();
    IntMatrix xc2_inv = inverse_unimodular(xc2);

    // d1: per edge, + induction block at the target vertex, - at the source.
    ch.d1 = IntMatrix(ch.n0, ch.n1);
    for (const EdgeCell& ec : ch.ecells) {
        IntMatrix xe = edge_basis(ec.m);
        for (int side = 0; side < 2; ++side) {
            const Vertex& v = side == 0 ? cc.edst.at(ec.e) : cc.esrc.at(ec.e);
            Int sgn = side == 0 ? 1 : -1;
            const VertexCell& vc = ch.vertex_cell(v);
            EdgePosition pos = edge_position(vc, ec.e);
            if (edge_order_at(vc.type, pos.role) != ec.m)
                throw std::logic_error("edge order mismatch at vertex");
            IntMatrix blk = edge_to_vertex(vc.type, pos.role, pos.swapped);
            if (transformed) blk = base_change(vc.type).matrix * blk * xe;
            ch.d1.add_block(vc.offset, ec.offset, blk, sgn);
        }
    }

    // d2: per edge, the two face inclusions with traversal signs.
    ch.d2 = IntMatrix(ch.n1, ch.n2);
    for (const EdgeCell& ec : ch.ecells) {
        IntMatrix xe_inv = inverse_unimodular(edge_basis(ec.m));
        for (int f : {ec.e.first, ec.e.second}) {
            IntMatrix blk = c2_to_dihedral(ec.m, f == ec.e.first);
            if (transformed) blk = xe_inv * blk * xc2;
            ch.d2.add_block(ec.offset, 2 * static_cast<std::size_t>(f - 1), blk,
                            cc.eps(ec.e, f));
        }
    }

    // d3: per face, the regular representation (1,1) of the 3-cell generator.
    ch.d3 = IntMatrix(ch.n2, 1);
    IntMatrix blk3 = trivial_to_c2();
    if (transformed) blk3 = xc2_inv * blk3;
    for (int f = 1; f <= cc.cm.faces; ++f)
        ch.d3.add_block(2 * static_cast<std::size_t>(f - 1), 0, blk3);

    return ch;
}

bool verify(const ChainComplex& chain) {
    return (chain.d1 * chain.d2).is_zero() && (chain.d2 * chain.d3).is_zero();
}

}  // namespace khom
