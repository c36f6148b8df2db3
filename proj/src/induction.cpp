#include "khom/induction.hpp"

#include <stdexcept>

namespace khom {

namespace {

int num_phi(int m) { return (m % 2) ? (m - 1) / 2 : m / 2 - 1; }

IntMatrix swap_chi34_cols(IntMatrix m) {
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, 2), m.at(r, 3));
    return m;
}

// Delta(2,2,2): one fixed pattern per role pair; the eight vertex characters
// are indexed by their values on (s_i, s_j, s_k).
IntMatrix d222_edge(EdgeRole role) {
    switch (role) {
        case EdgeRole::IJ:
            return IntMatrix{{1, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 1},
                             {0, 0, 1, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}};
        case EdgeRole::IK:
            return IntMatrix{{1, 0, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 0, 0, 1},
                             {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}};
        case EdgeRole::JK:
            return IntMatrix{{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0},
                             {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}};
    }
    throw std::logic_error("bad role");
}

// Delta(2,2,m), m >= 3: the D2 edges {i,j} and {i,k}. Vertex characters are
// rho1 (x) (D_m chars) then rho2 (x) (D_m chars); each maps to a single D2
// character column (phi rows to a sum of two).
IntMatrix d22m_d2_edge(int m, bool x_is_j) {
    int p = num_phi(m);
    bool even = (m % 2 == 0);
    int nch = (even ? 4 : 2) + p;
    IntMatrix out(2 * nch, 4);
    for (int rho = 0; rho < 2; ++rho) {
        int a, b, h3, h4;
        if (rho == 0) {
            a = 0;  // chi1 -> column 1
            b = 3;  // chi2 -> column 4
            h3 = x_is_j ? 3 : 0;
            h4 = x_is_j ? 0 : 3;
        } else {
            a = 2;  // chi1 -> column 3
            b = 1;  // chi2 -> column 2
            h3 = x_is_j ? 1 : 2;
            h4 = x_is_j ? 2 : 1;
        }
        int r = rho * nch;
        out.at(r + 0, a) = 1;
        out.at(r + 1, b) = 1;
        if (even) {
            out.at(r + 2, h3) = 1;
            out.at(r + 3, h4) = 1;
        }
        for (int q = 0; q < p; ++q) {
            out.at(r + (even ? 4 : 2) + q, a) += 1;
            out.at(r + (even ? 4 : 2) + q, b) += 1;
        }
    }
    return out;
}

// Delta(2,2,m): the D_m edge {j,k} includes as the dihedral factor; each of
// its characters induces to (rho1 + rho2) (x) itself.
IntMatrix d22m_dm_edge(int m) {
    int nch = class_count(dihedral_type(m));
    IntMatrix out(2 * nch, nch);
    for (int r = 0; r < nch; ++r) {
        out.at(r, r) = 1;
        out.at(nch + r, r) = 1;
    }
    return out;
}

IntMatrix d233_edge(EdgeRole role) {
    if (role == EdgeRole::IK)  // the D2 edge
        return IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0},
                         {1, 0, 1, 1}, {0, 1, 1, 1}};
    // both D3 edges induce identically
    return IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}};
}

IntMatrix d234_edge(EdgeRole role) {
    switch (role) {
        case EdgeRole::IJ:  // D3
            return IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1},
                             {0, 1, 0}, {1, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 0, 1}};
        case EdgeRole::IK:  // D2
            return IntMatrix{{1, 0, 0, 0}, {0, 0, 1, 0}, {1, 0, 1, 0}, {1, 1, 0, 1},
                             {0, 1, 1, 1}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 1},
                             {1, 1, 1, 0}, {1, 0, 1, 1}};
        case EdgeRole::JK:  // D4
            return IntMatrix{{1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {1, 0, 1, 0, 0},
                             {0, 0, 0, 1, 1}, {0, 1, 0, 0, 1}, {0, 1, 0, 0, 0},
                             {0, 0, 0, 1, 0}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1},
                             {1, 0, 0, 0, 1}};
    }
    throw std::logic_error("bad role");
}

IntMatrix d235_edge(EdgeRole role) {
    switch (role) {
        case EdgeRole::IJ:  // D3
            return IntMatrix{{1, 0, 0}, {1, 1, 1}, {1, 0, 2}, {0, 1, 1}, {0, 1, 1},
                             {0, 1, 0}, {1, 1, 1}, {0, 1, 2}, {1, 0, 1}, {1, 0, 1}};
        case EdgeRole::IK:  // D2
            return IntMatrix{{1, 0, 0, 0}, {1, 1, 1, 1}, {2, 1, 1, 1}, {0, 1, 1, 1},
                             {0, 1, 1, 1}, {0, 1, 0, 0}, {1, 1, 1, 1}, {1, 2, 1, 1},
                             {1, 0, 1, 1}, {1, 0, 1, 1}};
        case EdgeRole::JK:  // D5
            return IntMatrix{{1, 0, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 1}, {0, 1, 1, 0},
                             {0, 1, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 1, 1, 1},
                             {1, 0, 1, 0}, {1, 0, 0, 1}};
    }
    throw std::logic_error("bad role");
}

}  // namespace

IntMatrix trivial_to_c2() { return IntMatrix{{1}, {1}}; }

IntMatrix c2_to_dihedral(int m, bool face_is_g1) {
    int p = num_phi(m);
    bool even = (m % 2 == 0);
    IntMatrix out((even ? 4 : 2) + p, 2);
    out.at(0, 0) = 1;
    out.at(1, 1) = 1;
    if (even) {
        // chi3 is -1 on g1, so rho2 of the g1 face induces into it.
        out.at(2, face_is_g1 ? 1 : 0) = 1;
        out.at(3, face_is_g1 ? 0 : 1) = 1;
    }
    for (int q = 0; q < p; ++q) {
        out.at((even ? 4 : 2) + q, 0) = 1;
        out.at((even ? 4 : 2) + q, 1) = 1;
    }
    return out;
}

int edge_order_at(const StabilizerType& vertex, EdgeRole role) {
    switch (vertex.kind) {
        case StabKind::Delta222:
            return 2;
        case StabKind::Delta22m:
            return role == EdgeRole::JK ? vertex.m : 2;
        case StabKind::Delta233:
            return role == EdgeRole::IK ? 2 : 3;
        case StabKind::Delta234:
            switch (role) {
                case EdgeRole::IJ: return 3;
                case EdgeRole::IK: return 2;
                case EdgeRole::JK: return 4;
            }
            break;
        case StabKind::Delta235:
            switch (role) {
                case EdgeRole::IJ: return 3;
                case EdgeRole::IK: return 2;
                case EdgeRole::JK: return 5;
            }
            break;
        default:
            break;
    }
    throw std::invalid_argument("edge_order_at: not a vertex type");
}

IntMatrix edge_to_vertex(const StabilizerType& vertex, EdgeRole role,
                         bool swapped) {
    IntMatrix m(0, 0);
    switch (vertex.kind) {
        case StabKind::Delta222:
            m = d222_edge(role);
            break;
        case StabKind::Delta22m:
            if (role == EdgeRole::JK)
                m = d22m_dm_edge(vertex.m);
            else
                m = d22m_d2_edge(vertex.m, role == EdgeRole::IJ);
            break;
        case StabKind::Delta233:
            m = d233_edge(role);
            break;
        case StabKind::Delta234:
            m = d234_edge(role);
            break;
        case StabKind::Delta235:
            m = d235_edge(role);
            break;
        default:
            throw std::invalid_argument("edge_to_vertex: not a vertex type");
    }
    // Reversed generator order of the edge group interchanges its chi3/chi4.
    if (swapped && edge_order_at(vertex, role) % 2 == 0)
        m = swap_chi34_cols(std::move(m));
    return m;
}

IntMatrix transformed_induction(const IntMatrix& m, const IntMatrix& b_big,
                                const IntMatrix& b_small) {
    return b_big * m * inverse_unimodular(b_small);
}

}  // namespace khom
