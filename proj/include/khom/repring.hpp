#pragma once
// Representation-ring data for every stabilizer type occurring in the
// orbit cell complex of a reflection group acting on hyperbolic 3-space:
// conjugacy-class counts, character tables (used as a numeric test oracle),
// and the unimodular base changes that put all induction maps into
// {-1,0,1}-entry form simultaneously.

#include "khom/intmatrix.hpp"

#include <string>
#include <vector>

namespace khom {

enum class StabKind {
    Trivial,
    C2,
    Dihedral,  // D_m, m >= 2 (edge stabilizers)
    Delta222,  // (C_2)^3
    Delta22m,  // C_2 x D_m, m >= 3
    Delta233,  // S_4
    Delta234,  // S_4 x C_2
    Delta235,  // A_5 x C_2
};

struct StabilizerType {
    StabKind kind = StabKind::Trivial;
    int m = 0;  // dihedral parameter for Dihedral / Delta22m

    bool operator==(const StabilizerType& o) const {
        return kind == o.kind && m == o.m;
    }
};

StabilizerType trivial_type();
StabilizerType c2_type();
StabilizerType dihedral_type(int m);
StabilizerType vertex_type_for_angles(int m_ij, int m_ik, int m_jk);

bool is_vertex_type(const StabilizerType& t);
std::string type_name(const StabilizerType& t);
int group_order(const StabilizerType& t);

// Number of conjugacy classes (= rank of the representation ring).
int class_count(const StabilizerType& t);

// For a vertex type: classes not meeting any of the three dihedral
// special subgroups generated by two of the three reflections.
int unaccounted_class_count(const StabilizerType& t);

// The three regimes of the dihedral parameter; the transformed bases
// genuinely differ between them.
enum class DihedralRegime { Odd, Even, PowerOfTwo };
DihedralRegime dihedral_regime(int m);

struct CharacterTable {
    StabilizerType type;
    std::vector<std::string> class_labels;
    std::vector<int> class_sizes;
    // values[row][col]: row = irreducible character, col = class.
    std::vector<std::vector<double>> values;

    std::size_t size() const { return class_labels.size(); }
    // Class-size-weighted inner product of two rows.
    double inner(std::size_t a, std::size_t b) const;
};

// Character table in the canonical layout: D_m rows are
// (chi1, chi2, [chi3, chi4 iff m even], phi_1, ..., phi_P); product groups
// list the (trivial x -) block before the (sign x -) block; S_4 rows are
// (trivial, sign, 2-dim, 3-dim standard, 3-dim twisted).
// When `swap_generator_order` is set for a dihedral type, the chi3/chi4 rows
// are interchanged (the convention for a subgroup whose two generating
// reflections are taken in the opposite order).
CharacterTable character_table(const StabilizerType& t,
                               bool swap_generator_order = false);

struct BaseChange {
    StabilizerType type;
    // Rows = transformed basis elements in irreducible-character coordinates.
    IntMatrix matrix;
};

// The unimodular base change for each stabilizer type. For power-of-two
// dihedral parameters in Delta22m the variant used in the simultaneous
// minor criterion is returned.
BaseChange base_change(const StabilizerType& t);

// Runtime column bases for the transformed chain complex. Columns are
// expressed in irreducible coordinates of the cell stabilizer:
//   faces:  (rho1 + rho2, rho2)
//   edges:  m == 2: (sum chi_i, chi2+chi3, chi2, chi2+chi4);
//           m >= 3: the transpose of base_change(D_m)
// These are exactly the bases under which all vertex blocks of the boundary
// map have all entries and all minors in {-1, 0, 1}.
IntMatrix face_basis();
IntMatrix edge_basis(int m);

// Exact inverse of a unimodular integer matrix.
IntMatrix inverse_unimodular(const IntMatrix& a);

}  // namespace khom
