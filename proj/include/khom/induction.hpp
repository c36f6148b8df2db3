#pragma once
// Induction matrices between the representation rings of cell stabilizers.
// All matrices are in canonical coordinates: rows = irreducible characters of
// the bigger group, columns = irreducible characters of the subgroup, entry =
// multiplicity of the row character in the induced column character.

#include "khom/intmatrix.hpp"
#include "khom/repring.hpp"

namespace khom {

// {1} -> C2 (a face stabilizer inside the trivial stabilizer's... i.e. the
// regular representation): single column rho1 + rho2.
IntMatrix trivial_to_c2();

// C2 of a face into the D_m of an adjacent edge. `face_is_g1` is true when
// the face is the lex-smaller of the edge's two faces, i.e. its reflection is
// the first generator of the edge group.
IntMatrix c2_to_dihedral(int m, bool face_is_g1);

// Position of an edge among the three meeting at a vertex whose bounding
// faces carry roles i, j, k.
enum class EdgeRole { IJ, IK, JK };

// Dihedral parameter of the edge in the given role at the given vertex type.
int edge_order_at(const StabilizerType& vertex, EdgeRole role);

// D_m of an edge into the vertex group. `swapped` is true when the edge's
// first generator (reflection of its lex-smaller face) is the role letter
// that comes *second* in the role pair; for even m this exchanges the
// chi3/chi4 columns, for odd m it has no effect.
IntMatrix edge_to_vertex(const StabilizerType& vertex, EdgeRole role,
                         bool swapped);

// b_big * m * b_small^-1: the induction map rewritten in transformed bases
// on both sides (rows of each base change = transformed basis vectors).
IntMatrix transformed_induction(const IntMatrix& m, const IntMatrix& b_big,
                                const IntMatrix& b_small);

}  // namespace khom
