#pragma once
// Built-in example inputs: the three compact Coxeter simplices with a
// [m1, m2, m3] linear diagram used throughout, the right-angled dodecahedron,
// and the canned induction-block system of the Heisenberg semidirect-product
// example (raw matrices for the generic minor checker).

#include "khom/intmatrix.hpp"
#include "khom/polyhedron.hpp"

#include <string>
#include <vector>

namespace khom {

// Simplex with linear diagram [m12, m23, m34]; all other angles right.
CoxeterMatrix linear_simplex(int m12, int m23, int m34);

// Right-angled dodecahedron: 12 faces, 30 edges, 20 Delta(2,2,2) vertices.
CoxeterMatrix right_angled_dodecahedron();

// All corpus entry names, in listing order.
std::vector<std::string> corpus_names();

// True for entries that are raw block systems rather than polyhedra.
bool is_block_corpus(const std::string& name);

// Throws for unknown or block entries.
CoxeterMatrix corpus_polyhedron(const std::string& name);

// The three induction blocks of the C4 vertex group in the Heisenberg
// example: C2 included nontrivially, C2 included trivially, and the trivial
// group. All share the 4 rows of R(C4) in the transformed basis.
std::vector<IntMatrix> heisenberg_blocks();

// The crystallographic degenerate case: a single column supported on the
// trivial representation.
std::vector<IntMatrix> crystallographic_blocks();

}  // namespace khom
