#pragma once
// Torsion-freeness criterion: every vertex block of the transformed-basis
// boundary map d1 must have all of its minors in {-1, 0, 1}. Includes the
// row/column reduction and rank-cap optimizations, and a generic entry point
// for raw block systems.

#include "khom/chain.hpp"
#include "khom/intmatrix.hpp"

#include <string>
#include <vector>

namespace khom {

struct MinorReport {
    bool ok = true;
    std::size_t max_size_checked = 0;
    std::size_t reduced_rows = 0, reduced_cols = 0;
    // Offending minor (indices into the reduced matrix) when ok is false.
    std::vector<std::size_t> witness_rows, witness_cols;
    Int witness_det = 0;
};

// Iteratively removes rows and columns whose entries are all zero except for
// at most one entry equal to +-1. Preserves whether all minors lie in
// {-1, 0, 1}.
IntMatrix reduce(const IntMatrix& m);

// Enumerates all k x k minors of reduce(m) for 1 <= k <= cap; ok iff every
// determinant lies in {-1, 0, 1}; early exit with witness otherwise.
MinorReport all_minors_unimodular(const IntMatrix& m, std::size_t cap = 7);

struct VertexBlock {
    Vertex v;
    StabilizerType type;
    // Rows = vertex classes; columns = the three incident edges' classes,
    // grouped per edge, with orientation signs, exactly as in d1.
    IntMatrix matrix;
};

// One block per vertex of a transformed-basis chain complex.
std::vector<VertexBlock> build_vertex_blocks(const ChainComplex& chain);

struct CriterionResult {
    bool holds = true;
    // Elementary divisors of every raw (unreduced) block are all 1.
    bool precheck_ok = true;
    std::vector<std::string> failures;
};

// The minor criterion over all vertex blocks; `holds` implies H0 of the
// Bredon complex is torsion-free.
CriterionResult criterion(const ChainComplex& chain);

// Generic checker for a system of matrices sharing rows (concatenated
// horizontally into one block).
MinorReport check_block_system(const std::vector<IntMatrix>& blocks);

}  // namespace khom
