#pragma once
// Final K-homology report: closed-form invariants cf and chi, SNF homology,
// the torsion criterion, and the consistency flags cross-validating the
// formula path against the linear-algebra path.

#include "khom/chain.hpp"
#include "khom/polyhedron.hpp"
#include "khom/torsion.hpp"
#include "khom/zlinalg.hpp"

#include <string>
#include <vector>

namespace khom {

struct EdgeClassItem {
    std::vector<Edge> edges;  // sorted
    int m = 0;                // common dihedral parameter
};

// Partition of the edge set under the local merge rule: two edges incident at
// a vertex are directly equivalent iff the vertex has type Delta(2,2,m) with
// m odd and they are its two D2-edges, or type Delta(2,3,3) and they are its
// two D3-edges; transitive closure.
std::vector<EdgeClassItem> edge_classes(const CellComplex& cc);

// cf = 1 + |faces| + sum over edge classes (c(D_m) - 3)
//        + sum over vertices of the unaccounted class count.
int cf_value(const CellComplex& cc, const std::vector<EdgeClassItem>& classes);

// chi = -1 + 2|faces| - sum_e c(D_m_e) + sum_v c(Gamma_v).
int euler_char(const CellComplex& cc);

struct KReport {
    std::string name;
    CellComplex cells;
    ChainComplex chain;  // in the requested basis
    HomologyGroup h[4];  // H0..H3
    std::vector<EdgeClassItem> classes;
    bool merges_occurred = false;
    int cf = 0, chi = 0;
    bool criterion_run = false;
    CriterionResult crit;

    // Consistency flags.
    bool flag_h2_h3_zero = false;       // (i)
    bool flag_torsion_free = false;     // (ii) H0 and H1 torsion-free
    bool flag_rank_h0 = false;          // (iii) rank H0 = cf
    bool flag_rank_h1 = false;          // (iv) rank H1 = cf - chi
    bool flag_criterion_match = false;  // (v) criterion verdict matches (ii)

    std::vector<std::string> warnings;

    bool all_flags() const {
        return flag_h2_h3_zero && flag_torsion_free && flag_rank_h0 &&
               flag_rank_h1 && flag_criterion_match;
    }
};

struct ComputeOptions {
    BasisKind basis = BasisKind::Transformed;
    bool run_criterion = true;
};

KReport compute_report(const CoxeterMatrix& cm, const ComputeOptions& opts);

std::string render_text(const KReport& rep);
std::string render_structured(const KReport& rep);  // JSON

}  // namespace khom
