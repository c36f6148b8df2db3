#pragma once
// Exact integer linear algebra: Smith normal form and homology of a
// chain complex of free abelian groups.

#include "khom/intmatrix.hpp"

#include <vector>

namespace khom {

// U * A * V = S with S diagonal, diagonal entries nonnegative and forming a
// divisibility chain d1 | d2 | ...; U and V unimodular. `vinv` is V^-1,
// kept so kernels of A can be read off (the last columns of V for which the
// corresponding diagonal entry of S vanishes span ker A).
struct SmithResult {
    IntMatrix s, u, v, vinv;
    std::size_t rank = 0;

    std::vector<Int> diagonal() const;
};

// Computes the Smith normal form, verifying U*A*V = S and |det U| = |det V| = 1
// by exact re-multiplication before returning.
SmithResult smith_normal_form(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

// Nonzero diagonal of the Smith form (invariant factors, including 1s).
std::vector<Int> elementary_divisors(const IntMatrix& a);

struct HomologyGroup {
    std::size_t rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1, divisibility chain

    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup& o) const {
        return rank == o.rank && torsion == o.torsion;
    }
};

// Homology at the middle of  C_{k+1} --d_in--> C_k --d_out--> C_{k-1},
// i.e. ker(d_out) / im(d_in). Requires d_out * d_in = 0.
// Torsion is computed from the Smith form of d_in expressed in a kernel
// basis of d_out.
HomologyGroup homology(const IntMatrix& d_out, const IntMatrix& d_in);

}  // namespace khom
