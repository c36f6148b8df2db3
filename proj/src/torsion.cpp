#include "khom/torsion.hpp"

#include "khom/zlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace khom {

namespace {

bool row_removable(const IntMatrix& m, std::size_t r,
                   const std::vector<std::size_t>& cols) {
    int nz = 0;
    bool unit = true;
    for (std::size_t c : cols) {
        const Int& x = m.at(r, c);
        if (x == 0) continue;
        ++nz;
        if (x != 1 && x != -1) unit = false;
    }
    return nz == 0 || (nz == 1 && unit);
}

// Lexicographic successor of a k-subset of {0..n-1}; false when exhausted.
bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
    std::size_t k = s.size();
    for (std::size_t i = k; i-- > 0;) {
        if (s[i] + (k - i) < n) {
            ++s[i];
            for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

IntMatrix reduce(const IntMatrix& m) {
    std::vector<std::size_t> rows(m.rows()), cols(m.cols());
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    IntMatrix mt = m.transpose();
    bool changed = true;
    while (changed && !rows.empty() && !cols.empty()) {
        changed = false;
        std::vector<std::size_t> keep;
        for (std::size_t r : rows) {
            if (row_removable(m, r, cols))
                changed = true;
            else
                keep.push_back(r);
        }
        rows = std::move(keep);
        keep.clear();
        for (std::size_t c : cols) {
            if (rows.empty() || row_removable(mt, c, rows))
                changed = true;
            else
                keep.push_back(c);
        }
        cols = std::move(keep);
    }
    if (rows.empty() || cols.empty()) return IntMatrix();
    return m.submatrix(rows, cols);
}

MinorReport all_minors_unimodular(const IntMatrix& m, std::size_t cap) {
    MinorReport rep;
    IntMatrix r = reduce(m);
    rep.reduced_rows = r.rows();
    rep.reduced_cols = r.cols();
    if (r.empty()) return rep;
    // Minors larger than the rank vanish, so the rank is a sound cap.
    std::size_t kmax = std::min({r.rows(), r.cols(), rank(r), cap});
    for (std::size_t k = 1; k <= kmax; ++k) {
        rep.max_size_checked = k;
        std::vector<std::size_t> rs(k), cs0(k);
        std::iota(rs.begin(), rs.end(), 0);
        do {
            std::vector<std::size_t> cs = cs0;
            std::iota(cs.begin(), cs.end(), 0);
            do {
                Int d = r.submatrix(rs, cs).determinant();
                if (d > 1 || d < -1) {
                    rep.ok = false;
                    rep.witness_rows = rs;
                    rep.witness_cols = cs;
                    rep.witness_det = d;
                    return rep;
                }
            } while (next_subset(cs, r.cols()));
        } while (next_subset(rs, r.rows()));
    }
    return rep;
}

std::vector<VertexBlock> build_vertex_blocks(const ChainComplex& chain) {
    if (chain.basis != BasisKind::Transformed)
        throw std::invalid_argument("vertex blocks require the transformed basis");
    std::vector<VertexBlock> out;
    for (const VertexCell& vc : chain.vcells) {
        std::vector<std::size_t> rows(vc.dim), cols;
        std::iota(rows.begin(), rows.end(), vc.offset);
        for (const EdgeCell& ec : chain.ecells) {
            bool incident =
                std::find(vc.v.begin(), vc.v.end(), ec.e.first) != vc.v.end() &&
                std::find(vc.v.begin(), vc.v.end(), ec.e.second) != vc.v.end();
            if (!incident) continue;
            for (std::size_t c = 0; c < ec.dim; ++c) cols.push_back(ec.offset + c);
        }
        out.push_back({vc.v, vc.type, chain.d1.submatrix(rows, cols)});
    }
    return out;
}

CriterionResult criterion(const ChainComplex& chain) {
    CriterionResult res;
    for (const VertexBlock& b : build_vertex_blocks(chain)) {
        std::ostringstream vtag;
        vtag << "vertex {" << b.v[0] << "," << b.v[1] << "," << b.v[2] << "}";
        for (const Int& d : elementary_divisors(b.matrix))
            if (d != 1) res.precheck_ok = false;
        MinorReport rep = all_minors_unimodular(b.matrix);
        if (!rep.ok) {
            res.holds = false;
            std::ostringstream s;
            s << vtag.str() << " (" << type_name(b.type)
              << "): minor with determinant " << rep.witness_det;
            res.failures.push_back(s.str());
        }
    }
    return res;
}

MinorReport check_block_system(const std::vector<IntMatrix>& blocks) {
    if (blocks.empty()) return MinorReport{};
    std::size_t rows = blocks.front().rows(), cols = 0;
    for (const IntMatrix& b : blocks) {
        if (b.rows() != rows)
            throw std::invalid_argument("block system: row counts differ");
        cols += b.cols();
    }
    IntMatrix cat(rows, cols);
    std::size_t off = 0;
    for (const IntMatrix& b : blocks) {
        cat.add_block(0, off, b);
        off += b.cols();
    }
    return all_minors_unimodular(cat);
}

}  // namespace khom
