#include "khom/zlinalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace khom {

namespace {

struct SnfWorker {
    IntMatrix s, u, v, vinv;

    explicit SnfWorker(const IntMatrix& a)
        : s(a),
          u(IntMatrix::identity(a.rows())),
          v(IntMatrix::identity(a.cols())),
          vinv(IntMatrix::identity(a.cols())) {}

    void row_swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < s.cols(); ++c) std::swap(s.at(a, c), s.at(b, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(a, c), u.at(b, c));
    }
    void col_swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < s.rows(); ++r) std::swap(s.at(r, a), s.at(r, b));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, a), v.at(r, b));
        for (std::size_t c = 0; c < vinv.cols(); ++c)
            std::swap(vinv.at(a, c), vinv.at(b, c));
    }
    // row a += q * row b
    void row_add(std::size_t a, std::size_t b, const Int& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < s.cols(); ++c) s.at(a, c) += q * s.at(b, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u.at(a, c) += q * u.at(b, c);
    }
    // col a += q * col b   (inverse op on vinv: row b -= q * row a)
    void col_add(std::size_t a, std::size_t b, const Int& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < s.rows(); ++r) s.at(r, a) += q * s.at(r, b);
        for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, a) += q * v.at(r, b);
        for (std::size_t c = 0; c < vinv.cols(); ++c)
            vinv.at(b, c) -= q * vinv.at(a, c);
    }
    void row_negate(std::size_t a) {
        for (std::size_t c = 0; c < s.cols(); ++c) s.at(a, c) = -s.at(a, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u.at(a, c) = -u.at(a, c);
    }

    // Smallest-magnitude nonzero entry in the trailing block, ties by position.
    bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const {
        bool found = false;
        Int best;
        for (std::size_t r = t; r < s.rows(); ++r)
            for (std::size_t c = t; c < s.cols(); ++c) {
                const Int& x = s.at(r, c);
                if (x == 0) continue;
                Int ax = abs(x);
                if (!found || ax < best) {
                    found = true;
                    best = ax;
                    pr = r;
                    pc = c;
                }
            }
        return found;
    }

    void run() {
        std::size_t n = std::min(s.rows(), s.cols());
        for (std::size_t t = 0; t < n; ++t) {
            std::size_t pr, pc;
            if (!find_pivot(t, pr, pc)) break;
            row_swap(t, pr);
            col_swap(t, pc);
            for (;;) {
                // Clear column t below the pivot.
                bool dirty = false;
                for (std::size_t r = t + 1; r < s.rows(); ++r) {
                    if (s.at(r, t) == 0) continue;
                    Int q = s.at(r, t) / s.at(t, t);
                    row_add(r, t, -q);
                    if (s.at(r, t) != 0) {
                        // Remainder is strictly smaller: promote it to pivot.
                        row_swap(t, r);
                        dirty = true;
                    }
                }
                if (dirty) continue;
                // Clear row t right of the pivot.
                for (std::size_t c = t + 1; c < s.cols(); ++c) {
                    if (s.at(t, c) == 0) continue;
                    Int q = s.at(t, c) / s.at(t, t);
                    col_add(c, t, -q);
                    if (s.at(t, c) != 0) {
                        col_swap(t, c);
                        dirty = true;
                    }
                }
                if (dirty) continue;
                // Enforce divisibility of the trailing block by the pivot.
                bool fixed = false;
                for (std::size_t r = t + 1; r < s.rows() && !fixed; ++r)
                    for (std::size_t c = t + 1; c < s.cols() && !fixed; ++c)
                        if (s.at(r, c) % s.at(t, t) != 0) {
                            row_add(t, r, 1);
                            fixed = true;
                        }
                if (!fixed) break;
            }
            if (s.at(t, t) < 0) row_negate(t);
        }
    }
};

}  // namespace

std::vector<Int> SmithResult::diagonal() const {
    std::vector<Int> d;
    for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i)
        d.push_back(s.at(i, i));
    return d;
}

SmithResult smith_normal_form(const IntMatrix& a) {
    SnfWorker w(a);
    w.run();

    SmithResult res{w.s, w.u, w.v, w.vinv, 0};
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
        if (w.s.at(i, i) != 0) ++res.rank;

    // Exact verification: the transforms really diagonalize A unimodularly.
    if (w.u * a * w.v != w.s) throw std::logic_error("smith: U*A*V != S");
    if (!(w.v * w.vinv == IntMatrix::identity(a.cols())))
        throw std::logic_error("smith: V * V^-1 != I");
    Int du = w.u.determinant(), dv = w.v.determinant();
    if ((du != 1 && du != -1) || (dv != 1 && dv != -1))
        throw std::logic_error("smith: transform not unimodular");
    for (std::size_t i = 0; i + 1 < res.rank; ++i)
        if (w.s.at(i + 1, i + 1) % w.s.at(i, i) != 0)
            throw std::logic_error("smith: divisibility chain broken");
    return res;
}

std::size_t rank(const IntMatrix& a) {
    if (a.empty()) return 0;
    return smith_normal_form(a).rank;
}

std::vector<Int> elementary_divisors(const IntMatrix& a) {
    if (a.empty()) return {};
    SnfWorker w(a);
    w.run();
    std::vector<Int> d;
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
        if (w.s.at(i, i) != 0) d.push_back(w.s.at(i, i));
    return d;
}

HomologyGroup homology(const IntMatrix& d_out, const IntMatrix& d_in) {
    std::size_t n = d_out.cols();  // dim of the middle chain group
    if (d_in.rows() != n && !d_in.empty())
        throw std::invalid_argument("homology: dimension mismatch");

    std::size_t rank_out = 0;
    IntMatrix w_in = d_in;  // d_in expressed in a basis adapted to ker(d_out)
    if (!d_out.empty()) {
        SmithResult snf_out = smith_normal_form(d_out);
        rank_out = snf_out.rank;
        if (!d_in.empty()) w_in = snf_out.vinv * d_in;
    }
    std::size_t ker_dim = n - rank_out;

    HomologyGroup h;
    if (d_in.empty() || d_in.cols() == 0) {
        h.rank = ker_dim;
        return h;
    }
    // Rows 0..rank_out-1 correspond to coordinates transverse to the kernel;
    // the image of d_in must avoid them (this is d_out * d_in = 0).
    for (std::size_t r = 0; r < rank_out; ++r)
        for (std::size_t c = 0; c < d_in.cols(); ++c)
            if (w_in.at(r, c) != 0)
                throw std::invalid_argument("homology: composition is nonzero");

    std::vector<std::size_t> rows(ker_dim), cols(d_in.cols());
    for (std::size_t i = 0; i < ker_dim; ++i) rows[i] = rank_out + i;
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    IntMatrix inside = w_in.submatrix(rows, cols);

    std::vector<Int> divs = elementary_divisors(inside);
    h.rank = ker_dim - divs.size();
    for (const Int& d : divs) {
        Int ad = abs(d);
        if (ad > 1) h.torsion.push_back(ad);
    }
    return h;
}

}  // namespace khom
