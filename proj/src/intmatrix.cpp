#include "khom/intmatrix.hpp"

#include <ostream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace khom {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged initializer");
        for (long long x : r) a_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : a_)
        if (x != 0) return false;
    return true;
}

bool IntMatrix::entries_unimodular_range() const {
    for (const Int& x : a_)
        if (x > 1 || x < -1) return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
    IntMatrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = at(r, k);
            if (x == 0) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) p.at(r, c) += x * o.at(k, c);
        }
    return p;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix m(*this);
    for (Int& x : m.a_) x = -x;
    return m;
}

void IntMatrix::add_block(std::size_t r0, std::size_t c0, const IntMatrix& b,
                          const Int& scale) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
        throw std::invalid_argument("block out of range");
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            at(r0 + r, c0 + c) += scale * b.at(r, c);
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& rows,
                               const std::vector<std::size_t>& cols) const {
    IntMatrix s(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            s.at(r, c) = at(rows[r], cols[c]);
    return s;
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix m(*this);
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t c = k; c < n; ++c) std::swap(m.at(k, c), m.at(p, c));
            sign = -sign;
        }
        for (std::size_t r = k + 1; r < n; ++r)
            for (std::size_t c = k + 1; c < n; ++c)
                m.at(r, c) = (m.at(r, c) * m.at(k, k) - m.at(r, k) * m.at(k, c)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

void IntMatrix::write_triplets(std::ostream& os) const {
    os << rows_ << ' ' << cols_ << '\n';
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (at(r, c) != 0) os << r << ' ' << c << ' ' << at(r, c) << '\n';
}

IntMatrix IntMatrix::read_triplets(std::istream& is) {
    std::size_t rows = 0, cols = 0;
    if (!(is >> rows >> cols)) throw std::invalid_argument("bad triplet header");
    IntMatrix m(rows, cols);
    std::size_t r, c;
    std::string v;
    while (is >> r >> c >> v) {
        if (r >= rows || c >= cols) throw std::invalid_argument("triplet out of range");
        m.at(r, c) = Int(v);
    }
    return m;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r == 0 ? "[[" : " [");
        for (std::size_t c = 0; c < m.cols(); ++c)
            os << (c ? ", " : "") << m.at(r, c);
        os << (r + 1 == m.rows() ? "]]" : "]") << '\n';
    }
    return os;
}

}  // namespace khom
