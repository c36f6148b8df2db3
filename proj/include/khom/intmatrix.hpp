#pragma once
// Dense matrices over arbitrary-precision integers.
//
// All homological data in this project is exact; matrices are small
// (corpus scale: a few hundred rows), so a dense representation with
// big integers is simple and fast enough.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace khom {

using Int = boost::multiprecision::cpp_int;

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) {
        return IntMatrix(rows, cols);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    // True if every entry lies in {-1, 0, 1}.
    bool entries_unimodular_range() const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-() const;

    // Writes the block `b` into this matrix with top-left corner (r0, c0),
    // adding entries (blocks of a boundary map can overlap at a cell).
    void add_block(std::size_t r0, std::size_t c0, const IntMatrix& b,
                   const Int& scale = 1);

    // Submatrix with the given row and column index lists.
    IntMatrix submatrix(const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) const;

    // Exact determinant (fraction-free Bareiss elimination). Requires square.
    Int determinant() const;

    // Sparse triplet serialization: "rows cols" header line, then one
    // "row col value" line per nonzero entry, row-major.
    void write_triplets(std::ostream& os) const;
    static IntMatrix read_triplets(std::istream& is);

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace khom
