// Smith normal form and homology of integer chain complexes, checked against
// hand examples, invariance properties, and the determinant-divisor oracle
// (the k-th invariant factor is gcd of all k x k minors divided by the gcd of
// all (k-1) x (k-1) minors).

#include <doctest.h>

#include "khom/intmatrix.hpp"
#include "khom/zlinalg.hpp"

#include <functional>
#include <numeric>
#include <random>
#include <vector>

using namespace khom;

namespace {

// gcd of the absolute values of all k x k minors (0 if all vanish).
Int minor_gcd(const IntMatrix& a, std::size_t k) {
    std::vector<std::size_t> rs(k), cs(k);
    Int g = 0;
    std::function<void(std::size_t, std::size_t)> pick_cols =
        [&](std::size_t idx, std::size_t start) {
            if (idx == k) {
                Int d = a.submatrix(rs, cs).determinant();
                g = boost::multiprecision::gcd(g, abs(d));
                return;
            }
            for (std::size_t c = start; c < a.cols(); ++c) {
                cs[idx] = c;
                pick_cols(idx + 1, c + 1);
            }
        };
    std::function<void(std::size_t, std::size_t)> pick_rows =
        [&](std::size_t idx, std::size_t start) {
            if (idx == k) {
                pick_cols(0, 0);
                return;
            }
            for (std::size_t r = start; r < a.rows(); ++r) {
                rs[idx] = r;
                pick_rows(idx + 1, r + 1);
            }
        };
    pick_rows(0, 0);
    return g;
}

std::vector<Int> divisor_oracle(const IntMatrix& a) {
    std::vector<Int> out;
    Int prev = 1;
    for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
        Int g = minor_gcd(a, k);
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                        int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = d(rng);
    return m;
}

}  // namespace

TEST_CASE("smith normal form of a hand example") {
    SmithResult s = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
    CHECK(s.rank == 2);
    CHECK(s.diagonal() == std::vector<Int>{2, 4});
}

TEST_CASE("smith normal form basics") {
    SUBCASE("zero matrix") {
        SmithResult s = smith_normal_form(IntMatrix::zero(3, 2));
        CHECK(s.rank == 0);
        CHECK(elementary_divisors(IntMatrix::zero(3, 2)).empty());
    }
    SUBCASE("identity") {
        CHECK(elementary_divisors(IntMatrix::identity(4)) ==
              std::vector<Int>{1, 1, 1, 1});
    }
    SUBCASE("empty matrix") {
        SmithResult s = smith_normal_form(IntMatrix());
        CHECK(s.rank == 0);
    }
    SUBCASE("single large entry") {
        CHECK(elementary_divisors(IntMatrix{{60}}) == std::vector<Int>{60});
    }
    SUBCASE("divisibility chain is enforced") {
        // diag(6, 10) is not in Smith form; invariant factors are 2, 30.
        CHECK(elementary_divisors(IntMatrix{{6, 0}, {0, 10}}) ==
              std::vector<Int>{2, 30});
    }
}

TEST_CASE("invariant factors match the determinant-divisor oracle") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int t = 0; t < 200; ++t) {
        IntMatrix a = random_matrix(rng, dim(rng), dim(rng), -9, 9);
        CAPTURE(t);
        CHECK(elementary_divisors(a) == divisor_oracle(a));
    }
}

TEST_CASE("invariant factors are invariant under unimodular operations") {
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        IntMatrix a = random_matrix(rng, 4, 4, -5, 5);
        std::vector<Int> before = elementary_divisors(a);
        // random row transvection and a row swap
        std::uniform_int_distribution<int> coef(-3, 3);
        int f = coef(rng);
        for (std::size_t c = 0; c < 4; ++c) a.at(0, c) += f * a.at(2, c);
        for (std::size_t c = 0; c < 4; ++c) std::swap(a.at(1, c), a.at(3, c));
        CHECK(elementary_divisors(a) == before);
    }
}

TEST_CASE("rank") {
    CHECK(rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
    CHECK(rank(IntMatrix{{1, 0}, {0, 1}}) == 2);
    CHECK(rank(IntMatrix::zero(5, 3)) == 0);
}

TEST_CASE("homology of small complexes") {
    SUBCASE("free part only") {
        // 0 -> Z -2-> Z -0-> Z: homology in the middle is Z/2.
        HomologyGroup h = homology(IntMatrix::zero(1, 1), IntMatrix{{2}});
        CHECK(h.rank == 0);
        CHECK(h.torsion == std::vector<Int>{2});
    }
    SUBCASE("trivial homology") {
        HomologyGroup h = homology(IntMatrix::zero(1, 1), IntMatrix{{1}});
        CHECK(h.is_trivial());
    }
    SUBCASE("full kernel, no image") {
        HomologyGroup h = homology(IntMatrix::zero(0, 3), IntMatrix(3, 0));
        CHECK(h.rank == 3);
        CHECK(h.torsion.empty());
    }
    SUBCASE("circle") {
        // Cellular chain complex of S^1 with one 0-cell and one 1-cell.
        IntMatrix d1 = IntMatrix::zero(1, 1);
        CHECK(homology(IntMatrix::zero(0, 1), d1) == HomologyGroup{1, {}});
        CHECK(homology(d1, IntMatrix(1, 0)) == HomologyGroup{1, {}});
    }
    SUBCASE("real projective plane") {
        // One cell in each dimension 0..2; d1 = 0, d2 = (2).
        HomologyGroup h0 = homology(IntMatrix::zero(0, 1), IntMatrix::zero(1, 1));
        HomologyGroup h1 = homology(IntMatrix::zero(1, 1), IntMatrix{{2}});
        HomologyGroup h2 = homology(IntMatrix{{2}}, IntMatrix(1, 0));
        CHECK(h0 == HomologyGroup{1, {}});
        CHECK(h1 == HomologyGroup{0, {2}});
        CHECK(h2 == HomologyGroup{0, {}});
    }
    SUBCASE("composability is required") {
        CHECK_THROWS(homology(IntMatrix{{1}}, IntMatrix{{1}}));
    }
}
