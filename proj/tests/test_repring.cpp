// Representation-ring data: stabilizer type dispatch, conjugacy-class counts,
// character tables (checked for orthogonality and against the explicit group
// models), and unimodularity of every base change.

#include <doctest.h>

#include "khom/repring.hpp"
#include "support/groupmodel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace khom;
using khomtest::FiniteGroup;

namespace {

std::vector<StabilizerType> all_vertex_types(int max_m) {
    std::vector<StabilizerType> ts{{StabKind::Delta222, 0},
                                   {StabKind::Delta233, 0},
                                   {StabKind::Delta234, 0},
                                   {StabKind::Delta235, 0}};
    for (int m = 3; m <= max_m; ++m) ts.push_back({StabKind::Delta22m, m});
    return ts;
}

}  // namespace

TEST_CASE("vertex type dispatch on sorted angle triples") {
    CHECK(vertex_type_for_angles(2, 2, 2).kind == StabKind::Delta222);
    CHECK(vertex_type_for_angles(2, 2, 7) == StabilizerType{StabKind::Delta22m, 7});
    CHECK(vertex_type_for_angles(7, 2, 2) == StabilizerType{StabKind::Delta22m, 7});
    CHECK(vertex_type_for_angles(3, 2, 3).kind == StabKind::Delta233);
    CHECK(vertex_type_for_angles(4, 3, 2).kind == StabKind::Delta234);
    CHECK(vertex_type_for_angles(2, 5, 3).kind == StabKind::Delta235);
    // Euclidean and hyperbolic triangle groups are rejected: the exact
    // sphericity test is 1/a + 1/b + 1/c > 1.
    CHECK_THROWS(vertex_type_for_angles(3, 3, 3));
    CHECK_THROWS(vertex_type_for_angles(2, 4, 4));
    CHECK_THROWS(vertex_type_for_angles(2, 3, 6));
    CHECK_THROWS(vertex_type_for_angles(2, 3, 7));
    CHECK_THROWS(vertex_type_for_angles(5, 5, 2));
}

TEST_CASE("dihedral regimes") {
    CHECK(dihedral_regime(3) == DihedralRegime::Odd);
    CHECK(dihedral_regime(5) == DihedralRegime::Odd);
    CHECK(dihedral_regime(6) == DihedralRegime::Even);
    CHECK(dihedral_regime(12) == DihedralRegime::Even);
    CHECK(dihedral_regime(4) == DihedralRegime::PowerOfTwo);
    CHECK(dihedral_regime(8) == DihedralRegime::PowerOfTwo);
    CHECK(dihedral_regime(16) == DihedralRegime::PowerOfTwo);
}

TEST_CASE("orders and class counts") {
    CHECK(group_order(dihedral_type(2)) == 4);
    CHECK(group_order(dihedral_type(5)) == 10);
    CHECK(group_order(StabilizerType{StabKind::Delta222, 0}) == 8);
    CHECK(group_order(StabilizerType{StabKind::Delta22m, 5}) == 20);
    CHECK(group_order(StabilizerType{StabKind::Delta233, 0}) == 24);
    CHECK(group_order(StabilizerType{StabKind::Delta234, 0}) == 48);
    CHECK(group_order(StabilizerType{StabKind::Delta235, 0}) == 120);

    // c(D_m) = m/2 + 3 for even m, (m-1)/2 + 2 for odd m.
    CHECK(class_count(dihedral_type(2)) == 4);
    CHECK(class_count(dihedral_type(3)) == 3);
    CHECK(class_count(dihedral_type(4)) == 5);
    CHECK(class_count(dihedral_type(5)) == 4);
    CHECK(class_count(dihedral_type(6)) == 6);
    CHECK(class_count(StabilizerType{StabKind::Delta222, 0}) == 8);
    CHECK(class_count(StabilizerType{StabKind::Delta22m, 4}) == 10);
    CHECK(class_count(StabilizerType{StabKind::Delta233, 0}) == 5);
    CHECK(class_count(StabilizerType{StabKind::Delta234, 0}) == 10);
    CHECK(class_count(StabilizerType{StabKind::Delta235, 0}) == 10);
}

TEST_CASE("classes not meeting the three special dihedral subgroups") {
    CHECK(unaccounted_class_count(StabilizerType{StabKind::Delta222, 0}) == 1);
    CHECK(unaccounted_class_count(StabilizerType{StabKind::Delta233, 0}) == 1);
    CHECK(unaccounted_class_count(StabilizerType{StabKind::Delta234, 0}) == 3);
    CHECK(unaccounted_class_count(StabilizerType{StabKind::Delta235, 0}) == 5);
    for (int m = 3; m <= 12; ++m)
        CHECK(unaccounted_class_count(StabilizerType{StabKind::Delta22m, m}) ==
              class_count(dihedral_type(m)) - 3);
    CHECK_THROWS(unaccounted_class_count(dihedral_type(4)));
}

TEST_CASE("character tables: structure, orthogonality, degrees") {
    std::vector<StabilizerType> types{trivial_type(), c2_type()};
    for (int m = 2; m <= 24; ++m) types.push_back(dihedral_type(m));
    for (const StabilizerType& t : all_vertex_types(24)) types.push_back(t);

    for (const StabilizerType& t : types) {
        CAPTURE(type_name(t));
        for (bool swap : {false, true}) {
            if (swap && t.kind != StabKind::Dihedral) continue;
            CharacterTable ct = character_table(t, swap);
            REQUIRE(ct.size() == static_cast<std::size_t>(class_count(t)));
            int total = std::accumulate(ct.class_sizes.begin(),
                                        ct.class_sizes.end(), 0);
            CHECK(total == group_order(t));
            // First-orthogonality relations of the rows.
            for (std::size_t a = 0; a < ct.size(); ++a)
                for (std::size_t b = a; b < ct.size(); ++b) {
                    double want = a == b ? 1.0 : 0.0;
                    CHECK(std::abs(ct.inner(a, b) - want) < 1e-9);
                }
            // Degrees at the identity class are positive and their squares
            // sum to the group order.
            double sq = 0;
            for (std::size_t a = 0; a < ct.size(); ++a) {
                CHECK(ct.values[a][0] >= 1.0);
                sq += ct.values[a][0] * ct.values[a][0];
            }
            CHECK(std::abs(sq - group_order(t)) < 1e-9);
        }
    }
}

TEST_CASE("character tables match the explicit group models") {
    // For each character (same canonical row order on both sides), the
    // size-weighted multiset of values on conjugacy classes must agree with
    // the element-wise values of the model character.
    std::vector<StabilizerType> types;
    for (int m = 2; m <= 12; ++m) types.push_back(dihedral_type(m));
    for (const StabilizerType& t : all_vertex_types(12)) types.push_back(t);

    for (const StabilizerType& t : types) {
        CAPTURE(type_name(t));
        FiniteGroup g = khomtest::group_for(t);
        CharacterTable ct = character_table(t);
        REQUIRE(g.chars.size() == ct.size());
        for (std::size_t a = 0; a < ct.size(); ++a) {
            CAPTURE(a);
            // identity value (degree)
            CHECK(std::abs(ct.values[a][0] - g.chars[a][g.identity]) < 1e-9);
            // value multiset, each class value repeated class-size times
            std::vector<double> table_vals, model_vals(g.chars[a]);
            for (std::size_t c = 0; c < ct.size(); ++c)
                table_vals.insert(table_vals.end(), ct.class_sizes[c],
                                  ct.values[a][c]);
            std::sort(table_vals.begin(), table_vals.end());
            std::sort(model_vals.begin(), model_vals.end());
            REQUIRE(table_vals.size() == model_vals.size());
            for (std::size_t i = 0; i < table_vals.size(); ++i)
                CHECK(std::abs(table_vals[i] - model_vals[i]) < 1e-9);
        }
        // Cross inner products: rows in the same position represent the same
        // irreducible, so the model inner product matrix is the identity.
        for (std::size_t a = 0; a < ct.size(); ++a)
            for (std::size_t b = 0; b < ct.size(); ++b)
                CHECK(std::abs(g.char_inner(a, b) - (a == b ? 1.0 : 0.0)) < 1e-9);
    }
}

TEST_CASE("base changes are unimodular and invert exactly") {
    std::vector<StabilizerType> types;
    for (int m = 2; m <= 24; ++m) types.push_back(dihedral_type(m));
    for (const StabilizerType& t : all_vertex_types(24)) types.push_back(t);
    for (const StabilizerType& t : types) {
        CAPTURE(type_name(t));
        IntMatrix b = base_change(t).matrix;
        REQUIRE(b.rows() == static_cast<std::size_t>(class_count(t)));
        REQUIRE(b.cols() == b.rows());
        Int d = b.determinant();
        CHECK((d == 1 || d == -1));
        IntMatrix inv = inverse_unimodular(b);
        CHECK(b * inv == IntMatrix::identity(b.rows()));
        CHECK(inv * b == IntMatrix::identity(b.rows()));
    }
}

TEST_CASE("runtime face and edge bases") {
    CHECK(face_basis() == IntMatrix{{1, 0}, {1, 1}});
    Int d2 = edge_basis(2).determinant();
    CHECK((d2 == 1 || d2 == -1));
    for (int m = 3; m <= 12; ++m) {
        CAPTURE(m);
        CHECK(edge_basis(m) == base_change(dihedral_type(m)).matrix.transpose());
    }
}

TEST_CASE("inverse_unimodular rejects bad input") {
    CHECK_THROWS(inverse_unimodular(IntMatrix{{2}}));          // not unimodular
    CHECK_THROWS(inverse_unimodular(IntMatrix{{1, 0}}));       // not square
    CHECK_THROWS(inverse_unimodular(IntMatrix{{1, 1}, {1, 1}}));  // singular
}

TEST_CASE("type names are human-readable") {
    CHECK(type_name(dihedral_type(7)) == "D7");
    CHECK(type_name(StabilizerType{StabKind::Delta22m, 5}) == "Delta(2,2,5)");
    CHECK(type_name(StabilizerType{StabKind::Delta233, 0}) == "Delta(2,3,3)");
}
