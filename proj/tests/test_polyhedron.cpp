// Input parsing and derivation of the quotient cell complex: strict input
// validation, cell enumeration, vertex typing and role assignment,
// orientation, and the combinatorial invariants of a polyhedral sphere.

#include <doctest.h>

#include "khom/corpus.hpp"
#include "khom/polyhedron.hpp"

#include <algorithm>

using namespace khom;

namespace {

const char* kGood = R"({
  "name": "sample",
  "faces": 4,
  "coxeter": [[1,2,4],[2,3,3],[3,4,5],[1,3,2],[1,4,2],[2,4,2]]
})";

}  // namespace

TEST_CASE("parsing a valid document") {
    CoxeterMatrix cm = parse_coxeter(kGood);
    CHECK(cm.name == "sample");
    CHECK(cm.faces == 4);
    CHECK(cm.entries.size() == 6);
    CHECK(cm.angle(1, 2) == 4);
    CHECK(cm.angle(2, 1) == 4);  // symmetric access
    CHECK(cm.angle(3, 4) == 5);
}

TEST_CASE("omitted pairs mean unbounded order") {
    CoxeterMatrix cm = parse_coxeter(
        R"({"name":"x","faces":4,"coxeter":[[1,2,3]]})");
    CHECK(cm.angle(1, 2) == 3);
    CHECK(cm.angle(1, 3) == 0);
    CHECK(cm.angle(2, 4) == 0);
}

TEST_CASE("invalid documents are rejected") {
    CHECK_THROWS(parse_coxeter("not json"));
    CHECK_THROWS(parse_coxeter(R"({"faces":4,"coxeter":[]})"));  // no name
    CHECK_THROWS(parse_coxeter(R"({"name":"x","coxeter":[]})"));  // no faces
    CHECK_THROWS(parse_coxeter(R"({"name":"x","faces":4})"));     // no coxeter
    // fewer than 4 faces cannot bound a 3-polyhedron
    CHECK_THROWS(parse_coxeter(R"({"name":"x","faces":3,"coxeter":[]})"));
    // m = 1 is not a valid order of a rotation s_i s_j
    CHECK_THROWS(parse_coxeter(R"({"name":"x","faces":4,"coxeter":[[1,2,1]]})"));
    // duplicate pair
    CHECK_THROWS(parse_coxeter(
        R"({"name":"x","faces":4,"coxeter":[[1,2,3],[1,2,3]]})"));
    // indices must satisfy 1 <= i < j <= faces
    CHECK_THROWS(parse_coxeter(R"({"name":"x","faces":4,"coxeter":[[2,1,3]]})"));
    CHECK_THROWS(parse_coxeter(R"({"name":"x","faces":4,"coxeter":[[1,1,3]]})"));
    CHECK_THROWS(parse_coxeter(R"({"name":"x","faces":4,"coxeter":[[1,5,3]]})"));
    CHECK_THROWS(parse_coxeter(R"({"name":"x","faces":4,"coxeter":[[0,2,3]]})"));
    // unknown fields are rejected, not ignored
    CHECK_THROWS(parse_coxeter(
        R"({"name":"x","faces":4,"coxeter":[],"extra":1})"));
    // wrong types
    CHECK_THROWS(parse_coxeter(R"({"name":7,"faces":4,"coxeter":[]})"));
    CHECK_THROWS(parse_coxeter(R"({"name":"x","faces":"4","coxeter":[]})"));
    CHECK_THROWS(parse_coxeter(R"({"name":"x","faces":4,"coxeter":[[1,2]]})"));
}

TEST_CASE("cells of the linear-diagram simplices") {
    CellComplex cc = build_complex(linear_simplex(4, 3, 5));
    CHECK(cc.edges.size() == 6);
    REQUIRE(cc.vertices.size() == 4);
    CHECK(cc.vertex_type({1, 2, 3}) == StabilizerType{StabKind::Delta234, 0});
    CHECK(cc.vertex_type({1, 2, 4}) == StabilizerType{StabKind::Delta22m, 4});
    CHECK(cc.vertex_type({1, 3, 4}) == StabilizerType{StabKind::Delta22m, 5});
    CHECK(cc.vertex_type({2, 3, 4}) == StabilizerType{StabKind::Delta235, 0});
}

TEST_CASE("cells of the right-angled dodecahedron") {
    CellComplex cc = build_complex(right_angled_dodecahedron());
    CHECK(cc.edges.size() == 30);
    CHECK(cc.vertices.size() == 20);
    for (const Vertex& v : cc.vertices)
        CHECK(cc.vertex_type(v) == StabilizerType{StabKind::Delta222, 0});
}

TEST_CASE("vertex roles single out the generators") {
    CellComplex cc = build_complex(linear_simplex(4, 3, 5));
    // At {1,2,3} (angles m12 = 4, m13 = 2, m23 = 3, type Delta(2,3,4)):
    // role i is the face shared by the order-3 and order-2 edges, j the face
    // shared by order 3 and order 4, k the face shared by order 4 and 2.
    CHECK(cc.vertex_roles({1, 2, 3}) == std::array<int, 3>{3, 2, 1});
    // At {2,3,4} (m23 = 3, m24 = 2, m34 = 5, type Delta(2,3,5)):
    // i = 3-edge ∩ 2-edge = 2, j = 3-edge ∩ 5-edge = 3, k = 5-edge ∩ 2-edge = 4.
    CHECK(cc.vertex_roles({2, 3, 4}) == std::array<int, 3>{2, 3, 4});
    // At {1,2,4} (m12 = 4, m14 = 2, m24 = 2, type Delta(2,2,4)): (j,k) is the
    // sorted pair of faces of the order-4 edge, i the remaining face.
    CHECK(cc.vertex_roles({1, 2, 4}) == std::array<int, 3>{4, 1, 2});
    // At {1,3,4} (m13 = 2, m14 = 2, m34 = 5, type Delta(2,2,5)).
    CHECK(cc.vertex_roles({1, 3, 4}) == std::array<int, 3>{1, 3, 4});
}

TEST_CASE("every edge has exactly two endpoints and consistent orientation") {
    for (const char* name : {"lanner-435", "lanner-535", "lanner-353",
                             "ra-dodecahedron"}) {
        CAPTURE(name);
        CellComplex cc = build_complex(corpus_polyhedron(name));
        for (const Edge& e : cc.edges) {
            std::vector<Vertex> ends = cc.edge_endpoints(e);
            REQUIRE(ends.size() == 2);
            CHECK(cc.esrc.at(e) == std::min(ends[0], ends[1]));
            CHECK(cc.edst.at(e) == std::max(ends[0], ends[1]));
            // The two bounding faces traverse the edge in opposite
            // directions (orientability of the boundary sphere).
            const auto& tr = cc.trav.at(e);
            REQUIRE(tr.size() == 2);
            auto it = tr.begin();
            const Traversal& a = it->second;
            const Traversal& b = std::next(it)->second;
            CHECK(a.src == b.dst);
            CHECK(a.dst == b.src);
            CHECK(cc.eps(e, it->first) == -cc.eps(e, std::next(it)->first));
        }
        // Euler characteristic of the boundary sphere.
        CHECK(static_cast<int>(cc.vertices.size()) -
                  static_cast<int>(cc.edges.size()) + cc.cm.faces ==
              2);
    }
}

TEST_CASE("building is deterministic") {
    CellComplex a = build_complex(linear_simplex(5, 3, 5));
    CellComplex b = build_complex(linear_simplex(5, 3, 5));
    CHECK(a.edges == b.edges);
    CHECK(a.vertices == b.vertices);
    CHECK(a.esrc == b.esrc);
    for (const Edge& e : a.edges)
        for (int f : {e.first, e.second}) CHECK(a.eps(e, f) == b.eps(e, f));
}

TEST_CASE("degenerate inputs produce diagnostics, not a complex") {
    SUBCASE("all dihedral angles pi/3: no spherical vertices at all") {
        CoxeterMatrix cm;
        cm.name = "euclidean-corners";
        cm.faces = 4;
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) cm.entries[{i, j}] = 3;
        BuildResult r = try_build_complex(cm);
        CHECK(!r.complex);
        CHECK(!r.diagnostics.empty());
        CHECK_THROWS(build_complex(cm));
    }
    SUBCASE("a single finite pair: edges without two endpoints") {
        CoxeterMatrix cm;
        cm.name = "dangling-edge";
        cm.faces = 4;
        cm.entries[{1, 2}] = 3;
        BuildResult r = try_build_complex(cm);
        CHECK(!r.complex);
        CHECK(!r.diagnostics.empty());
    }
    SUBCASE("missing one simplex edge: links break") {
        CoxeterMatrix cm = linear_simplex(4, 3, 5);
        cm.entries.erase({1, 4});
        BuildResult r = try_build_complex(cm);
        CHECK(!r.complex);
        CHECK(!r.diagnostics.empty());
    }
}

TEST_CASE("corpus names and lookup") {
    auto names = corpus_names();
    CHECK(std::find(names.begin(), names.end(), "lanner-435") != names.end());
    CHECK(std::find(names.begin(), names.end(), "heisenberg-blocks") !=
          names.end());
    CHECK(is_block_corpus("heisenberg-blocks"));
    CHECK(!is_block_corpus("lanner-435"));
    CHECK_THROWS(corpus_polyhedron("heisenberg-blocks"));
    CHECK_THROWS(corpus_polyhedron("no-such-entry"));
    CHECK(corpus_polyhedron("lanner-353").entries.at({2, 3}) == 5);
}

TEST_CASE("the shipped input files match the built-in corpus") {
    const std::pair<const char*, const char*> files[] = {
        {"lanner-435", "/data/lanner-435.json"},
        {"lanner-535", "/data/lanner-535.json"},
        {"lanner-353", "/data/lanner-353.json"},
        {"ra-dodecahedron", "/data/ra-dodecahedron.json"},
    };
    for (const auto& [name, rel] : files) {
        CAPTURE(name);
        CoxeterMatrix file = load_coxeter(std::string(KHOM_SOURCE_DIR) + rel);
        CoxeterMatrix builtin = corpus_polyhedron(name);
        CHECK(file.faces == builtin.faces);
        CHECK(file.entries == builtin.entries);
    }
}
