#include "khom/corpus.hpp"

#include <sstream>
#include <stdexcept>

namespace khom {

CoxeterMatrix linear_simplex(int m12, int m23, int m34) {
    CoxeterMatrix cm;
    std::ostringstream name;
    name << "[" << m12 << "," << m23 << "," << m34 << "]";
    cm.name = name.str();
    cm.faces = 4;
    cm.entries = {{{1, 2}, m12}, {{2, 3}, m23}, {{3, 4}, m34},
                  {{1, 3}, 2},   {{1, 4}, 2},   {{2, 4}, 2}};
    return cm;
}

CoxeterMatrix right_angled_dodecahedron() {
    CoxeterMatrix cm;
    cm.name = "right-angled dodecahedron";
    cm.faces = 12;
    // Face 1 on top, 2..6 the upper ring, 7..11 the lower ring (offset by a
    // half step), 12 on bottom.
    auto put = [&](int a, int b) {
        cm.entries[{std::min(a, b), std::max(a, b)}] = 2;
    };
    for (int t = 0; t < 5; ++t) {
        int u = 2 + t, un = 2 + (t + 1) % 5;
        int l = 7 + t, ln = 7 + (t + 1) % 5;
        put(1, u);
        put(l, 12);
        put(u, un);
        put(l, ln);
        put(u, l);
        put(u, ln);
    }
    return cm;
}

std::vector<std::string> corpus_names() {
    return {"lanner-435", "lanner-535", "lanner-353", "ra-dodecahedron",
            "heisenberg-blocks"};
}

bool is_block_corpus(const std::string& name) {
    return name == "heisenberg-blocks";
}

CoxeterMatrix corpus_polyhedron(const std::string& name) {
    if (name == "lanner-435") return linear_simplex(4, 3, 5);
    if (name == "lanner-535") return linear_simplex(5, 3, 5);
    if (name == "lanner-353") return linear_simplex(3, 5, 3);
    if (name == "ra-dodecahedron") return right_angled_dodecahedron();
    if (is_block_corpus(name))
        throw std::invalid_argument(name + " is a block system, not a polyhedron");
    throw std::invalid_argument("unknown corpus entry: " + name);
}

std::vector<IntMatrix> heisenberg_blocks() {
    return {
        IntMatrix{{1, 0}, {0, 0}, {0, 1}, {0, 0}},  // C2 -> C4, nontrivial
        IntMatrix{{1, 0}, {0, 0}, {0, 0}, {0, 0}},  // C2 -> C4, trivial
        IntMatrix{{1}, {0}, {0}, {0}},              // {1} -> C4
    };
}

std::vector<IntMatrix> crystallographic_blocks() {
    return {IntMatrix{{1}, {0}, {0}, {0}}};
}

}  // namespace khom
