#include "khom/repring.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace khom {

namespace {

constexpr double kPi = 3.14159265358979323846;

int num_phi(int m) { return (m % 2) ? (m - 1) / 2 : m / 2 - 1; }

IntMatrix rows_from_defs(const std::vector<std::map<int, long long>>& defs, int n) {
    IntMatrix out(defs.size(), n);
    for (std::size_t r = 0; r < defs.size(); ++r)
        for (const auto& [c, x] : defs[r]) out.at(r, c) = x;
    return out;
}

}  // namespace

StabilizerType trivial_type() { return {StabKind::Trivial, 0}; }
StabilizerType c2_type() { return {StabKind::C2, 0}; }

StabilizerType dihedral_type(int m) {
    if (m < 2) throw std::invalid_argument("dihedral parameter must be >= 2");
    return {StabKind::Dihedral, m};
}

StabilizerType vertex_type_for_angles(int m_ij, int m_ik, int m_jk) {
    std::vector<int> ms{m_ij, m_ik, m_jk};
    std::sort(ms.begin(), ms.end());
    if (ms[0] == 2 && ms[1] == 2) {
        if (ms[2] == 2) return {StabKind::Delta222, 0};
        return {StabKind::Delta22m, ms[2]};
    }
    if (ms[0] == 2 && ms[1] == 3 && ms[2] == 3) return {StabKind::Delta233, 0};
    if (ms[0] == 2 && ms[1] == 3 && ms[2] == 4) return {StabKind::Delta234, 0};
    if (ms[0] == 2 && ms[1] == 3 && ms[2] == 5) return {StabKind::Delta235, 0};
    throw std::invalid_argument("angles do not give a finite rank-3 reflection group");
}

bool is_vertex_type(const StabilizerType& t) {
    switch (t.kind) {
        case StabKind::Delta222:
        case StabKind::Delta22m:
        case StabKind::Delta233:
        case StabKind::Delta234:
        case StabKind::Delta235:
            return true;
        default:
            return false;
    }
}

std::string type_name(const StabilizerType& t) {
    switch (t.kind) {
        case StabKind::Trivial: return "1";
        case StabKind::C2: return "C2";
        case StabKind::Dihedral: return "D" + std::to_string(t.m);
        case StabKind::Delta222: return "Delta(2,2,2)";
        case StabKind::Delta22m: return "Delta(2,2," + std::to_string(t.m) + ")";
        case StabKind::Delta233: return "Delta(2,3,3)";
        case StabKind::Delta234: return "Delta(2,3,4)";
        case StabKind::Delta235: return "Delta(2,3,5)";
    }
    return "?";
}

int group_order(const StabilizerType& t) {
    switch (t.kind) {
        case StabKind::Trivial: return 1;
        case StabKind::C2: return 2;
        case StabKind::Dihedral: return 2 * t.m;
        case StabKind::Delta222: return 8;
        case StabKind::Delta22m: return 4 * t.m;
        case StabKind::Delta233: return 24;
        case StabKind::Delta234: return 48;
        case StabKind::Delta235: return 120;
    }
    return 0;
}

int class_count(const StabilizerType& t) {
    switch (t.kind) {
        case StabKind::Trivial: return 1;
        case StabKind::C2: return 2;
        case StabKind::Dihedral:
            return (t.m % 2 == 0) ? t.m / 2 + 3 : (t.m - 1) / 2 + 2;
        case StabKind::Delta222: return 8;
        case StabKind::Delta22m: return 2 * class_count(dihedral_type(t.m));
        case StabKind::Delta233: return 5;
        case StabKind::Delta234: return 10;
        case StabKind::Delta235: return 10;
    }
    return 0;
}

int unaccounted_class_count(const StabilizerType& t) {
    switch (t.kind) {
        // Delta(2,2,m): c(D_m) - 3; the m = 2 case follows the same formula.
        case StabKind::Delta222: return 1;
        case StabKind::Delta22m: return class_count(dihedral_type(t.m)) - 3;
        case StabKind::Delta233: return 1;
        case StabKind::Delta234: return 3;
        case StabKind::Delta235: return 5;
        default:
            throw std::invalid_argument("unaccounted_class_count: not a vertex type");
    }
}

DihedralRegime dihedral_regime(int m) {
    if (m % 2) return DihedralRegime::Odd;
    return ((m & (m - 1)) == 0) ? DihedralRegime::PowerOfTwo : DihedralRegime::Even;
}

// ---------------------------------------------------------------------------
// Character tables
// ---------------------------------------------------------------------------

double CharacterTable::inner(std::size_t a, std::size_t b) const {
    double s = 0.0;
    int order = 0;
    for (std::size_t c = 0; c < class_sizes.size(); ++c) {
        s += class_sizes[c] * values[a][c] * values[b][c];
        order += class_sizes[c];
    }
    return s / order;
}

namespace {

CharacterTable table_trivial() {
    return {trivial_type(), {"e"}, {1}, {{1.0}}};
}

CharacterTable table_c2() {
    return {c2_type(), {"e", "s"}, {1, 1}, {{1.0, 1.0}, {1.0, -1.0}}};
}

// Classes of D_m in the order: e; rot^r for r = 1..floor(m/2); then the
// reflection class(es): one class (odd m) or the two classes containing
// g1 = first generating reflection and g2 = second (even m).
CharacterTable table_dm(int m, bool swapped) {
    CharacterTable t;
    t.type = dihedral_type(m);
    t.class_labels.push_back("e");
    t.class_sizes.push_back(1);
    for (int r = 1; r <= m / 2; ++r) {
        t.class_labels.push_back("rot^" + std::to_string(r));
        t.class_sizes.push_back(2 * r == m ? 1 : 2);
    }
    if (m % 2) {
        t.class_labels.push_back("refl");
        t.class_sizes.push_back(m);
    } else {
        t.class_labels.push_back("refl(g1)");
        t.class_labels.push_back("refl(g2)");
        t.class_sizes.push_back(m / 2);
        t.class_sizes.push_back(m / 2);
    }
    std::size_t nc = t.class_labels.size();
    std::size_t nrot = static_cast<std::size_t>(m / 2);

    auto push = [&](auto f) {
        std::vector<double> row(nc);
        for (std::size_t c = 0; c < nc; ++c) row[c] = f(c);
        t.values.push_back(std::move(row));
    };
    // chi1, chi2
    push([&](std::size_t) { return 1.0; });
    push([&](std::size_t c) { return c <= nrot ? 1.0 : -1.0; });
    if (m % 2 == 0) {
        // chi3 is -1 on g1, +1 on g2; chi4 the other way (swapped if the
        // generators are taken in the opposite order).
        auto chi3 = [&](std::size_t c) {
            if (c <= nrot) return (c % 2 == 0) ? 1.0 : -1.0;  // (-1)^r
            return c == nrot + 1 ? -1.0 : 1.0;
        };
        auto chi4 = [&](std::size_t c) {
            if (c <= nrot) return (c % 2 == 0) ? 1.0 : -1.0;
            return c == nrot + 1 ? 1.0 : -1.0;
        };
        if (!swapped) {
            push(chi3);
            push(chi4);
        } else {
            push(chi4);
            push(chi3);
        }
    }
    for (int p = 1; p <= num_phi(m); ++p)
        push([&](std::size_t c) {
            if (c > nrot) return 0.0;
            return 2.0 * std::cos(2.0 * kPi * p * static_cast<double>(c) / m);
        });
    return t;
}

CharacterTable table_delta222() {
    CharacterTable t;
    t.type = {StabKind::Delta222, 0};
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) {
                t.class_labels.push_back("i^" + std::to_string(x) + "j^" +
                                         std::to_string(y) + "k^" + std::to_string(z));
                t.class_sizes.push_back(1);
            }
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                std::vector<double> row;
                for (int x = 0; x < 2; ++x)
                    for (int y = 0; y < 2; ++y)
                        for (int z = 0; z < 2; ++z)
                            row.push_back(((a * x + b * y + c * z) % 2) ? -1.0 : 1.0);
                t.values.push_back(std::move(row));
            }
    return t;
}

// Tensor product table of C2 x H: classes (e, h) before (s, h); characters
// (trivial x -) before (sign x -).
CharacterTable product_with_c2(const CharacterTable& h, StabilizerType type) {
    CharacterTable t;
    t.type = type;
    for (int part = 0; part < 2; ++part)
        for (std::size_t c = 0; c < h.size(); ++c) {
            t.class_labels.push_back((part ? "s*" : "") + h.class_labels[c]);
            t.class_sizes.push_back(h.class_sizes[c]);
        }
    for (int rho = 0; rho < 2; ++rho)
        for (const auto& hrow : h.values) {
            std::vector<double> row;
            for (int part = 0; part < 2; ++part)
                for (double x : hrow) row.push_back((rho && part) ? -x : x);
            t.values.push_back(std::move(row));
        }
    return t;
}

// S4 classes: e, 2-cycle, 3-cycle, 4-cycle, double transposition.
const std::vector<std::string> kS4Labels = {"e", "(ab)", "(abc)", "(abcd)",
                                            "(ab)(cd)"};
const std::vector<int> kS4Sizes = {1, 6, 8, 6, 3};
const double kS4Values[5][5] = {
    {1, 1, 1, 1, 1},       // trivial
    {1, -1, 1, -1, 1},     // sign
    {2, 0, -1, 0, 2},      // 2-dim
    {3, 1, 0, -1, -1},     // standard
    {3, -1, 0, 1, -1},     // standard * sign
};

CharacterTable table_s4() {
    CharacterTable t;
    t.type = {StabKind::Delta233, 0};
    t.class_labels = kS4Labels;
    t.class_sizes = kS4Sizes;
    for (int r = 0; r < 5; ++r)
        t.values.emplace_back(kS4Values[r], kS4Values[r] + 5);
    return t;
}

// A5 classes: e, (ab)(cd), (abc), and the two classes of 5-cycles.
CharacterTable table_a5() {
    const double g = (1.0 + std::sqrt(5.0)) / 2.0;
    const double gc = (1.0 - std::sqrt(5.0)) / 2.0;
    CharacterTable t;
    t.type = {StabKind::Delta235, 0};  // placeholder; used only internally
    t.class_labels = {"e", "(ab)(cd)", "(abc)", "5A", "5B"};
    t.class_sizes = {1, 15, 20, 12, 12};
    t.values = {
        {1, 1, 1, 1, 1},
        {4, 0, 1, -1, -1},
        {5, 1, -1, 0, 0},
        {3, -1, 0, g, gc},
        {3, -1, 0, gc, g},
    };
    return t;
}

}  // namespace

CharacterTable character_table(const StabilizerType& t, bool swap_generator_order) {
    switch (t.kind) {
        case StabKind::Trivial: return table_trivial();
        case StabKind::C2: return table_c2();
        case StabKind::Dihedral: return table_dm(t.m, swap_generator_order);
        case StabKind::Delta222: return table_delta222();
        case StabKind::Delta22m:
            return product_with_c2(table_dm(t.m, swap_generator_order), t);
        case StabKind::Delta233: return table_s4();
        case StabKind::Delta234: return product_with_c2(table_s4(), t);
        case StabKind::Delta235: return product_with_c2(table_a5(), t);
    }
    throw std::invalid_argument("character_table: bad type");
}

// ---------------------------------------------------------------------------
// Base changes
// ---------------------------------------------------------------------------

namespace {

IntMatrix base_dm(int m) {
    int p = num_phi(m);
    std::vector<std::map<int, long long>> defs;
    if (m % 2) {
        int n = 2 + p;
        std::map<int, long long> r0{{0, 1}, {1, 1}}, r1{{1, 1}};
        for (int k = 0; k < p; ++k) {
            r0[2 + k] = 2;
            r1[2 + k] = 1;
        }
        defs = {r0, r1};
        for (int k = 0; k < p; ++k) {
            std::map<int, long long> r;
            for (int q = k; q < p; ++q) r[2 + q] = 1;
            defs.push_back(r);
        }
        return rows_from_defs(defs, n);
    }
    int n = 4 + p;
    std::map<int, long long> r0{{0, 1}, {1, 1}, {2, 1}, {3, 1}};
    std::map<int, long long> r1{{1, 1}, {2, 1}};
    std::map<int, long long> r2{{2, 1}};
    std::map<int, long long> r3{{1, 1}, {3, 1}};
    for (int k = 0; k < p; ++k) {
        r0[4 + k] = 2;
        r1[4 + k] = 1;
        r2[4 + k] = 1;
        r3[4 + k] = 1;
    }
    defs = {r0, r1, r2, r3};
    for (int k = 0; k < p; ++k) {
        std::map<int, long long> r;
        for (int q = k; q < p; ++q) r[4 + q] = 1;
        defs.push_back(r);
    }
    return rows_from_defs(defs, n);
}

IntMatrix base_d2() {
    // Rows: sum chi_i; chi2 + chi3; chi3; chi3 + chi4.
    return IntMatrix{{1, 1, 1, 1}, {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 1, 1}};
}

IntMatrix base_delta222() {
    auto r = [](int x, int y, int z) { return 4 * x + 2 * y + z; };
    std::vector<std::map<int, long long>> defs = {
        {{r(0, 0, 0), 1}},
        {{r(0, 0, 1), 1}, {r(0, 0, 0), -1}},
        {{r(0, 1, 0), 1}, {r(0, 0, 0), -1}},
        {{r(0, 1, 1), 1}, {r(0, 1, 0), -1}},
        {{r(1, 0, 0), 1}, {r(0, 0, 0), -1}},
        {{r(1, 0, 1), 1}, {r(1, 0, 0), -1}},
        {{r(1, 1, 0), 1}, {r(0, 1, 0), -1}},
        {{r(1, 1, 1), 1}, {r(1, 1, 0), -1}},
    };
    return rows_from_defs(defs, 8);
}

// Upper / lower block of the Delta(2,2,m) base change over D_m coordinates.
IntMatrix a_block_delta22m(int m, DihedralRegime regime, bool upper) {
    int p = num_phi(m);
    std::vector<std::map<int, long long>> defs;
    if (regime == DihedralRegime::Odd) {
        defs = {{{0, 1}}, {{1, 1}, {0, -1}}, {{2, 1}, {1, -1}, {0, -1}}};
        for (int k = 1; k < p; ++k) defs.push_back({{2 + k, 1}, {1 + k, -1}});
        return rows_from_defs(defs, 2 + p);
    }
    if (regime == DihedralRegime::Even) {
        if (upper)
            defs = {{{0, 1}},
                    {{1, 1}, {0, -1}},
                    {{2, 1}, {1, -1}},
                    {{3, 1}, {0, -1}},
                    {{4, 1}, {2, -1}, {0, -1}}};
        else
            defs = {{{0, 1}},
                    {{1, 1}, {0, -1}},
                    {{2, 1}, {1, -1}},
                    {{3, 1}, {2, 1}, {1, -1}, {0, -1}},
                    {{4, 1}, {1, -1}, {0, -1}}};
    } else {  // power of two
        if (upper)
            defs = {{{0, 1}},
                    {{1, 1}, {0, -1}},
                    {{2, 1}, {0, -1}},
                    {{3, 1}, {1, -1}},
                    {{4, 1}, {1, -1}, {0, -1}}};
        else
            defs = {{{0, 1}},
                    {{1, 1}, {0, -1}},
                    {{2, 1}, {0, -1}},
                    {{3, 1}, {2, 1}, {1, -1}, {0, -1}},
                    {{4, 1}, {1, -1}, {0, -1}}};
    }
    for (int k = 1; k < p; ++k) defs.push_back({{4 + k, 1}, {3 + k, -1}});
    return rows_from_defs(defs, 4 + p);
}

IntMatrix base_delta22m(int m) {
    DihedralRegime regime = dihedral_regime(m);
    IntMatrix au = a_block_delta22m(m, regime, true);
    IntMatrix al = a_block_delta22m(m, regime, false);
    std::size_t n = au.rows();
    IntMatrix out(2 * n, 2 * n);
    out.add_block(0, 0, au);
    out.add_block(n, 0, -al);
    out.add_block(n, n, al);
    return out;
}

IntMatrix base_s4() {
    return IntMatrix{{1, 0, 0, 0, 0},
                     {-1, 1, 0, 0, 0},
                     {-1, -1, 1, 0, 0},
                     {-1, 0, -1, 1, 0},
                     {1, -1, 0, -1, 1}};
}

IntMatrix base_delta234() {
    return IntMatrix{{1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                     {-1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
                     {-1, -1, 1, 0, 0, 0, 0, 0, 0, 0},
                     {1, -1, -1, -1, 2, -1, 0, 0, 0, 0},
                     {1, -1, 0, -1, 1, 0, 0, 0, 0, 0},
                     {0, -1, 0, 0, 0, 1, 0, 0, 0, 0},
                     {0, 0, 0, -1, 1, -1, 1, 0, 0, 0},
                     {1, 1, -1, 0, 0, -1, -1, 1, 0, 0},
                     {0, -1, 0, -1, 0, 0, 1, 0, 1, 0},
                     {-1, 1, 0, 1, -1, 1, -1, 0, -1, 1}};
}

IntMatrix base_delta235() {
    return IntMatrix{{1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                     {0, 0, 0, 1, -1, 0, 0, 0, 0, 0},
                     {-1, -1, 1, 0, 0, 0, 0, 0, 0, 0},
                     {1, -1, 0, 1, 0, 0, 0, 0, 0, 0},
                     {1, 0, -1, 1, 1, -2, 0, 0, 0, 0},
                     {-1, 0, 0, 0, 0, 1, 0, 0, 0, 0},
                     {2, -2, 0, 1, 1, -2, 2, 0, -1, -1},
                     {1, 1, -1, 0, 0, -1, -1, 1, 0, 0},
                     {-1, 1, 0, -1, 0, 1, -1, 0, 1, 0},
                     {-3, 0, 1, -1, -1, 3, 0, -1, 1, 1}};
}

}  // namespace

BaseChange base_change(const StabilizerType& t) {
    switch (t.kind) {
        case StabKind::C2: return {t, IntMatrix{{1, 1}, {0, 1}}};
        case StabKind::Dihedral:
            return {t, t.m == 2 ? base_d2() : base_dm(t.m)};
        case StabKind::Delta222: return {t, base_delta222()};
        case StabKind::Delta22m: return {t, base_delta22m(t.m)};
        case StabKind::Delta233: return {t, base_s4()};
        case StabKind::Delta234: return {t, base_delta234()};
        case StabKind::Delta235: return {t, base_delta235()};
        default:
            throw std::invalid_argument("base_change: no base change for this type");
    }
}

IntMatrix face_basis() { return IntMatrix{{1, 0}, {1, 1}}; }

IntMatrix edge_basis(int m) {
    if (m == 2)
        // Columns: sum chi_i, chi2 + chi3, chi2, chi2 + chi4.
        return IntMatrix{{1, 0, 0, 0}, {1, 1, 1, 1}, {1, 1, 0, 0}, {1, 0, 0, 1}};
    return base_dm(m).transpose();
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
    using Rat = boost::multiprecision::cpp_rational;
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square");
    std::size_t n = a.rows();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m[r][c] = Rat(a.at(r, c));
        m[r][n + r] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) throw std::invalid_argument("singular matrix");
        std::swap(m[c], m[piv]);
        Rat f = m[c][c];
        for (auto& x : m[c]) x /= f;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rat g = m[r][c];
            for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] -= g * m[c][k];
        }
    }
    IntMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            Rat x = m[r][n + c];
            if (denominator(x) != 1)
                throw std::invalid_argument("matrix is not unimodular");
            inv.at(r, c) = numerator(x);
        }
    return inv;
}

}  // namespace khom
