#include "khom/kreport.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace khom {

namespace {

Edge find_parent(std::map<Edge, Edge>& parent, Edge e) {
    while (parent[e] != e) {
        parent[e] = parent[parent[e]];
        e = parent[e];
    }
    return e;
}

std::string edge_str(const Edge& e) {
    std::ostringstream s;
    s << "{" << e.first << "," << e.second << "}";
    return s.str();
}

std::string group_str(const HomologyGroup& h) {
    std::ostringstream s;
    s << "Z^" << h.rank;
    for (const Int& t : h.torsion) s << " + Z/" << t;
    return s.str();
}

}  // namespace

std::vector<EdgeClassItem> edge_classes(const CellComplex& cc) {
    std::map<Edge, Edge> parent;
    for (const Edge& e : cc.edges) parent[e] = e;
    auto unite = [&](const Edge& a, const Edge& b) {
        parent[find_parent(parent, a)] = find_parent(parent, b);
    };

    for (const Vertex& v : cc.vertices) {
        StabilizerType t = cc.vertex_type(v);
        std::vector<Edge> pairs = {{v[0], v[1]}, {v[0], v[2]}, {v[1], v[2]}};
        if (t.kind == StabKind::Delta22m && t.m % 2 == 1) {
            std::vector<Edge> d2s;
            for (const Edge& p : pairs)
                if (cc.angle(p.first, p.second) == 2) d2s.push_back(p);
            unite(d2s[0], d2s[1]);
        }
        if (t.kind == StabKind::Delta233) {
            std::vector<Edge> d3s;
            for (const Edge& p : pairs)
                if (cc.angle(p.first, p.second) == 3) d3s.push_back(p);
            unite(d3s[0], d3s[1]);
        }
    }
    std::map<Edge, std::vector<Edge>> groups;
    for (const Edge& e : cc.edges) groups[find_parent(parent, e)].push_back(e);
    std::vector<EdgeClassItem> out;
    for (auto& [root, es] : groups) {
        std::sort(es.begin(), es.end());
        out.push_back({es, cc.angle(es[0].first, es[0].second)});
    }
    std::sort(out.begin(), out.end(),
              [](const EdgeClassItem& a, const EdgeClassItem& b) {
                  return a.edges[0] < b.edges[0];
              });
    return out;
}

int cf_value(const CellComplex& cc, const std::vector<EdgeClassItem>& classes) {
    int cf = 1 + cc.cm.faces;
    for (const EdgeClassItem& cl : classes)
        cf += class_count(dihedral_type(cl.m)) - 3;
    for (const Vertex& v : cc.vertices)
        cf += unaccounted_class_count(cc.vertex_type(v));
    return cf;
}

int euler_char(const CellComplex& cc) {
    int chi = -1 + 2 * cc.cm.faces;
    for (const Edge& e : cc.edges)
        chi -= class_count(dihedral_type(cc.angle(e.first, e.second)));
    for (const Vertex& v : cc.vertices) chi += class_count(cc.vertex_type(v));
    return chi;
}

KReport compute_report(const CoxeterMatrix& cm, const ComputeOptions& opts) {
    KReport rep;
    rep.name = cm.name;
    rep.cells = build_complex(cm);
    rep.chain = assemble(rep.cells, opts.basis);
    if (!verify(rep.chain))
        throw std::logic_error("boundary composition is nonzero");

    const ChainComplex& ch = rep.chain;
    IntMatrix d0(0, ch.n0);           // C0 -> 0
    IntMatrix d4(ch.n3, 0);           // 0 -> C3
    rep.h[0] = homology(d0, ch.d1);
    rep.h[1] = homology(ch.d1, ch.d2);
    rep.h[2] = homology(ch.d2, ch.d3);
    rep.h[3] = homology(ch.d3, d4);

    rep.classes = edge_classes(rep.cells);
    rep.merges_occurred = rep.classes.size() != rep.cells.edges.size();
    rep.cf = cf_value(rep.cells, rep.classes);
    rep.chi = euler_char(rep.cells);

    if (opts.run_criterion) {
        rep.criterion_run = true;
        if (opts.basis == BasisKind::Transformed) {
            rep.crit = criterion(rep.chain);
        } else {
            ChainComplex tch = assemble(rep.cells, BasisKind::Transformed);
            if (!verify(tch))
                throw std::logic_error("boundary composition is nonzero");
            rep.crit = criterion(tch);
        }
    }

    bool h0_torsion_free = rep.h[0].torsion.empty();
    rep.flag_h2_h3_zero = rep.h[2].is_trivial() && rep.h[3].is_trivial();
    rep.flag_torsion_free = h0_torsion_free && rep.h[1].torsion.empty();
    rep.flag_rank_h0 = rep.h[0].rank == static_cast<std::size_t>(rep.cf);
    rep.flag_rank_h1 =
        static_cast<long long>(rep.h[1].rank) ==
        static_cast<long long>(rep.cf) - static_cast<long long>(rep.chi);
    rep.flag_criterion_match =
        !rep.criterion_run || (rep.crit.holds == h0_torsion_free);

    if (!rep.flag_rank_h0)
        rep.warnings.push_back(
            "rank H0 != cf: the edge-class merge rule does not apply to this "
            "input (outside the theorem's hypotheses?); reporting raw homology");
    if (!rep.flag_rank_h1)
        rep.warnings.push_back("rank H1 != cf - chi; reporting raw homology");
    if (!rep.flag_h2_h3_zero)
        rep.warnings.push_back("H2 or H3 nonzero");
    if (!rep.flag_torsion_free)
        rep.warnings.push_back("torsion present in H0 or H1");
    if (rep.criterion_run && !rep.flag_criterion_match)
        rep.warnings.push_back(
            "minor criterion verdict disagrees with SNF torsion result");
    if (!rep.criterion_run)
        rep.warnings.push_back("minor criterion skipped on request");
    if (rep.merges_occurred)
        rep.warnings.push_back(
            "edge classes were merged by the local geodesic-continuation rule, "
            "which is a reconstruction; validated here by the cf = rank H0 check");
    return rep;
}

std::string render_text(const KReport& rep) {
    std::ostringstream os;
    const CellComplex& cc = rep.cells;
    os << "polyhedron: " << (rep.name.empty() ? "(unnamed)" : rep.name) << "\n";
    os << "cells: " << cc.cm.faces << " faces, " << cc.edges.size()
       << " edges, " << cc.vertices.size() << " vertices\n";
    os << "vertex stabilizers:";
    for (const Vertex& v : cc.vertices)
        os << " {" << v[0] << "," << v[1] << "," << v[2] << "}:"
           << type_name(cc.vertex_type(v));
    os << "\n";
    os << "chain ranks: (C3, C2, C1, C0) = (" << rep.chain.n3 << ", "
       << rep.chain.n2 << ", " << rep.chain.n1 << ", " << rep.chain.n0
       << "), basis = "
       << (rep.chain.basis == BasisKind::Transformed ? "transformed" : "standard")
       << "\n";
    for (int i = 0; i < 4; ++i)
        os << "H" << i << " = " << group_str(rep.h[i]) << "\n";
    os << "edge classes (" << rep.classes.size() << "):";
    for (const EdgeClassItem& cl : rep.classes) {
        os << " [";
        for (std::size_t i = 0; i < cl.edges.size(); ++i)
            os << (i ? " " : "") << edge_str(cl.edges[i]);
        os << "]";
    }
    os << "\n";
    os << "cf = " << rep.cf << ", chi = " << rep.chi << "\n";
    if (rep.criterion_run)
        os << "minor criterion: " << (rep.crit.holds ? "holds" : "FAILS")
           << " (elementary-divisor precheck: "
           << (rep.crit.precheck_ok ? "ok" : "failed") << ")\n";
    os << "consistency flags: H2=H3=0 " << (rep.flag_h2_h3_zero ? "pass" : "FAIL")
       << "; torsion-free " << (rep.flag_torsion_free ? "pass" : "FAIL")
       << "; rank H0 = cf " << (rep.flag_rank_h0 ? "pass" : "FAIL")
       << "; rank H1 = cf - chi " << (rep.flag_rank_h1 ? "pass" : "FAIL")
       << "; criterion consistent " << (rep.flag_criterion_match ? "pass" : "FAIL")
       << "\n";
    if (rep.all_flags()) {
        os << "K0 = Z^" << rep.cf << "\n";
        os << "K1 = Z^" << (rep.cf - rep.chi) << "\n";
    } else {
        os << "K-theory not certified; raw homology above\n";
    }
    for (const std::string& w : rep.warnings) os << "warning: " << w << "\n";
    for (const std::string& f : rep.crit.failures) os << "criterion: " << f << "\n";
    return os.str();
}

std::string render_structured(const KReport& rep) {
    using json = nlohmann::ordered_json;
    const CellComplex& cc = rep.cells;
    json out;
    out["name"] = rep.name;
    out["faces"] = cc.cm.faces;
    json edges = json::array();
    for (const Edge& e : cc.edges)
        edges.push_back({{"faces", {e.first, e.second}},
                         {"m", cc.angle(e.first, e.second)},
                         {"classes", class_count(dihedral_type(
                                         cc.angle(e.first, e.second)))}});
    out["edges"] = edges;
    json verts = json::array();
    for (const Vertex& v : cc.vertices) {
        StabilizerType t = cc.vertex_type(v);
        verts.push_back({{"faces", {v[0], v[1], v[2]}},
                         {"type", type_name(t)},
                         {"classes", class_count(t)},
                         {"unaccounted", unaccounted_class_count(t)}});
    }
    out["vertices"] = verts;
    out["basis"] =
        rep.chain.basis == BasisKind::Transformed ? "transformed" : "standard";
    out["chain_ranks"] = {rep.chain.n3, rep.chain.n2, rep.chain.n1, rep.chain.n0};
    json hom = json::array();
    for (int i = 0; i < 4; ++i) {
        json tors = json::array();
        for (const Int& t : rep.h[i].torsion) tors.push_back(t.str());
        hom.push_back({{"rank", rep.h[i].rank}, {"torsion", tors}});
    }
    out["homology"] = hom;
    json cls = json::array();
    for (const EdgeClassItem& cl : rep.classes) {
        json es = json::array();
        for (const Edge& e : cl.edges) es.push_back({e.first, e.second});
        cls.push_back({{"edges", es}, {"m", cl.m}});
    }
    out["edge_classes"] = cls;
    out["cf"] = rep.cf;
    out["chi"] = rep.chi;
    out["criterion"] = {{"run", rep.criterion_run},
                        {"holds", rep.criterion_run && rep.crit.holds},
                        {"precheck_ok", rep.criterion_run && rep.crit.precheck_ok},
                        {"failures", rep.crit.failures}};
    out["flags"] = {{"h2_h3_zero", rep.flag_h2_h3_zero},
                    {"torsion_free", rep.flag_torsion_free},
                    {"rank_h0_eq_cf", rep.flag_rank_h0},
                    {"rank_h1_eq_cf_minus_chi", rep.flag_rank_h1},
                    {"criterion_consistent", rep.flag_criterion_match}};
    out["certified"] = rep.all_flags();
    if (rep.all_flags()) {
        out["k0_rank"] = rep.cf;
        out["k1_rank"] = rep.cf - rep.chi;
    }
    out["warnings"] = rep.warnings;
    return out.dump(2) + "\n";
}

}  // namespace khom
