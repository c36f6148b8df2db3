#include "khom/polyhedron.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace khom {

namespace {

using nlohmann::json;

Vertex make_vertex(int a, int b, int c) {
    Vertex v{a, b, c};
    std::sort(v.begin(), v.end());
    return v;
}

Edge make_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// 1/a + 1/b + 1/c > 1, exactly.
bool spherical(int a, int b, int c) {
    long long A = a, B = b, C = c;
    return B * C + A * C + A * B > A * B * C;
}

}  // namespace

int CoxeterMatrix::angle(int a, int b) const {
    auto it = entries.find(make_edge(a, b));
    return it == entries.end() ? 0 : it->second;
}

CoxeterMatrix parse_coxeter(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("malformed input document: ") + e.what());
    }
    if (!doc.is_object()) throw std::runtime_error("input must be a single object");
    for (const auto& [key, _] : doc.items())
        if (key != "name" && key != "faces" && key != "coxeter")
            throw std::runtime_error("unknown field \"" + key + "\"");
    if (!doc.contains("faces") || !doc["faces"].is_number_integer())
        throw std::runtime_error("missing or non-integer \"faces\"");
    if (!doc.contains("coxeter") || !doc["coxeter"].is_array())
        throw std::runtime_error("missing or non-array \"coxeter\"");

    CoxeterMatrix cm;
    if (!doc.contains("name") || !doc["name"].is_string())
        throw std::runtime_error("missing or non-string \"name\"");
    cm.name = doc["name"].get<std::string>();
    cm.faces = doc["faces"].get<int>();
    if (cm.faces < 4)
        throw std::runtime_error("a compact polyhedron needs at least 4 faces");
    for (const auto& entry : doc["coxeter"]) {
        if (!entry.is_array() || entry.size() != 3 ||
            !entry[0].is_number_integer() || !entry[1].is_number_integer() ||
            !entry[2].is_number_integer())
            throw std::runtime_error("each coxeter entry must be [i, j, m]");
        int i = entry[0].get<int>(), j = entry[1].get<int>(), m = entry[2].get<int>();
        std::ostringstream tag;
        tag << "entry [" << i << ", " << j << ", " << m << "]";
        if (!(1 <= i && i < j && j <= cm.faces))
            throw std::runtime_error(tag.str() + ": need 1 <= i < j <= faces");
        if (m < 2) throw std::runtime_error(tag.str() + ": m must be >= 2");
        if (!cm.entries.emplace(Edge{i, j}, m).second)
            throw std::runtime_error(tag.str() + ": duplicate pair");
    }
    return cm;
}

CoxeterMatrix load_coxeter(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_coxeter(ss.str());
}

std::vector<Vertex> CellComplex::edge_endpoints(const Edge& e) const {
    std::vector<Vertex> out;
    for (const Vertex& v : vertices)
        if (std::find(v.begin(), v.end(), e.first) != v.end() &&
            std::find(v.begin(), v.end(), e.second) != v.end())
            out.push_back(v);
    return out;
}

StabilizerType CellComplex::vertex_type(const Vertex& v) const {
    return vertex_type_for_angles(angle(v[0], v[1]), angle(v[0], v[2]),
                                  angle(v[1], v[2]));
}

int CellComplex::eps(const Edge& e, int f) const {
    const Traversal& t = trav.at(e).at(f);
    return (t.src == esrc.at(e) && t.dst == edst.at(e)) ? 1 : -1;
}

std::array<int, 3> CellComplex::vertex_roles(const Vertex& v) const {
    std::array<Edge, 3> pairs = {make_edge(v[0], v[1]), make_edge(v[0], v[2]),
                                 make_edge(v[1], v[2])};
    std::array<int, 3> ms;
    for (int t = 0; t < 3; ++t) ms[t] = angle(pairs[t].first, pairs[t].second);
    std::array<int, 3> sorted_ms = ms;
    std::sort(sorted_ms.begin(), sorted_ms.end());

    auto pair_with = [&](int m) {
        for (int t = 0; t < 3; ++t)
            if (ms[t] == m) return pairs[t];
        throw std::logic_error("angle not found at vertex");
    };
    auto other_face = [&](const Edge& p) {
        for (int f : v)
            if (f != p.first && f != p.second) return f;
        throw std::logic_error("bad edge at vertex");
    };
    auto common_face = [&](const Edge& p, const Edge& q) {
        for (int f : {p.first, p.second})
            if (f == q.first || f == q.second) return f;
        throw std::logic_error("edges do not share a face");
    };

    if (sorted_ms == std::array<int, 3>{2, 2, 2}) return v;  // ascending faces
    if (sorted_ms[0] == 2 && sorted_ms[1] == 2) {
        Edge jk = pair_with(sorted_ms[2]);  // the D_m pair, ascending
        return {other_face(jk), jk.first, jk.second};
    }
    if (sorted_ms == std::array<int, 3>{2, 3, 3}) {
        std::vector<Edge> p3;
        for (int t = 0; t < 3; ++t)
            if (ms[t] == 3) p3.push_back(pairs[t]);
        int j = common_face(p3[0], p3[1]);
        std::vector<int> ik;
        for (int f : v)
            if (f != j) ik.push_back(f);
        return {ik[0], j, ik[1]};
    }
    // (2, 3, m), m in {4, 5}: i = 3-pair & 2-pair, j = 3 & m, k = m & 2.
    Edge p3 = pair_with(3), pm = pair_with(sorted_ms[2]), p2 = pair_with(2);
    return {common_face(p3, p2), common_face(p3, pm), common_face(pm, p2)};
}

namespace {

std::string edge_str(const Edge& e) {
    std::ostringstream s;
    s << "{" << e.first << "," << e.second << "}";
    return s.str();
}

// Face f traverses edge {f,a} from vertex (f, prev(a), a) to (f, a, next(a)).
std::map<Edge, Traversal> traversals(int f, const std::vector<int>& cyc) {
    std::map<Edge, Traversal> out;
    std::size_t k = cyc.size();
    for (std::size_t idx = 0; idx < k; ++idx) {
        int a = cyc[idx];
        int p = cyc[(idx + k - 1) % k];
        int nx = cyc[(idx + 1) % k];
        out[make_edge(f, a)] = {make_vertex(f, p, a), make_vertex(f, a, nx)};
    }
    return out;
}

}  // namespace

BuildResult try_build_complex(const CoxeterMatrix& cm) {
    BuildResult res;
    auto diag = [&](const std::string& s) { res.diagnostics.push_back(s); };

    CellComplex cc;
    cc.cm = cm;
    for (const auto& [e, m] : cm.entries) cc.edges.push_back(e);
    std::set<Vertex> vset;
    for (int a = 1; a <= cm.faces; ++a)
        for (int b = a + 1; b <= cm.faces; ++b)
            for (int c = b + 1; c <= cm.faces; ++c) {
                int mab = cm.angle(a, b), mac = cm.angle(a, c), mbc = cm.angle(b, c);
                if (mab && mac && mbc && spherical(mab, mac, mbc)) {
                    Vertex v{a, b, c};
                    cc.vertices.push_back(v);
                    vset.insert(v);
                }
            }

    for (const Edge& e : cc.edges) {
        std::size_t cnt = cc.edge_endpoints(e).size();
        if (cnt != 2) {
            std::ostringstream s;
            s << "edge " << edge_str(e) << " has " << cnt
              << " endpoint vertices (need exactly 2)";
            diag(s.str());
        }
    }
    long long euler = static_cast<long long>(cc.vertices.size()) -
                      static_cast<long long>(cc.edges.size()) + cm.faces;
    if (euler != 2) {
        std::ostringstream s;
        s << "boundary not a sphere: V - E + F = " << euler << " (need 2)";
        diag(s.str());
    }

    // Face links: the neighbors of each face must form a single cycle in
    // which two neighbors are adjacent iff they share a vertex with the face.
    std::map<int, std::vector<int>> links;
    for (int f = 1; f <= cm.faces; ++f) {
        std::vector<int> nbrs;
        for (const Edge& e : cc.edges) {
            if (e.first == f) nbrs.push_back(e.second);
            if (e.second == f) nbrs.push_back(e.first);
        }
        std::sort(nbrs.begin(), nbrs.end());
        if (nbrs.size() < 3) {
            diag("face " + std::to_string(f) + " has fewer than 3 neighbors");
            continue;
        }
        std::map<int, std::vector<int>> adj;
        for (int a : nbrs) adj[a];
        for (std::size_t x = 0; x < nbrs.size(); ++x)
            for (std::size_t y = x + 1; y < nbrs.size(); ++y)
                if (vset.count(make_vertex(f, nbrs[x], nbrs[y]))) {
                    adj[nbrs[x]].push_back(nbrs[y]);
                    adj[nbrs[y]].push_back(nbrs[x]);
                }
        bool degrees_ok = true;
        for (const auto& [a, nb] : adj)
            if (nb.size() != 2) degrees_ok = false;
        if (!degrees_ok) {
            diag("link of face " + std::to_string(f) + " is not a single cycle");
            continue;
        }
        std::vector<int> cyc{nbrs[0]};
        int prev = 0;
        for (;;) {
            int cur = cyc.back();
            int nxt = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
            prev = cur;
            if (nxt == cyc.front()) break;
            cyc.push_back(nxt);
        }
        if (cyc.size() != nbrs.size()) {
            diag("link of face " + std::to_string(f) +
                 " splits into more than one cycle");
            continue;
        }
        links[f] = cyc;
    }

    if (!res.diagnostics.empty()) return res;

    // Orient: seed face 1, propagate over the dual graph so adjacent faces
    // traverse their shared edge in opposite directions.
    cc.cycle[1] = links[1];
    std::set<int> seen{1};
    std::deque<int> queue{1};
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop_front();
        auto trf = traversals(f, cc.cycle[f]);
        for (int g : cc.cycle[f]) {
            if (seen.count(g)) continue;
            Edge e = make_edge(f, g);
            std::vector<int> cyc = links[g];
            auto trg = traversals(g, cyc);
            if (trg[e].src == trf[e].src && trg[e].dst == trf[e].dst)
                std::reverse(cyc.begin(), cyc.end());
            cc.cycle[g] = cyc;
            seen.insert(g);
            queue.push_back(g);
        }
    }
    if (static_cast<int>(seen.size()) != cm.faces) {
        diag("face adjacency graph is disconnected");
        return res;
    }
    for (int f = 1; f <= cm.faces; ++f)
        for (const auto& [e, t] : traversals(f, cc.cycle[f])) cc.trav[e][f] = t;
    for (const auto& [e, d] : cc.trav) {
        if (d.size() != 2) {
            diag("edge " + edge_str(e) + " does not lie on exactly 2 faces");
            continue;
        }
        auto it = d.begin();
        const Traversal& t1 = it->second;
        const Traversal& t2 = std::next(it)->second;
        if (!(t1.src == t2.dst && t1.dst == t2.src))
            diag("edge " + edge_str(e) +
                 " is not traversed once in each direction (non-orientable)");
    }
    if (!res.diagnostics.empty()) return res;

    for (const Edge& e : cc.edges) {
        auto ends = cc.edge_endpoints(e);
        cc.esrc[e] = std::min(ends[0], ends[1]);
        cc.edst[e] = std::max(ends[0], ends[1]);
    }
    res.complex = std::move(cc);
    return res;
}

CellComplex build_complex(const CoxeterMatrix& cm) {
    BuildResult r = try_build_complex(cm);
    if (!r.complex) {
        std::string msg = "invalid polyhedron:";
        for (const auto& d : r.diagnostics) msg += "\n  - " + d;
        throw std::runtime_error(msg);
    }
    return std::move(*r.complex);
}

}  // namespace khom
