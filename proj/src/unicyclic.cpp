#include "wiener/unicyclic.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "wiener/errors.hpp"
#include "wiener/formulas.hpp"

namespace wiener {

UnicyclicGraph make_unicyclic(int girth, std::vector<std::string> branch_codes) {
    if (girth < 3) throw std::invalid_argument("girth must be at least 3");
    if (static_cast<int>(branch_codes.size()) != girth)
        throw std::invalid_argument("need one branch per cycle position");
    UnicyclicGraph g;
    g.girth = girth;
    g.branch_codes = std::move(branch_codes);
    return g;
}

int graph_order(const UnicyclicGraph& g) {
    long long n = 0;
    for (const auto& c : g.branch_codes) n += code_stats(c).order;
    return static_cast<int>(n);
}

std::vector<int> cycle_vertex_ids(const UnicyclicGraph& g) {
    std::vector<int> offs;
    offs.reserve(g.girth);
    int n = 0;
    for (const auto& c : g.branch_codes) {
        offs.push_back(n);
        n += static_cast<int>(code_stats(c).order);
    }
    return offs;
}

Adjacency graph_adjacency(const UnicyclicGraph& g) {
    auto offs = cycle_vertex_ids(g);
    int n = graph_order(g);
    Adjacency adj(n);
    for (int i = 0; i < g.girth; ++i) {
        int j = (i + 1) % g.girth;
        adj[offs[i]].push_back(offs[j]);
        adj[offs[j]].push_back(offs[i]);
    }
    for (int i = 0; i < g.girth; ++i) {
        RootedTree t = tree_from_code(g.branch_codes[i]);
        int o = offs[i];
        for (int v = 0; v < t.order(); ++v) {
            for (int c : t.children[v]) {
                adj[o + v].push_back(o + c);
                adj[o + c].push_back(o + v);
            }
        }
    }
    return adj;
}

std::vector<int> cycle_position_degrees(const UnicyclicGraph& g) {
    std::vector<int> degs(g.girth);
    for (int i = 0; i < g.girth; ++i) {
        RootedTree t = tree_from_code(g.branch_codes[i]);
        degs[i] = 2 + static_cast<int>(t.children[0].size());
    }
    return degs;
}

Degrees graph_degrees(const UnicyclicGraph& g) {
    Degrees out;
    for (int i = 0; i < g.girth; ++i) {
        RootedTree t = tree_from_code(g.branch_codes[i]);
        for (int v = 0; v < t.order(); ++v) {
            int d = static_cast<int>(t.children[v].size()) + (v == 0 ? 2 : 1);
            out.push_back(d);
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::int64_t vertex_distance_sum(const Adjacency& adj, int source) {
    int n = static_cast<int>(adj.size());
    std::vector<int> dist(n, -1);
    dist[source] = 0;
    std::deque<int> q{source};
    std::int64_t tot = 0;
    int seen = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        tot += dist[v];
        ++seen;
        for (int u : adj[v]) {
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push_back(u);
            }
        }
    }
    if (seen != n) throw std::invalid_argument("graph is not connected");
    return tot;
}

std::int64_t wiener_by_bfs(const Adjacency& adj) {
    std::int64_t tot = 0;
    for (int s = 0; s < static_cast<int>(adj.size()); ++s) tot += vertex_distance_sum(adj, s);
    internal_check(tot % 2 == 0, "distance sums must pair up");
    return tot / 2;
}

int cyclic_distance(int girth, int i, int j) {
    int d = std::abs(i - j);
    return std::min(d, girth - d);
}

CycleDecomposition decompose(const UnicyclicGraph& g) {
    CycleDecomposition dec;
    dec.girth = g.girth;
    for (const auto& c : g.branch_codes) {
        const CodeStats& s = code_stats(c);
        dec.ell.push_back(s.order - 1);
        dec.alpha.push_back(s.alpha);
        dec.branch_wiener.push_back(s.wiener);
    }
    dec.cycle_degree = cycle_position_degrees(g);
    return dec;
}

UnicyclicGraph from_adjacency(const Adjacency& adj) {
    int n = static_cast<int>(adj.size());
    if (n < 3) throw std::invalid_argument("unicyclic graph needs at least 3 vertices");
    long long edges2 = 0;
    for (const auto& nb : adj) edges2 += static_cast<long long>(nb.size());
    if (edges2 != 2LL * n)
        throw std::invalid_argument("unicyclic graph must have exactly n edges");
    vertex_distance_sum(adj, 0);  // connectivity gate

    // Shaving degree-1 vertices leaves exactly the cycle.
    std::vector<int> deg(n);
    std::deque<int> q;
    for (int v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(adj[v].size());
        if (deg[v] == 1) q.push_back(v);
    }
    std::vector<bool> on_cycle(n, true);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        on_cycle[v] = false;
        for (int u : adj[v]) {
            if (on_cycle[u] && --deg[u] == 1) q.push_back(u);
        }
    }
    std::vector<int> cyc;
    for (int v = 0; v < n; ++v)
        if (on_cycle[v]) cyc.push_back(v);
    if (cyc.size() < 3) throw std::invalid_argument("no cycle found");

    // Walk the cycle from its smallest id toward its smaller cycle neighbour.
    int start = cyc.front();
    std::vector<int> order{start};
    std::vector<int> cyc_nb;
    for (int u : adj[start])
        if (on_cycle[u]) cyc_nb.push_back(u);
    internal_check(cyc_nb.size() == 2, "cycle vertex must keep two cycle neighbours");
    int prev = start, cur = std::min(cyc_nb[0], cyc_nb[1]);
    while (cur != start) {
        order.push_back(cur);
        int nxt = -1;
        for (int u : adj[cur])
            if (on_cycle[u] && u != prev) nxt = u;
        internal_check(nxt >= 0, "cycle walk broke");
        prev = cur;
        cur = nxt;
    }
    if (order.size() != cyc.size())
        throw std::invalid_argument("more than one cycle present");

    std::vector<std::string> codes;
    codes.reserve(order.size());
    for (int root : order) {
        RootedTree t;
        t.children.emplace_back();
        std::function<void(int, int, int)> grow = [&](int v, int parent, int tid) {
            for (int u : adj[v]) {
                if (u == parent || on_cycle[u]) continue;
                int cid = static_cast<int>(t.children.size());
                t.children.emplace_back();
                t.children[tid].push_back(cid);
                grow(u, v, cid);
            }
        };
        grow(root, -1, 0);
        codes.push_back(tree_code(t));
    }
    return make_unicyclic(static_cast<int>(order.size()), std::move(codes));
}

UnicyclicGraph apply_dihedral(const UnicyclicGraph& g, int shift, bool reflect) {
    int gm = g.girth;
    std::vector<std::string> codes(gm);
    for (int i = 0; i < gm; ++i) {
        int src = reflect ? ((shift - i) % gm + gm) % gm : (shift + i) % gm;
        codes[i] = g.branch_codes[src];
    }
    return make_unicyclic(gm, std::move(codes));
}

std::string canonical_form(const UnicyclicGraph& g) {
    const std::vector<std::string>* best = nullptr;
    std::vector<std::vector<std::string>> images;
    images.reserve(2 * g.girth);
    for (int s = 0; s < g.girth; ++s) {
        for (int r = 0; r < 2; ++r) {
            images.push_back(apply_dihedral(g, s, r == 1).branch_codes);
            if (!best || images.back() < *best) best = &images.back();
        }
    }
    std::string out = "C" + std::to_string(g.girth) + ":";
    for (const auto& c : *best) out += c;
    return out;
}

UnicyclicGraph from_canonical(const std::string& canon) {
    auto colon = canon.find(':');
    if (canon.empty() || canon[0] != 'C' || colon == std::string::npos)
        throw std::invalid_argument("bad canonical form '" + canon + "'");
    int girth = std::stoi(canon.substr(1, colon - 1));
    std::vector<std::string> codes;
    int depth = 0;
    std::size_t from = colon + 1;
    for (std::size_t i = colon + 1; i < canon.size(); ++i) {
        if (canon[i] == '(') ++depth;
        else if (canon[i] == ')') --depth;
        else throw std::invalid_argument("bad canonical form '" + canon + "'");
        if (depth == 0) {
            codes.push_back(canon.substr(from, i + 1 - from));
            from = i + 1;
        }
    }
    if (depth != 0 || static_cast<int>(codes.size()) != girth)
        throw std::invalid_argument("bad canonical form '" + canon + "'");
    return make_unicyclic(girth, std::move(codes));
}

CentroidReport centroid(const Adjacency& adj, const std::vector<int>& cycle_ids) {
    CentroidReport rep;
    int n = static_cast<int>(adj.size());
    rep.distance_sums.resize(n);
    for (int v = 0; v < n; ++v) rep.distance_sums[v] = vertex_distance_sum(adj, v);
    std::int64_t best = *std::min_element(rep.distance_sums.begin(), rep.distance_sums.end());
    for (int v = 0; v < n; ++v)
        if (rep.distance_sums[v] == best) rep.vertices.push_back(v);

    const auto& m = rep.vertices;
    auto adjacent = [&](int a, int b) {
        return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
    };
    if (m.size() == 1) {
        rep.classification = CentroidClass::K1;
    } else if (m.size() == 2 && adjacent(m[0], m[1])) {
        rep.classification = CentroidClass::K2;
    } else {
        std::set<int> cyc(cycle_ids.begin(), cycle_ids.end());
        bool all_on_cycle = !cyc.empty() &&
            std::all_of(m.begin(), m.end(), [&](int v) { return cyc.count(v) > 0; });
        rep.classification = all_on_cycle ? CentroidClass::CycleSubset : CentroidClass::Irregular;
    }
    return rep;
}

CentroidReport centroid(const UnicyclicGraph& g) {
    return centroid(graph_adjacency(g), cycle_vertex_ids(g));
}

std::string to_dot(const UnicyclicGraph& g, const std::string& graph_name) {
    auto offs = cycle_vertex_ids(g);
    auto adj = graph_adjacency(g);
    std::vector<int> degree(adj.size());
    for (std::size_t v = 0; v < adj.size(); ++v) degree[v] = static_cast<int>(adj[v].size());

    std::ostringstream out;
    out << "graph " << graph_name << " {\n";
    out << "  layout=neato;\n";
    for (int p = 0; p < g.girth; ++p) {
        out << "  v" << offs[p] << " [label=\"" << position_label(g.girth, p) << "\\nd="
            << degree[offs[p]] << "\", shape=doublecircle];\n";
    }
    std::set<int> cyc(offs.begin(), offs.end());
    for (std::size_t v = 0; v < adj.size(); ++v) {
        if (!cyc.count(static_cast<int>(v)))
            out << "  v" << v << " [label=\"d=" << degree[v] << "\"];\n";
    }
    for (std::size_t v = 0; v < adj.size(); ++v) {
        for (int u : adj[v]) {
            if (static_cast<int>(v) < u) out << "  v" << v << " -- v" << u << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace wiener
