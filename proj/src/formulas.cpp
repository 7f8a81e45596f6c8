#include "wiener/formulas.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "wiener/errors.hpp"

namespace wiener {

std::vector<int> chain_positions(int girth) {
    int k = (girth + 1) / 2;
    std::vector<int> out;
    out.reserve(girth);
    for (int i = 1; i <= k; ++i) {
        out.push_back(i - 1);            // u_i
        if (girth - i >= k) out.push_back(girth - i);  // w_i, absent for odd i=k
    }
    return out;
}

std::string position_label(int girth, int position) {
    auto chain = chain_positions(girth);
    for (int c = 0; c < girth; ++c) {
        if (chain[c] == position)
            return (c % 2 == 0) ? "u" + std::to_string(c / 2 + 1)
                                : "w" + std::to_string((c + 1) / 2);
    }
    throw std::invalid_argument("position out of range");
}

std::int64_t wiener_closed_form(const CycleDecomposition& dec) {
    int gm = dec.girth;
    std::int64_t n = 0;
    for (auto l : dec.ell) n += l + 1;
    std::int64_t sum_alpha = 0, sum_w = 0;
    for (auto a : dec.alpha) sum_alpha += a;
    for (auto w : dec.branch_wiener) sum_w += w;

    std::int64_t tot2 = (2 * n - gm) * static_cast<std::int64_t>((gm * gm) / 4);
    tot2 += 2 * (gm - 1) * sum_alpha + 2 * sum_w;
    for (int i = 0; i < gm; ++i) {
        for (int j = i + 1; j < gm; ++j) {
            tot2 += 2 * (dec.ell[i] * dec.alpha[j] +
                         dec.ell[i] * dec.ell[j] * cyclic_distance(gm, i, j) +
                         dec.ell[j] * dec.alpha[i]);
        }
    }
    internal_check(tot2 % 2 == 0, "doubled Wiener total must be even");
    return tot2 / 2;
}

std::int64_t wiener_closed_form(const UnicyclicGraph& g) {
    return wiener_closed_form(decompose(g));
}

std::int64_t tree_wiener_edge_form(const Adjacency& tree) {
    int n = static_cast<int>(tree.size());
    long long edges2 = 0;
    for (const auto& nb : tree) edges2 += static_cast<long long>(nb.size());
    if (edges2 != 2LL * (n - 1)) throw std::invalid_argument("input contains a cycle");

    std::vector<int> parent(n, -1), order;
    order.reserve(n);
    std::deque<int> q{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        order.push_back(v);
        for (int u : tree[v]) {
            if (!seen[u]) {
                seen[u] = true;
                parent[u] = v;
                q.push_back(u);
            }
        }
    }
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("input is disconnected");

    std::vector<std::int64_t> size(n, 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) size[parent[*it]] += size[*it];
    std::int64_t w = 0;
    for (int v = 1; v < n; ++v) w += size[v] * (n - size[v]);
    return w;
}

std::pair<int, int> designated_removal_edge(int girth) {
    int k = (girth + 1) / 2;
    return {k - 1, k};
}

Adjacency remove_cycle_edge(const UnicyclicGraph& g, std::pair<int, int> cycle_edge) {
    auto [i, j] = cycle_edge;
    int gm = g.girth;
    bool adjacent_positions = (j == (i + 1) % gm) || (i == (j + 1) % gm);
    if (i < 0 || i >= gm || j < 0 || j >= gm || !adjacent_positions)
        throw std::invalid_argument("not a cycle edge");
    auto offs = cycle_vertex_ids(g);
    Adjacency adj = graph_adjacency(g);
    int a = offs[i], b = offs[j];
    std::erase(adj[a], b);
    std::erase(adj[b], a);
    return adj;
}

BranchSizeProfile profile_from_sizes(int girth, const std::vector<std::int64_t>& sizes) {
    if (static_cast<int>(sizes.size()) != girth)
        throw std::invalid_argument("need one branch size per cycle position");
    BranchSizeProfile p;
    p.girth = girth;
    p.k = (girth + 1) / 2;
    p.even = girth % 2 == 0;
    for (int i = 1; i <= p.k; ++i) p.u.push_back(sizes[i - 1]);
    int wmax = p.even ? p.k : p.k - 1;
    for (int j = 1; j <= wmax; ++j) p.w.push_back(sizes[girth - j]);
    return p;
}

BranchSizeProfile profile_of(const UnicyclicGraph& g) {
    std::vector<std::int64_t> sizes;
    sizes.reserve(g.girth);
    for (const auto& c : g.branch_codes) sizes.push_back(code_stats(c).order);
    return profile_from_sizes(g.girth, sizes);
}

std::vector<std::int64_t> profile_sizes_by_position(const BranchSizeProfile& p) {
    std::vector<std::int64_t> sizes(p.girth);
    for (int i = 1; i <= p.k; ++i) sizes[i - 1] = p.u[i - 1];
    for (int j = 1; j <= static_cast<int>(p.w.size()); ++j) sizes[p.girth - j] = p.w[j - 1];
    return sizes;
}

std::int64_t delta_of(const BranchSizeProfile& p) {
    int k = p.k;
    std::int64_t delta = 0;
    if (p.even) {
        for (int i = 2; i <= k; ++i)
            for (int j = k + 2 - i; j <= k; ++j)
                delta += 2LL * (i + j - k - 1) * p.u[i - 1] * p.w[j - 1];
    } else {
        for (int i = 2; i <= k; ++i)
            for (int j = k + 1 - i; j <= k - 1; ++j)
                delta += (2LL * (i + j - k) - 1) * p.u[i - 1] * p.w[j - 1];
    }
    return delta;
}

EvaluationRecord evaluate(const UnicyclicGraph& g) {
    EvaluationRecord rec;
    rec.wiener = wiener_closed_form(g);
    rec.removed_edge = designated_removal_edge(g.girth);
    rec.tree_wiener = tree_wiener_edge_form(remove_cycle_edge(g, rec.removed_edge));
    rec.delta = rec.tree_wiener - rec.wiener;
    internal_check(rec.delta >= 0, "edge removal cannot shrink distances");
    return rec;
}

std::vector<std::pair<int, std::int64_t>> plus_rearrangement(std::vector<std::int64_t> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    std::vector<std::pair<int, std::int64_t>> out;
    out.reserve(values.size());
    int pos = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out.emplace_back(pos, values[i]);
        pos = pos > 0 ? -pos : -pos + 1;
    }
    return out;
}

std::pair<std::int64_t, BranchSizeProfile> delta_max_arrangement(int girth,
                                                                 std::vector<std::int64_t> sizes) {
    int gm = girth;
    if (static_cast<int>(sizes.size()) != gm)
        throw std::invalid_argument("need one branch size per cycle position");
    if (gm > 20) throw std::invalid_argument("split search is only meant for desk-scale girth");
    std::sort(sizes.begin(), sizes.end());
    int k = (gm + 1) / 2;

    std::int64_t best = -1;
    BranchSizeProfile best_profile;
    for (unsigned mask = 0; mask < (1u << gm); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        BranchSizeProfile p;
        p.girth = gm;
        p.k = k;
        p.even = gm % 2 == 0;
        for (int i = 0; i < gm; ++i)
            (mask >> i & 1 ? p.u : p.w).push_back(sizes[i]);
        std::int64_t d = delta_of(p);
        if (d > best) {
            best = d;
            best_profile = std::move(p);
        }
    }
    return {best, best_profile};
}

UnicyclicGraph ord_arrangement(const UnicyclicGraph& g) {
    std::vector<std::string> codes = g.branch_codes;
    std::sort(codes.begin(), codes.end(), [](const std::string& a, const std::string& b) {
        auto sa = code_stats(a).order, sb = code_stats(b).order;
        if (sa != sb) return sa > sb;
        return a < b;
    });
    auto chain = chain_positions(g.girth);
    std::vector<std::string> placed(g.girth);
    for (int c = 0; c < g.girth; ++c) placed[chain[c]] = codes[c];
    return make_unicyclic(g.girth, std::move(placed));
}

}  // namespace wiener
