#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wiener/degree_sequence.hpp"
#include "wiener/rooted_tree.hpp"
#include "wiener/unicyclic.hpp"

namespace testsupport {

// Independent ground truth: walk every n-edge subset of the complete graph,
// keep connected graphs with the requested degree multiset whose unique cycle
// has the requested length, and dedupe by canonical form.
struct NaiveCount {
    std::int64_t classes = 0;
    std::int64_t min_wiener = -1;
};

inline NaiveCount naive_enumerate(const wiener::Degrees& degs, int girth) {
    wiener::Degrees want = degs;
    std::sort(want.begin(), want.end(), std::greater<>());
    int n = static_cast<int>(want.size());
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.push_back({a, b});

    NaiveCount out;
    std::set<std::string> seen;
    std::vector<int> deg(n, 0);
    std::vector<std::pair<int, int>> chosen;

    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (chosen.size() == static_cast<std::size_t>(n)) {
            wiener::Degrees got(deg.begin(), deg.end());
            std::sort(got.begin(), got.end(), std::greater<>());
            if (got != want) return;
            wiener::Adjacency adj(n);
            for (auto [a, b] : chosen) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
            wiener::UnicyclicGraph g;
            try {
                g = wiener::from_adjacency(adj);
            } catch (const std::invalid_argument&) {
                return;  // disconnected
            }
            if (g.girth != girth) return;
            if (!seen.insert(wiener::canonical_form(g)).second) return;
            ++out.classes;
            std::int64_t w = wiener::wiener_by_bfs(adj);
            if (out.min_wiener < 0 || w < out.min_wiener) out.min_wiener = w;
            return;
        }
        if (idx == edges.size()) return;
        if (edges.size() - idx < static_cast<std::size_t>(n) - chosen.size()) return;
        auto [a, b] = edges[idx];
        if (deg[a] < want.front() && deg[b] < want.front()) {
            ++deg[a];
            ++deg[b];
            chosen.push_back(edges[idx]);
            rec(idx + 1);
            chosen.pop_back();
            --deg[a];
            --deg[b];
        }
        rec(idx + 1);
    };
    rec(0);
    return out;
}

// Uniform-ish random unicyclic graph in structured form, fully seeded.
inline wiener::UnicyclicGraph random_unicyclic(std::mt19937_64& rng, int max_order) {
    int girth = std::uniform_int_distribution<int>(3, std::min(12, max_order))(rng);
    int n = std::uniform_int_distribution<int>(girth, max_order)(rng);

    std::vector<wiener::RootedTree> branches(girth);
    for (auto& b : branches) b.children.resize(1);
    std::vector<std::vector<int>> ids(girth);  // local vertex count per branch
    for (int p = 0; p < girth; ++p) ids[p].push_back(0);
    for (int extra = n - girth; extra > 0; --extra) {
        int p = std::uniform_int_distribution<int>(0, girth - 1)(rng);
        int parent = ids[p][std::uniform_int_distribution<std::size_t>(
            0, ids[p].size() - 1)(rng)];
        int v = static_cast<int>(branches[p].children.size());
        branches[p].children.push_back({});
        branches[p].children[parent].push_back(v);
        ids[p].push_back(v);
    }
    std::vector<std::string> codes;
    codes.reserve(girth);
    for (auto& b : branches) codes.push_back(wiener::subtree_code(b, 0));
    return wiener::make_unicyclic(girth, std::move(codes));
}

// Every degree sequence of the given order that can carry a cycle: values
// non-increasing, sum 2n, at least three entries of 2 or more.
inline std::vector<wiener::Degrees> unicyclic_degree_sequences(int n) {
    std::vector<wiener::Degrees> out;
    wiener::Degrees acc;
    std::function<void(int, int, int)> rec = [&](int left, int slots, int maxv) {
        if (slots == 0) {
            if (left == 0 &&
                std::count_if(acc.begin(), acc.end(), [](int d) { return d >= 2; }) >= 3)
                out.push_back(acc);
            return;
        }
        for (int v = std::min(maxv, left - (slots - 1)); v >= 1; --v) {
            acc.push_back(v);
            rec(left - v, slots - 1, v);
            acc.pop_back();
        }
    };
    rec(2 * n, n, n - 1);
    return out;
}

// Tree analogue: sum 2(n-1), used for the tree-theorem sweeps.
inline std::vector<wiener::Degrees> tree_degree_sequences(int n) {
    std::vector<wiener::Degrees> out;
    wiener::Degrees acc;
    std::function<void(int, int, int)> rec = [&](int left, int slots, int maxv) {
        if (slots == 0) {
            if (left == 0) out.push_back(acc);
            return;
        }
        for (int v = std::min(maxv, left - (slots - 1)); v >= 1; --v) {
            acc.push_back(v);
            rec(left - v, slots - 1, v);
            acc.pop_back();
        }
    };
    if (n >= 2) rec(2 * (n - 1), n, n - 1);
    return out;
}

inline wiener::Degrees degrees_of_code(const std::string& code) {
    wiener::RootedTree t = wiener::tree_from_code(code);
    wiener::Degrees d;
    for (int v = 0; v < t.order(); ++v) {
        int deg = static_cast<int>(t.children[v].size()) + (v == 0 ? 0 : 1);
        d.push_back(deg);
    }
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

}  // namespace testsupport
