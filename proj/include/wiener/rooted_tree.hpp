#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wiener/degree_sequence.hpp"

namespace wiener {

// Rooted tree as child lists; vertex 0 is always the root. Child order is
// construction order; canonical order lives in the code string.
struct RootedTree {
    std::vector<std::vector<int>> children;

    int order() const { return static_cast<int>(children.size()); }
};

std::vector<std::vector<int>> tree_adjacency(const RootedTree& t);
std::vector<int> subtree_sizes(const RootedTree& t);
std::vector<int> vertex_depths(const RootedTree& t);
int tree_height(const RootedTree& t);

// BFS-layered construction: the largest degree becomes the root and every
// open slot takes the largest unused degree, in queue order.
RootedTree greedy_tree(Degrees degs);

// Same loop, but degs[0] stays at the root even when it is not the largest;
// the remaining entries are consumed largest-first.
RootedTree greedy_tree_forced_root(Degrees degs);

// Canonical parenthesis code: "(" + child codes sorted descending + ")".
// Two rooted trees are isomorphic iff their codes are equal. A single
// vertex is "()".
std::string tree_code(const RootedTree& t);
std::string subtree_code(const RootedTree& t, int v);
RootedTree tree_from_code(const std::string& code);

struct CodeStats {
    std::int64_t order = 0;   // vertices, root included
    std::int64_t alpha = 0;   // sum of root-to-vertex distances
    std::int64_t wiener = 0;  // Wiener index of the subtree alone
};

// Memoized per thread; enumeration revisits the same codes heavily.
const CodeStats& code_stats(const std::string& code);

}  // namespace wiener
