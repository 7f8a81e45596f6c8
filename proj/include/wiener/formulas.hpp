#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wiener/unicyclic.hpp"

namespace wiener {

// Positional labelling around the cycle: u_i sits at position i-1 and w_j at
// position girth-j, k = ceil(girth/2). The chain order u1,w1,u2,w2,... as
// cyclic positions is therefore 0, girth-1, 1, girth-2, 2, ...
std::vector<int> chain_positions(int girth);

// Label of a cyclic position under that convention, "u3"/"w2" style.
std::string position_label(int girth, int position);

std::int64_t wiener_closed_form(const CycleDecomposition& dec);
std::int64_t wiener_closed_form(const UnicyclicGraph& g);

// Sum over edges of (vertices on one side) * (vertices on the other side).
// Throws std::invalid_argument when the input has a cycle.
std::int64_t tree_wiener_edge_form(const Adjacency& tree);

// The cycle edge between the two smallest-branch positions under the
// labelling above: cyclic positions (ceil(g/2)-1, ceil(g/2)) for both
// parities, i.e. u_k w_k for even girth and u_k w_{k-1} for odd.
std::pair<int, int> designated_removal_edge(int girth);

// Tree on the same vertex set after deleting one cycle edge, given as the
// pair of cyclic positions it joins.
Adjacency remove_cycle_edge(const UnicyclicGraph& g, std::pair<int, int> cycle_edge);

struct BranchSizeProfile {
    int girth = 0;
    int k = 0;
    bool even = false;
    std::vector<std::int64_t> u;  // u[i-1] = |V(U_i)|, i = 1..k
    std::vector<std::int64_t> w;  // w[j-1] = |V(W_j)|, j = 1..k (even) or 1..k-1 (odd)
};

BranchSizeProfile profile_of(const UnicyclicGraph& g);
BranchSizeProfile profile_from_sizes(int girth, const std::vector<std::int64_t>& sizes_by_position);
std::vector<std::int64_t> profile_sizes_by_position(const BranchSizeProfile& p);

// Wiener increase caused by deleting the designated edge.
std::int64_t delta_of(const BranchSizeProfile& p);

struct EvaluationRecord {
    std::int64_t wiener = 0;       // W(G)
    std::int64_t tree_wiener = 0;  // W after removing the designated edge
    std::int64_t delta = 0;        // tree_wiener - wiener, always >= 0
    std::pair<int, int> removed_edge{0, 0};
};
EvaluationRecord evaluate(const UnicyclicGraph& g);

// Symmetric-decreasing placement as (position, value) pairs: largest at 0,
// then +1, -1, +2, -2, ...; ties fill the positive index first.
std::vector<std::pair<int, std::int64_t>> plus_rearrangement(std::vector<std::int64_t> values);

// Largest delta over all placements of the given branch-size multiset. Each
// side is kept ascending (larger coefficients sit at larger indices; any
// other order loses by an exchange step) and every split of the multiset
// between the u side and the w side is tried. The interleaved single-chain
// fill is not always among the maximizers once girth exceeds 4, so the split
// search is required for exactness.
std::pair<std::int64_t, BranchSizeProfile> delta_max_arrangement(int girth,
                                                                 std::vector<std::int64_t> sizes);

// Whole branches sorted descending (size first, code as tie) and re-placed
// along the chain order; never increases the Wiener index.
UnicyclicGraph ord_arrangement(const UnicyclicGraph& g);

}  // namespace wiener
