#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wiener/degree_sequence.hpp"
#include "wiener/rooted_tree.hpp"

namespace wiener {

using Adjacency = std::vector<std::vector<int>>;

// Unicyclic graph in structured form: cyclic positions 0..girth-1 carry one
// branch each. A branch is the rooted tree hanging at that cycle vertex, the
// cycle vertex included as its root, so "()" marks a bare cycle vertex.
struct UnicyclicGraph {
    int girth = 0;
    std::vector<std::string> branch_codes;
};

UnicyclicGraph make_unicyclic(int girth, std::vector<std::string> branch_codes);

int graph_order(const UnicyclicGraph& g);

// Vertex ids: branch blocks in position order, each block starting with its
// cycle vertex; cycle edges join consecutive block roots.
Adjacency graph_adjacency(const UnicyclicGraph& g);
std::vector<int> cycle_vertex_ids(const UnicyclicGraph& g);
Degrees graph_degrees(const UnicyclicGraph& g);
std::vector<int> cycle_position_degrees(const UnicyclicGraph& g);

std::int64_t vertex_distance_sum(const Adjacency& adj, int source);
std::int64_t wiener_by_bfs(const Adjacency& adj);

int cyclic_distance(int girth, int i, int j);

struct CycleDecomposition {
    int girth = 0;
    std::vector<std::int64_t> ell;            // branch order minus one
    std::vector<std::int64_t> alpha;          // distance sum from the cycle vertex
    std::vector<std::int64_t> branch_wiener;  // Wiener of the branch alone
    std::vector<int> cycle_degree;
};
CycleDecomposition decompose(const UnicyclicGraph& g);

// Rebuilds the structured form from raw adjacency. Throws
// std::invalid_argument when the graph is not connected unicyclic.
UnicyclicGraph from_adjacency(const Adjacency& adj);

UnicyclicGraph apply_dihedral(const UnicyclicGraph& g, int shift, bool reflect);

// Dihedral-minimal serialization "C<girth>:<codes...>"; equal strings iff
// the graphs are isomorphic.
std::string canonical_form(const UnicyclicGraph& g);
UnicyclicGraph from_canonical(const std::string& canon);

enum class CentroidClass { K1, K2, CycleSubset, Irregular };

struct CentroidReport {
    std::vector<int> vertices;  // minimizers of the distance sum
    std::vector<std::int64_t> distance_sums;
    CentroidClass classification = CentroidClass::Irregular;
};

// cycle_ids empty means tree input (classes K1/K2 only apply).
CentroidReport centroid(const Adjacency& adj, const std::vector<int>& cycle_ids);
CentroidReport centroid(const UnicyclicGraph& g);

// Cycle vertices carry their positional labels u_i/w_i and degrees.
std::string to_dot(const UnicyclicGraph& g, const std::string& graph_name = "unicyclic");

}  // namespace wiener
