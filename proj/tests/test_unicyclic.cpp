#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "wiener/unicyclic.hpp"

using namespace wiener;

namespace {

UnicyclicGraph bare_cycle(int girth) {
    return make_unicyclic(girth, std::vector<std::string>(girth, "()"));
}

}  // namespace

TEST_CASE("distance sums and Wiener by walking") {
    // Star on 4 vertices: centre, then a leaf.
    Adjacency star{{1, 2, 3}, {0}, {0}, {0}};
    CHECK(vertex_distance_sum(star, 0) == 3);
    CHECK(vertex_distance_sum(star, 1) == 5);
    CHECK(wiener_by_bfs(star) == 9);

    Adjacency p4{{1}, {0, 2}, {1, 3}, {2}};
    CHECK(vertex_distance_sum(p4, 0) == 6);
    CHECK(wiener_by_bfs(p4) == 10);

    CHECK(wiener_by_bfs(graph_adjacency(bare_cycle(4))) == 8);
    CHECK(wiener_by_bfs(graph_adjacency(bare_cycle(5))) == 15);
    CHECK(vertex_distance_sum(graph_adjacency(bare_cycle(5)), 2) == 6);

    Adjacency split{{1}, {0}, {3}, {2}};
    CHECK_THROWS_AS(vertex_distance_sum(split, 0), std::invalid_argument);
}

TEST_CASE("structured access") {
    UnicyclicGraph g = make_unicyclic(4, {"(())", "(())", "()", "()"});
    CHECK(graph_order(g) == 6);
    CHECK(cycle_position_degrees(g) == std::vector<int>{3, 3, 2, 2});
    Degrees d = graph_degrees(g);
    CHECK(d == Degrees{3, 3, 2, 2, 1, 1});
    CHECK(wiener_by_bfs(graph_adjacency(g)) == 27);

    auto ids = cycle_vertex_ids(g);
    CHECK(ids.size() == 4);
    Adjacency adj = graph_adjacency(g);
    for (std::size_t p = 0; p < ids.size(); ++p) {
        int next = ids[(p + 1) % ids.size()];
        CHECK(std::count(adj[ids[p]].begin(), adj[ids[p]].end(), next) == 1);
    }
}

TEST_CASE("decomposition mirrors the branch structure") {
    UnicyclicGraph g = make_unicyclic(4, {"(())", "(())", "()", "()"});
    CycleDecomposition dec = decompose(g);
    CHECK(dec.ell == std::vector<std::int64_t>{1, 1, 0, 0});
    CHECK(dec.alpha == std::vector<std::int64_t>{1, 1, 0, 0});

    UnicyclicGraph tri = make_unicyclic(3, {"((()))", "()", "()"});
    CycleDecomposition tdec = decompose(tri);
    CHECK(tdec.ell == std::vector<std::int64_t>{2, 0, 0});
    CHECK(tdec.alpha[0] == 3);
    CHECK(tdec.branch_wiener[0] == 4);
}

TEST_CASE("composition identity") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        UnicyclicGraph g = testsupport::random_unicyclic(rng, 20);
        CycleDecomposition dec = decompose(g);
        CHECK(dec.girth == g.girth);
        std::int64_t order = 0;
        for (auto l : dec.ell) order += l + 1;
        CHECK(order == graph_order(g));
    }
}

TEST_CASE("canonical form is dihedral and relabelling invariant") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        UnicyclicGraph g = testsupport::random_unicyclic(rng, 18);
        std::string canon = canonical_form(g);
        for (int s = 0; s < g.girth; ++s) {
            CHECK(canonical_form(apply_dihedral(g, s, false)) == canon);
            CHECK(canonical_form(apply_dihedral(g, s, true)) == canon);
        }
        UnicyclicGraph back = from_canonical(canon);
        CHECK(canonical_form(back) == canon);
        CHECK(wiener_by_bfs(graph_adjacency(back)) == wiener_by_bfs(graph_adjacency(g)));
    }
}

TEST_CASE("round trip through raw adjacency") {
    std::mt19937_64 rng(888);
    for (int trial = 0; trial < 40; ++trial) {
        UnicyclicGraph g = testsupport::random_unicyclic(rng, 18);
        UnicyclicGraph back = from_adjacency(graph_adjacency(g));
        CHECK(canonical_form(back) == canonical_form(g));
    }
    Adjacency tree{{1}, {0, 2}, {1}};
    CHECK_THROWS_AS(from_adjacency(tree), std::invalid_argument);
    Adjacency split{{1}, {0}, {3}, {2, 4}, {3}};
    CHECK_THROWS_AS(from_adjacency(split), std::invalid_argument);
}

TEST_CASE("centroid reports") {
    Adjacency p5{{1}, {0, 2}, {1, 3}, {2, 4}, {3}};
    CentroidReport mid = centroid(p5, {});
    CHECK(mid.classification == CentroidClass::K1);
    CHECK(mid.vertices == std::vector<int>{2});

    UnicyclicGraph g = make_unicyclic(4, {"(())", "(())", "()", "()"});
    CentroidReport two = centroid(g);
    CHECK(two.classification == CentroidClass::K2);
    CHECK(two.vertices.size() == 2);
    std::multiset<std::int64_t> sums(two.distance_sums.begin(), two.distance_sums.end());
    CHECK(sums == std::multiset<std::int64_t>{7, 7, 9, 9, 11, 11});
    for (int v : two.vertices) CHECK(two.distance_sums[v] == 7);

    CentroidReport ring = centroid(bare_cycle(5));
    CHECK(ring.classification == CentroidClass::CycleSubset);
    CHECK(ring.vertices.size() == 5);
}

TEST_CASE("cyclic distance") {
    CHECK(cyclic_distance(6, 0, 3) == 3);
    CHECK(cyclic_distance(6, 5, 0) == 1);
    CHECK(cyclic_distance(5, 1, 4) == 2);
}

TEST_CASE("dot output carries positional labels") {
    std::string dot = to_dot(make_unicyclic(4, {"(())", "()", "()", "()"}));
    CHECK(dot.find("u1") != std::string::npos);
    CHECK(dot.find("w1") != std::string::npos);
    CHECK(dot.find("graph") != std::string::npos);
}
