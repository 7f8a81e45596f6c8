#include <algorithm>
#include <map>
#include <numeric>

#include "doctest.h"
#include "support.hpp"
#include "wiener/formulas.hpp"

using namespace wiener;

namespace {

UnicyclicGraph bare_cycle(int girth) {
    return make_unicyclic(girth, std::vector<std::string>(girth, "()"));
}

std::int64_t cycle_wiener(int g) {
    return static_cast<std::int64_t>(g) * (static_cast<std::int64_t>(g) * g / 4) / 2;
}

std::int64_t path_wiener(std::int64_t n) { return n * (n * n - 1) / 6; }

}  // namespace

TEST_CASE("chain order and labels") {
    CHECK(chain_positions(6) == std::vector<int>{0, 5, 1, 4, 2, 3});
    CHECK(chain_positions(5) == std::vector<int>{0, 4, 1, 3, 2});
    CHECK(chain_positions(3) == std::vector<int>{0, 2, 1});

    CHECK(position_label(6, 0) == "u1");
    CHECK(position_label(6, 5) == "w1");
    CHECK(position_label(6, 3) == "w3");
    CHECK(position_label(5, 2) == "u3");
    CHECK(position_label(5, 3) == "w2");
}

TEST_CASE("closed form on the worked examples") {
    CHECK(wiener_closed_form(bare_cycle(4)) == 8);
    CHECK(wiener_closed_form(bare_cycle(5)) == 15);
    CHECK(wiener_closed_form(make_unicyclic(4, {"(())", "(())", "()", "()"})) == 27);
}

TEST_CASE("closed form equals walking on random graphs") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 300; ++trial) {
        UnicyclicGraph g = testsupport::random_unicyclic(rng, 40);
        CHECK(wiener_closed_form(g) == wiener_by_bfs(graph_adjacency(g)));
    }
}

TEST_CASE("tree Wiener via edge cuts") {
    Adjacency p4{{1}, {0, 2}, {1, 3}, {2}};
    CHECK(tree_wiener_edge_form(p4) == 10);
    Adjacency star{{1, 2, 3}, {0}, {0}, {0}};
    CHECK(tree_wiener_edge_form(star) == 9);
    Adjacency edge{{1}, {0}};
    CHECK(tree_wiener_edge_form(edge) == 1);
    CHECK_THROWS_AS(tree_wiener_edge_form(graph_adjacency(bare_cycle(3))),
                    std::invalid_argument);
}

TEST_CASE("designated removal edge sits between the chain tails") {
    CHECK(designated_removal_edge(6) == std::pair<int, int>{2, 3});
    CHECK(designated_removal_edge(5) == std::pair<int, int>{2, 3});
    CHECK(designated_removal_edge(4) == std::pair<int, int>{1, 2});
    CHECK(designated_removal_edge(3) == std::pair<int, int>{1, 2});
}

TEST_CASE("removing the designated edge from a pure cycle leaves a path") {
    for (int g = 3; g <= 10; ++g) {
        Adjacency tree = remove_cycle_edge(bare_cycle(g), designated_removal_edge(g));
        CHECK(tree_wiener_edge_form(tree) == path_wiener(g));
    }
    CHECK_THROWS_AS(remove_cycle_edge(bare_cycle(5), {0, 2}), std::invalid_argument);
}

TEST_CASE("delta on pure cycles") {
    auto pure = [](int g) { return profile_of(bare_cycle(g)); };
    CHECK(delta_of(pure(4)) == 2);
    CHECK(delta_of(pure(5)) == 5);
    CHECK(delta_of(pure(6)) == 8);
    for (int g = 3; g <= 12; ++g)
        CHECK(delta_of(pure(g)) == path_wiener(g) - cycle_wiener(g));
}

TEST_CASE("delta matches the removal experiment") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        UnicyclicGraph g = testsupport::random_unicyclic(rng, 30);
        EvaluationRecord rec = evaluate(g);
        CHECK(rec.wiener == wiener_by_bfs(graph_adjacency(g)));
        CHECK(rec.tree_wiener == rec.wiener + rec.delta);
        CHECK(rec.delta == delta_of(profile_of(g)));
        CHECK(rec.delta >= 0);
        CHECK(rec.tree_wiener ==
              tree_wiener_edge_form(remove_cycle_edge(g, rec.removed_edge)));
    }
}

TEST_CASE("profile round trip") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        UnicyclicGraph g = testsupport::random_unicyclic(rng, 20);
        BranchSizeProfile p = profile_of(g);
        auto sizes = profile_sizes_by_position(p);
        CHECK(profile_sizes_by_position(profile_from_sizes(g.girth, sizes)) == sizes);
        std::int64_t total = std::accumulate(sizes.begin(), sizes.end(), std::int64_t{0});
        CHECK(total == graph_order(g));
    }
}

TEST_CASE("plus placement") {
    auto placed = plus_rearrangement({5, 3, 1});
    std::map<int, std::int64_t> got(placed.begin(), placed.end());
    CHECK(got == std::map<int, std::int64_t>{{0, 5}, {1, 3}, {-1, 1}});

    auto tied = plus_rearrangement({2, 4, 2, 4});
    std::map<int, std::int64_t> got2(tied.begin(), tied.end());
    CHECK(got2 == std::map<int, std::int64_t>{{0, 4}, {1, 4}, {-1, 2}, {2, 2}});
}

TEST_CASE("plus placement maximizes symmetric-decreasing weightings") {
    // Weight of slot sequence c (non-increasing along 0,+1,-1,+2,-2,...):
    // no permutation of the values beats the plus placement.
    std::mt19937_64 rng(31337);
    std::vector<int> slots{0, 1, -1, 2, -2, 3};
    for (int trial = 0; trial < 60; ++trial) {
        int len = std::uniform_int_distribution<int>(2, 6)(rng);
        std::vector<std::int64_t> vals(len), c(len);
        for (auto& v : vals) v = std::uniform_int_distribution<int>(0, 9)(rng);
        c[0] = std::uniform_int_distribution<int>(5, 14)(rng);
        for (int i = 1; i < len; ++i)
            c[i] = c[i - 1] - std::uniform_int_distribution<int>(0, 3)(rng);

        std::map<int, std::int64_t> weight;
        for (int i = 0; i < len; ++i) weight[slots[i]] = c[i];
        std::int64_t best_perm = 0;
        std::vector<std::int64_t> perm = vals;
        std::sort(perm.begin(), perm.end());
        do {
            std::int64_t s = 0;
            for (int i = 0; i < len; ++i) s += weight[slots[i]] * perm[i];
            best_perm = std::max(best_perm, s);
        } while (std::next_permutation(perm.begin(), perm.end()));

        std::int64_t plus_score = 0;
        for (auto [pos, val] : plus_rearrangement(vals)) plus_score += weight[pos] * val;
        CHECK(plus_score == best_perm);
    }
}

TEST_CASE("delta maximizer beats every explicit placement") {
    std::mt19937_64 rng(2718281);
    for (int girth = 3; girth <= 8; ++girth) {
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<std::int64_t> sizes(girth);
            for (auto& s : sizes) s = std::uniform_int_distribution<int>(1, 9)(rng);
            auto [best, profile] = delta_max_arrangement(girth, sizes);
            CHECK(delta_of(profile) == best);

            std::vector<std::int64_t> perm = sizes;
            std::sort(perm.begin(), perm.end());
            std::int64_t brute = -1;
            do {
                brute = std::max(brute, delta_of(profile_from_sizes(girth, perm)));
            } while (std::next_permutation(perm.begin(), perm.end()));
            CHECK(best == brute);
        }
    }
}

TEST_CASE("branch reordering never increases the Wiener index") {
    UnicyclicGraph opposite = make_unicyclic(4, {"(())", "()", "(())", "()"});
    CHECK(wiener_closed_form(opposite) == 28);
    UnicyclicGraph ordered = ord_arrangement(opposite);
    CHECK(wiener_closed_form(ordered) == 27);
    CHECK(canonical_form(ord_arrangement(ordered)) == canonical_form(ordered));

    UnicyclicGraph ring = bare_cycle(7);
    CHECK(canonical_form(ord_arrangement(ring)) == canonical_form(ring));

    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 300; ++trial) {
        UnicyclicGraph g = testsupport::random_unicyclic(rng, 30);
        UnicyclicGraph o = ord_arrangement(g);
        CHECK(wiener_closed_form(o) <= wiener_closed_form(g));
        CHECK(canonical_form(ord_arrangement(o)) == canonical_form(o));
        Degrees a = graph_degrees(g), b = graph_degrees(o);
        CHECK(a == b);
    }
}
