#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "wiener/constructors.hpp"
#include "wiener/formulas.hpp"

using namespace wiener;

namespace {

const Degrees kD1 = parse_degree_sequence("4,3^7,2^2,1^9");
const Degrees kD2 = parse_degree_sequence("4^5,3^2,1^12");

std::multiset<int> cycle_multiset(const UnicyclicGraph& g) {
    auto degs = cycle_position_degrees(g);
    return {degs.begin(), degs.end()};
}

}  // namespace

TEST_CASE("greedy unicyclic hits the reference values") {
    auto g6 = greedy_unicyclic(kD1, 6);
    REQUIRE(g6.has_value());
    CHECK(wiener_closed_form(*g6) == 572);
    CHECK(cycle_multiset(*g6) == std::multiset<int>{4, 3, 3, 3, 3, 2});

    auto g7 = greedy_unicyclic(kD1, 7);
    REQUIRE(g7.has_value());
    CHECK(wiener_closed_form(*g7) == 565);

    auto g8 = greedy_unicyclic(kD1, 8);
    REQUIRE(g8.has_value());
    CHECK(wiener_closed_form(*g8) == 576);
}

TEST_CASE("cycle centered hits the reference values") {
    auto c5 = cycle_centered(kD1, 5);
    REQUIRE(c5.has_value());
    CHECK(wiener_closed_form(*c5) == 575);

    auto c6 = cycle_centered(kD1, 6);
    REQUIRE(c6.has_value());
    CHECK(wiener_closed_form(*c6) == 572);
    CHECK(cycle_multiset(*c6) == std::multiset<int>{4, 3, 3, 3, 3, 3});

    auto d5 = cycle_centered(kD2, 5);
    REQUIRE(d5.has_value());
    CHECK(wiener_closed_form(*d5) == 519);
}

TEST_CASE("the two 572 graphs are genuinely different") {
    auto a = greedy_unicyclic(kD1, 6), b = cycle_centered(kD1, 6);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(canonical_form(*a) != canonical_form(*b));
    CHECK(wiener_closed_form(*a) == wiener_closed_form(*b));
}

TEST_CASE("out greedy hits the reference values") {
    auto o3 = out_greedy(kD1, 3);
    REQUIRE(o3.has_value());
    CHECK(wiener_closed_form(*o3) == 598);

    auto o4 = out_greedy(kD1, 4);
    REQUIRE(o4.has_value());
    CHECK(wiener_closed_form(*o4) == 590);

    auto d3 = out_greedy(kD2, 3);
    REQUIRE(d3.has_value());
    CHECK(wiener_closed_form(*d3) == 538);
}

TEST_CASE("constructions realize degree sequence and girth exactly") {
    for (int girth = 3; girth <= 8; ++girth) {
        for (const auto& cand : all_candidates(kD1, girth)) {
            if (!cand.applicable) continue;
            CHECK(cand.graph.girth == girth);
            Degrees got = graph_degrees(cand.graph);
            CHECK(got == kD1);
            CHECK(cand.wiener == wiener_by_bfs(graph_adjacency(cand.graph)));
        }
    }
}

TEST_CASE("every feasible cell yields a candidate or a reasoned rejection") {
    // The one genuinely empty family the validator admits is all-2 degrees
    // with a girth below n: only the bare ring realizes an all-2 sequence.
    for (int n = 4; n <= 8; ++n) {
        for (const auto& degs : testsupport::unicyclic_degree_sequences(n)) {
            for (int girth = 3; girth <= n; ++girth) {
                if (!validate_unicyclic(degs, girth).ok) continue;
                bool ring_only = degs[0] == 2 && static_cast<int>(degs.size()) > girth;
                bool any = false;
                for (const auto& cand : all_candidates(degs, girth)) {
                    if (!cand.applicable) {
                        CHECK(!cand.detail.empty());
                        continue;
                    }
                    any = true;
                    CHECK(cand.graph.girth == girth);
                    CHECK(graph_degrees(cand.graph) == degs);
                    CHECK(cand.wiener == wiener_by_bfs(graph_adjacency(cand.graph)));
                }
                CHECK(any == !ring_only);
            }
        }
    }
}

TEST_CASE("leaf depth spread stays within one level on greedy outputs") {
    // All leaves of every branch sit on the two deepest levels of the whole
    // branch forest when the builder had free choice.
    for (int girth : {4, 6}) {
        auto g = greedy_unicyclic(kD1, girth);
        REQUIRE(g.has_value());
        int shallow = -1, deep = -1;
        for (const auto& code : g->branch_codes) {
            RootedTree t = tree_from_code(code);
            auto depth = vertex_depths(t);
            for (int v = 0; v < t.order(); ++v) {
                if (!t.children[v].empty()) continue;
                if (v == 0) continue;
                shallow = shallow < 0 ? depth[v] : std::min(shallow, depth[v]);
                deep = std::max(deep, depth[v]);
            }
        }
        CHECK(deep - shallow <= 1);
    }
}

TEST_CASE("best candidates keep ties and order deterministically") {
    auto best = best_candidates(kD1, 6);
    REQUIRE(best.size() >= 2);
    std::set<std::string> distinct;
    for (const auto& b : best) {
        CHECK(b.wiener == 572);
        distinct.insert(canonical_form(b.graph));
    }
    CHECK(distinct.size() == 2);
    CHECK(canonical_form(best.front().graph) <= canonical_form(best.back().graph));

    auto d24 = best_candidates(kD2, 4);
    REQUIRE(!d24.empty());
    CHECK(d24.front().wiener == 538);

    auto d27 = best_candidates(kD2, 7);
    REQUIRE(!d27.empty());
    CHECK(d27.front().wiener == 523);
}

TEST_CASE("redistribution is idempotent and never hurts separated graphs") {
    auto g = greedy_unicyclic(kD1, 6);
    REQUIRE(g.has_value());
    UnicyclicGraph r = redistribute_outside_cycle(*g);
    CHECK(canonical_form(r) == canonical_form(*g));

    // Degree-separated inputs: every cycle degree above every outside degree.
    // Deliberately lopsided branch loads get rebalanced, never worsened.
    std::vector<UnicyclicGraph> lopsided{
        make_unicyclic(3, {"((()))", "(())", "(())"}),
        make_unicyclic(3, {"(((())))", "((()))", "(()()())"}),
        make_unicyclic(4, {"((())(()))", "(()())", "(())", "(())"}),
    };
    for (const auto& bad : lopsided) {
        auto cyc = cycle_position_degrees(bad);
        int min_cycle = *std::min_element(cyc.begin(), cyc.end());
        int max_out = 1;
        for (const auto& code : bad.branch_codes) {
            RootedTree t = tree_from_code(code);
            for (int v = 1; v < t.order(); ++v)
                max_out = std::max(max_out, static_cast<int>(t.children[v].size()) + 1);
        }
        UnicyclicGraph fixed = redistribute_outside_cycle(bad);
        CHECK(graph_degrees(fixed) == graph_degrees(bad));
        if (min_cycle > max_out)
            CHECK(wiener_closed_form(fixed) <= wiener_closed_form(bad));
        CHECK(canonical_form(redistribute_outside_cycle(fixed)) == canonical_form(fixed));
    }

    UnicyclicGraph ring = make_unicyclic(6, std::vector<std::string>(6, "()"));
    CHECK(canonical_form(redistribute_outside_cycle(ring)) == canonical_form(ring));
}

TEST_CASE("constructions reject infeasible input with a reason") {
    std::string why;
    CHECK_FALSE(greedy_unicyclic(Degrees{2, 2, 2, 2}, 5, &why).has_value());
    CHECK_FALSE(why.empty());
    CHECK_FALSE(cycle_centered(Degrees{3, 2, 2, 1}, 4).has_value());

    // Pure cycles defeat the tree-first construction: every candidate pair
    // straddles the host tree's root.
    why.clear();
    CHECK_FALSE(out_greedy(parse_degree_sequence("2^5"), 5, &why).has_value());
    CHECK_FALSE(why.empty());
    auto best = best_candidates(parse_degree_sequence("2^5"), 5);
    REQUIRE(!best.empty());
    CHECK(best.front().wiener == 15);
}

TEST_CASE("predicted optimal girth") {
    ConjectureInput c = conjectured_gamma_star(kD1);
    CHECK(c.hypothesis_ok);
    CHECK(c.reduced == parse_degree_sequence("4,3^7,1^11"));
    CHECK(c.height == 3);
    CHECK(c.deep_leaf_count == 6);
    CHECK(c.gamma_star == 6);

    ConjectureInput flat = conjectured_gamma_star(parse_degree_sequence("3,2^4,1"));
    CHECK_FALSE(flat.hypothesis_ok);
    CHECK(flat.note.find("2") != std::string::npos);
}
