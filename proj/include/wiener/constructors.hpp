#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wiener/degree_sequence.hpp"
#include "wiener/unicyclic.hpp"

namespace wiener {

enum class CandidateKind { GreedyUnicyclic, CycleCentered, OutGreedy };

std::string kind_name(CandidateKind kind);

struct CandidateResult {
    CandidateKind kind{};
    bool applicable = false;
    std::string detail;  // reason when not applicable
    UnicyclicGraph graph;
    std::int64_t wiener = 0;
};

// Rebuilds all non-cycle material as one greedy tree over the merged root,
// splits it back into branches honouring each cycle position's degree, and
// keeps the best of the 2*girth dihedral placements of the chain order.
// Cycle degrees stay where they are; only branch contents move.
UnicyclicGraph greedy_merged_split(int girth, const std::vector<int>& cycle_degs,
                                   Degrees outside_pool);
UnicyclicGraph redistribute_outside_cycle(const UnicyclicGraph& g);

// Interleaved BFS labelling: the cycle grows two positions per level along
// the chain order while outside slots fill greedily, reserving just enough
// >=2 degrees for the unfilled cycle positions; the outside material is then
// rebuilt by greedy_merged_split.
std::optional<UnicyclicGraph> greedy_unicyclic(const Degrees& degs, int girth,
                                               std::string* why = nullptr);

// The girth largest degrees sit on the cycle in chain order; everything else
// is distributed by greedy_merged_split.
std::optional<UnicyclicGraph> cycle_centered(const Degrees& degs, int girth,
                                             std::string* why = nullptr);

// Builds a greedy host tree, picks the best eligible vertex pair at distance
// girth-1 (off the root path), closes the cycle with one edge, and strips
// compensating pendant leaves when the endpoints were pseudo-leaves. Falls
// back to a host tree with the two smallest internal degrees decremented
// when the pseudo-leaf form yields no pair.
std::optional<UnicyclicGraph> out_greedy(const Degrees& degs, int girth,
                                         std::string* why = nullptr);

// All three constructions attempted; inapplicable ones carry their reason.
std::vector<CandidateResult> all_candidates(const Degrees& degs, int girth);

// The applicable candidates attaining the least Wiener value (ties kept),
// ordered by (wiener, canonical form, kind).
std::vector<CandidateResult> best_candidates(const Degrees& degs, int girth);

struct ConjectureInput {
    bool hypothesis_ok = false;
    std::string note;
    Degrees reduced;          // the two smallest internal degrees decremented
    int height = 0;           // height of the greedy tree of `reduced`
    int deep_leaf_count = 0;  // leaves at full depth
    int gamma_star = 0;       // 2h-1 when that leaf is unique, else 2h
};

// Predicted girth where raising the girth stops paying off.
ConjectureInput conjectured_gamma_star(const Degrees& degs);

}  // namespace wiener
