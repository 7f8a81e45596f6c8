#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wiener/constructors.hpp"
#include "wiener/degree_sequence.hpp"
#include "wiener/unicyclic.hpp"

namespace wiener {

struct OracleOptions {
    std::int64_t budget = 50'000'000;  // visited-arrangement cap per (D, girth)
    int workers = 1;                   // <=0 means hardware concurrency
    bool collect_minimizers = true;
};

// Default budget, honouring the WIENER_BUDGET environment variable.
std::int64_t default_budget();

struct EnumerationReport {
    Degrees degrees;
    int girth = 0;
    bool exhaustive = false;
    std::int64_t visited = 0;
    std::int64_t count = 0;       // isomorphism classes
    std::int64_t min_wiener = -1; // -1 when the class set is empty
    std::vector<std::string> minimizers;  // canonical forms, sorted
    double wall_seconds = 0.0;
};

// Exact minimum and all minimizers over every isomorphism class with the
// given degree sequence and girth. Symmetry is cut in stages: cycle-degree
// multiset, then dihedral-inequivalent cycle arrangement, then canonical
// branch forests per position, with a final dihedral dedupe. Work splits at
// the arrangement granularity and merges in a fixed order, so the report is
// identical for every worker count. When the budget trips, the report keeps
// the deterministic prefix of arrangement tasks and is flagged non-exhaustive.
EnumerationReport exhaustive_minimum(const Degrees& degs, int girth,
                                     const OracleOptions& opts = {});

// Single-threaded streaming variant; returns false when the budget ran out.
// Visits one representative per isomorphism class, order deterministic.
bool enumerate_unicyclic(const Degrees& degs, int girth, const OracleOptions& opts,
                         const std::function<void(const UnicyclicGraph&)>& visit);

struct CheckOutcome {
    std::string id;
    std::int64_t tested = 0;
    std::vector<std::string> violations;  // canonical witnesses (capped), or notes
};

// Structural checks against an exhaustive report:
//   size-degree-chains    some minimizer admits a dihedral labelling with both
//                         the branch-size chain and the cycle-degree chain
//                         non-increasing along u1,w1,u2,w2,...
//   removal-edge-minimal  on such minimizers the designated edge attains the
//                         least tree Wiener among all cycle-edge deletions
//   centroid-structure    every enumerated graph's centroid is a K1, a K2 or
//                         a subset of the cycle
//   min-of-three          the exhaustive minimum equals the best candidate
// Violations are recorded, never thrown.
std::vector<CheckOutcome> check_theorems(const Degrees& degs, int girth,
                                         const EnumerationReport& report,
                                         const OracleOptions& opts = {});

struct ConjectureRow {
    int girth = 0;
    bool feasible = false;
    std::string note;
    std::vector<std::pair<std::string, std::int64_t>> candidates;  // kind -> W
    std::int64_t best_candidate_wiener = -1;
    bool oracle_ran = false;
    bool oracle_exhaustive = false;
    std::int64_t oracle_min = -1;
    std::int64_t oracle_count = 0;
};

struct ConjectureTable {
    Degrees degrees;
    std::vector<ConjectureRow> rows;
    std::vector<int> argmin_girths;      // girths attaining the least minimum
    std::int64_t min_value = -1;
    ConjectureInput conjecture;
    bool agreement = false;              // gamma_star among argmin_girths
    bool largest_girth_attains_min = false;
};

// Per-girth minima over the requested range: candidate values always,
// exhaustive values when with_oracle and the budget allows.
ConjectureTable explore_conjecture(const Degrees& degs, int girth_lo, int girth_hi,
                                   bool with_oracle, const OracleOptions& opts = {});

// Centroid classification computed from the cycle decomposition with cached
// per-branch distance data; agrees with centroid() but never walks the graph.
CentroidClass centroid_class_by_decomposition(const UnicyclicGraph& g);

// Every unlabelled tree of the given order, as canonical codes rooted at the
// centroid (min over the two rootings for bicentral trees).
std::vector<std::string> all_free_trees(int order);
std::string free_canonical_code(const RootedTree& t);

// Every canonical rooted-tree code of the given order.
std::vector<std::string> all_rooted_codes(int order);

}  // namespace wiener
