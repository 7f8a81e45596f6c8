#pragma once

#include <string>
#include <vector>

namespace wiener {

// Degree sequences are stored sorted non-increasing; input order never matters.
using Degrees = std::vector<int>;

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Parses comma/whitespace separated positive integers; "k^m" expands to m
// copies of k. Throws std::invalid_argument naming the offending token.
Degrees parse_degree_sequence(const std::string& text);

// Inverse of parse on normalized sequences, e.g. (4,3,3,3,1,1) -> "4,3^3,1^2".
std::string render_degree_sequence(const Degrees& degs);

// Appends 1-entries until sum == 2n; each appended leaf raises n by one, so
// the count is forced to sum(degs) - 2*len(degs). Throws when negative.
Degrees fill_leaves_auto(Degrees degs);

// Accepts iff sum(degrees) == 2n, n >= girth, and at least `girth` entries
// are >= 2. The report lists every failed condition.
ValidationReport validate_unicyclic(const Degrees& degs, int girth);

// True iff every prefix sum of a is <= the matching prefix sum of b, both
// taken sorted non-increasing (so b dominates every permutation of a).
// Throws std::invalid_argument on length mismatch.
bool majorizes(const Degrees& a, const Degrees& b);

long long sum_of(const Degrees& degs);

// Number of entries >= 2.
int internal_count(const Degrees& degs);

}  // namespace wiener
