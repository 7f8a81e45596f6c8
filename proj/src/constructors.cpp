#include "wiener/constructors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <tuple>

#include "wiener/errors.hpp"
#include "wiener/formulas.hpp"

namespace wiener {

std::string kind_name(CandidateKind kind) {
    switch (kind) {
        case CandidateKind::GreedyUnicyclic: return "greedy_unicyclic";
        case CandidateKind::CycleCentered: return "cycle_centered";
        case CandidateKind::OutGreedy: return "out_greedy";
    }
    return "unknown";
}

namespace {

std::string fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return msg;
}

// Degree multiset with O(1) largest/smallest queries, small value range.
class Pool {
  public:
    explicit Pool(const Degrees& degs) {
        for (int d : degs) ++counts_[d];
    }
    bool empty() const { return counts_.empty(); }
    void take(int d) {
        auto it = counts_.find(d);
        internal_check(it != counts_.end() && it->second > 0, "pool underflow");
        if (--it->second == 0) counts_.erase(it);
    }
    int largest() const { return counts_.empty() ? 0 : counts_.rbegin()->first; }
    int largest_at_least_2() const {
        auto it = counts_.lower_bound(2);
        if (it == counts_.end()) return 0;
        return counts_.rbegin()->first;
    }
    int smallest_at_least_2() const {
        auto it = counts_.lower_bound(2);
        return it == counts_.end() ? 0 : it->first;
    }
    bool has_ones() const { return counts_.count(1) > 0; }
    long long count_at_least_2() const {
        long long c = 0;
        for (auto it = counts_.lower_bound(2); it != counts_.end(); ++it) c += it->second;
        return c;
    }

  private:
    std::map<int, long long> counts_;
};

std::string wrap_children(std::vector<std::string> child_codes) {
    std::sort(child_codes.begin(), child_codes.end(), std::greater<>());
    std::string out = "(";
    for (const auto& c : child_codes) out += c;
    out += ')';
    return out;
}

}  // namespace

UnicyclicGraph greedy_merged_split(int girth, const std::vector<int>& cycle_degs,
                                   Degrees outside_pool) {
    internal_check(static_cast<int>(cycle_degs.size()) == girth, "one degree per cycle position");
    std::vector<int> slots(girth);
    int nslots = 0;
    for (int p = 0; p < girth; ++p) {
        internal_check(cycle_degs[p] >= 2, "cycle degrees are at least 2");
        slots[p] = cycle_degs[p] - 2;
        nslots += slots[p];
    }
    if (nslots == 0) {
        internal_check(outside_pool.empty(), "no room for outside vertices");
        return make_unicyclic(girth, std::vector<std::string>(girth, "()"));
    }

    // One greedy tree over all outside material, hung below a merged root
    // whose degree is the total slot count.
    std::sort(outside_pool.begin(), outside_pool.end(), std::greater<>());
    Degrees tseq;
    tseq.reserve(outside_pool.size() + 1);
    tseq.push_back(nslots);
    tseq.insert(tseq.end(), outside_pool.begin(), outside_pool.end());
    RootedTree merged = greedy_tree_forced_root(tseq);

    auto size = subtree_sizes(merged);
    std::vector<int> subs = merged.children[0];
    std::stable_sort(subs.begin(), subs.end(), [&](int a, int b) { return size[a] > size[b]; });
    std::vector<std::string> sub_codes;
    sub_codes.reserve(subs.size());
    for (int s : subs) sub_codes.push_back(subtree_code(merged, s));

    auto chain = chain_positions(girth);
    bool have = false;
    std::int64_t best_w = 0;
    UnicyclicGraph best;
    for (int s0 = 0; s0 < girth; ++s0) {
        for (int refl = 0; refl < 2; ++refl) {
            std::vector<int> posmap(girth);
            for (int i = 0; i < girth; ++i)
                posmap[i] = refl ? ((s0 - i) % girth + girth) % girth : (s0 + i) % girth;
            std::vector<std::vector<std::string>> assign(girth);
            std::size_t next = 0;
            for (int c = 0; c < girth; ++c) {
                int p = posmap[chain[c]];
                for (int s = 0; s < slots[p]; ++s) {
                    internal_check(next < sub_codes.size(), "slot count mismatch");
                    assign[p].push_back(sub_codes[next++]);
                }
            }
            internal_check(next == sub_codes.size(), "every subtree must land in a slot");
            std::vector<std::string> codes(girth);
            for (int p = 0; p < girth; ++p) codes[p] = wrap_children(std::move(assign[p]));
            UnicyclicGraph g = make_unicyclic(girth, std::move(codes));
            std::int64_t w = wiener_closed_form(g);
            if (!have || w < best_w) {
                have = true;
                best_w = w;
                best = std::move(g);
            }
        }
    }
    return best;
}

UnicyclicGraph redistribute_outside_cycle(const UnicyclicGraph& g) {
    Degrees pool;
    for (const auto& code : g.branch_codes) {
        RootedTree t = tree_from_code(code);
        for (int v = 1; v < t.order(); ++v)
            pool.push_back(static_cast<int>(t.children[v].size()) + 1);
    }
    return greedy_merged_split(g.girth, cycle_position_degrees(g), std::move(pool));
}

std::optional<UnicyclicGraph> cycle_centered(const Degrees& degs, int girth, std::string* why) {
    Degrees d = degs;
    std::sort(d.begin(), d.end(), std::greater<>());
    auto v = validate_unicyclic(d, girth);
    if (!v.ok) {
        fail(why, v.failures.front());
        return std::nullopt;
    }
    int t = internal_count(d);
    Degrees internal(d.begin(), d.begin() + t);
    if (internal[0] == 2 && static_cast<int>(d.size()) > girth) {
        // all-2 cycle leaves no slot, yet vertices remain outside it
        fail(why, "every degree is 2: only the bare ring of length " +
                      std::to_string(d.size()) + " realizes this sequence");
        return std::nullopt;
    }

    auto chain = chain_positions(girth);
    std::vector<int> cycle_degs(girth);
    for (int c = 0; c < girth; ++c) cycle_degs[chain[c]] = internal[c];
    Degrees pool(internal.begin() + girth, internal.end());
    pool.insert(pool.end(), d.size() - t, 1);
    return greedy_merged_split(girth, cycle_degs, std::move(pool));
}

std::optional<UnicyclicGraph> greedy_unicyclic(const Degrees& degs, int girth, std::string* why) {
    Degrees d = degs;
    std::sort(d.begin(), d.end(), std::greater<>());
    auto v = validate_unicyclic(d, girth);
    if (!v.ok) {
        fail(why, v.failures.front());
        return std::nullopt;
    }

    // Level member: degree, on-cycle flag, open outside slots.
    struct Member {
        int deg;
        bool on_cycle;
        int out_slots;
    };
    Pool pool(d);
    auto chain = chain_positions(girth);
    std::vector<int> cycle_degs(girth, 0);
    int ci = 0;

    int d1 = pool.largest_at_least_2();
    if (d1 == 0) {
        fail(why, "no degree >= 2 available for the cycle");
        return std::nullopt;
    }
    pool.take(d1);
    cycle_degs[chain[ci++]] = d1;
    std::vector<Member> lvl{{d1, true, d1 - 2}};

    while (ci < girth || !pool.empty()) {
        std::vector<Member> nxt;
        int ncyc = std::min(2, girth - ci);
        for (int r = 0; r < ncyc; ++r) {
            int x = pool.largest_at_least_2();
            if (x == 0) {
                fail(why, "ran out of degrees >= 2 while building the cycle");
                return std::nullopt;
            }
            pool.take(x);
            cycle_degs[chain[ci++]] = x;
            nxt.push_back({x, true, x - 2});
        }
        std::vector<Member> parents;
        for (const auto& m : lvl)
            if (m.on_cycle) parents.push_back(m);
        std::stable_sort(parents.begin(), parents.end(),
                         [](const Member& a, const Member& b) { return a.deg > b.deg; });
        std::vector<Member> outs;
        for (const auto& m : lvl)
            if (!m.on_cycle) outs.push_back(m);
        std::stable_sort(outs.begin(), outs.end(),
                         [](const Member& a, const Member& b) { return a.deg > b.deg; });
        parents.insert(parents.end(), outs.begin(), outs.end());

        for (const auto& parent : parents) {
            for (int s = 0; s < parent.out_slots; ++s) {
                if (pool.empty()) {
                    fail(why, "degree sequence exhausted before all slots filled");
                    return std::nullopt;
                }
                int x = pool.largest();
                // Keep enough >=2 degrees back for the unfilled cycle slots.
                if (x >= 2 && pool.count_at_least_2() - 1 < girth - ci) {
                    x = pool.has_ones() ? 1 : pool.smallest_at_least_2();
                }
                pool.take(x);
                nxt.push_back({x, false, x - 1});
            }
        }
        lvl = std::move(nxt);
        if (lvl.empty() && (ci < girth || !pool.empty())) {
            fail(why, "labelling stalled before covering the sequence");
            return std::nullopt;
        }
    }

    // Everything not placed on the cycle feeds the redistribution step.
    Degrees pool_out = d;
    for (int cd : cycle_degs) {
        auto it = std::find(pool_out.begin(), pool_out.end(), cd);
        internal_check(it != pool_out.end(), "cycle degree missing from the sequence");
        pool_out.erase(it);
    }
    return greedy_merged_split(girth, cycle_degs, std::move(pool_out));
}

namespace {

std::vector<int> bfs_dist(const Adjacency& adj, int s) {
    std::vector<int> dist(adj.size(), -1);
    dist[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int u : adj[v])
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push_back(u);
            }
    }
    return dist;
}

bool root_on_path(const Adjacency& adj, int u1, int u2, const std::vector<int>& dist_u1) {
    int cur = u2;
    while (cur != u1) {
        if (cur == 0) return true;
        for (int w : adj[cur]) {
            if (dist_u1[w] == dist_u1[cur] - 1) {
                cur = w;
                break;
            }
        }
    }
    return u1 == 0;
}

// Shared pair search for both host trees. mode_degs empty = pseudo-leaf mode.
std::optional<Adjacency> try_pairs(const RootedTree& host, int girth, bool strip,
                                   std::pair<int, int> want_degs) {
    Adjacency adj = tree_adjacency(host);
    int n = host.order();
    std::vector<int> degs(n);
    for (int v = 0; v < n; ++v) degs[v] = static_cast<int>(adj[v].size());
    auto size = subtree_sizes(host);

    std::vector<int> branch(n, -1);
    for (int c : host.children[0]) {
        std::vector<int> stack{c};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            branch[v] = c;
            for (int w : host.children[v]) stack.push_back(w);
        }
    }

    bool pseudo_mode = want_degs.first == 0;
    std::vector<bool> isleaf(n);
    for (int v = 0; v < n; ++v) isleaf[v] = degs[v] == 1;
    auto pseudo = [&](int v) {
        if (isleaf[v] || v == 0) return false;
        int nonleaf = 0;
        for (int u : adj[v])
            if (!isleaf[u]) ++nonleaf;
        return nonleaf <= 1;
    };
    std::vector<int> elig;
    for (int v = 1; v < n; ++v) {
        if (pseudo_mode ? pseudo(v) : (degs[v] == want_degs.first || degs[v] == want_degs.second))
            elig.push_back(v);
    }

    auto sorted_pair_desc = [](int a, int b) {
        return std::pair<int, int>(std::max(a, b), std::min(a, b));
    };
    using Key = std::tuple<std::pair<int, int>, std::pair<int, int>, int, int>;
    bool have = false;
    Key best_key;
    int bu1 = -1, bu2 = -1;
    for (int u1 : elig) {
        auto dist = bfs_dist(adj, u1);
        for (int u2 : elig) {
            if (u2 <= u1 || dist[u2] != girth - 1) continue;
            if (!pseudo_mode) {
                auto got = sorted_pair_desc(degs[u1], degs[u2]);
                if (got != sorted_pair_desc(want_degs.first, want_degs.second)) continue;
            }
            if (root_on_path(adj, u1, u2, dist)) continue;
            Key key{sorted_pair_desc(size[branch[u1]], size[branch[u2]]),
                    sorted_pair_desc(degs[u1], degs[u2]), -u1, -u2};
            if (!have || key > best_key) {
                have = true;
                best_key = key;
                bu1 = u1;
                bu2 = u2;
            }
        }
    }
    if (!have) return std::nullopt;

    std::vector<int> drop;
    if (strip) {
        for (int u : {bu1, bu2}) {
            int leaf_child = -1;
            for (int c : host.children[u])
                if (host.children[c].empty()) {
                    leaf_child = c;
                    break;
                }
            if (leaf_child < 0) return std::nullopt;
            drop.push_back(leaf_child);
        }
    }

    std::vector<int> idx(n, -1);
    int m = 0;
    for (int v = 0; v < n; ++v)
        if (std::find(drop.begin(), drop.end(), v) == drop.end()) idx[v] = m++;
    Adjacency out(m);
    for (int v = 0; v < n; ++v) {
        if (idx[v] < 0) continue;
        for (int u : adj[v])
            if (idx[u] >= 0) out[idx[v]].push_back(idx[u]);
    }
    out[idx[bu1]].push_back(idx[bu2]);
    out[idx[bu2]].push_back(idx[bu1]);
    return out;
}

}  // namespace

std::optional<UnicyclicGraph> out_greedy(const Degrees& degs, int girth, std::string* why) {
    Degrees d = degs;
    std::sort(d.begin(), d.end(), std::greater<>());
    auto v = validate_unicyclic(d, girth);
    if (!v.ok) {
        fail(why, v.failures.front());
        return std::nullopt;
    }
    int t = internal_count(d);
    int n = static_cast<int>(d.size());
    Degrees internal(d.begin(), d.begin() + t);

    // Host tree keeps the internal degrees and fills leaves to balance; two
    // of those leaves will be stripped when the cycle edge lands.
    long long nl = sum_of(internal) - 2LL * t + 2;
    Degrees seq_a = internal;
    seq_a.insert(seq_a.end(), static_cast<std::size_t>(nl), 1);
    RootedTree tree_a = greedy_tree(seq_a);
    int h = tree_height(tree_a);
    if (girth >= 2 * h) {
        fail(why, "cycle of girth " + std::to_string(girth) +
                      " would swallow the host tree of height " + std::to_string(h));
        return std::nullopt;
    }
    auto res = try_pairs(tree_a, girth, /*strip=*/true, {0, 0});
    if (!res) {
        // Fallback host: the two smallest internal degrees pre-decremented,
        // so closing the edge restores them without stripping.
        int a = internal[t - 2] - 1, b = internal[t - 1] - 1;
        Degrees seq_b(internal.begin(), internal.end() - 2);
        seq_b.push_back(a);
        seq_b.push_back(b);
        seq_b.insert(seq_b.end(), static_cast<std::size_t>(n - t), 1);
        std::sort(seq_b.begin(), seq_b.end(), std::greater<>());
        internal_check(sum_of(seq_b) == 2LL * (n - 1), "decremented host must be a tree sequence");
        RootedTree tree_b = greedy_tree(seq_b);
        res = try_pairs(tree_b, girth, /*strip=*/false, {a, b});
    }
    if (!res) {
        fail(why, "no eligible vertex pair at distance girth-1");
        return std::nullopt;
    }
    return from_adjacency(*res);
}

std::vector<CandidateResult> all_candidates(const Degrees& degs, int girth) {
    std::vector<CandidateResult> out;
    auto add = [&](CandidateKind kind, std::optional<UnicyclicGraph> g, const std::string& why) {
        CandidateResult r;
        r.kind = kind;
        if (g) {
            r.applicable = true;
            r.graph = std::move(*g);
            r.wiener = wiener_closed_form(r.graph);
        } else {
            r.detail = why;
        }
        out.push_back(std::move(r));
    };
    std::string why;
    add(CandidateKind::GreedyUnicyclic, greedy_unicyclic(degs, girth, &why), why);
    why.clear();
    add(CandidateKind::CycleCentered, cycle_centered(degs, girth, &why), why);
    why.clear();
    add(CandidateKind::OutGreedy, out_greedy(degs, girth, &why), why);
    return out;
}

std::vector<CandidateResult> best_candidates(const Degrees& degs, int girth) {
    auto cands = all_candidates(degs, girth);
    std::vector<CandidateResult> best;
    std::int64_t bw = 0;
    for (auto& c : cands) {
        if (!c.applicable) continue;
        if (best.empty() || c.wiener < bw) {
            bw = c.wiener;
            best.clear();
        }
        if (c.wiener == bw) best.push_back(c);
    }
    std::sort(best.begin(), best.end(), [](const CandidateResult& a, const CandidateResult& b) {
        if (a.wiener != b.wiener) return a.wiener < b.wiener;
        auto ca = canonical_form(a.graph), cb = canonical_form(b.graph);
        if (ca != cb) return ca < cb;
        return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    });
    return best;
}

ConjectureInput conjectured_gamma_star(const Degrees& degs) {
    ConjectureInput out;
    Degrees d = degs;
    std::sort(d.begin(), d.end(), std::greater<>());
    int t = internal_count(d);
    if (t < 2) {
        out.note = "hypothesis violated: fewer than two entries >= 2";
        return out;
    }
    if (d.size() >= 2 && d[1] == 2) {
        out.note = "hypothesis violated: second-largest degree equals 2";
        return out;
    }
    if (sum_of(d) != 2LL * static_cast<long long>(d.size())) {
        out.note = "hypothesis violated: degree sum is not 2n";
        return out;
    }
    Degrees reduced = d;
    reduced[t - 2] -= 1;
    reduced[t - 1] -= 1;
    std::sort(reduced.begin(), reduced.end(), std::greater<>());
    RootedTree tree = greedy_tree(reduced);

    auto dep = vertex_depths(tree);
    int h = *std::max_element(dep.begin(), dep.end());
    int deep = 0;
    for (int v = 0; v < tree.order(); ++v)
        if (tree.children[v].empty() && dep[v] == h) ++deep;

    out.hypothesis_ok = true;
    out.reduced = std::move(reduced);
    out.height = h;
    out.deep_leaf_count = deep;
    out.gamma_star = deep == 1 ? 2 * h - 1 : 2 * h;
    return out;
}

}  // namespace wiener
