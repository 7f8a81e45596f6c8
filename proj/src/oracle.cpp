#include "wiener/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "wiener/errors.hpp"
#include "wiener/formulas.hpp"

namespace wiener {

std::int64_t default_budget() {
    if (const char* env = std::getenv("WIENER_BUDGET")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v >= 1.0 && v < 9.2e18) return static_cast<std::int64_t>(v);
    }
    return 50'000'000;
}

namespace {

constexpr const char* kTopBound = "~";  // above every code: '~' > ')' > '('

std::vector<int> dihedral_image(const std::vector<int>& arr, int shift, bool reflect) {
    int g = static_cast<int>(arr.size());
    std::vector<int> out(g);
    for (int i = 0; i < g; ++i) {
        int src = reflect ? ((shift - i) % g + g) % g : (shift + i) % g;
        out[i] = arr[src];
    }
    return out;
}

std::vector<int> dihedral_min_ints(const std::vector<int>& arr) {
    int g = static_cast<int>(arr.size());
    std::vector<int> best = arr;
    for (int s = 0; s < g; ++s)
        for (int r = 0; r < 2; ++r) {
            auto img = dihedral_image(arr, s, r != 0);
            if (img < best) best = img;
        }
    return best;
}

// Min dihedral image of the branch-code vector, concatenated. Matches
// canonical_form up to the "C<girth>:" prefix.
std::string dihedral_min_key(const std::vector<std::string>& codes) {
    int g = static_cast<int>(codes.size());
    std::vector<const std::string*> best(g), img(g);
    for (int i = 0; i < g; ++i) best[i] = &codes[i];
    auto less = [g](const std::vector<const std::string*>& a,
                    const std::vector<const std::string*>& b) {
        for (int i = 0; i < g; ++i) {
            int c = a[i]->compare(*b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    };
    for (int s = 0; s < g; ++s)
        for (int r = 0; r < 2; ++r) {
            for (int i = 0; i < g; ++i) {
                int src = r ? ((s - i) % g + g) % g : (s + i) % g;
                img[i] = &codes[src];
            }
            if (less(img, best)) best = img;
        }
    std::string key;
    for (int i = 0; i < g; ++i) key += *best[i];
    return key;
}

// Degree material for the branches: counts per internal degree, plus leaves.
struct Material {
    std::vector<std::pair<int, int>> internal;  // (degree, count), degree desc
    int leaves = 0;
    long long excess = 0;  // sum of (degree - 2) * count over internal

    void take(std::size_t idx) {
        --internal[idx].second;
        excess -= internal[idx].first - 2;
    }
    void put(std::size_t idx) {
        ++internal[idx].second;
        excess += internal[idx].first - 2;
    }
    bool empty() const {
        if (leaves != 0) return false;
        for (const auto& [d, c] : internal)
            if (c != 0) return false;
        return true;
    }
};

struct TaskResult {
    std::int64_t visited = 0;
    std::int64_t count = 0;
    std::int64_t min_wiener = -1;
    std::vector<std::string> minimizers;  // full canonical forms
    bool tripped = false;
};

// One enumeration unit: a fixed dihedral-canonical cycle arrangement.
class ArrangementEnum {
  public:
    ArrangementEnum(int girth, std::vector<int> arr, Material mat, std::int64_t cap,
                    bool collect, const std::function<void(const UnicyclicGraph&)>* stream)
        : girth_(girth), arr_(std::move(arr)), mat_(std::move(mat)), cap_(cap),
          collect_(collect), stream_(stream) {
        codes_.resize(girth_);
        suffix_slots_.assign(girth_ + 1, 0);
        for (int p = girth_ - 1; p >= 0; --p)
            suffix_slots_[p] = suffix_slots_[p + 1] + (arr_[p] - 2);
    }

    TaskResult run() {
        rec_pos(0);
        res_.tripped = tripped_;
        return std::move(res_);
    }

  private:
    bool bump() {
        if (++res_.visited > cap_) tripped_ = true;
        return tripped_;
    }

    void rec_pos(int p) {
        if (tripped_) return;
        if (p == girth_) {
            finish();
            return;
        }
        // Conservation: remaining slots grow by d-2 per internal vertex and
        // shrink by one per leaf, so a completion needs this exact balance.
        if (mat_.leaves != suffix_slots_[p] + mat_.excess) return;
        std::vector<std::string> acc;
        fill_slots(arr_[p] - 2, kTopBound, acc, [&] {
            std::string wrapped = "(";
            for (const auto& c : acc) wrapped += c;
            wrapped += ')';
            codes_[p] = std::move(wrapped);
            rec_pos(p + 1);
        });
    }

    // Assign nslots child subtrees, codes non-increasing and each <= bound.
    // bound is taken by value: references into acc would dangle on regrowth.
    void fill_slots(int nslots, std::string bound, std::vector<std::string>& acc,
                    const std::function<void()>& done) {
        if (tripped_) return;
        if (nslots == 0) {
            done();
            return;
        }
        if (mat_.leaves > 0 && bound >= "()") {
            if (bump()) return;
            --mat_.leaves;
            acc.push_back("()");
            fill_slots(nslots - 1, "()", acc, done);
            acc.pop_back();
            ++mat_.leaves;
            if (tripped_) return;
        }
        for (std::size_t i = 0; i < mat_.internal.size(); ++i) {
            if (mat_.internal[i].second == 0) continue;
            int d = mat_.internal[i].first;
            mat_.take(i);
            std::vector<std::string> sub;
            fill_slots(d - 1, kTopBound, sub, [&] {
                std::string code = "(";
                for (const auto& c : sub) code += c;
                code += ')';
                if (code <= bound) {
                    if (bump()) return;
                    acc.push_back(code);
                    fill_slots(nslots - 1, std::move(code), acc, done);
                    acc.pop_back();
                }
            });
            mat_.put(i);
            if (tripped_) return;
        }
    }

    void finish() {
        if (!mat_.empty()) return;
        if (bump()) return;
        std::string key = dihedral_min_key(codes_);
        if (!seen_.insert(key).second) return;
        ++res_.count;

        CycleDecomposition dec;
        dec.girth = girth_;
        for (int p = 0; p < girth_; ++p) {
            const auto& st = code_stats(codes_[p]);
            dec.ell.push_back(st.order - 1);
            dec.alpha.push_back(st.alpha);
            dec.branch_wiener.push_back(st.wiener);
            dec.cycle_degree.push_back(arr_[p]);
        }
        std::int64_t w = wiener_closed_form(dec);
        std::string canon = "C" + std::to_string(girth_) + ":" + key;
        if (res_.min_wiener < 0 || w < res_.min_wiener) {
            res_.min_wiener = w;
            res_.minimizers.clear();
        }
        if (w == res_.min_wiener && collect_) res_.minimizers.push_back(canon);
        if (stream_) (*stream_)(from_canonical(canon));
    }

    int girth_;
    std::vector<int> arr_;
    Material mat_;
    std::int64_t cap_;
    bool collect_;
    const std::function<void(const UnicyclicGraph&)>* stream_;
    std::vector<std::string> codes_;
    std::vector<int> suffix_slots_;
    std::unordered_set<std::string> seen_;
    TaskResult res_;
    bool tripped_ = false;
};

struct Task {
    std::vector<int> arr;
    Material mat;
};

// Tasks in a fixed order: cycle-degree multisets lexicographically descending,
// then dihedral-canonical arrangements in ascending permutation order.
std::vector<Task> build_tasks(const Degrees& degs, int girth) {
    Degrees d = degs;
    std::sort(d.begin(), d.end(), std::greater<>());
    std::vector<std::pair<int, int>> internal_counts;
    int leaves = 0;
    for (int x : d) {
        if (x == 1) {
            ++leaves;
        } else if (!internal_counts.empty() && internal_counts.back().first == x) {
            ++internal_counts.back().second;
        } else {
            internal_counts.push_back({x, 1});
        }
    }

    std::vector<Task> tasks;
    std::vector<int> chosen_counts(internal_counts.size(), 0);
    std::function<void(std::size_t, int)> pick = [&](std::size_t idx, int left) {
        if (left == 0 || idx == internal_counts.size()) {
            if (left != 0) return;
            std::vector<int> multiset;
            Material mat;
            mat.leaves = leaves;
            for (std::size_t i = 0; i < internal_counts.size(); ++i) {
                for (int r = 0; r < chosen_counts[i]; ++r)
                    multiset.push_back(internal_counts[i].first);
                int rest = internal_counts[i].second - chosen_counts[i];
                if (rest > 0) {
                    mat.internal.push_back({internal_counts[i].first, rest});
                    mat.excess += static_cast<long long>(internal_counts[i].first - 2) * rest;
                }
            }
            std::vector<int> arr(multiset.rbegin(), multiset.rend());  // ascending
            do {
                if (arr == dihedral_min_ints(arr)) tasks.push_back({arr, mat});
            } while (std::next_permutation(arr.begin(), arr.end()));
            return;
        }
        int avail = std::min(internal_counts[idx].second, left);
        for (int c = avail; c >= 0; --c) {
            chosen_counts[idx] = c;
            pick(idx + 1, left - c);
        }
        chosen_counts[idx] = 0;
    };
    pick(0, girth);
    return tasks;
}

void merge_included(EnumerationReport& rep, const std::vector<Task>& tasks,
                    const std::vector<TaskResult>& results, std::int64_t budget) {
    std::int64_t cum = 0;
    std::size_t included = 0;
    bool any_tripped = false;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (cum + results[i].visited > budget) break;
        cum += results[i].visited;
        any_tripped = any_tripped || results[i].tripped;
        ++included;
    }
    rep.visited = cum;
    for (std::size_t i = 0; i < included; ++i) {
        const TaskResult& r = results[i];
        rep.count += r.count;
        if (r.min_wiener < 0) continue;
        if (rep.min_wiener < 0 || r.min_wiener < rep.min_wiener) {
            rep.min_wiener = r.min_wiener;
            rep.minimizers.clear();
        }
        if (r.min_wiener == rep.min_wiener)
            rep.minimizers.insert(rep.minimizers.end(), r.minimizers.begin(),
                                  r.minimizers.end());
    }
    std::sort(rep.minimizers.begin(), rep.minimizers.end());
    rep.exhaustive = included == tasks.size() && !any_tripped;
}

}  // namespace

EnumerationReport exhaustive_minimum(const Degrees& degs, int girth,
                                     const OracleOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    Degrees d = degs;
    std::sort(d.begin(), d.end(), std::greater<>());
    auto v = validate_unicyclic(d, girth);
    if (!v.ok) throw std::invalid_argument(v.failures.front());

    EnumerationReport rep;
    rep.degrees = d;
    rep.girth = girth;

    std::vector<Task> tasks = build_tasks(d, girth);
    std::vector<TaskResult> results(tasks.size());
    if (!tasks.empty()) {
        int workers = opts.workers;
        if (workers <= 0) workers = std::max(1u, std::thread::hardware_concurrency());
        workers = std::min<int>(workers, static_cast<int>(tasks.size()));

        std::atomic<std::size_t> next{0};
        std::atomic<bool> stop{false};
        std::mutex done_mtx;
        std::vector<char> done(tasks.size(), 0);
        std::size_t prefix = 0;
        std::int64_t prefix_visited = 0;

        auto work = [&] {
            while (!stop.load(std::memory_order_relaxed)) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                ArrangementEnum e(girth, tasks[i].arr, tasks[i].mat, opts.budget,
                                  opts.collect_minimizers, nullptr);
                results[i] = e.run();
                std::lock_guard<std::mutex> lock(done_mtx);
                done[i] = 1;
                while (prefix < tasks.size() && done[prefix]) {
                    prefix_visited += results[prefix].visited;
                    ++prefix;
                }
                // Once the completed prefix exceeds the budget, no later task
                // can be included, so new claims are pointless.
                if (prefix_visited > opts.budget) stop.store(true);
            }
        };
        if (workers == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (int t = 0; t < workers; ++t) pool.emplace_back(work);
            for (auto& th : pool) th.join();
        }
        merge_included(rep, tasks, results, opts.budget);
    } else {
        rep.exhaustive = true;
    }
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

bool enumerate_unicyclic(const Degrees& degs, int girth, const OracleOptions& opts,
                         const std::function<void(const UnicyclicGraph&)>& visit) {
    Degrees d = degs;
    std::sort(d.begin(), d.end(), std::greater<>());
    auto v = validate_unicyclic(d, girth);
    if (!v.ok) throw std::invalid_argument(v.failures.front());

    std::int64_t left = opts.budget;
    for (Task& task : build_tasks(d, girth)) {
        ArrangementEnum e(girth, task.arr, task.mat, left, false, &visit);
        TaskResult r = e.run();
        if (r.tripped) return false;
        left -= r.visited;
    }
    return true;
}

namespace {

// Anchorings (shift, reflect) under which both the branch-size chain and the
// cycle-degree chain are non-increasing along u1,w1,u2,w2,...
std::vector<std::pair<int, bool>> chain_anchorings(const UnicyclicGraph& g) {
    int gm = g.girth;
    std::vector<int> sizes(gm), degs(gm);
    for (int p = 0; p < gm; ++p) {
        const auto& st = code_stats(g.branch_codes[p]);
        sizes[p] = static_cast<int>(st.order);
        degs[p] = 2 + static_cast<int>(tree_from_code(g.branch_codes[p]).children[0].size());
    }
    auto chain = chain_positions(gm);
    std::vector<std::pair<int, bool>> out;
    for (int s = 0; s < gm; ++s) {
        for (int r = 0; r < 2; ++r) {
            bool ok = true;
            int prev_size = 0, prev_deg = 0;
            for (int c = 0; c < gm && ok; ++c) {
                int pos = r ? ((s - chain[c]) % gm + gm) % gm : (s + chain[c]) % gm;
                if (c > 0 && (sizes[pos] > prev_size || degs[pos] > prev_deg)) ok = false;
                prev_size = sizes[pos];
                prev_deg = degs[pos];
            }
            if (ok) out.push_back({s, r != 0});
        }
    }
    return out;
}

// Distance-sum data for one branch code, reused across graphs.
struct BranchGeometry {
    int order = 0;
    std::vector<int> depth, parent;
    std::vector<long long> dsum;  // distance sum within the branch tree
};

const BranchGeometry& branch_geometry(const std::string& code) {
    thread_local std::unordered_map<std::string, BranchGeometry> cache;
    auto it = cache.find(code);
    if (it != cache.end()) return it->second;

    RootedTree t = tree_from_code(code);
    BranchGeometry geo;
    geo.order = t.order();
    geo.depth = vertex_depths(t);
    geo.parent.assign(geo.order, -1);
    for (int v = 0; v < geo.order; ++v)
        for (int c : t.children[v]) geo.parent[c] = v;
    auto size = subtree_sizes(t);
    geo.dsum.assign(geo.order, 0);
    long long alpha = 0;
    for (int v = 0; v < geo.order; ++v) alpha += geo.depth[v];
    geo.dsum[0] = alpha;
    std::vector<int> order_by_depth(geo.order);
    for (int v = 0; v < geo.order; ++v) order_by_depth[v] = v;
    std::sort(order_by_depth.begin(), order_by_depth.end(),
              [&](int a, int b) { return geo.depth[a] < geo.depth[b]; });
    for (int v : order_by_depth)
        if (v != 0) geo.dsum[v] = geo.dsum[geo.parent[v]] + geo.order - 2LL * size[v];
    return cache.emplace(code, std::move(geo)).first->second;
}

}  // namespace

CentroidClass centroid_class_by_decomposition(const UnicyclicGraph& g) {
    int gm = g.girth;
    std::vector<long long> m(gm), alpha(gm);
    long long n = 0;
    for (int p = 0; p < gm; ++p) {
        const auto& st = code_stats(g.branch_codes[p]);
        m[p] = st.order;
        alpha[p] = st.alpha;
        n += st.order;
    }
    std::vector<long long> S(gm, 0);
    for (int p = 0; p < gm; ++p)
        for (int q = 0; q < gm; ++q)
            if (q != p) S[p] += cyclic_distance(gm, p, q) * m[q] + alpha[q];

    long long best = -1;
    std::vector<std::pair<int, int>> mins;  // (position, local vertex)
    for (int p = 0; p < gm; ++p) {
        const auto& geo = branch_geometry(g.branch_codes[p]);
        for (int v = 0; v < geo.order; ++v) {
            long long dv = geo.dsum[v] + static_cast<long long>(geo.depth[v]) * (n - m[p]) + S[p];
            if (best < 0 || dv < best) {
                best = dv;
                mins.clear();
            }
            if (dv == best) mins.push_back({p, v});
        }
    }

    if (mins.size() == 1) return CentroidClass::K1;
    if (mins.size() == 2) {
        auto [pa, va] = mins[0];
        auto [pb, vb] = mins[1];
        if (pa == pb) {
            const auto& geo = branch_geometry(g.branch_codes[pa]);
            if (geo.parent[va] == vb || geo.parent[vb] == va) return CentroidClass::K2;
        } else if (va == 0 && vb == 0 && cyclic_distance(gm, pa, pb) == 1) {
            return CentroidClass::K2;
        }
    }
    bool all_roots = true;
    for (auto [p, v] : mins)
        if (v != 0) all_roots = false;
    return all_roots ? CentroidClass::CycleSubset : CentroidClass::Irregular;
}

namespace {
constexpr std::size_t kWitnessCap = 10;
}  // namespace

std::vector<CheckOutcome> check_theorems(const Degrees& degs, int girth,
                                         const EnumerationReport& report,
                                         const OracleOptions& opts) {
    std::vector<CheckOutcome> out;

    CheckOutcome chains;
    chains.id = "size-degree-chains";
    CheckOutcome removal;
    removal.id = "removal-edge-minimal";
    for (const std::string& canon : report.minimizers) {
        UnicyclicGraph g = from_canonical(canon);
        auto anchors = chain_anchorings(g);
        ++chains.tested;
        if (anchors.empty()) {
            if (chains.violations.size() < kWitnessCap) chains.violations.push_back(canon);
            continue;
        }
        ++removal.tested;
        std::vector<std::int64_t> wall(girth);
        std::int64_t wmin = 0;
        for (int e = 0; e < girth; ++e) {
            wall[e] = tree_wiener_edge_form(remove_cycle_edge(g, {e, (e + 1) % girth}));
            if (e == 0 || wall[e] < wmin) wmin = wall[e];
        }
        auto designated = designated_removal_edge(girth);
        bool attained = false;
        for (auto [s, r] : anchors) {
            int a = r ? ((s - designated.first) % girth + girth) % girth
                      : (s + designated.first) % girth;
            int b = r ? ((s - designated.second) % girth + girth) % girth
                      : (s + designated.second) % girth;
            int e = (a + 1) % girth == b ? a : b;
            if (wall[e] == wmin) {
                attained = true;
                break;
            }
        }
        if (!attained && removal.violations.size() < kWitnessCap)
            removal.violations.push_back(canon);
    }
    out.push_back(std::move(chains));
    out.push_back(std::move(removal));

    CheckOutcome centroid_check;
    centroid_check.id = "centroid-structure";
    enumerate_unicyclic(degs, girth, opts, [&](const UnicyclicGraph& g) {
        ++centroid_check.tested;
        if (centroid_class_by_decomposition(g) == CentroidClass::Irregular &&
            centroid_check.violations.size() < kWitnessCap)
            centroid_check.violations.push_back(canonical_form(g));
    });
    out.push_back(std::move(centroid_check));

    CheckOutcome best3;
    best3.id = "min-of-three";
    best3.tested = 1;
    auto best = best_candidates(degs, girth);
    std::int64_t cand = best.empty() ? -1 : best.front().wiener;
    if (cand != report.min_wiener)
        best3.violations.push_back("best candidate " + std::to_string(cand) +
                                   " vs exhaustive " + std::to_string(report.min_wiener));
    out.push_back(std::move(best3));
    return out;
}

ConjectureTable explore_conjecture(const Degrees& degs, int girth_lo, int girth_hi,
                                   bool with_oracle, const OracleOptions& opts) {
    ConjectureTable table;
    Degrees d = degs;
    std::sort(d.begin(), d.end(), std::greater<>());
    table.degrees = d;

    int t = internal_count(d);
    if (girth_lo < 3) girth_lo = 3;
    if (girth_hi <= 0) girth_hi = t;

    int largest_feasible = -1;
    for (int girth = girth_lo; girth <= girth_hi; ++girth) {
        ConjectureRow row;
        row.girth = girth;
        auto v = validate_unicyclic(d, girth);
        if (!v.ok) {
            row.note = v.failures.front();
            table.rows.push_back(std::move(row));
            continue;
        }
        row.feasible = true;
        largest_feasible = girth;
        for (const auto& c : all_candidates(d, girth)) {
            if (!c.applicable) continue;
            row.candidates.push_back({kind_name(c.kind), c.wiener});
            if (row.best_candidate_wiener < 0 || c.wiener < row.best_candidate_wiener)
                row.best_candidate_wiener = c.wiener;
        }
        if (with_oracle) {
            OracleOptions o = opts;
            o.collect_minimizers = false;
            EnumerationReport rep = exhaustive_minimum(d, girth, o);
            row.oracle_ran = true;
            row.oracle_exhaustive = rep.exhaustive;
            row.oracle_min = rep.min_wiener;
            row.oracle_count = rep.count;
        }
        table.rows.push_back(std::move(row));
    }

    for (const auto& row : table.rows) {
        if (!row.feasible || row.best_candidate_wiener < 0) continue;
        if (table.min_value < 0 || row.best_candidate_wiener < table.min_value) {
            table.min_value = row.best_candidate_wiener;
            table.argmin_girths.clear();
        }
        if (row.best_candidate_wiener == table.min_value)
            table.argmin_girths.push_back(row.girth);
    }

    table.conjecture = conjectured_gamma_star(d);
    if (table.conjecture.hypothesis_ok) {
        table.agreement =
            std::find(table.argmin_girths.begin(), table.argmin_girths.end(),
                      table.conjecture.gamma_star) != table.argmin_girths.end();
    }
    table.largest_girth_attains_min =
        largest_feasible > 0 &&
        std::find(table.argmin_girths.begin(), table.argmin_girths.end(),
                  largest_feasible) != table.argmin_girths.end();
    return table;
}

namespace {

std::string rooted_code_at(const Adjacency& adj, int root, int from) {
    std::vector<std::string> parts;
    for (int u : adj[root])
        if (u != from) parts.push_back(rooted_code_at(adj, u, root));
    std::sort(parts.begin(), parts.end(), std::greater<>());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    out += ')';
    return out;
}

}  // namespace

std::vector<std::string> all_rooted_codes(int order) {
    if (order < 1) return {};
    static std::mutex mtx;
    static std::vector<std::vector<std::string>> by_order{{}, {"()"}};

    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<int>(by_order.size()) <= order) {
        int n = static_cast<int>(by_order.size());
        std::vector<std::pair<std::string, int>> opts;  // (code, order), code desc
        for (int k = 1; k < n; ++k)
            for (const auto& c : by_order[k]) opts.push_back({c, k});
        std::sort(opts.begin(), opts.end(), std::greater<>());
        std::vector<std::string> codes;
        std::string acc = "(";
        // Child codes picked at non-decreasing index, hence non-increasing.
        std::function<void(int, std::size_t)> forest = [&](int left, std::size_t start) {
            if (left == 0) {
                codes.push_back(acc + ")");
                return;
            }
            for (std::size_t i = start; i < opts.size(); ++i) {
                if (opts[i].second > left) continue;
                std::size_t len = acc.size();
                acc += opts[i].first;
                forest(left - opts[i].second, i);
                acc.resize(len);
            }
        };
        forest(n - 1, 0);
        std::sort(codes.begin(), codes.end());
        by_order.push_back(std::move(codes));
    }
    return by_order[order];
}

std::string free_canonical_code(const RootedTree& t) {
    Adjacency adj = tree_adjacency(t);
    int n = t.order();
    if (n == 1) return "()";

    // Tree centroid: vertices minimizing the largest component after removal.
    std::vector<int> size = subtree_sizes(t);
    std::vector<int> parent(n, -1);
    for (int v = 0; v < n; ++v)
        for (int c : t.children[v]) parent[c] = v;
    int best = -1;
    std::vector<int> centroids;
    for (int v = 0; v < n; ++v) {
        int mx = n - size[v];
        for (int c : t.children[v]) mx = std::max(mx, size[c]);
        if (best < 0 || mx < best) {
            best = mx;
            centroids.clear();
        }
        if (mx == best) centroids.push_back(v);
    }
    std::string code = rooted_code_at(adj, centroids[0], -1);
    for (std::size_t i = 1; i < centroids.size(); ++i)
        code = std::min(code, rooted_code_at(adj, centroids[i], -1));
    return code;
}

std::vector<std::string> all_free_trees(int order) {
    std::vector<std::string> out;
    for (const auto& rooted : all_rooted_codes(order)) {
        std::string f = free_canonical_code(tree_from_code(rooted));
        if (f == rooted) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wiener
