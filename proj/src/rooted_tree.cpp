#include "wiener/rooted_tree.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "wiener/errors.hpp"

namespace wiener {

std::vector<std::vector<int>> tree_adjacency(const RootedTree& t) {
    std::vector<std::vector<int>> adj(t.children.size());
    for (std::size_t v = 0; v < t.children.size(); ++v) {
        for (int c : t.children[v]) {
            adj[v].push_back(c);
            adj[c].push_back(static_cast<int>(v));
        }
    }
    return adj;
}

std::vector<int> subtree_sizes(const RootedTree& t) {
    int n = t.order();
    std::vector<int> size(n, 1), order;
    order.reserve(n);
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int c : t.children[v]) stack.push_back(c);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        for (int c : t.children[*it]) size[*it] += size[c];
    return size;
}

std::vector<int> vertex_depths(const RootedTree& t) {
    std::vector<int> dep(t.order(), 0);
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int c : t.children[v]) {
            dep[c] = dep[v] + 1;
            stack.push_back(c);
        }
    }
    return dep;
}

int tree_height(const RootedTree& t) {
    auto dep = vertex_depths(t);
    return *std::max_element(dep.begin(), dep.end());
}

namespace {

RootedTree greedy_fill(const Degrees& d) {
    int n = static_cast<int>(d.size());
    if (sum_of(d) != 2LL * (n - 1))
        throw std::invalid_argument("not a tree degree sequence: sum " +
                                    std::to_string(sum_of(d)) + " != 2(n-1)");
    RootedTree t;
    t.children.assign(n, {});
    std::deque<int> q{0};
    int nxt = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        int slots = d[v] - (v == 0 ? 0 : 1);
        for (int s = 0; s < slots; ++s) {
            internal_check(nxt < n, "greedy tree ran past its vertex count");
            t.children[v].push_back(nxt);
            q.push_back(nxt);
            ++nxt;
        }
    }
    internal_check(nxt == n, "greedy tree left vertices unplaced");
    return t;
}

}  // namespace

RootedTree greedy_tree(Degrees degs) {
    std::sort(degs.begin(), degs.end(), std::greater<>());
    return greedy_fill(degs);
}

RootedTree greedy_tree_forced_root(Degrees degs) {
    if (degs.empty()) throw std::invalid_argument("empty degree sequence");
    std::sort(degs.begin() + 1, degs.end(), std::greater<>());
    return greedy_fill(degs);
}

std::string subtree_code(const RootedTree& t, int v) {
    std::vector<std::string> childs;
    childs.reserve(t.children[v].size());
    for (int c : t.children[v]) childs.push_back(subtree_code(t, c));
    std::sort(childs.begin(), childs.end(), std::greater<>());
    std::string out = "(";
    for (const auto& s : childs) out += s;
    out += ')';
    return out;
}

std::string tree_code(const RootedTree& t) { return subtree_code(t, 0); }

RootedTree tree_from_code(const std::string& code) {
    RootedTree t;
    std::vector<int> stack;
    for (char c : code) {
        if (c == '(') {
            int v = static_cast<int>(t.children.size());
            t.children.emplace_back();
            if (!stack.empty()) t.children[stack.back()].push_back(v);
            stack.push_back(v);
        } else if (c == ')') {
            if (stack.empty()) throw std::invalid_argument("unbalanced code '" + code + "'");
            stack.pop_back();
        } else {
            throw std::invalid_argument("bad character in code '" + code + "'");
        }
    }
    if (!stack.empty() || t.children.empty() ||
        static_cast<std::size_t>(2 * t.children.size()) != code.size())
        throw std::invalid_argument("malformed code '" + code + "'");
    return t;
}

const CodeStats& code_stats(const std::string& code) {
    thread_local std::unordered_map<std::string, CodeStats> cache;
    auto it = cache.find(code);
    if (it != cache.end()) return it->second;

    // One pass over the parentheses; each ')' folds a finished subtree into
    // its parent. Cross pairs between part A (root included) and a new child
    // subtree S sit at distance depth_A(u) + 1 + depth_S(v).
    std::vector<CodeStats> stack;
    CodeStats done;
    for (char c : code) {
        if (c == '(') {
            stack.push_back(CodeStats{1, 0, 0});
        } else {
            internal_check(!stack.empty(), "unbalanced code in code_stats");
            CodeStats s = stack.back();
            stack.pop_back();
            if (stack.empty()) {
                done = s;
            } else {
                CodeStats& a = stack.back();
                a.wiener += s.wiener + s.alpha * a.order + s.order * a.order + a.alpha * s.order;
                a.alpha += s.alpha + s.order;
                a.order += s.order;
            }
        }
    }
    internal_check(stack.empty() && done.order > 0, "malformed code in code_stats");
    return cache.emplace(code, done).first->second;
}

}  // namespace wiener
