// Tree decompositions: validation, construction from elimination orders
// (min-fill heuristic and an exact solver for tiny graphs), the nice normal
// form, the per-node star assignment of edges, and bag-respecting coloring.
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "boxrep/graph.hpp"

namespace boxrep {

struct TreeDecomposition {
    Graph tree;                       // nodes of the decomposition
    std::vector<std::set<int>> bags;  // one bag per node
    int width = -1;                   // max bag size minus one
};

struct TdReport {
    bool valid = false;
    std::string reason;
};

inline TdReport validate_td(const Graph& g, const TreeDecomposition& t) {
    auto fail = [](std::string r) { return TdReport{false, std::move(r)}; };
    if (static_cast<int>(t.bags.size()) != t.tree.n)
        return fail("bag count differs from node count");
    if (t.tree.n == 0) {
        if (g.n > 0) return fail("no nodes but the graph has vertices");
        return t.width == -1 ? TdReport{true, ""} : fail("width field disagrees with the bags");
    }
    if (t.tree.m() != t.tree.n - 1 || !is_connected(t.tree))
        return fail("decomposition graph is not a tree");
    int w = -1;
    for (auto& b : t.bags) {
        for (int v : b)
            if (v < 0 || v >= g.n) return fail("bag holds an out-of-range vertex");
        w = std::max(w, static_cast<int>(b.size()) - 1);
    }
    if (w != t.width) return fail("width field disagrees with the bags");
    auto adj = t.tree.adjacency();
    for (int v = 0; v < g.n; ++v) {
        std::set<int> in;
        for (int mu = 0; mu < t.tree.n; ++mu)
            if (t.bags[mu].count(v)) in.insert(mu);
        if (in.empty()) return fail("vertex " + std::to_string(v) + " is in no bag");
        std::set<int> seen = {*in.begin()};
        std::vector<int> stack = {*in.begin()};
        while (!stack.empty()) {
            int mu = stack.back();
            stack.pop_back();
            for (int nu : adj[mu])
                if (in.count(nu) && seen.insert(nu).second) stack.push_back(nu);
        }
        if (seen.size() != in.size())
            return fail("vertex " + std::to_string(v) + " does not span a connected subtree");
    }
    for (auto [u, v] : g.edges) {
        bool covered = false;
        for (auto& b : t.bags)
            if (b.count(u) && b.count(v)) {
                covered = true;
                break;
            }
        if (!covered)
            return fail("edge " + std::to_string(u) + "-" + std::to_string(v) +
                        " is inside no bag");
    }
    return {true, ""};
}

namespace detail {

// Decomposition induced by an elimination order: node i holds the bag of
// order[i] at its elimination, wired to the node of its next-removed fill
// neighbor. Isolated bags chain to the next node to keep the tree connected.
inline TreeDecomposition td_from_order(const Graph& g, const std::vector<int>& order) {
    int n = g.n;
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    TreeDecomposition t;
    t.tree.n = n;
    t.bags.assign(n, {});
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        t.bags[i].insert(v);
        for (int w : adj[v]) t.bags[i].insert(w);
        t.width = std::max(t.width, static_cast<int>(t.bags[i].size()) - 1);
        if (adj[v].empty()) {
            if (i + 1 < n) t.tree.add_edge(i, i + 1);
        } else {
            int next = *std::min_element(adj[v].begin(), adj[v].end(),
                                         [&](int a, int b) { return pos[a] < pos[b]; });
            t.tree.add_edge(i, pos[next]);
        }
        for (int a : adj[v])
            for (int b : adj[v])
                if (a < b) {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
        for (int w : adj[v]) adj[w].erase(v);
        adj[v].clear();
    }
    return t;
}

}  // namespace detail

// Min-fill elimination ordering; ties go to the smallest vertex id.
inline TreeDecomposition td_heuristic(const Graph& g) {
    int n = g.n;
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<bool> gone(n, false);
    std::vector<int> order;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long long best_fill = 0;
        for (int v = 0; v < n; ++v) {
            if (gone[v]) continue;
            long long fill = 0;
            for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
                for (auto b = std::next(a); b != adj[v].end(); ++b)
                    if (!adj[*a].count(*b)) ++fill;
            if (best == -1 || fill < best_fill) {
                best = v;
                best_fill = fill;
            }
        }
        order.push_back(best);
        gone[best] = true;
        for (int a : adj[best])
            for (int b : adj[best])
                if (a < b) {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
        for (int w : adj[best]) adj[w].erase(best);
        adj[best].clear();
    }
    return detail::td_from_order(g, order);
}

// Exact minimum width via dynamic programming over vertex subsets: f(S) is
// the best width achievable eliminating exactly S first, and the cost of
// removing v after S counts the vertices outside S reachable from v through S.
inline TreeDecomposition td_exact_small(const Graph& g) {
    int n = g.n;
    if (n > 10) throw error("exact decomposition is capped at 10 vertices");
    if (n == 0) return {};
    std::vector<unsigned> nb(n, 0);
    for (auto [u, v] : g.edges) {
        nb[u] |= 1u << v;
        nb[v] |= 1u << u;
    }
    const int full = (1 << n) - 1;
    auto back_degree = [&](int S, int v) {
        unsigned comp = 1u << v, outside = 0;
        std::vector<int> stack = {v};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (!((nb[u] >> w) & 1u)) continue;
                unsigned bit = 1u << w;
                if ((S >> w) & 1) {
                    if (!(comp & bit)) {
                        comp |= bit;
                        stack.push_back(w);
                    }
                } else if (w != v) {
                    outside |= bit;
                }
            }
        }
        return std::popcount(outside);
    };
    std::vector<int> f(full + 1, 0);
    f[0] = -1;
    for (int S = 1; S <= full; ++S) {
        f[S] = n;
        for (int v = 0; v < n; ++v)
            if ((S >> v) & 1)
                f[S] = std::min(f[S],
                                std::max(f[S ^ (1 << v)], back_degree(S ^ (1 << v), v)));
    }
    std::vector<int> rev;
    int S = full;
    while (S) {
        bool found = false;
        for (int v = 0; v < n && !found; ++v)
            if (((S >> v) & 1) &&
                std::max(f[S ^ (1 << v)], back_degree(S ^ (1 << v), v)) == f[S]) {
                rev.push_back(v);
                S ^= 1 << v;
                found = true;
            }
        if (!found) throw error("internal: subset table is inconsistent");
    }
    std::vector<int> order(rev.rbegin(), rev.rend());
    auto t = detail::td_from_order(g, order);
    if (t.width != f[full]) throw error("internal: optimal width mismatch");
    return t;
}

enum class NodeKind : std::uint8_t { leaf, forget, introduce, join };

struct NiceTreeDecomposition {
    std::vector<NodeKind> kind;
    std::vector<std::array<int, 2>> kids;  // -1 when absent; joins use both
    std::vector<std::set<int>> bags;
    int root = -1;
    int width = -1;

    int nodes() const { return static_cast<int>(bags.size()); }
};

// The vertex a leaf holds, an introduce adds, or a forget drops.
inline int changed_vertex(const NiceTreeDecomposition& t, int node) {
    const auto& bag = t.bags[node];
    if (t.kind[node] == NodeKind::leaf) return *bag.begin();
    if (t.kind[node] == NodeKind::join) throw error("join nodes change no vertex");
    const auto& child = t.bags[t.kids[node][0]];
    const auto& big = t.kind[node] == NodeKind::forget ? child : bag;
    const auto& small = t.kind[node] == NodeKind::forget ? bag : child;
    for (int v : big)
        if (!small.count(v)) return v;
    throw error("internal: degenerate nice node");
}

inline TdReport validate_nice(const NiceTreeDecomposition& t) {
    auto fail = [](std::string r) { return TdReport{false, std::move(r)}; };
    int N = t.nodes();
    if (N == 0) return fail("no nodes");
    if (static_cast<int>(t.kind.size()) != N || static_cast<int>(t.kids.size()) != N)
        return fail("malformed node arrays");
    if (t.root < 0 || t.root >= N) return fail("root out of range");
    std::vector<int> seen(N, 0), parent(N, -1), stack = {t.root};
    int reached = 0;
    while (!stack.empty()) {
        int mu = stack.back();
        stack.pop_back();
        if (seen[mu]++) return fail("node reached twice");
        ++reached;
        for (int c : t.kids[mu])
            if (c != -1) {
                if (c < 0 || c >= N) return fail("child index out of range");
                parent[c] = mu;
                stack.push_back(c);
            }
    }
    if (reached != N) return fail("unreachable nodes");
    int w = -1;
    for (int mu = 0; mu < N; ++mu) {
        int a = t.kids[mu][0], b = t.kids[mu][1];
        const auto& bag = t.bags[mu];
        w = std::max(w, static_cast<int>(bag.size()) - 1);
        switch (t.kind[mu]) {
            case NodeKind::leaf:
                if (a != -1 || b != -1) return fail("leaf with children");
                if (bag.size() != 1) return fail("leaf bag is not a single vertex");
                break;
            case NodeKind::forget: {
                if (a == -1 || b != -1) return fail("forget needs exactly one child");
                const auto& cb = t.bags[a];
                if (cb.size() != bag.size() + 1 ||
                    !std::includes(cb.begin(), cb.end(), bag.begin(), bag.end()))
                    return fail("forget bag is not the child bag minus one vertex");
                break;
            }
            case NodeKind::introduce: {
                if (a == -1 || b != -1) return fail("introduce needs exactly one child");
                const auto& cb = t.bags[a];
                if (bag.size() != cb.size() + 1 ||
                    !std::includes(bag.begin(), bag.end(), cb.begin(), cb.end()))
                    return fail("introduce bag is not the child bag plus one vertex");
                break;
            }
            case NodeKind::join:
                if (a == -1 || b == -1) return fail("join needs two children");
                if (t.bags[a] != bag || t.bags[b] != bag) return fail("join bags differ");
                break;
        }
    }
    if (w != t.width) return fail("width field disagrees with the bags");
    std::map<int, std::set<int>> holders;
    for (int mu = 0; mu < N; ++mu)
        for (int v : t.bags[mu]) holders[v].insert(mu);
    for (auto& [v, in] : holders) {
        int tops = 0;
        for (int mu : in)
            if (mu == t.root || !in.count(parent[mu])) ++tops;
        if (tops != 1)
            return fail("vertex " + std::to_string(v) + " appears in a disconnected set of bags");
    }
    return {true, ""};
}

// Normal form: contract nested neighboring bags, root at a bag holding
// vertex 0, then grow each bag from a single-vertex leaf, adapt child bags
// by forget/introduce chains, and binarize branching with joins.
inline NiceTreeDecomposition to_nice(const TreeDecomposition& t) {
    int N = t.tree.n;
    std::set<int> verts;
    for (auto& b : t.bags) verts.insert(b.begin(), b.end());
    if (N == 0 || verts.empty()) throw error("cannot normalize an empty decomposition");
    if (static_cast<int>(t.bags.size()) != N || t.tree.m() != N - 1 || !is_connected(t.tree))
        throw error("input is not a tree decomposition");
    std::vector<std::set<int>> adj(N);
    for (auto [a, b] : t.tree.edges) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    std::vector<std::set<int>> bag(t.bags);
    std::vector<bool> alive(N, true);
    auto merge_into = [&](int dead, int keep) {
        for (int x : adj[dead]) {
            adj[x].erase(dead);
            if (x != keep) {
                adj[x].insert(keep);
                adj[keep].insert(x);
            }
        }
        adj[dead].clear();
        alive[dead] = false;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int mu = 0; mu < N && !changed; ++mu) {
            if (!alive[mu]) continue;
            int dead = -1, keep = -1;
            for (int nu : adj[mu]) {
                if (std::includes(bag[nu].begin(), bag[nu].end(), bag[mu].begin(),
                                  bag[mu].end())) {
                    dead = mu;
                    keep = nu;
                } else if (std::includes(bag[mu].begin(), bag[mu].end(), bag[nu].begin(),
                                         bag[nu].end())) {
                    dead = nu;
                    keep = mu;
                }
                if (dead != -1) break;
            }
            if (dead != -1) {
                merge_into(dead, keep);
                changed = true;
            }
        }
    }
    int root_in = -1;
    for (int mu = 0; mu < N && root_in == -1; ++mu)
        if (alive[mu] && bag[mu].count(0)) root_in = mu;
    for (int mu = 0; mu < N && root_in == -1; ++mu)
        if (alive[mu]) root_in = mu;

    NiceTreeDecomposition out;
    auto add = [&](NodeKind k, std::array<int, 2> kids, std::set<int> b) {
        out.kind.push_back(k);
        out.kids.push_back(kids);
        out.bags.push_back(std::move(b));
        return static_cast<int>(out.bags.size()) - 1;
    };
    std::function<int(int, int)> grow = [&](int mu, int up) -> int {
        std::vector<int> tops;
        for (int c : adj[mu]) {
            if (c == up) continue;
            int top = grow(c, mu);
            std::set<int> cur = bag[c];
            for (int v : bag[c])
                if (!bag[mu].count(v)) {
                    cur.erase(v);
                    top = add(NodeKind::forget, {top, -1}, cur);
                }
            for (int v : bag[mu])
                if (!cur.count(v)) {
                    cur.insert(v);
                    top = add(NodeKind::introduce, {top, -1}, cur);
                }
            tops.push_back(top);
        }
        if (tops.empty()) {
            auto it = bag[mu].begin();
            std::set<int> cur = {*it};
            int top = add(NodeKind::leaf, {-1, -1}, cur);
            for (++it; it != bag[mu].end(); ++it) {
                cur.insert(*it);
                top = add(NodeKind::introduce, {top, -1}, cur);
            }
            return top;
        }
        int acc = tops[0];
        for (std::size_t i = 1; i < tops.size(); ++i)
            acc = add(NodeKind::join, {acc, tops[i]}, bag[mu]);
        return acc;
    };
    out.root = grow(root_in, -1);
    int iw = -1;
    for (auto& b : t.bags) iw = std::max(iw, static_cast<int>(b.size()) - 1);
    for (auto& b : out.bags) out.width = std::max(out.width, static_cast<int>(b.size()) - 1);
    if (out.width != iw) throw error("internal: normal form changed the width");
    if (out.nodes() > 4 * static_cast<int>(verts.size()) * (out.width + 2))
        throw error("internal: normal form exceeded the linear size bound");
    auto rep = validate_nice(out);
    if (!rep.valid) throw error("internal: normal form failed validation: " + rep.reason);
    return out;
}

struct StarMap {
    std::map<Edge, int> assignment;  // edge -> node whose bag holds both ends
    std::map<int, int> center;       // node -> shared endpoint of its edges
};

// Bottom-up pass: an introduce node takes every not-yet-assigned edge between
// the new vertex and its bag, so each node's edges share that vertex.
inline StarMap star_map(const NiceTreeDecomposition& t, const Graph& g) {
    auto rep = validate_nice(t);
    if (!rep.valid) throw error("invalid decomposition: " + rep.reason);
    for (auto& b : t.bags)
        for (int v : b)
            if (v < 0 || v >= g.n) throw error("bag holds an out-of-range vertex");
    std::vector<int> post;
    std::vector<std::pair<int, bool>> stack = {{t.root, false}};
    while (!stack.empty()) {
        auto [mu, done] = stack.back();
        stack.pop_back();
        if (done) {
            post.push_back(mu);
            continue;
        }
        stack.push_back({mu, true});
        if (t.kids[mu][1] != -1) stack.push_back({t.kids[mu][1], false});
        if (t.kids[mu][0] != -1) stack.push_back({t.kids[mu][0], false});
    }
    StarMap sm;
    for (int mu : post) {
        if (t.kind[mu] != NodeKind::introduce) continue;
        int u = changed_vertex(t, mu);
        for (int w : t.bags[mu]) {
            if (w == u || !g.has_edge(u, w)) continue;
            Edge e = make_edge(u, w);
            if (sm.assignment.count(e)) continue;
            sm.assignment[e] = mu;
            sm.center[mu] = u;
        }
    }
    if (static_cast<int>(sm.assignment.size()) != g.m())
        throw error("decomposition does not cover every edge");
    return sm;
}

struct BagColoring {
    std::map<int, int> color;  // vertex -> 1..k
    int k = 0;
};

// Each vertex has a unique highest node (bags holding it form one subtree),
// so a top-down walk fixes its color exactly once: seed the root bag, then
// color the vertex surfacing below every forget node with the smallest color
// free in the child bag. Every bag along the walk stays fully colored, which
// keeps the palette at width + 1.
inline BagColoring bag_coloring(const NiceTreeDecomposition& t) {
    auto rep = validate_nice(t);
    if (!rep.valid) throw error("invalid decomposition: " + rep.reason);
    BagColoring out;
    out.k = t.width + 1;
    auto give = [&](int v, const std::set<int>& mates) {
        std::set<int> used;
        for (int w : mates)
            if (w != v && out.color.count(w)) used.insert(out.color[w]);
        for (int c = 1;; ++c)
            if (!used.count(c)) {
                out.color[v] = c;
                return;
            }
    };
    for (int v : t.bags[t.root]) give(v, t.bags[t.root]);
    std::vector<int> stack = {t.root};
    while (!stack.empty()) {
        int mu = stack.back();
        stack.pop_back();
        if (t.kind[mu] == NodeKind::forget) {
            int v = changed_vertex(t, mu);
            if (!out.color.count(v)) give(v, t.bags[t.kids[mu][0]]);
        }
        for (int c : t.kids[mu])
            if (c != -1) stack.push_back(c);
    }
    for (auto& b : t.bags) {
        std::set<int> cs;
        for (int v : b) {
            auto it = out.color.find(v);
            if (it == out.color.end()) throw error("internal: a vertex was never colored");
            if (it->second > out.k) throw error("internal: coloring spilled past the palette");
            cs.insert(it->second);
        }
        if (cs.size() != b.size()) throw error("internal: a bag repeats a color");
    }
    return out;
}

}  // namespace boxrep
