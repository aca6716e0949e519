// The three drawing engines: heavy-path layouts for trees, an st-sweep for
// planar embeddings of max degree 4, and a diagonal lane router that allows
// transversal crossings. All engines self-audit their output.
#pragma once

#include <algorithm>
#include <array>
#include <iterator>
#include <list>
#include <string>

#include "boxrep/embedding.hpp"
#include "boxrep/ortho.hpp"

namespace boxrep {

struct TreeLayout {
    Graph tree;  // the tree actually drawn: input after degree reduction
    OrthoDrawing drawing;
    MinorRecipe recipe;  // contracts the drawn tree back onto the input
};

namespace detail {

inline std::vector<Cell> simplify_polyline(std::vector<Cell> pts) {
    std::vector<Cell> out;
    for (const Cell& p : pts) {
        while (out.size() >= 2) {
            const Cell& a = out[out.size() - 2];
            const Cell& b = out.back();
            bool same_line = (a.x == b.x && b.x == p.x && a.y == b.y && b.y == p.y) ||
                             (a.x == b.x && b.x == p.x && a.z == b.z && b.z == p.z) ||
                             (a.y == b.y && b.y == p.y && a.z == b.z && b.z == p.z);
            bool forward = (b.x - a.x) * (p.x - b.x) >= 0 && (b.y - a.y) * (p.y - b.y) >= 0 &&
                           (b.z - a.z) * (p.z - b.z) >= 0;
            if (same_line && forward)
                out.pop_back();
            else
                break;
        }
        if (out.empty() || !(out.back() == p)) out.push_back(p);
    }
    return out;
}

// Deletes every grid line that carries no vertex and no polyline corner,
// shrinking the runs that merely pass through it.
inline void compact_drawing(OrthoDrawing& d) {
    std::set<int> xs, ys;
    for (auto& [v, p] : d.pos) {
        xs.insert(p.x);
        ys.insert(p.y);
    }
    for (auto& [e, poly] : d.routes)
        for (const Cell& p : poly) {
            xs.insert(p.x);
            ys.insert(p.y);
        }
    std::map<int, int> xm, ym;
    int c = 0;
    for (int x : xs) xm[x] = c++;
    c = 0;
    for (int y : ys) ym[y] = c++;
    for (auto& [v, p] : d.pos) p = {xm.at(p.x), ym.at(p.y), p.z};
    for (auto& [e, poly] : d.routes)
        for (Cell& p : poly) p = {xm.at(p.x), ym.at(p.y), p.z};
}

}  // namespace detail

// Angular counter-clockwise order (E, N, W, S) of the neighbors around a
// vertex of a 2D drawing, read off the first route segments.
inline std::vector<int> drawn_neighbors_ccw(const OrthoDrawing& d, int v) {
    std::array<int, 4> slot{-1, -1, -1, -1};
    for (auto& [e, poly] : d.routes) {
        if (e.first != v && e.second != v) continue;
        int other = e.first == v ? e.second : e.first;
        Cell a = e.first == v ? poly.front() : poly.back();
        Cell b = e.first == v ? poly[1] : poly[poly.size() - 2];
        int dx = (b.x > a.x) - (b.x < a.x), dy = (b.y > a.y) - (b.y < a.y);
        int idx = dx > 0 ? 0 : dy > 0 ? 1 : dx < 0 ? 2 : 3;
        if (slot[idx] != -1) throw error("two routes leave a vertex through one port");
        slot[idx] = other;
    }
    std::vector<int> out;
    for (int s : slot)
        if (s != -1) out.push_back(s);
    return out;
}

// ---------------------------------------------------------------------------
// layout_tree: heavy-path drawing. Rooted at a leaf, each node keeps its
// heaviest child on its own row and hangs the other child one row below, so
// every block lives in a quadrant and the total length telescopes to
// O(n log n). Degree > 4 is path-reduced first; the remaining degree-4
// vertices are split in two, with the recipe undoing both transforms.
// ---------------------------------------------------------------------------
inline TreeLayout layout_tree(const Graph& t) {
    if (t.n < 1 || !is_connected(t) || t.m() != t.n - 1) throw error("layout_tree expects a tree");
    TreeLayout out;
    Graph g = t;
    std::vector<Contraction> path_undo;
    {
        bool high = false;
        for (int d : g.degrees())
            if (d > 4) high = true;
        if (high) {
            PlaneEmbedding e;
            e.g = g;
            e.rotation = g.adjacency();
            e.outer = {0, e.rotation[0][0]};
            auto red = reduce_degree_path(e);
            g = red.e.g;
            path_undo = red.recipe.contractions;
        }
    }
    std::vector<Contraction> split_undo;
    for (int v = 0; v < g.n; ++v) {
        auto adj = g.adjacency();
        if ((int)adj[v].size() != 4) continue;
        int w = g.n++;
        for (int k : {2, 3}) {
            int nb = adj[v][k];
            g.edges.erase(make_edge(v, nb));
            g.add_edge(w, nb);
        }
        g.add_edge(v, w);
        split_undo.push_back({v, w, v});
    }
    out.tree = g;
    out.recipe.contractions = split_undo;
    out.recipe.contractions.insert(out.recipe.contractions.end(), path_undo.begin(),
                                   path_undo.end());

    OrthoDrawing& d = out.drawing;
    d.dim = 2;
    if (g.n == 1) {
        d.pos[0] = {0, 0, 0};
        return out;
    }
    auto adj = g.adjacency();
    int root = -1;
    for (int v = 0; v < g.n && root < 0; ++v)
        if (adj[v].size() == 1) root = v;

    std::vector<int> parent(g.n, -1), order;
    order.reserve(g.n);
    order.push_back(root);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int w : adj[order[i]])
            if (w != parent[order[i]]) {
                parent[w] = order[i];
                order.push_back(w);
            }
    std::vector<int> size(g.n, 1), heavy(g.n, -1), light(g.n, -1), width(g.n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::vector<int> kids;
        for (int w : adj[v])
            if (w != parent[v]) kids.push_back(w);
        if (kids.size() > 2) throw error("internal: split tree kept three children");
        for (int w : kids) size[v] += size[w];
        if (!kids.empty()) {
            heavy[v] = kids[0];
            if (kids.size() == 2 && (size[kids[1]] > size[kids[0]])) heavy[v] = kids[1];
            if (kids.size() == 2) light[v] = kids[0] == heavy[v] ? kids[1] : kids[0];
        }
        if (heavy[v] >= 0)
            width[v] = (light[v] >= 0 ? width[light[v]] + 1 : 1) + width[heavy[v]];
    }
    for (int v : order) {
        Cell at = v == root ? Cell{0, 0, 0} : d.pos[v];
        d.pos[v] = at;
        if (light[v] >= 0) {
            d.pos[light[v]] = {at.x, at.y - 1, 0};
            d.routes[make_edge(v, light[v])] = {at, {at.x, at.y - 1, 0}};
        }
        if (heavy[v] >= 0) {
            int dx = (light[v] >= 0 ? width[light[v]] + 1 : 1);
            d.pos[heavy[v]] = {at.x + dx, at.y, 0};
            d.routes[make_edge(v, heavy[v])] = {at, {at.x + dx, at.y, 0}};
        }
    }
    int minx = 0, miny = 0;
    for (auto& [v, p] : d.pos) {
        minx = std::min(minx, p.x);
        miny = std::min(miny, p.y);
    }
    for (auto& [v, p] : d.pos) p = {p.x - minx, p.y - miny, 0};
    for (auto& [e, poly] : d.routes) {
        for (Cell& p : poly) p = {p.x - minx, p.y - miny, 0};
        if (!(poly.front() == d.pos.at(e.first))) std::reverse(poly.begin(), poly.end());
    }
    validate_drawing(d);
    return out;
}

// ---------------------------------------------------------------------------
// layout_deg4_any: vertices on the diagonal, one reserved lane per port.
// Edges run from the smaller to the larger endpoint; the exit picks the first
// free port in [E, N, W, S] and the entry in [S, W, E, N] (entries of a
// vertex are all assigned before its exits, because edges sort by tail
// first). Every pairing has a fixed route shape with at most 4 bends, and
// distinct edges never share a lane, so only transversal crossings occur.
// ---------------------------------------------------------------------------
inline OrthoDrawing layout_deg4_any(const Graph& g) {
    for (int d : g.degrees())
        if (d > 4) throw error("layout_deg4_any needs max degree 4");
    constexpr int C = 4;
    OrthoDrawing out;
    out.dim = 2;
    out.crossings_allowed = true;
    if (g.n == 2 && g.edges.size() == 1) {
        out.pos[0] = {0, 0, 0};
        out.pos[1] = {C, 0, 0};
        out.routes[{0, 1}] = {{0, 0, 0}, {C, 0, 0}};
        validate_drawing(out);
        return out;
    }
    for (int v = 0; v < g.n; ++v) out.pos[v] = {C * v, C * v, 0};

    const Dir exit_pref[4] = {Dir::E, Dir::N, Dir::W, Dir::S};
    const Dir entry_pref[4] = {Dir::S, Dir::W, Dir::E, Dir::N};
    std::vector<std::set<Dir>> used(g.n);
    auto pick = [&](int v, const Dir* pref) {
        for (int k = 0; k < 4; ++k)
            if (!used[v].count(pref[k])) {
                used[v].insert(pref[k]);
                return pref[k];
            }
        throw error("internal: no free port");
    };
    for (Edge e : g.edges) {
        int i = e.first, j = e.second;
        Dir p = pick(i, exit_pref), q = pick(j, entry_pref);
        int X = C * i, Y = C * j;
        std::vector<Cell> poly = {{X, X, 0}};
        bool vertical_exit = (p == Dir::N || p == Dir::W);
        int lane_row = X, lane_col = X;  // exit lane: a row for E/S, a column for N/W
        if (p == Dir::S) {
            poly.push_back({X, X - 1, 0});
            lane_row = X - 1;
        } else if (p == Dir::W) {
            poly.push_back({X - 1, X, 0});
            lane_col = X - 1;
        }
        if (!vertical_exit) {
            // travel east on lane_row, then climb the entry column
            switch (q) {
                case Dir::S:
                    poly.push_back({Y, lane_row, 0});
                    break;
                case Dir::W:
                    poly.push_back({Y - 1, lane_row, 0});
                    poly.push_back({Y - 1, Y, 0});
                    break;
                case Dir::E:
                    poly.push_back({Y + 1, lane_row, 0});
                    poly.push_back({Y + 1, Y, 0});
                    break;
                case Dir::N:
                    poly.push_back({Y + 2, lane_row, 0});
                    poly.push_back({Y + 2, Y + 2, 0});
                    poly.push_back({Y, Y + 2, 0});
                    break;
            }
        } else {
            // climb on lane_col, then travel east on the entry row
            switch (q) {
                case Dir::S:
                    poly.push_back({lane_col, Y - 1, 0});
                    poly.push_back({Y, Y - 1, 0});
                    break;
                case Dir::W:
                    poly.push_back({lane_col, Y, 0});
                    break;
                case Dir::E:
                    poly.push_back({lane_col, Y + 1, 0});
                    poly.push_back({Y + 1, Y + 1, 0});
                    poly.push_back({Y + 1, Y, 0});
                    break;
                case Dir::N:
                    poly.push_back({lane_col, Y + 2, 0});
                    poly.push_back({Y, Y + 2, 0});
                    break;
            }
        }
        poly.push_back({Y, Y, 0});
        out.routes[e] = detail::simplify_polyline(poly);
    }
    validate_drawing(out);
    return out;
}

// ---------------------------------------------------------------------------
// layout_deg4_planar: bottom-up sweep over an st-order of the (augmented)
// embedding. Pending edges are vertical lanes in left-to-right frontier
// order; a vertex lands on the column of its spine in-lane, bends its other
// in-lanes in at its row, and opens its out-edges as new lanes. Works on
// 2-connected graphs; anything else is first made 2-connected by subdividing
// the two edges of a cut-vertex corner and bracing them with a chord, which
// touches no pre-existing vertex. Chord routes are dropped at the end and
// subdivided edges are re-joined.
// ---------------------------------------------------------------------------
namespace detail {

struct SweepWork {
    Graph g;
    std::vector<std::vector<int>> rot;
    std::map<Edge, Edge> origin;  // drawn edge -> input edge; chords absent
    DirEdge outer;
};

inline std::vector<int> cut_vertices(const Graph& g) {
    std::vector<int> cuts;
    if (g.n <= 2) return cuts;
    auto adj = g.adjacency();
    for (int v = 0; v < g.n; ++v) {
        std::vector<char> seen(g.n, 0);
        seen[v] = 1;
        int start = v == 0 ? 1 : 0;
        seen[start] = 1;
        std::vector<int> stack{start};
        int cnt = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
        }
        if (cnt < g.n - 1) cuts.push_back(v);
    }
    return cuts;
}

inline int subdivide_edge(SweepWork& w, int c, int z) {
    int m = w.g.n++;
    w.rot.push_back({c, z});
    w.g.edges.erase(make_edge(c, z));
    w.g.add_edge(c, m);
    w.g.add_edge(m, z);
    for (int& r : w.rot[c])
        if (r == z) r = m;
    for (int& r : w.rot[z])
        if (r == c) r = m;
    auto it = w.origin.find(make_edge(c, z));
    if (it != w.origin.end()) {
        Edge o = it->second;
        w.origin.erase(it);
        w.origin[make_edge(c, m)] = o;
        w.origin[make_edge(m, z)] = o;
    }
    if (w.outer == DirEdge{c, z}) w.outer = {m, z};
    if (w.outer == DirEdge{z, c}) w.outer = {z, m};
    return m;
}

inline Edge first_bridge(const Graph& g) {
    auto adj = g.adjacency();
    for (Edge e : g.edges) {
        std::vector<char> seen(g.n, 0);
        seen[e.first] = 1;
        std::vector<int> stack{e.first};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u]) {
                if (u == e.first && v == e.second) continue;
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
        if (!seen[e.second]) return e;
    }
    return {-1, -1};
}

inline int ccw_pred(const std::vector<int>& rot, int target) {
    for (std::size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == target) return rot[(i + rot.size() - 1) % rot.size()];
    throw error("internal: rotation misses a neighbor");
}

// A bridge can never be absorbed by bracing corners at one endpoint, so close
// a cycle across it: subdivide the face edges flanking the bridge and chord
// the two fresh vertices, giving the quad mx - u - v - my. A leaf endpoint has
// no flanking edge; it takes the chord itself, closing a triangle instead.
inline void absorb_bridge(SweepWork& w, Edge e) {
    int u = e.first, v = e.second;
    if (w.rot[u].size() == 1) std::swap(u, v);
    if (w.rot[v].size() == 1) {
        int y = ccw_pred(w.rot[u], v);
        int my = subdivide_edge(w, u, y);
        w.g.add_edge(v, my);
        w.rot[v].push_back(my);
        insert_ccw_before(w.rot[my], v, u);
        return;
    }
    int x = ccw_pred(w.rot[u], v);
    int y = ccw_pred(w.rot[v], u);
    int mx = subdivide_edge(w, u, x);
    int my = subdivide_edge(w, v, y);
    w.g.add_edge(mx, my);
    insert_ccw_before(w.rot[mx], my, u);
    insert_ccw_before(w.rot[my], mx, v);
}

inline void augment_biconnected(SweepWork& w) {
    const int bridge_limit = 2 * (w.g.n + (int)w.g.edges.size()) + 16;
    for (int round = 0;; ++round) {
        if (round > bridge_limit)
            throw error("internal: bridge absorption does not converge");
        Edge br = first_bridge(w.g);
        if (br.first < 0) break;
        absorb_bridge(w, br);
        validate_embedding({w.g, w.rot, w.outer});
    }
    const int brace_limit = 2 * (w.g.n + (int)w.g.edges.size()) + 16;
    for (int guard = 0;; ++guard) {
        if (guard > brace_limit)
            throw error("internal: augmentation does not converge");
        auto cuts = cut_vertices(w.g);
        if (cuts.empty()) return;
        int c = cuts.front();
        auto adj = w.g.adjacency();
        std::vector<int> label(w.g.n, -1);
        int nl = 0;
        for (int u = 0; u < w.g.n; ++u) {
            if (u == c || label[u] >= 0) continue;
            label[u] = nl;
            std::vector<int> stack{u};
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : adj[x])
                    if (y != c && label[y] < 0) {
                        label[y] = nl;
                        stack.push_back(y);
                    }
            }
            ++nl;
        }
        int d = (int)w.rot[c].size(), pick = -1;
        for (int i = 0; i < d && pick < 0; ++i)
            if (label[w.rot[c][i]] != label[w.rot[c][(i + 1) % d]]) pick = i;
        if (pick < 0) throw error("internal: cut vertex without a mixed corner");
        int y = w.rot[c][pick], x = w.rot[c][(pick + 1) % d];
        int mx = subdivide_edge(w, c, x);
        int my = subdivide_edge(w, c, y);
        // corner face walk runs x -> mx -> c -> my -> y; brace it inside
        w.g.add_edge(mx, my);
        insert_ccw_before(w.rot[mx], my, x);
        insert_ccw_before(w.rot[my], mx, c);
        validate_embedding({w.g, w.rot, w.outer});
    }
}

// Greedy open-ear st-order: every vertex except the poles ends up with both a
// lower and a higher neighbor.
inline std::vector<int> st_order(const Graph& g, int s, int t) {
    auto adj = g.adjacency();
    std::vector<int> par(g.n, -2);
    par[t] = -1;
    std::vector<int> queue{t};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int v : adj[u]) {
            if (u == t && v == s) continue;  // the pole edge itself is banned
            if (par[v] == -2) {
                par[v] = u;
                queue.push_back(v);
            }
        }
    }
    if (par[s] == -2) throw error("internal: poles not on a common cycle");
    std::vector<int> path;  // t .. s
    for (int v = s; v != -1; v = par[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    std::vector<int> seq;
    seq.push_back(s);
    for (int i = (int)path.size() - 2; i >= 1; --i) seq.push_back(path[i]);
    seq.push_back(t);

    std::vector<char> placed(g.n, 0);
    for (int v : seq) placed[v] = 1;
    while ((int)seq.size() < g.n) {
        int a = -1, u = -1;
        for (int v = 0; v < g.n && a < 0; ++v) {
            if (!placed[v]) continue;
            for (int w : adj[v])
                if (!placed[w]) {
                    a = v;
                    u = w;
                    break;
                }
        }
        if (a < 0) throw error("internal: graph not connected in st_order");
        // shortest unplaced path from u to any placed vertex other than a
        std::vector<int> epar(g.n, -2);
        epar[u] = -1;
        std::vector<int> eq{u};
        int b = -1;
        for (std::size_t qi = 0; qi < eq.size() && b < 0; ++qi) {
            int x = eq[qi];
            for (int y : adj[x]) {
                if (y == a || epar[y] != -2) continue;
                epar[y] = x;
                if (placed[y]) {
                    b = y;
                    break;
                }
                eq.push_back(y);
            }
        }
        if (b < 0) throw error("internal: no open ear found (graph not 2-connected)");
        std::vector<int> internals;  // from the u side, excluding b
        for (int v = epar[b]; v != -1; v = epar[v]) internals.push_back(v);
        std::reverse(internals.begin(), internals.end());  // now a-side first
        auto ia = std::find(seq.begin(), seq.end(), a) - seq.begin();
        auto ib = std::find(seq.begin(), seq.end(), b) - seq.begin();
        std::vector<int> batch = internals;
        std::size_t before = std::max(ia, ib);
        if (ib < ia) std::reverse(batch.begin(), batch.end());  // order from earlier endpoint
        seq.insert(seq.begin() + before, batch.begin(), batch.end());
        for (int v : batch) placed[v] = 1;
    }
    std::vector<int> st(g.n);
    for (int i = 0; i < g.n; ++i) st[seq[i]] = i;
    for (int v = 0; v < g.n; ++v) {
        bool lo = false, hi = false;
        for (int wv : adj[v]) {
            lo |= st[wv] < st[v];
            hi |= st[wv] > st[v];
        }
        if ((v != s && !lo) || (v != t && !hi)) throw error("internal: st-order invalid");
    }
    return seq;
}

// Neighbors of v on the requested side of the st-order, as the contiguous
// rotation arc a plane bipolar orientation guarantees. Returns the whole
// rotation when every neighbor qualifies.
inline std::vector<int> side_arc(const std::vector<int>& rot, const std::vector<int>& st, int v,
                                 bool lower) {
    auto match = [&](int u) { return lower == (st[u] < st[v]); };
    int d = (int)rot.size(), total = 0;
    for (int u : rot) total += match(u);
    if (total == 0) return {};
    if (total == d) return rot;
    int start = -1;
    for (int i = 0; i < d && start < 0; ++i)
        if (match(rot[i]) && !match(rot[(i + d - 1) % d])) start = i;
    std::vector<int> arc;
    for (int i = start; match(rot[i % d]); ++i) arc.push_back(rot[i % d]);
    if ((int)arc.size() != total) throw error("internal: bipolar arc not contiguous");
    return arc;
}

struct LaneRec {
    int tail = -1, head = -1, node = -1;
    std::vector<std::pair<int, int>> pts;  // (column node, row), from the tail
};

}  // namespace detail

inline OrthoDrawing layout_deg4_planar(const PlaneEmbedding& input) {
    validate_embedding(input);
    for (int d : input.g.degrees())
        if (d > 4) throw error("layout_deg4_planar needs max degree 4");
    OrthoDrawing out;
    out.dim = 2;
    if (input.g.n == 1) {
        out.pos[0] = {0, 0, 0};
        return out;
    }
    if (input.g.n == 2) {
        out.pos[0] = {0, 0, 0};
        out.pos[1] = {1, 0, 0};
        out.routes[{0, 1}] = {{0, 0, 0}, {1, 0, 0}};
        return out;
    }
    detail::SweepWork w{input.g, input.rotation, {}, input.outer};
    for (Edge e : input.g.edges) w.origin[e] = e;
    detail::augment_biconnected(w);
    int s = w.outer.first, t = w.outer.second;
    std::vector<int> order = detail::st_order(w.g, s, t);
    std::vector<int> st(w.g.n);
    for (int i = 0; i < w.g.n; ++i) st[order[i]] = i;

    std::list<int> cols;
    std::map<int, std::list<int>::iterator> col_it;
    int next_node = 0;
    auto node_at = [&](std::list<int>::iterator where) {
        int id = next_node++;
        col_it[id] = cols.insert(where, id);
        return id;
    };
    std::vector<detail::LaneRec> lanes;
    std::vector<int> frontier;
    std::map<int, int> node_of, row_of;
    std::map<Edge, std::pair<int, std::vector<std::pair<int, int>>>> drawn;  // tail, points

    // poles' full rotations have no canonical arc start; anchor s at its
    // t-edge so the pole edge takes the leftmost lane
    {
        std::vector<int> lr(w.rot[s].rbegin(), w.rot[s].rend());
        auto at = std::find(lr.begin(), lr.end(), t);
        std::rotate(lr.begin(), at, lr.end());
        int q = (int)lr.size();
        int y = 3;
        row_of[s] = y;
        static const char* kinds_by_q[5] = {"", "N", "WN", "WNE", "WNED"};
        std::string kinds = kinds_by_q[q];
        std::map<char, int> node;
        for (char k : kinds) node[k] = node_at(cols.end());
        node_of[s] = node.at('N');
        for (int k = 0; k < q; ++k) {
            detail::LaneRec lane;
            lane.tail = s;
            lane.head = lr[k];
            char kind = kinds[k];
            lane.node = node.at(kind);
            if (kind == 'N')
                lane.pts = {{node['N'], y}};
            else if (kind == 'W' || kind == 'E')
                lane.pts = {{node['N'], y}, {node[kind], y}};
            else
                lane.pts = {{node['N'], y}, {node['N'], y - 1}, {node['D'], y - 1}};
            frontier.push_back((int)lanes.size());
            lanes.push_back(lane);
        }
    }

    for (int i = 1; i < w.g.n; ++i) {
        int v = order[i];
        int y = 3 * (i + 1);
        row_of[v] = y;
        int lo = -1, p = 0;
        for (int f = 0; f < (int)frontier.size(); ++f) {
            if (lanes[frontier[f]].head != v) continue;
            if (lo < 0) lo = f;
            if (f != lo + p) throw error("internal: in-lanes not consecutive");
            ++p;
        }
        if (lo < 0 || p == 0) throw error("internal: vertex with no pending in-edge");
        std::vector<int> arrival;
        for (int f = lo; f < lo + p; ++f) arrival.push_back(lanes[frontier[f]].tail);
        std::vector<int> arc = detail::side_arc(w.rot[v], st, v, true);
        if ((int)arc.size() != p) throw error("internal: in-degree mismatch");
        if (v == t) {
            auto at = std::find(arc.begin(), arc.end(), arrival[0]);
            std::rotate(arc.begin(), at, arc.end());
        }
        if (arc != arrival) throw error("internal: arrival order breaks the rotation");

        int spine = frontier[lo + (p >= 2 ? 1 : 0)];
        node_of[v] = lanes[spine].node;
        static const char* in_ports[5] = {"", "S", "WS", "WSE", "WSEH"};
        for (int k = 0; k < p; ++k) {
            detail::LaneRec& lane = lanes[frontier[lo + k]];
            char port = in_ports[p][k];
            if (port == 'S') {
                lane.pts.push_back({lane.node, y});
            } else if (port == 'W' || port == 'E') {
                lane.pts.push_back({lane.node, y});
                lane.pts.push_back({node_of[v], y});
            } else {  // hook over the top; only legal at the sink
                if (v != t) throw error("internal: hook port before the sink");
                lane.pts.push_back({lane.node, y + 1});
                lane.pts.push_back({node_of[v], y + 1});
                lane.pts.push_back({node_of[v], y});
            }
            drawn[make_edge(lane.tail, v)] = {lane.tail, lane.pts};
        }

        std::vector<int> outs = detail::side_arc(w.rot[v], st, v, false);
        std::vector<int> lr(outs.rbegin(), outs.rend());
        int q = (int)lr.size();
        if ((v == t) != (q == 0)) throw error("internal: bipolar orientation broken");
        if (q > 3) throw error("internal: too many out-lanes at an inner vertex");
        static const char* out_ports[4] = {"", "N", "NE", "WNE"};
        std::vector<int> fresh;
        for (int k = 0; k < q; ++k) {
            detail::LaneRec lane;
            lane.tail = v;
            lane.head = lr[k];
            char kind = out_ports[q][k];
            if (kind == 'N') {
                lane.node = node_of[v];
                lane.pts = {{lane.node, y}};
            } else {
                auto ref = col_it.at(node_of[v]);
                lane.node = node_at(kind == 'W' ? ref : std::next(ref));
                lane.pts = {{node_of[v], y}, {lane.node, y}};
            }
            fresh.push_back((int)lanes.size());
            lanes.push_back(lane);
        }
        if (v == t && (lo != 0 || p != (int)frontier.size()))
            throw error("internal: sink left lanes behind");
        frontier.erase(frontier.begin() + lo, frontier.begin() + lo + p);
        frontier.insert(frontier.begin() + lo, fresh.begin(), fresh.end());
    }
    if (!frontier.empty()) throw error("internal: frontier not consumed");

    std::map<int, int> x_of;
    {
        int x = 0;
        for (int node : cols) x_of[node] = x++;
    }
    for (int v = 0; v < input.g.n; ++v)
        out.pos[v] = {x_of.at(node_of.at(v)), row_of.at(v), 0};

    std::map<Edge, std::vector<Edge>> pieces;
    for (auto& [de, o] : w.origin) pieces[o].push_back(de);
    for (auto& [e, links] : pieces) {
        std::map<int, std::vector<Edge>> at;
        for (Edge de : links) {
            at[de.first].push_back(de);
            at[de.second].push_back(de);
        }
        std::vector<Cell> poly;
        int cur = e.first, prev = -1;
        for (std::size_t step = 0; step < links.size(); ++step) {
            Edge de{-1, -1};
            for (Edge cand : at[cur]) {
                int other = cand.first == cur ? cand.second : cand.first;
                if (other != prev) de = cand;
            }
            auto& [tail, pts] = drawn.at(de);
            std::vector<std::pair<int, int>> seg = pts;
            if (tail != cur) std::reverse(seg.begin(), seg.end());
            for (std::size_t k = poly.empty() ? 0 : 1; k < seg.size(); ++k)
                poly.push_back({x_of.at(seg[k].first), seg[k].second, 0});
            prev = cur;
            cur = de.first == cur ? de.second : de.first;
        }
        if (cur != e.second) throw error("internal: subdivision chain broken");
        out.routes[e] = detail::simplify_polyline(poly);
    }
    detail::compact_drawing(out);
    validate_drawing(out);
    return out;
}

}  // namespace boxrep
