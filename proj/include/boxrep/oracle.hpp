// Exhaustive ground-truth searches on tiny instances: minimum-size
// representations within fixed grid bounds, and unit-length drawings of
// axis-angled graphs. Both report "unknown" when a node budget runs out;
// a completed search is a certificate.
#pragma once

#include <climits>
#include <cstdint>
#include <cstdlib>
#include <functional>

#include "boxrep/graph.hpp"
#include "boxrep/grid.hpp"
#include "boxrep/ortho.hpp"

namespace boxrep {

enum class SearchStatus { found, infeasible, unknown };

struct SearchBounds {
    int w = 4, h = 4, d = 1;
};

struct MinRepResult {
    SearchStatus status = SearchStatus::unknown;
    std::size_t size = 0;
    Representation rep;
    long long nodes = 0;
};

inline long long default_search_budget() {
    if (const char* s = std::getenv("BOXREP_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(s, &end, 10);
        if (end != s && *end == '\0' && v > 0) return v;
    }
    return 20'000'000;
}

// Any representation of peeling depth k has at least 4k^2 - 4k cells.
inline long long peeling_lower_bound(int k) {
    if (k < 1) throw error("peeling depth starts at one");
    return 4LL * k * k - 4LL * k;
}

namespace detail {

struct GridSpace {
    int w, h, d;
    std::vector<Cell> cells;            // index order: z, then y, then x
    std::vector<std::vector<int>> nbr;  // face neighbors within bounds

    explicit GridSpace(SearchBounds b) : w(b.w), h(b.h), d(b.d) {
        for (int z = 0; z < d; ++z)
            for (int y = 0; y < h; ++y)
                for (int x = 0; x < w; ++x) cells.push_back({x, y, z});
        nbr.resize(cells.size());
        for (std::size_t i = 0; i < cells.size(); ++i)
            for (std::size_t j = 0; j < cells.size(); ++j)
                if (cells_adjacent(cells[i], cells[j])) nbr[i].push_back((int)j);
    }
};

// Vertices in placement order: high degree first so contact constraints bind
// early, components in one BFS walk each so later vertices see placed ones.
inline std::vector<int> placement_order(const Graph& g) {
    auto adj = g.adjacency();
    auto deg = g.degrees();
    std::vector<int> order;
    std::vector<char> seen(g.n, 0);
    auto better = [&](int a, int b) {
        return deg[a] != deg[b] ? deg[a] > deg[b] : a < b;
    };
    for (;;) {
        int root = -1;
        for (int v = 0; v < g.n; ++v)
            if (!seen[v] && (root < 0 || better(v, root))) root = v;
        if (root < 0) break;
        seen[root] = 1;
        std::vector<int> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            order.push_back(queue[qi]);
            std::vector<int> next;
            for (int u : adj[queue[qi]])
                if (!seen[u]) {
                    seen[u] = 1;
                    next.push_back(u);
                }
            std::sort(next.begin(), next.end(), better);
            queue.insert(queue.end(), next.begin(), next.end());
        }
    }
    return order;
}

// One cell per vertex: existence search. Cells are forced to agree with the
// edge set against everything already placed, so a full placement is a valid
// representation of exactly n cells.
struct UnitCellSearch {
    const Graph& g;
    const GridSpace& grid;
    long long budget, nodes = 0;
    bool aborted = false;
    std::vector<int> order, at;       // vertex -> cell index, -1 unplaced
    std::vector<int> owner;           // cell index -> vertex, -1 free

    UnitCellSearch(const Graph& g_, const GridSpace& gr, long long b)
        : g(g_), grid(gr), budget(b), order(placement_order(g_)),
          at(g_.n, -1), owner(gr.cells.size(), -1) {}

    bool dfs(std::size_t i) {
        if (i == order.size()) return true;
        int v = order[i];
        for (int c = 0; c < (int)grid.cells.size(); ++c) {
            if (owner[c] >= 0) continue;
            if (i == 0) {  // a reflection moves any placement into this corner
                const Cell& cc = grid.cells[c];
                if (2 * cc.x > grid.w - 1 || 2 * cc.y > grid.h - 1 ||
                    2 * cc.z > grid.d - 1)
                    continue;
            }
            if (++nodes > budget) {
                aborted = true;
                return false;
            }
            bool ok = true;
            for (int u = 0; u < g.n && ok; ++u) {
                if (at[u] < 0) continue;
                bool touching = cells_adjacent(grid.cells[c], grid.cells[at[u]]);
                ok = touching == g.has_edge(u, v);
            }
            if (!ok) continue;
            at[v] = c;
            owner[c] = v;
            if (dfs(i + 1)) return true;
            at[v] = -1;
            owner[c] = -1;
            if (aborted) return false;
        }
        return false;
    }
};

struct BlobShape {
    std::uint32_t mask = 0, touch = 0;  // occupied cells / their free border
    std::vector<Cell> cells;
};

// Every connected subset of grid cells up to the cap, smallest first so the
// branch-and-bound meets small witnesses early.
inline std::vector<BlobShape> all_blob_shapes(const GridSpace& grid, int cap) {
    std::set<std::vector<int>> seen;
    std::vector<int> cur;
    std::vector<BlobShape> out;
    auto record = [&]() {
        std::vector<int> key = cur;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) return false;
        BlobShape s;
        for (int i : key) {
            s.mask |= 1u << i;
            s.cells.push_back(grid.cells[i]);
        }
        for (int i : key)
            for (int j : grid.nbr[i])
                if (!(s.mask & (1u << j))) s.touch |= 1u << j;
        out.push_back(std::move(s));
        return true;
    };
    std::function<void()> grow = [&]() {
        if (!record() || (int)cur.size() == cap) return;
        std::size_t fixed = cur.size();
        for (std::size_t k = 0; k < fixed; ++k)
            for (int j : grid.nbr[cur[k]]) {
                if (std::find(cur.begin(), cur.end(), j) != cur.end()) continue;
                cur.push_back(j);
                grow();
                cur.pop_back();
            }
    };
    for (int c = 0; c < (int)grid.cells.size(); ++c) {
        cur = {c};
        grow();
    }
    std::stable_sort(out.begin(), out.end(), [](const BlobShape& a, const BlobShape& b) {
        return a.cells.size() != b.cells.size() ? a.cells.size() < b.cells.size()
                                                : a.cells < b.cells;
    });
    return out;
}

// Branch and bound over whole blobs: place each vertex as one connected
// shape, matching the edge set against everything placed before it.
struct BlobSearch {
    const Graph& g;
    std::vector<BlobShape> shapes;
    std::vector<int> order;
    long long budget, nodes = 0;
    bool aborted = false;
    std::size_t best = SIZE_MAX;
    std::vector<std::uint32_t> placed;  // vertex -> mask, 0 when unplaced
    std::map<int, std::uint32_t> best_masks;

    BlobSearch(const Graph& g_, const GridSpace& grid, int cap, long long b)
        : g(g_), shapes(all_blob_shapes(grid, cap)),
          order(placement_order(g_)), budget(b), placed(g_.n, 0) {}

    void dfs(std::size_t i, std::size_t used) {
        if (used + (order.size() - i) >= best) return;
        if (i == order.size()) {
            best = used;
            best_masks.clear();
            for (int v = 0; v < g.n; ++v) best_masks[v] = placed[v];
            return;
        }
        int v = order[i];
        std::uint32_t occupied = 0;
        for (int u = 0; u < g.n; ++u) occupied |= placed[u];
        for (const BlobShape& s : shapes) {
            if (++nodes > budget) {
                aborted = true;
                return;
            }
            if (s.mask & occupied) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                int u = order[j];
                bool touching = (s.touch & placed[u]) != 0;
                ok = touching == g.has_edge(u, v);
            }
            if (!ok) continue;
            placed[v] = s.mask;
            dfs(i + 1, used + s.cells.size());
            placed[v] = 0;
            if (aborted) return;
        }
    }
};

}  // namespace detail

// Globally minimum cell count over all representations of g inside the given
// bounds, by exhaustive search. A cap of one switches to a pure placement
// search, which scales to the wheel-substitution instances; otherwise the
// instance caps keep the blob search exhaustible.
inline MinRepResult min_rep_search(const Graph& g, int dim, SearchBounds b,
                                   int cap = 4, long long budget = -1) {
    if (dim != 2 && dim != 3) throw error("dimension must be 2 or 3");
    if (dim == 2) b.d = 1;
    if (cap < 1) throw error("per-blob cap must be positive");
    if (b.w < 1 || b.h < 1 || b.d < 1) throw error("grid bounds must be positive");
    long long cells = (long long)b.w * b.h * b.d;
    if (cap == 1) {
        if (g.n > 32) throw error("unit-cell search is capped at 32 vertices");
        if (cells > 64) throw error("unit-cell search is capped at 64 grid cells");
    } else {
        if (g.n > 5) throw error("minimum search is capped at 5 vertices");
        if (cap > 4) throw error("per-blob cap is at most 4");
        if (dim == 2 && (b.w > 4 || b.h > 4))
            throw error("2D search grid is capped at 4x4");
        if (dim == 3 && (b.w > 3 || b.h > 3 || b.d > 3))
            throw error("3D search grid is capped at 3x3x3");
    }
    if (budget <= 0) budget = default_search_budget();

    MinRepResult res;
    res.rep.dim = dim;
    if (g.n == 0) {
        res.status = SearchStatus::found;
        return res;
    }
    detail::GridSpace grid(b);
    if (cap == 1) {
        detail::UnitCellSearch s(g, grid, budget);
        bool hit = s.dfs(0);
        res.nodes = s.nodes;
        if (s.aborted) return res;
        if (!hit) {
            res.status = SearchStatus::infeasible;
            return res;
        }
        for (int v = 0; v < g.n; ++v) res.rep.blobs[v] = {grid.cells[s.at[v]]};
        res.status = SearchStatus::found;
        res.size = g.n;
    } else {
        detail::BlobSearch s(g, grid, cap, budget);
        s.dfs(0, 0);
        res.nodes = s.nodes;
        if (s.aborted) return res;
        if (s.best == SIZE_MAX) {
            res.status = SearchStatus::infeasible;
            return res;
        }
        for (auto& [v, mask] : s.best_masks)
            for (std::size_t i = 0; i < grid.cells.size(); ++i)
                if (mask & (1u << i)) res.rep.blobs[v].insert(grid.cells[i]);
        res.status = SearchStatus::found;
        res.size = s.best;
    }
    if (!verify(res.rep, g).valid)
        throw error("internal: search produced an invalid representation");
    return res;
}

struct UnitDrawingResult {
    SearchStatus status = SearchStatus::unknown;
    OrthoDrawing drawing;
    long long nodes = 0;
};

namespace detail {

inline Dir rotate_cw(Dir d, int quarter) {
    return static_cast<Dir>((static_cast<int>(d) + quarter) % 4);
}

inline Cell rotate_cw(Cell c, int quarter) {
    for (int i = 0; i < quarter; ++i) c = {c.y, -c.x, 0};
    return c;
}

}  // namespace detail

// Unit-length grid drawing honoring the angles the ports encode. Angles fix
// each connected component rigidly up to one quarter-turn, so the search is
// a propagation pass followed by rotations and translations per component.
inline UnitDrawingResult unit_drawing_search(const AngledGraph& a, int bound = 5,
                                             long long budget = -1) {
    validate_angled(a);
    if (a.g.n > 8) throw error("unit drawing search is capped at 8 vertices");
    if (bound < 1 || bound > 5) throw error("unit drawing grid is capped at 5x5");
    if (budget <= 0) budget = default_search_budget();

    UnitDrawingResult res;
    res.drawing.dim = 2;
    if (a.g.n == 0) {
        res.status = SearchStatus::found;
        return res;
    }
    auto adj = a.g.adjacency();

    // Rigid shape of each component, anchored at its smallest vertex.
    std::vector<std::vector<std::pair<int, Cell>>> comps;
    std::vector<int> comp_of(a.g.n, -1);
    for (int root = 0; root < a.g.n; ++root) {
        if (comp_of[root] >= 0) continue;
        std::map<int, Cell> pos{{root, {0, 0, 0}}};
        std::map<int, int> frame{{root, 0}};
        std::vector<int> queue{root};
        comp_of[root] = (int)comps.size();
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int v : adj[u]) {
                Dir leave = detail::rotate_cw(a.port_at(u, v), frame[u]);
                Cell to = {pos[u].x + dir_vec(leave).x, pos[u].y + dir_vec(leave).y, 0};
                int fv = (static_cast<int>(dir_opposite(leave)) + 4 -
                          static_cast<int>(a.port_at(v, u))) % 4;
                auto it = pos.find(v);
                if (it == pos.end()) {
                    pos[v] = to;
                    frame[v] = fv;
                    comp_of[v] = comp_of[root];
                    queue.push_back(v);
                } else if (!(it->second == to) || frame[v] != fv) {
                    res.status = SearchStatus::infeasible;
                    return res;
                }
            }
        }
        std::vector<std::pair<int, Cell>> shape(pos.begin(), pos.end());
        std::set<Cell> distinct;
        for (auto& [v, c] : shape) distinct.insert(c);
        if (distinct.size() != shape.size()) {
            res.status = SearchStatus::infeasible;
            return res;
        }
        comps.push_back(std::move(shape));
    }

    // Rotations and translations per component, lexicographic and budgeted.
    std::map<int, Cell> placed;
    long long nodes = 0;
    std::function<bool(std::size_t)> fit = [&](std::size_t ci) -> bool {
        if (ci == comps.size()) return true;
        for (int r = 0; r < 4; ++r) {
            std::vector<std::pair<int, Cell>> shape = comps[ci];
            int minx = INT_MAX, miny = INT_MAX, maxx = INT_MIN, maxy = INT_MIN;
            for (auto& [v, c] : shape) {
                c = detail::rotate_cw(c, r);
                minx = std::min(minx, c.x);
                miny = std::min(miny, c.y);
                maxx = std::max(maxx, c.x);
                maxy = std::max(maxy, c.y);
            }
            for (int ox = 0; ox + (maxx - minx) < bound; ++ox)
                for (int oy = 0; oy + (maxy - miny) < bound; ++oy) {
                    if (++nodes > budget) return false;
                    bool ok = true;
                    std::vector<std::pair<int, Cell>> at;
                    for (auto& [v, c] : shape) {
                        Cell p{c.x - minx + ox, c.y - miny + oy, 0};
                        for (auto& [u, q] : placed)
                            if (q == p) {
                                ok = false;
                                break;
                            }
                        if (!ok) break;
                        at.push_back({v, p});
                    }
                    if (!ok) continue;
                    for (auto& [v, p] : at) placed[v] = p;
                    if (fit(ci + 1)) return true;
                    for (auto& [v, p] : at) placed.erase(v);
                    if (nodes > budget) return false;
                }
        }
        return false;
    };
    bool hit = fit(0);
    res.nodes = nodes;
    if (nodes > budget) return res;
    if (!hit) {
        res.status = SearchStatus::infeasible;
        return res;
    }
    for (auto& [v, p] : placed) res.drawing.pos[v] = p;
    for (const Edge& e : a.g.edges)
        res.drawing.routes[e] = {placed.at(e.first), placed.at(e.second)};
    res.status = SearchStatus::found;
    return res;
}

}  // namespace boxrep
