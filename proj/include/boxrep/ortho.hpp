// Orthogonal drawings on the integer grid: the validity audit, bend
// subdivision, and the 2D-to-3D layer split that removes crossings.
#pragma once

#include "boxrep/graph.hpp"

namespace boxrep {

// Routes are polylines of integer corner points from pos[e.first] to
// pos[e.second]; every segment is axis-aligned with positive length.
struct OrthoDrawing {
    int dim = 2;
    bool crossings_allowed = false;
    std::map<int, Cell> pos;
    std::map<Edge, std::vector<Cell>> routes;

    long long total_length() const {
        long long len = 0;
        for (auto& [e, poly] : routes)
            for (std::size_t i = 1; i < poly.size(); ++i)
                len += std::abs(poly[i].x - poly[i - 1].x) + std::abs(poly[i].y - poly[i - 1].y) +
                       std::abs(poly[i].z - poly[i - 1].z);
        return len;
    }
};

namespace detail {

inline Cell step_dir(Cell a, Cell b) {
    int dx = (b.x > a.x) - (b.x < a.x);
    int dy = (b.y > a.y) - (b.y < a.y);
    int dz = (b.z > a.z) - (b.z < a.z);
    if ((dx != 0) + (dy != 0) + (dz != 0) != 1) throw error("route segment is not axis-aligned");
    return {dx, dy, dz};
}

// Every lattice point a route covers, with the axes of the unit steps
// touching that point. Corners and endpoints carry two or one axes.
struct RoutePoint {
    Cell p;
    int axes = 0;  // bit 0: x, bit 1: y, bit 2: z
    bool endpoint = false;
};

inline int axis_bit(Cell d) { return d.x != 0 ? 1 : d.y != 0 ? 2 : 4; }

inline std::vector<RoutePoint> route_points(const std::vector<Cell>& poly) {
    if (poly.size() < 2) throw error("route with fewer than two points");
    std::vector<RoutePoint> pts;
    std::map<Cell, std::size_t> index;
    auto touch = [&](Cell p, int axes) {
        auto [it, fresh] = index.emplace(p, pts.size());
        if (fresh)
            pts.push_back({p, axes, false});
        else
            pts[it->second].axes |= axes;
        return it->second;
    };
    std::size_t steps = 0;
    for (std::size_t i = 1; i < poly.size(); ++i) {
        Cell d = step_dir(poly[i - 1], poly[i]);
        int bit = axis_bit(d);
        for (Cell c = poly[i - 1]; !(c == poly[i]); c = c + d) {
            touch(c, bit);
            touch(c + d, bit);
            ++steps;
        }
    }
    pts.front().endpoint = true;
    pts[index.at(poly.back())].endpoint = true;
    if (pts.size() != steps + 1) throw error("route passes through its own cells twice");
    return pts;
}

}  // namespace detail

// Checks every OrthoDrawing invariant: axis-aligned simple routes matching
// the endpoint positions, distinct vertex positions, no route through a
// foreign vertex, and disjointness of distinct routes up to shared graph
// vertices (plus transversal crossings when allowed, 2D only).
inline void validate_drawing(const OrthoDrawing& d) {
    if (d.dim != 2 && d.dim != 3) throw error("drawing dimension must be 2 or 3");
    std::map<Cell, int> vertex_at;
    for (auto& [v, p] : d.pos) {
        if (d.dim == 2 && p.z != 0) throw error("2D drawing uses a nonzero z coordinate");
        if (!vertex_at.emplace(p, v).second) throw error("two vertices share a position");
    }

    struct Touch {
        Edge e;
        int axes;
        bool endpoint;
    };
    std::map<Cell, std::vector<Touch>> cover;
    for (auto& [e, poly] : d.routes) {
        auto u = d.pos.find(e.first), v = d.pos.find(e.second);
        if (u == d.pos.end() || v == d.pos.end()) throw error("route references unknown vertex");
        if (!(poly.front() == u->second) || !(poly.back() == v->second))
            throw error("route does not join its endpoint positions");
        for (const detail::RoutePoint& rp : detail::route_points(poly)) {
            if (d.dim == 2 && rp.p.z != 0) throw error("2D drawing uses a nonzero z coordinate");
            auto w = vertex_at.find(rp.p);
            if (w != vertex_at.end() && w->second != e.first && w->second != e.second)
                throw error("route passes through a vertex position");
            if (w != vertex_at.end() && !rp.endpoint)
                throw error("route passes through its own endpoint");
            cover[rp.p].push_back({e, rp.axes, rp.endpoint});
        }
    }

    for (auto& [p, touches] : cover) {
        for (std::size_t i = 0; i < touches.size(); ++i)
            for (std::size_t j = i + 1; j < touches.size(); ++j) {
                const Touch& a = touches[i];
                const Touch& b = touches[j];
                if (a.endpoint && b.endpoint) {
                    int shared = -1;
                    for (int x : {a.e.first, a.e.second})
                        if (x == b.e.first || x == b.e.second) shared = x;
                    if (shared >= 0 && d.pos.at(shared) == p) continue;
                }
                bool transversal = !a.endpoint && !b.endpoint && a.axes != b.axes &&
                                   (a.axes == 1 || a.axes == 2) && (b.axes == 1 || b.axes == 2);
                if (d.crossings_allowed && d.dim == 2 && transversal) continue;
                throw error("routes intersect");
            }
    }
}

// Number of grid points where two routes cross transversally.
inline int count_crossings(const OrthoDrawing& d) {
    std::map<Cell, std::vector<std::pair<Edge, int>>> interior;  // axes of non-endpoint touches
    for (auto& [e, poly] : d.routes)
        for (const detail::RoutePoint& rp : detail::route_points(poly))
            if (!rp.endpoint) interior[rp.p].push_back({e, rp.axes});
    int count = 0;
    for (auto& [p, touches] : interior)
        for (std::size_t i = 0; i < touches.size(); ++i)
            for (std::size_t j = i + 1; j < touches.size(); ++j)
                if (touches[i].second != touches[j].second) ++count;
    return count;
}

struct BendSubdivision {
    Graph g;
    OrthoDrawing d;
    std::map<Edge, std::vector<int>> bends;  // original edge -> bend ids from e.first
};

// Places a vertex on every route corner so that all routes become single
// straight segments. Bend ids start at the original vertex count and follow
// edge-sorted order, walking each route from its smaller endpoint.
inline BendSubdivision subdivide_bends(const OrthoDrawing& d) {
    validate_drawing(d);
    BendSubdivision out;
    out.d.dim = d.dim;
    out.d.crossings_allowed = d.crossings_allowed;
    out.d.pos = d.pos;
    int n = 0;
    for (auto& [v, p] : d.pos) {
        if (v != n) throw error("drawing vertex ids are not contiguous");
        ++n;
    }
    out.g.n = n;
    for (auto& [e, poly] : d.routes) {
        std::vector<int> chain = {e.first};
        out.bends[e];
        for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
            int b = out.g.n++;
            out.d.pos[b] = poly[i];
            out.bends[e].push_back(b);
            chain.push_back(b);
        }
        chain.push_back(e.second);
        for (std::size_t i = 1; i < chain.size(); ++i) {
            out.g.add_edge(chain[i - 1], chain[i]);
            std::vector<Cell> seg = {poly[i - 1], poly[i]};
            if (chain[i] < chain[i - 1]) std::swap(seg[0], seg[1]);
            out.d.routes[make_edge(chain[i - 1], chain[i])] = seg;
        }
    }
    return out;
}

struct LayerSplit {
    Graph g;
    OrthoDrawing d;
    MinorRecipe recipe;
};

// Splits every vertex v into v (z=0, keeps the horizontal edges) and n+v
// (z=1, the vertical ones) joined by a unit connector, turning transversal
// crossings into disjoint 3D routes. The recipe contracts the connectors and
// then absorbs the given subdivision chains back into their edges.
inline LayerSplit split_layers(const Graph& g, const OrthoDrawing& d,
                               const std::map<Edge, std::vector<int>>& subdivision = {}) {
    if (d.dim != 2) throw error("split_layers expects a 2D drawing");
    LayerSplit out;
    out.g.n = 2 * g.n;
    out.d.dim = 3;
    for (int v = 0; v < g.n; ++v) {
        Cell p = d.pos.at(v);
        out.d.pos[v] = {p.x, p.y, 0};
        out.d.pos[g.n + v] = {p.x, p.y, 1};
        out.g.add_edge(v, g.n + v);
        out.d.routes[{v, g.n + v}] = {{p.x, p.y, 0}, {p.x, p.y, 1}};
    }
    for (auto& [e, poly] : d.routes) {
        if (poly.size() != 2) throw error("split_layers needs straight routes");
        Cell a = poly[0], b = poly[1];
        if (a.y == b.y && a.x != b.x) {
            out.g.add_edge(e.first, e.second);
            out.d.routes[e] = {{a.x, a.y, 0}, {b.x, b.y, 0}};
        } else if (a.x == b.x && a.y != b.y) {
            Edge up = make_edge(g.n + e.first, g.n + e.second);
            out.g.add_edge(up.first, up.second);
            out.d.routes[up] = {{a.x, a.y, 1}, {b.x, b.y, 1}};
        } else {
            throw error("split_layers needs straight routes");
        }
    }
    for (int v = 0; v < g.n; ++v) out.recipe.contractions.push_back({v, g.n + v, v});
    for (auto& [e, chain] : subdivision)
        for (int b : chain) out.recipe.contractions.push_back({e.first, b, e.first});
    return out;
}

}  // namespace boxrep
