// Operations on pixel/voxel contact representations: validation, contact
// graph extraction, verification against a target graph, scaling, peeling.
#pragma once

#include "boxrep/core.hpp"

namespace boxrep {

inline bool are_adjacent(const Cell& a, const Cell& b) { return cells_adjacent(a, b); }

namespace detail {

// Map every cell to its owner; duplicates are reported, first owner wins.
inline std::map<Cell, int> cell_owners(const Representation& r, std::vector<Cell>* overlaps) {
    std::map<Cell, int> owner;
    for (auto& [v, b] : r.blobs)
        for (const Cell& c : b) {
            auto [it, fresh] = owner.emplace(c, v);
            if (!fresh && overlaps) overlaps->push_back(c);
        }
    return owner;
}

inline std::set<Edge> raw_contacts(const Representation& r) {
    std::map<Cell, int> owner = cell_owners(r, nullptr);
    std::set<Edge> touch;
    for (auto& [c, v] : owner)
        for (Cell n : cell_neighbors(c, r.dim)) {
            auto it = owner.find(n);
            if (it != owner.end() && it->second != v) touch.insert(make_edge(v, it->second));
        }
    return touch;
}

inline void check_cells_fit_dim(const Representation& r) {
    if (r.dim != 2 && r.dim != 3) throw error("representation dimension must be 2 or 3");
    if (r.dim == 2)
        for (auto& [v, b] : r.blobs)
            for (const Cell& c : b)
                if (c.z != 0) throw error("2D representation contains a cell with z != 0");
}

}  // namespace detail

// Diagnostics against structural invariants only (no target graph).
inline VerifyReport rep_diagnostics(const Representation& r) {
    detail::check_cells_fit_dim(r);
    VerifyReport rep;
    detail::cell_owners(r, &rep.overlap_cells);
    for (auto& [v, b] : r.blobs)
        if (b.empty() || !blob_connected(b, r.dim)) rep.disconnected_vertices.push_back(v);
    rep.valid = rep.overlap_cells.empty() && rep.disconnected_vertices.empty();
    return rep;
}

// Contact graph of a structurally valid representation whose vertex ids are
// exactly 0..k-1. Invariant violations are errors here; use verify for
// diagnosis instead of exceptions.
inline Graph contact_graph(const Representation& r) {
    VerifyReport d = rep_diagnostics(r);
    if (!d.valid) throw error("invalid representation: overlapping or disconnected blobs");
    Graph g;
    g.n = static_cast<int>(r.blobs.size());
    for (auto& [v, b] : r.blobs)
        if (v < 0 || v >= g.n) throw error("representation vertex ids are not contiguous");
    g.edges = detail::raw_contacts(r);
    return g;
}

// Full check of r against g: reports every violated condition instead of
// stopping at the first.
inline VerifyReport verify(const Representation& r, const Graph& g) {
    detail::check_cells_fit_dim(r);
    if (static_cast<int>(r.blobs.size()) != g.n)
        throw error("representation/graph vertex id sets differ");
    for (auto& [v, b] : r.blobs)
        if (v < 0 || v >= g.n) throw error("representation/graph vertex id sets differ");

    VerifyReport rep = rep_diagnostics(r);
    std::set<Edge> touch = detail::raw_contacts(r);
    for (const Edge& e : g.edges)
        if (!touch.count(e)) rep.missing_edges.push_back(e);
    for (const Edge& e : touch)
        if (!g.edges.count(e)) rep.extra_contacts.push_back(e);
    rep.valid = rep.missing_edges.empty() && rep.extra_contacts.empty() &&
                rep.overlap_cells.empty() && rep.disconnected_vertices.empty();
    return rep;
}

// Replace every cell by an f^dim block of cells. Size grows by exactly f^dim
// and the contact graph is unchanged.
inline Representation scale(const Representation& r, int f) {
    if (f < 1) throw error("scale factor must be >= 1");
    Representation out;
    out.dim = r.dim;
    int fz = r.dim == 3 ? f : 1;
    for (auto& [v, b] : r.blobs) {
        Blob nb;
        for (const Cell& c : b)
            for (int dx = 0; dx < f; ++dx)
                for (int dy = 0; dy < f; ++dy)
                    for (int dz = 0; dz < fz; ++dz)
                        nb.insert({c.x * f + dx, c.y * f + dy, c.z * fz + dz});
        out.blobs.emplace(v, std::move(nb));
    }
    return out;
}

// Number of rounds needed to erode the representation from the unbounded
// region: each round deletes every blob owning a cell face-adjacent to the
// region reachable from outside the bounding box. 2D only.
inline int rep_peeling_depth(const Representation& r) {
    if (r.dim != 2) throw error("rep_peeling_depth is defined for 2D representations");
    if (r.blobs.empty()) throw error("rep_peeling_depth of empty representation");
    VerifyReport d = rep_diagnostics(r);
    if (!d.valid) throw error("rep_peeling_depth requires a valid representation");

    std::map<int, Blob> live = r.blobs;
    int rounds = 0;
    while (!live.empty()) {
        ++rounds;
        std::set<Cell> occ;
        for (auto& [v, b] : live) occ.insert(b.begin(), b.end());
        int minx = occ.begin()->x - 1, maxx = minx;
        int miny = occ.begin()->y - 1, maxy = miny;
        for (const Cell& c : occ) {
            minx = std::min(minx, c.x - 1);
            maxx = std::max(maxx, c.x + 1);
            miny = std::min(miny, c.y - 1);
            maxy = std::max(maxy, c.y + 1);
        }
        // Flood the free space from a corner of the inflated bounding box.
        std::set<Cell> outside;
        std::vector<Cell> stack = {{minx, miny, 0}};
        outside.insert(stack.back());
        while (!stack.empty()) {
            Cell c = stack.back();
            stack.pop_back();
            for (Cell n : cell_neighbors(c, 2)) {
                if (n.x < minx || n.x > maxx || n.y < miny || n.y > maxy) continue;
                if (occ.count(n)) continue;
                if (outside.insert(n).second) stack.push_back(n);
            }
        }
        std::vector<int> gone;
        for (auto& [v, b] : live) {
            bool exposed = false;
            for (const Cell& c : b) {
                for (Cell n : cell_neighbors(c, 2))
                    if (outside.count(n)) {
                        exposed = true;
                        break;
                    }
                if (exposed) break;
            }
            if (exposed) gone.push_back(v);
        }
        if (gone.empty()) throw error("internal: peeling round removed nothing");
        for (int v : gone) live.erase(v);
    }
    return rounds;
}

}  // namespace boxrep
