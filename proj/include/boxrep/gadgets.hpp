// Instance generators: wheel-substitution graphs, 2D/3D cages with their
// canonical one-cell-per-vertex representations, nested triangles, and
// disjoint clique unions.
#pragma once

#include "boxrep/embedding.hpp"
#include "boxrep/grid.hpp"

namespace boxrep {

namespace detail {

inline int dir_index(Dir d) { return static_cast<int>(d); }  // N,E,S,W -> 0..3

}  // namespace detail

// Replaces every vertex by a 4-wheel whose rim-cycle edges are subdivided,
// and subdivides every original edge once, attaching it between the rim
// vertices named by its ports. Per vertex: center 9u, rim N/E/S/W 9u+1..9u+4,
// rim subdivisions NE/SE/SW/NW 9u+5..9u+8; edge subdivisions follow at 9n+i.
inline Graph wheel_gadget(const AngledGraph& a) {
    validate_angled(a);
    int n = a.g.n;
    Graph h;
    h.n = 9 * n + a.g.m();
    auto center = [](int u) { return 9 * u; };
    auto rim = [&](int u, Dir d) { return 9 * u + 1 + detail::dir_index(d); };
    for (int u = 0; u < n; ++u) {
        int corner[4] = {9 * u + 5, 9 * u + 6, 9 * u + 7, 9 * u + 8};  // NE SE SW NW
        for (Dir d : {Dir::N, Dir::E, Dir::S, Dir::W}) h.add_edge(center(u), rim(u, d));
        h.add_edge(rim(u, Dir::N), corner[0]);
        h.add_edge(corner[0], rim(u, Dir::E));
        h.add_edge(rim(u, Dir::E), corner[1]);
        h.add_edge(corner[1], rim(u, Dir::S));
        h.add_edge(rim(u, Dir::S), corner[2]);
        h.add_edge(corner[2], rim(u, Dir::W));
        h.add_edge(rim(u, Dir::W), corner[3]);
        h.add_edge(corner[3], rim(u, Dir::N));
    }
    int s = 9 * n;
    for (const Edge& e : a.g.edges) {
        h.add_edge(s, rim(e.first, a.port_at(e.first, e.second)));
        h.add_edge(s, rim(e.second, a.port_at(e.second, e.first)));
        ++s;
    }
    return h;
}

struct CageParams {
    int dim = 2;  // 2 or 3
    int t = 1;    // wall thickness
    int w = 1, h = 1, d = 1;  // interior extent (d used in 3D only)
};

struct CageResult {
    Graph g;
    Representation rep;  // one cell per vertex; verifies against g
};

namespace detail {

inline void check_cage(const CageParams& p) {
    if (p.dim != 2 && p.dim != 3) throw error("cage dimension must be 2 or 3");
    if (p.t < 1 || p.w < 1 || p.h < 1 || (p.dim == 3 && p.d < 1))
        throw error("cage thickness and interior extents must be positive");
}

inline bool cage_hole(const CageParams& p, int x, int y, int z) {
    bool in = x >= p.t && x < p.t + p.w && y >= p.t && y < p.t + p.h;
    if (p.dim == 3) in = in && z >= p.t && z < p.t + p.d;
    return in;
}

// Ids in layer-major order (z, then y, then x), skipping the hole.
inline std::map<Cell, int> cage_ids(const CageParams& p) {
    check_cage(p);
    int zmax = p.dim == 3 ? 2 * p.t + p.d : 1;
    std::map<Cell, int> id;
    int next = 0;
    for (int z = 0; z < zmax; ++z)
        for (int y = 0; y < 2 * p.t + p.h; ++y)
            for (int x = 0; x < 2 * p.t + p.w; ++x)
                if (!cage_hole(p, x, y, z)) id[{x, y, z}] = next++;
    return id;
}

}  // namespace detail

// Grid graph of a (2t+w) x (2t+h) (x (2t+d)) block with a centered hole of
// the interior extent, plus the representation placing vertex i on its cell.
inline CageResult cage(const CageParams& p) {
    std::map<Cell, int> id = detail::cage_ids(p);
    CageResult out;
    out.g.n = static_cast<int>(id.size());
    out.rep.dim = p.dim;
    for (auto& [c, i] : id) {
        out.rep.blobs[i] = {c};
        for (Cell nb : cell_neighbors(c, p.dim)) {
            auto it = id.find(nb);
            if (it != id.end()) out.g.add_edge(i, it->second);
        }
    }
    return out;
}

// Disjoint union of the cage and g, with g's vertex 0 tied to the wall cells
// directly below and above the interior's center column. Needs the 3D cage
// with interior height exactly 3 so the attached graph is forced flat.
inline Graph cage_attach(const CageParams& p, const Graph& g) {
    if (p.dim != 3) throw error("cage_attach needs a 3D cage");
    if (p.h != 3) throw error("cage_attach needs interior height 3");
    Graph cg = cage(p).g;
    if (g.n == 0) return cg;
    std::map<Cell, int> id = detail::cage_ids(p);
    int xc = p.t + p.w / 2, zc = p.t + p.d / 2;
    int floor = id.at({xc, p.t - 1, zc});
    int ceiling = id.at({xc, p.t + p.h, zc});
    Graph out = cg;
    out.n += g.n;
    for (const Edge& e : g.edges) out.add_edge(cg.n + e.first, cg.n + e.second);
    out.add_edge(cg.n, floor);
    out.add_edge(cg.n, ceiling);
    return out;
}

// 2k concentric triangles, consecutive rings joined by a 3-edge matching.
// Ring r (1-based, innermost first) holds ids 3(r-1)..3(r-1)+2. The balanced
// drawing turns the annulus between rings k and k+1 inside out, making one of
// its quadrilaterals the outer face; the fully nested drawing keeps ring 2k
// outermost.
inline PlaneEmbedding nested_triangles(int k, bool fully_nested = false) {
    if (k < 1) throw error("nested_triangles needs k >= 1");
    int rings = 2 * k;
    auto id = [](int r, int j) { return 3 * (r - 1) + j; };
    PlaneEmbedding e;
    e.g.n = 6 * k;
    e.rotation.resize(e.g.n);
    for (int r = 1; r <= rings; ++r)
        for (int j = 0; j < 3; ++j) {
            e.g.add_edge(id(r, j), id(r, (j + 1) % 3));
            if (r < rings) e.g.add_edge(id(r, j), id(r + 1, j));
            std::vector<int>& rot = e.rotation[id(r, j)];
            if (r < rings) rot.push_back(id(r + 1, j));
            rot.push_back(id(r, (j + 1) % 3));
            if (r > 1) rot.push_back(id(r - 1, j));
            rot.push_back(id(r, (j + 2) % 3));
        }
    e.outer = {id(rings, 1), id(rings, 0)};  // unbounded side of ring 2k
    if (fully_nested) return e;

    // Re-mark: first enumerated face with two vertices in ring k and two in
    // ring k+1 is a quadrilateral of the middle annulus.
    FaceSet fs = faces(e);
    for (const std::vector<DirEdge>& walk : fs.walks) {
        if (walk.size() != 4) continue;
        int inner = 0, outer = 0;
        for (const DirEdge& de : walk) {
            if (de.first >= id(k, 0) && de.first <= id(k, 2)) ++inner;
            if (de.first >= id(k + 1, 0) && de.first <= id(k + 1, 2)) ++outer;
        }
        if (inner == 2 && outer == 2) {
            e.outer = walk.front();
            return e;
        }
    }
    throw error("internal: middle annulus face not found");
}

// c disjoint copies of K_q; copy i occupies ids [i*q, (i+1)*q).
inline Graph clique_union(int q, int c) {
    if (q < 1 || c < 1) throw error("clique_union needs positive parameters");
    Graph g;
    g.n = q * c;
    for (int i = 0; i < c; ++i)
        for (int a = 0; a < q; ++a)
            for (int b = a + 1; b < q; ++b) g.add_edge(i * q + a, i * q + b);
    return g;
}

}  // namespace boxrep
