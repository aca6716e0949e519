// Plane embeddings as rotation systems: face traversal, outerplanarity
// peeling, depth-preserving inner triangulation, and the two degree-reduction
// transforms (path replacement in the plane, cycle replacement on any
// surface).
#pragma once

#include "boxrep/graph.hpp"

namespace boxrep {

// Rotation lists are counter-clockwise. The outer face is named by a directed
// edge whose left side is unbounded; a single-vertex graph marks the vertex
// itself as {v, -1}.
struct PlaneEmbedding {
    Graph g;
    std::vector<std::vector<int>> rotation;
    std::pair<int, int> outer{0, -1};
};

using DirEdge = std::pair<int, int>;

struct FaceSet {
    std::vector<std::vector<DirEdge>> walks;
    std::map<DirEdge, int> face_of;
    int outer = -1;
};

struct PeelingResult {
    std::map<int, int> depth;  // vertex -> deletion round, starting at 1
    int k = 0;
    std::optional<int> width;
};

namespace detail {

inline int rotation_index(const std::vector<int>& rot, int w) {
    for (std::size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == w) return static_cast<int>(i);
    throw error("neighbor missing from rotation list");
}

// Successor of directed edge (u,v) on the face to its left: at v, continue to
// the counter-clockwise predecessor of u.
inline DirEdge face_next(const PlaneEmbedding& e, DirEdge d) {
    const std::vector<int>& rot = e.rotation[d.second];
    int i = rotation_index(rot, d.first);
    int w = rot[(i + rot.size() - 1) % rot.size()];
    return {d.second, w};
}

inline void insert_ccw_before(std::vector<int>& rot, int fresh, int ref) {
    rot.insert(rot.begin() + rotation_index(rot, ref), fresh);
}

}  // namespace detail

inline void validate_embedding(const PlaneEmbedding& e);

// All faces of a valid embedding, enumerated deterministically.
inline FaceSet faces(const PlaneEmbedding& e) {
    FaceSet fs;
    std::set<DirEdge> pending;
    for (const Edge& ed : e.g.edges) {
        pending.insert({ed.first, ed.second});
        pending.insert({ed.second, ed.first});
    }
    while (!pending.empty()) {
        DirEdge start = *pending.begin();
        std::vector<DirEdge> walk;
        DirEdge d = start;
        do {
            walk.push_back(d);
            if (!pending.erase(d)) throw error("rotation system traces an edge twice");
            d = detail::face_next(e, d);
        } while (d != start);
        int id = static_cast<int>(fs.walks.size());
        for (const DirEdge& de : walk) fs.face_of[de] = id;
        fs.walks.push_back(std::move(walk));
    }
    if (e.outer.second >= 0) {
        auto it = fs.face_of.find(e.outer);
        if (it == fs.face_of.end()) throw error("outer marker is not an edge of the graph");
        fs.outer = it->second;
    }
    return fs;
}

inline void validate_embedding(const PlaneEmbedding& e) {
    if (e.g.n < 1) throw error("embedding of an empty graph");
    if (static_cast<int>(e.rotation.size()) != e.g.n)
        throw error("rotation table size differs from vertex count");
    auto adj = e.g.adjacency();
    for (int v = 0; v < e.g.n; ++v) {
        std::set<int> a(adj[v].begin(), adj[v].end());
        std::set<int> r(e.rotation[v].begin(), e.rotation[v].end());
        if (a != r || r.size() != e.rotation[v].size())
            throw error("rotation of vertex " + std::to_string(v) +
                        " is not a permutation of its neighbors");
    }
    if (!is_connected(e.g)) throw error("embedding requires a connected graph");
    if (e.g.n == 1 || e.g.edges.empty()) {
        if (e.g.n != 1) throw error("edgeless embedding with several vertices");
        if (e.outer != std::make_pair(0, -1))
            throw error("single-vertex embedding must mark vertex 0 as outer");
        return;
    }
    if (!e.g.has_edge(e.outer.first, e.outer.second))
        throw error("outer marker is not an edge of the graph");
    int f = static_cast<int>(faces(e).walks.size());
    if (e.g.n - e.g.m() + f != 2)
        throw error("rotation system is not planar (Euler check failed)");
}

namespace detail {

struct PeelData {
    FaceSet fs;
    std::map<int, int> depth;
    std::vector<int> face_round;  // merge round; outer face starts at 0
    int k = 0;
};

// Simulates deleting the current outer boundary round by round. The region
// that used to hold deleted vertices is the union of the outer face and every
// face incident to a deleted vertex; live vertices on its boundary go next.
inline PeelData peel(const PlaneEmbedding& e) {
    validate_embedding(e);
    PeelData pd;
    if (e.g.edges.empty()) {
        pd.depth[0] = 1;
        pd.k = 1;
        return pd;
    }
    pd.fs = faces(e);
    int nf = static_cast<int>(pd.fs.walks.size());
    std::vector<std::set<int>> face_verts(nf);
    std::vector<std::vector<int>> vert_faces(e.g.n);
    for (int f = 0; f < nf; ++f)
        for (const DirEdge& d : pd.fs.walks[f])
            if (face_verts[f].insert(d.first).second) vert_faces[d.first].push_back(f);

    pd.face_round.assign(nf, -1);
    pd.face_round[pd.fs.outer] = 0;
    std::set<int> live;
    for (int v = 0; v < e.g.n; ++v) live.insert(v);
    int round = 0;
    while (!live.empty()) {
        ++round;
        std::vector<int> doomed;
        for (int v : live)
            for (int f : vert_faces[v])
                if (pd.face_round[f] >= 0) {
                    doomed.push_back(v);
                    break;
                }
        if (doomed.empty()) throw error("internal: peeling stalled");
        for (int v : doomed) {
            pd.depth[v] = round;
            live.erase(v);
            for (int f : vert_faces[v])
                if (pd.face_round[f] < 0) pd.face_round[f] = round;
        }
    }
    pd.k = round;
    return pd;
}

}  // namespace detail

inline PeelingResult peel_embedding(const PlaneEmbedding& e) {
    detail::PeelData pd = detail::peel(e);
    PeelingResult r;
    r.depth = std::move(pd.depth);
    r.k = pd.k;
    return r;
}

// Vertices of the outer face walk, deduplicated.
inline std::vector<int> outer_vertices(const PlaneEmbedding& e) {
    if (e.g.edges.empty()) return {0};
    FaceSet fs = faces(e);
    std::set<int> s;
    for (const DirEdge& d : fs.walks[fs.outer]) s.insert(d.first);
    return {s.begin(), s.end()};
}

// 1 + eccentricity of the outer boundary: how many BFS layers deep the
// embedding goes. Meaningful as an exact width only on inner-triangulated
// embeddings.
inline int width(const PlaneEmbedding& e) {
    validate_embedding(e);
    std::vector<int> layer = bfs_layers(e.g, outer_vertices(e));
    int w = 0;
    for (int v = 0; v < e.g.n; ++v) w = std::max(w, layer[v]);
    return w + 1;
}

namespace detail {

// Splits one face walk (given as its vertex sequence) into triangles by
// repeatedly cutting a chord from the best anchor: lowest peeling depth,
// then lowest id. Chords that would duplicate an existing edge are skipped;
// if no chord from any anchor works the face cannot be triangulated simply.
inline void triangulate_walk(std::vector<int> w, PlaneEmbedding& e,
                             const std::map<int, int>& depth) {
    int len = static_cast<int>(w.size());
    if (len <= 3) return;
    std::vector<int> anchors(w.begin(), w.end());
    std::sort(anchors.begin(), anchors.end(), [&](int a, int b) {
        return std::make_pair(depth.at(a), a) < std::make_pair(depth.at(b), b);
    });
    anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
    for (int c : anchors) {
        int i = 0;
        while (w[i] != c) ++i;
        for (int dj = 2; dj <= len - 2; ++dj) {
            int j = (i + dj) % len;
            if (w[j] == c || e.g.has_edge(c, w[j])) continue;
            e.g.add_edge(c, w[j]);
            insert_ccw_before(e.rotation[c], w[j], w[(i + len - 1) % len]);
            insert_ccw_before(e.rotation[w[j]], c, w[(j + len - 1) % len]);
            std::vector<int> a, b;
            for (int p = i; p != j; p = (p + 1) % len) a.push_back(w[p]);
            a.push_back(w[j]);
            for (int p = j; p != i; p = (p + 1) % len) b.push_back(w[p]);
            b.push_back(w[i]);
            triangulate_walk(std::move(a), e, depth);
            triangulate_walk(std::move(b), e, depth);
            return;
        }
    }
    throw error("inner face admits no simple triangulation");
}

}  // namespace detail

// Adds chords until every inner face is a triangle, leaving the outer face
// alone. Anchoring each cut at a vertex of minimum peeling depth keeps the
// peeling rounds of every vertex unchanged; this is re-checked at the end.
inline PlaneEmbedding triangulate_preserving_depth(const PlaneEmbedding& e) {
    validate_embedding(e);
    if (e.g.n < 3) throw error("triangulation needs at least 3 vertices");
    detail::PeelData pd = detail::peel(e);
    PlaneEmbedding out = e;
    for (int f = 0; f < static_cast<int>(pd.fs.walks.size()); ++f) {
        if (f == pd.fs.outer) continue;
        std::vector<int> w;
        for (const DirEdge& d : pd.fs.walks[f]) w.push_back(d.first);
        detail::triangulate_walk(std::move(w), out, pd.depth);
    }
    validate_embedding(out);
    detail::PeelData after = detail::peel(out);
    if (after.depth != pd.depth) throw error("triangulation disturbed peeling depths");
    for (int f = 0; f < static_cast<int>(after.fs.walks.size()); ++f)
        if (f != after.fs.outer && after.fs.walks[f].size() != 3)
            throw error("internal: non-triangular inner face survived");
    return out;
}

struct PathReduction {
    PlaneEmbedding e;
    MinorRecipe recipe;  // contracts every replacement path back onto its vertex
};

// Replaces each vertex of degree > 4 with a path laid along an incident face
// that reaches the outer region one round before the vertex does; the i-th
// path vertex picks up the i-th neighbor counter-clockwise from that face
// corner. Peeling depths survive unchanged (re-checked per replacement).
inline PathReduction reduce_degree_path(const PlaneEmbedding& input) {
    PathReduction out;
    out.e = input;
    validate_embedding(out.e);
    std::map<int, int> expected = detail::peel(out.e).depth;

    for (;;) {
        detail::PeelData pd = detail::peel(out.e);
        if (pd.depth != expected) throw error("degree reduction disturbed peeling depths");
        int u = -1;
        std::vector<int> deg = out.e.g.degrees();
        for (int v = 0; v < out.e.g.n && u < 0; ++v)
            if (deg[v] > 4) u = v;
        if (u < 0) break;

        // The face along which the path will lie, and u's first corner on it.
        int ku = pd.depth.at(u);
        int f = -1;
        for (int cand = 0; cand < static_cast<int>(pd.fs.walks.size()) && f < 0; ++cand)
            if (pd.face_round[cand] == ku - 1)
                for (const DirEdge& d : pd.fs.walks[cand])
                    if (d.first == u) {
                        f = cand;
                        break;
                    }
        if (f < 0) throw error("internal: no incident face reaches the outer region in time");
        int a = -1;  // walk predecessor of u at that corner
        const std::vector<DirEdge>& walk = pd.fs.walks[f];
        for (std::size_t i = 0; i < walk.size(); ++i)
            if (walk[i].first == u) {
                a = walk[(i + walk.size() - 1) % walk.size()].first;
                break;
            }

        int ell = deg[u];
        std::vector<int> nb(ell);  // neighbors counter-clockwise from a
        int ai = detail::rotation_index(out.e.rotation[u], a);
        for (int i = 0; i < ell; ++i) nb[i] = out.e.rotation[u][(ai + i) % ell];

        std::vector<int> pid(ell);  // path vertex ids; the first reuses u
        pid[0] = u;
        for (int i = 1; i < ell; ++i) pid[i] = out.e.g.n + i - 1;

        Graph ng;
        ng.n = out.e.g.n + ell - 1;
        for (const Edge& ed : out.e.g.edges)
            if (ed.first != u && ed.second != u) ng.add_edge(ed.first, ed.second);
        for (int i = 0; i < ell; ++i) ng.add_edge(pid[i], nb[i]);
        for (int i = 0; i + 1 < ell; ++i) ng.add_edge(pid[i], pid[i + 1]);

        std::vector<std::vector<int>> rot = out.e.rotation;
        rot.resize(ng.n);
        for (int i = 0; i < ell; ++i)
            rot[nb[i]][detail::rotation_index(rot[nb[i]], u)] = pid[i];
        rot[u] = {pid[1], nb[0]};
        for (int i = 1; i + 1 < ell; ++i) rot[pid[i]] = {nb[i], pid[i + 1], pid[i - 1]};
        rot[pid[ell - 1]] = {nb[ell - 1], pid[ell - 2]};

        std::pair<int, int> outer = out.e.outer;
        for (int i = 0; i < ell; ++i) {
            if (outer == std::make_pair(u, nb[i])) outer = {pid[i], nb[i]};
            if (outer == std::make_pair(nb[i], u)) outer = {nb[i], pid[i]};
        }

        out.e.g = std::move(ng);
        out.e.rotation = std::move(rot);
        out.e.outer = outer;
        for (int i = 1; i < ell; ++i) {
            out.recipe.contractions.push_back({u, pid[i], u});
            expected[pid[i]] = ku;
        }
        validate_embedding(out.e);
    }
    return out;
}

struct CycleReduction {
    Graph g;
    std::vector<std::vector<int>> rotation;
    MinorRecipe recipe;
};

// Surface-agnostic variant: each vertex of degree >= 5 becomes a cycle in
// rotation order, leaving every degree at most 4 and the genus unchanged.
inline CycleReduction reduce_degree_cycle(const Graph& g,
                                          const std::vector<std::vector<int>>& rotation) {
    CycleReduction out;
    out.g = g;
    out.rotation = rotation;
    int original_n = g.n;
    for (int u = 0; u < original_n; ++u) {
        int ell = static_cast<int>(out.rotation[u].size());
        if (ell < 5) continue;
        std::vector<int> nb = out.rotation[u];
        std::vector<int> cid(ell);
        cid[0] = u;
        for (int i = 1; i < ell; ++i) cid[i] = out.g.n + i - 1;

        Graph ng;
        ng.n = out.g.n + ell - 1;
        for (const Edge& ed : out.g.edges)
            if (ed.first != u && ed.second != u) ng.add_edge(ed.first, ed.second);
        for (int i = 0; i < ell; ++i) {
            ng.add_edge(cid[i], nb[i]);
            ng.add_edge(cid[i], cid[(i + 1) % ell]);
        }

        out.rotation.resize(ng.n);
        for (int i = 0; i < ell; ++i) {
            std::vector<int>& rn = out.rotation[nb[i]];
            rn[detail::rotation_index(rn, u)] = cid[i];
            out.rotation[cid[i]] = {nb[i], cid[(i + 1) % ell], cid[(i + ell - 1) % ell]};
        }
        out.g = std::move(ng);
        for (int i = 1; i < ell; ++i) out.recipe.contractions.push_back({u, cid[i], u});
    }
    return out;
}

}  // namespace boxrep
