// End-to-end builders: the quadratic all-graphs construction, the layered
// construction for bounded treewidth, the planar pixel pipeline, and the
// crossing-free voxel pipeline for graphs given by a rotation system.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "boxrep/layout.hpp"
#include "boxrep/transforms.hpp"
#include "boxrep/treedecomp.hpp"

namespace boxrep {

// Vertex v (rank i = v + 1) becomes a vertical strip of voxels at x = 2i on
// the bottom level, a horizontal strip at y = 2i two levels up, and one voxel
// joining the two above the diagonal. The strips of i and j then run past
// each other at (2i, 2j), one level apart, so a single voxel inserted there
// realizes the edge ij and nothing else ever touches.
inline Representation build_universal(const Graph& g) {
    if (g.n < 1) throw error("universal construction needs at least one vertex");
    Representation r;
    r.dim = 3;
    for (int v = 0; v < g.n; ++v) {
        int i = v + 1;
        Blob& b = r.blobs[v];
        for (int t = 2; t <= 2 * g.n; ++t) {
            b.insert({2 * i, t, 0});
            b.insert({t, 2 * i, 2});
        }
        b.insert({2 * i, 2 * i, 1});
    }
    for (auto [u, v] : g.edges) r.blobs[u].insert({2 * (u + 1), 2 * (v + 1), 1});
    if (size(r) != static_cast<std::size_t>(g.n) * (4 * g.n - 1) + g.edges.size())
        throw error("internal: quadratic construction size is off the closed form");
    if (!verify(r, g).valid)
        throw error("internal: quadratic construction failed verification");
    return r;
}

struct StarPlan {
    std::map<int, Cell> anchor;  // tree node -> a cell inside its blob
    std::map<int, int> owner;    // anchored node -> the vertex taking its column
};

// One anchor per tree-node blob (its smallest cell); nodes that carry edges
// get their star center as column owner.
inline StarPlan plan_stars(const Representation& tree_rep, const StarMap& stars) {
    StarPlan p;
    for (auto& [node, blob] : tree_rep.blobs) {
        if (blob.empty()) throw error("internal: empty tree-node blob");
        p.anchor[node] = *blob.begin();
    }
    p.owner = stars.center;
    return p;
}

// Layered pipeline: draw the decomposition tree as pixels, scale by 2, stack
// one copy per color at z = 1..k, give every vertex the copies of its bag
// nodes in its own color, then hand each star node's full anchor column to
// the star center. That realizes every edge of g plus stray contacts between
// co-located bags, which the final minor step deletes.
inline Representation build_treewidth(const Graph& g, const NiceTreeDecomposition& t) {
    auto rep = validate_nice(t);
    if (!rep.valid) throw error("invalid decomposition: " + rep.reason);
    std::set<int> covered;
    for (auto& b : t.bags) covered.insert(b.begin(), b.end());
    for (int v : covered)
        if (v < 0 || v >= g.n) throw error("bag holds an out-of-range vertex");
    if (static_cast<int>(covered.size()) != g.n) throw error("decomposition misses a vertex");
    StarMap stars = star_map(t, g);
    BagColoring col = bag_coloring(t);
    int k = col.k;

    Graph skeleton;
    skeleton.n = t.nodes();
    for (int mu = 0; mu < t.nodes(); ++mu)
        for (int c : t.kids[mu])
            if (c != -1) skeleton.add_edge(mu, c);
    TreeLayout tl = layout_tree(skeleton);
    Representation gamma = take_minor(drawing_to_rep(tl.tree, tl.drawing), tl.recipe);
    gamma = scale(gamma, 2);
    StarPlan plan = plan_stars(gamma, stars);

    Representation work;
    work.dim = 3;
    for (int mu = 0; mu < t.nodes(); ++mu)
        for (int v : t.bags[mu])
            for (const Cell& c : gamma.blobs.at(mu))
                work.blobs[v].insert({c.x, c.y, col.color.at(v)});
    for (auto& [mu, u] : plan.owner) {
        Cell a = plan.anchor.at(mu);
        for (int z = 1; z <= k; ++z) {
            Cell cz{a.x, a.y, z};
            for (int v : t.bags[mu])
                if (v != u) work.blobs[v].erase(cz);
            work.blobs[u].insert(cz);
        }
    }

    Graph got = contact_graph(work);
    for (auto e : g.edges)
        if (!got.edges.count(e)) throw error("internal: layered construction lost an edge");
    Representation res = take_minor(work, contact_diff(work, g));
    if (!verify(res, g).valid)
        throw error("internal: layered construction failed verification");
    return res;
}

// Planar pipeline: spread high degrees along a face into paths, draw the
// degree-4 embedding without crossings, turn the drawing into pixels, and
// contract every replacement path back onto its vertex.
inline Representation build_2d(const PlaneEmbedding& e) {
    PathReduction red = reduce_degree_path(e);
    OrthoDrawing d = layout_deg4_planar(red.e);
    Representation pixels = drawing_to_rep(red.e.g, d);
    Representation res = take_minor(pixels, red.recipe);
    if (!verify(res, e.g).valid)
        throw error("internal: planar construction failed verification");
    return res;
}

// Rotation-system pipeline: spread high degrees into rotation-order cycles,
// draw the degree-4 graph with crossings, subdivide the bends, split each
// vertex over two z-levels to pull the crossings apart, read off the voxels,
// and contract connectors, bends and cycles back. No stray contacts arise,
// so the minor steps never delete anything.
inline Representation build_genus(const Graph& g,
                                  const std::vector<std::vector<int>>& rotation) {
    CycleReduction red = reduce_degree_cycle(g, rotation);
    OrthoDrawing d = layout_deg4_any(red.g);
    BendSubdivision sub = subdivide_bends(d);
    LayerSplit split = split_layers(sub.g, sub.d, sub.bends);
    Representation voxels = drawing_to_rep(split.g, split.d);
    Representation res = take_minor(take_minor(voxels, split.recipe), red.recipe);
    if (!verify(res, g).valid)
        throw error("internal: layered pipeline failed verification");
    return res;
}

}  // namespace boxrep
