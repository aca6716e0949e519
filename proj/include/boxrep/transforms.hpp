// Bridges between drawings, representations, and minors: a crossing-free
// drawing becomes a contact representation of size exactly 2l + n - m, and a
// minor recipe is executed on blobs with at most a 3^d size blow-up.
#pragma once

#include "boxrep/grid.hpp"
#include "boxrep/ortho.hpp"

namespace boxrep {

namespace detail {

inline bool blobs_touch(const Blob& a, const Blob& b, int dim) {
    const Blob& small = a.size() <= b.size() ? a : b;
    const Blob& big = a.size() <= b.size() ? b : a;
    for (const Cell& c : small)
        for (const Cell& n : cell_neighbors(c, dim))
            if (big.count(n)) return true;
    return false;
}

}  // namespace detail

// One cell per vertex point and per unit of doubled route length. The halves
// of each route feed the blobs of its endpoints; the middle cell goes to the
// smaller endpoint id.
inline Representation drawing_to_rep(const Graph& g, const OrthoDrawing& d) {
    OrthoDrawing strict = d;
    strict.crossings_allowed = false;
    validate_drawing(strict);
    if (static_cast<int>(d.pos.size()) != g.n) throw error("drawing does not cover the vertex set");
    for (auto& [v, p] : d.pos)
        if (v < 0 || v >= g.n) throw error("drawing does not cover the vertex set");
    for (const Edge& e : g.edges)
        if (!d.routes.count(e)) throw error("graph edge has no route");
    if (d.routes.size() != g.edges.size()) throw error("route present for a non-edge");

    Representation r;
    r.dim = d.dim;
    for (auto& [v, p] : d.pos) r.blobs[v].insert({2 * p.x, 2 * p.y, 2 * p.z});
    for (auto& [e, poly] : d.routes) {
        std::vector<Cell> cells;  // the doubled route, cell by cell
        Cell at = {2 * poly[0].x, 2 * poly[0].y, 2 * poly[0].z};
        cells.push_back(at);
        for (std::size_t i = 1; i < poly.size(); ++i) {
            Cell to = {2 * poly[i].x, 2 * poly[i].y, 2 * poly[i].z};
            Cell step = detail::step_dir(at, to);
            while (!(at == to)) {
                at = {at.x + step.x, at.y + step.y, at.z + step.z};
                cells.push_back(at);
            }
        }
        std::size_t len = cells.size() - 1;  // == 2 * route length
        for (std::size_t i = 1; i < len; ++i)
            r.blobs[2 * i <= len ? e.first : e.second].insert(cells[i]);
    }
    long long want = 2 * d.total_length() + g.n - g.m();
    if (size(r) != want) throw error("internal: representation size is off the formula");
    if (!verify(r, g).valid) throw error("internal: drawing produced a wrong contact graph");
    return r;
}

// Executes a normal-form recipe on blobs: with edge deletions present the
// representation is 3-scaled first, then the lexicographically smaller
// endpoint loses every cell that faces the other blob. Contractions merge
// touching blobs under the contraction label; surviving blobs are relabeled
// in sorted order, matching apply_minor.
inline Representation take_minor(const Representation& r, const MinorRecipe& recipe) {
    VerifyReport d = rep_diagnostics(r);
    if (!d.valid) throw error("invalid representation");
    Representation work = recipe.deleted_edges.empty() ? r : scale(r, 3);
    long long bound = size(r);
    for (int f = 0; f < (recipe.deleted_edges.empty() ? 0 : work.dim); ++f) bound *= 3;

    for (const Edge& e : recipe.deleted_edges) {
        auto u = work.blobs.find(e.first);
        auto v = work.blobs.find(e.second);
        if (e.first >= e.second || u == work.blobs.end() || v == work.blobs.end())
            throw error("recipe deletes an unknown edge");
        std::vector<Cell> doomed;
        for (const Cell& c : u->second)
            for (const Cell& n : cell_neighbors(c, work.dim))
                if (v->second.count(n)) {
                    doomed.push_back(c);
                    break;
                }
        if (doomed.empty()) throw error("recipe deletes a non-existent contact");
        for (const Cell& c : doomed) u->second.erase(c);
        if (u->second.empty() || !blob_connected(u->second, work.dim))
            throw error("internal: contact removal broke a blob");
        if (detail::blobs_touch(u->second, v->second, work.dim))
            throw error("internal: contact removal left a contact");
    }
    for (int v : recipe.deleted_vertices) {
        auto it = work.blobs.find(v);
        if (it == work.blobs.end()) throw error("recipe deletes an unknown vertex");
        for (auto& [w, b] : work.blobs)
            if (w != v && detail::blobs_touch(it->second, b, work.dim))
                throw error("recipe deletes a non-isolated vertex");
        work.blobs.erase(it);
    }
    for (const Contraction& c : recipe.contractions) {
        auto a = work.blobs.find(c.a);
        auto b = work.blobs.find(c.b);
        if (a == work.blobs.end() || b == work.blobs.end() || c.a == c.b)
            throw error("contraction endpoints invalid");
        if (c.label != c.a && c.label != c.b && work.blobs.count(c.label))
            throw error("contraction label collides with a live vertex");
        if (!detail::blobs_touch(a->second, b->second, work.dim))
            throw error("contracting a non-contact");
        Blob merged = a->second;
        merged.insert(b->second.begin(), b->second.end());
        work.blobs.erase(a);
        work.blobs.erase(c.b);
        work.blobs[c.label] = std::move(merged);
    }

    Representation out;
    out.dim = work.dim;
    int id = 0;
    for (auto& [label, b] : work.blobs) out.blobs[id++] = std::move(b);
    if (size(out) > bound) throw error("internal: minor exceeded the size bound");
    return out;
}

// The recipe that deletes every realized contact the target graph does not
// ask for. Vertex sets must already agree.
inline MinorRecipe contact_diff(const Representation& r, const Graph& g) {
    Graph c = contact_graph(r);
    if (c.n != g.n) throw error("representation and target differ in vertex count");
    for (const Edge& e : g.edges)
        if (!c.edges.count(e)) throw error("required contact missing from the representation");
    MinorRecipe rec;
    for (const Edge& e : c.edges)
        if (!g.edges.count(e)) rec.deleted_edges.push_back(e);
    return rec;
}

}  // namespace boxrep
