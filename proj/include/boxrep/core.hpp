// Core value types shared across the library: grid cells, blobs,
// representations, graphs and minor recipes.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace boxrep {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : error {
    parse_error(const std::string& what, int line)
        : error(what + " (line " + std::to_string(line) + ")"), line(line) {}
    int line;
};

// Unit grid cell. 2D structures keep z == 0.
struct Cell {
    int x = 0, y = 0, z = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline Cell operator+(Cell a, Cell b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }

// Face neighbors of a cell for the given dimension (4 in 2D, 6 in 3D).
inline std::vector<Cell> cell_neighbors(Cell c, int dim) {
    std::vector<Cell> out = {{c.x - 1, c.y, c.z}, {c.x + 1, c.y, c.z},
                             {c.x, c.y - 1, c.z}, {c.x, c.y + 1, c.z}};
    if (dim == 3) {
        out.push_back({c.x, c.y, c.z - 1});
        out.push_back({c.x, c.y, c.z + 1});
    }
    return out;
}

// True iff the cells share a face, i.e. L1 distance exactly 1.
inline bool cells_adjacent(Cell a, Cell b) {
    int d = std::abs(a.x - b.x) + std::abs(a.y - b.y) + std::abs(a.z - b.z);
    return d == 1;
}

using Blob = std::set<Cell>;

inline bool blob_connected(const Blob& b, int dim) {
    if (b.empty()) return false;
    std::vector<Cell> stack = {*b.begin()};
    std::set<Cell> seen = {*b.begin()};
    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        for (Cell n : cell_neighbors(c, dim))
            if (b.count(n) && seen.insert(n).second) stack.push_back(n);
    }
    return seen.size() == b.size();
}

// Contact representation: one blob of unit cells per vertex id.
struct Representation {
    int dim = 2;  // 2 or 3
    std::map<int, Blob> blobs;
};

inline std::size_t size(const Representation& r) {
    std::size_t s = 0;
    for (auto& [v, b] : r.blobs) s += b.size();
    return s;
}

using Edge = std::pair<int, int>;  // stored with first < second

inline Edge make_edge(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

// Simple undirected graph on vertex ids [0, n).
struct Graph {
    int n = 0;
    std::set<Edge> edges;

    bool has_edge(int u, int v) const { return edges.count(make_edge(u, v)) > 0; }
    void add_edge(int u, int v) {
        if (u == v) throw error("self loop");
        if (u < 0 || v < 0 || u >= n || v >= n) throw error("edge endpoint out of range");
        edges.insert(make_edge(u, v));
    }
    int m() const { return static_cast<int>(edges.size()); }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(n);
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        return adj;
    }
    std::vector<int> degrees() const {
        std::vector<int> d(n, 0);
        for (auto [u, v] : edges) d[u]++, d[v]++;
        return d;
    }
    friend bool operator==(const Graph& a, const Graph& b) = default;
};

// One edge contraction: b is merged into a, the merged vertex is relabeled
// `label` (pipelines use label == a so original ids survive).
struct Contraction {
    int a = 0, b = 0, label = 0;
};

// Minor recipe in normal form: edge deletions, then deletions of (by then)
// isolated vertices, then an ordered list of contractions.
struct MinorRecipe {
    std::vector<Edge> deleted_edges;
    std::vector<int> deleted_vertices;
    std::vector<Contraction> contractions;

    bool empty() const {
        return deleted_edges.empty() && deleted_vertices.empty() && contractions.empty();
    }
};

struct VerifyReport {
    bool valid = false;
    std::vector<Edge> missing_edges;    // edges of g with no realized contact
    std::vector<Edge> extra_contacts;   // realized contacts absent from g
    std::vector<Cell> overlap_cells;    // cells claimed by more than one blob
    std::vector<int> disconnected_vertices;  // empty or disconnected blobs
};

}  // namespace boxrep
