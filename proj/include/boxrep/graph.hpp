// Graph utilities: traversal helpers, minor application, axis-angled graphs.
#pragma once

#include "boxrep/core.hpp"

namespace boxrep {

inline std::vector<int> component_of(const Graph& g, int start) {
    auto adj = g.adjacency();
    std::vector<char> seen(g.n, 0);
    std::vector<int> order = {start};
    seen[start] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int w : adj[order[i]])
            if (!seen[w]) {
                seen[w] = 1;
                order.push_back(w);
            }
    return order;
}

inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        if (seen[v]) continue;
        comps.push_back(component_of(g, v));
        for (int w : comps.back()) seen[w] = 1;
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    return g.n <= 1 || static_cast<int>(component_of(g, 0).size()) == g.n;
}

// BFS distance from a seed set; unreachable vertices keep -1.
inline std::vector<int> bfs_layers(const Graph& g, const std::vector<int>& seeds) {
    auto adj = g.adjacency();
    std::vector<int> layer(g.n, -1);
    std::vector<int> queue;
    for (int s : seeds)
        if (layer[s] < 0) {
            layer[s] = 0;
            queue.push_back(s);
        }
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (int w : adj[queue[i]])
            if (layer[w] < 0) {
                layer[w] = layer[queue[i]] + 1;
                queue.push_back(w);
            }
    return layer;
}

struct MinorResult {
    Graph graph;
    // surviving recipe label -> vertex id in `graph` (labels sorted ascending)
    std::map<int, int> label_to_id;
};

// Applies a recipe in normal form: edge deletions, then isolated-vertex
// deletions, then contractions in list order. Parallel edges collapse and
// loops vanish because the working graph stays simple.
inline MinorResult apply_minor(const Graph& g, const MinorRecipe& recipe) {
    std::set<int> live;
    for (int v = 0; v < g.n; ++v) live.insert(v);
    std::set<Edge> edges = g.edges;

    for (const Edge& e : recipe.deleted_edges) {
        if (!edges.count(e)) throw error("recipe deletes a non-existent edge");
        edges.erase(e);
    }
    for (int v : recipe.deleted_vertices) {
        if (!live.count(v)) throw error("recipe deletes an unknown vertex");
        for (const Edge& e : edges)
            if (e.first == v || e.second == v)
                throw error("recipe deletes a non-isolated vertex");
        live.erase(v);
    }
    for (const Contraction& c : recipe.contractions) {
        if (!live.count(c.a) || !live.count(c.b) || c.a == c.b)
            throw error("contraction endpoints invalid");
        if (!edges.count(make_edge(c.a, c.b))) throw error("contracting a non-edge");
        if (c.label != c.a && c.label != c.b && live.count(c.label))
            throw error("contraction label collides with a live vertex");
        std::set<Edge> next;
        for (const Edge& e : edges) {
            int u = e.first == c.a || e.first == c.b ? c.label : e.first;
            int v = e.second == c.a || e.second == c.b ? c.label : e.second;
            if (u != v) next.insert(make_edge(u, v));
        }
        edges = std::move(next);
        live.erase(c.a);
        live.erase(c.b);
        live.insert(c.label);
    }

    MinorResult out;
    int id = 0;
    for (int label : live) out.label_to_id[label] = id++;
    out.graph.n = id;
    for (const Edge& e : edges)
        out.graph.add_edge(out.label_to_id.at(e.first), out.label_to_id.at(e.second));
    return out;
}

// ── Axis-angled graphs ──────────────────────────────────────────────────────
// Every edge end carries one of the four axis directions; the directions
// around a vertex are pairwise distinct, so max degree is 4.

enum class Dir : std::uint8_t { N, E, S, W };

inline Cell dir_vec(Dir d) {
    switch (d) {
        case Dir::N: return {0, 1, 0};
        case Dir::E: return {1, 0, 0};
        case Dir::S: return {0, -1, 0};
        default: return {-1, 0, 0};
    }
}

inline Dir dir_opposite(Dir d) {
    switch (d) {
        case Dir::N: return Dir::S;
        case Dir::E: return Dir::W;
        case Dir::S: return Dir::N;
        default: return Dir::E;
    }
}

inline char dir_char(Dir d) {
    switch (d) {
        case Dir::N: return 'N';
        case Dir::E: return 'E';
        case Dir::S: return 'S';
        default: return 'W';
    }
}

inline Dir dir_from_char(char c) {
    switch (c) {
        case 'N': return Dir::N;
        case 'E': return Dir::E;
        case 'S': return Dir::S;
        case 'W': return Dir::W;
        default: throw error(std::string("unknown direction '") + c + "'");
    }
}

struct AngledGraph {
    Graph g;
    std::map<std::pair<int, int>, Dir> port;  // (at, to) -> direction leaving `at`

    Dir port_at(int at, int to) const {
        auto it = port.find({at, to});
        if (it == port.end()) throw error("missing port assignment");
        return it->second;
    }
};

inline void validate_angled(const AngledGraph& a) {
    std::map<int, std::set<Dir>> used;
    for (const Edge& e : a.g.edges) {
        Dir du = a.port_at(e.first, e.second);
        Dir dv = a.port_at(e.second, e.first);
        if (!used[e.first].insert(du).second)
            throw error("two edges leave vertex " + std::to_string(e.first) +
                        " in the same direction");
        if (!used[e.second].insert(dv).second)
            throw error("two edges leave vertex " + std::to_string(e.second) +
                        " in the same direction");
    }
}

}  // namespace boxrep
