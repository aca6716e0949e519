// Line-oriented text formats with # comments, and the SVG/OBJ exporters.
// Every parser reports the offending line number; every emitter writes in a
// fixed order so identical values serialize identically.
#pragma once

#include <climits>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "boxrep/graph.hpp"
#include "boxrep/grid.hpp"
#include "boxrep/ortho.hpp"
#include "boxrep/treedecomp.hpp"

namespace boxrep {

namespace detail {

struct ContentLine {
    int number;
    std::vector<std::string> tokens;
};

inline std::vector<ContentLine> content_lines(std::istream& in) {
    std::vector<ContentLine> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        std::istringstream split(raw);
        ContentLine line{number, {}};
        std::string tok;
        while (split >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

inline int to_int(const std::string& tok, int line) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (...) {
        throw parse_error("expected an integer, got '" + tok + "'", line);
    }
    if (used != tok.size())
        throw parse_error("expected an integer, got '" + tok + "'", line);
    if (v < INT_MIN || v > INT_MAX) throw parse_error("integer out of range", line);
    return (int)v;
}

inline void want(bool ok, const std::string& what, int line) {
    if (!ok) throw parse_error(what, line);
}

}  // namespace detail

// ── Graph: header `n m`, one `u v` line per edge ────────────────────────────

inline std::string emit_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.edges.size() << '\n';
    for (const Edge& e : g.edges) out << e.first << ' ' << e.second << '\n';
    return out.str();
}

inline Graph parse_graph(std::istream& in) {
    auto lines = detail::content_lines(in);
    if (lines.empty()) throw parse_error("missing graph header", 1);
    detail::want(lines[0].tokens.size() == 2, "graph header is `n m`", lines[0].number);
    Graph g;
    g.n = detail::to_int(lines[0].tokens[0], lines[0].number);
    int m = detail::to_int(lines[0].tokens[1], lines[0].number);
    detail::want(g.n >= 0 && m >= 0, "graph header is `n m`", lines[0].number);
    detail::want((int)lines.size() == m + 1, "edge count disagrees with the header",
                 lines[0].number);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        detail::want(lines[i].tokens.size() == 2, "edge line is `u v`", lines[i].number);
        int u = detail::to_int(lines[i].tokens[0], lines[i].number);
        int v = detail::to_int(lines[i].tokens[1], lines[i].number);
        try {
            g.add_edge(u, v);
        } catch (const error& ex) {
            throw parse_error(ex.what(), lines[i].number);
        }
    }
    return g;
}

// ── Embedding: `v: n1 n2 …` per vertex (CCW), plus `outer u v` ──────────────

inline std::string emit_rotation(const std::vector<std::vector<int>>& rotation) {
    std::ostringstream out;
    for (std::size_t v = 0; v < rotation.size(); ++v) {
        out << v << ':';
        for (int w : rotation[v]) out << ' ' << w;
        out << '\n';
    }
    return out.str();
}

inline std::string emit_embedding(const PlaneEmbedding& e) {
    std::ostringstream out;
    out << emit_rotation(e.rotation);
    out << "outer " << e.outer.first << ' ' << e.outer.second << '\n';
    return out.str();
}

namespace detail {

inline PlaneEmbedding parse_rotation_lines(std::istream& in, bool need_outer) {
    auto lines = content_lines(in);
    std::map<int, std::vector<int>> rot;
    bool has_outer = false;
    std::pair<int, int> outer{0, -1};
    for (const ContentLine& line : lines) {
        if (line.tokens[0] == "outer") {
            want(line.tokens.size() == 3, "outer line is `outer u v`", line.number);
            want(!has_outer, "outer given twice", line.number);
            has_outer = true;
            outer = {to_int(line.tokens[1], line.number), to_int(line.tokens[2], line.number)};
            continue;
        }
        std::string head = line.tokens[0];
        want(head.size() > 1 && head.back() == ':', "vertex line is `v: n1 n2 ...`",
             line.number);
        head.pop_back();
        int v = to_int(head, line.number);
        want(!rot.count(v), "vertex listed twice", line.number);
        std::vector<int>& order = rot[v];
        for (std::size_t i = 1; i < line.tokens.size(); ++i)
            order.push_back(to_int(line.tokens[i], line.number));
    }
    int last = lines.empty() ? 1 : lines.back().number;
    want(!need_outer || has_outer, "missing outer line", last);
    PlaneEmbedding e;
    e.g.n = (int)rot.size();
    e.rotation.resize(e.g.n);
    for (auto& [v, order] : rot) {
        want(v >= 0 && v < e.g.n, "vertex ids must cover 0..n-1", last);
        e.rotation[v] = order;
    }
    for (int v = 0; v < e.g.n; ++v)
        for (int w : e.rotation[v]) {
            want(w >= 0 && w < e.g.n, "neighbor out of range", last);
            if (v < w) {
                try {
                    e.g.add_edge(v, w);
                } catch (const error& ex) {
                    throw parse_error(ex.what(), last);
                }
            }
        }
    if (has_outer) e.outer = outer;
    return e;
}

}  // namespace detail

inline PlaneEmbedding parse_embedding(std::istream& in) {
    return detail::parse_rotation_lines(in, true);
}

inline std::vector<std::vector<int>> parse_rotation(std::istream& in) {
    return detail::parse_rotation_lines(in, false).rotation;
}

// ── Angled graph: header `n m`, then `u v du dv` per edge ───────────────────

inline std::string emit_angled(const AngledGraph& a) {
    std::ostringstream out;
    out << a.g.n << ' ' << a.g.edges.size() << '\n';
    for (const Edge& e : a.g.edges)
        out << e.first << ' ' << e.second << ' ' << dir_char(a.port_at(e.first, e.second))
            << ' ' << dir_char(a.port_at(e.second, e.first)) << '\n';
    return out.str();
}

inline AngledGraph parse_angled(std::istream& in) {
    auto lines = detail::content_lines(in);
    if (lines.empty()) throw parse_error("missing angled-graph header", 1);
    detail::want(lines[0].tokens.size() == 2, "angled-graph header is `n m`",
                 lines[0].number);
    AngledGraph a;
    a.g.n = detail::to_int(lines[0].tokens[0], lines[0].number);
    int m = detail::to_int(lines[0].tokens[1], lines[0].number);
    detail::want((int)lines.size() == m + 1, "edge count disagrees with the header",
                 lines[0].number);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& t = lines[i].tokens;
        detail::want(t.size() == 4, "edge line is `u v du dv`", lines[i].number);
        int u = detail::to_int(t[0], lines[i].number);
        int v = detail::to_int(t[1], lines[i].number);
        detail::want(t[2].size() == 1 && t[3].size() == 1, "ports are N, E, S or W",
                     lines[i].number);
        try {
            a.g.add_edge(u, v);
            a.port[{u, v}] = dir_from_char(t[2][0]);
            a.port[{v, u}] = dir_from_char(t[3][0]);
        } catch (const error& ex) {
            throw parse_error(ex.what(), lines[i].number);
        }
    }
    return a;
}

// ── Drawing: `<id> x y [z]` vertex lines, `e u v : x y [z] ; …` routes ──────

inline std::string emit_drawing(const OrthoDrawing& d) {
    std::ostringstream out;
    auto coords = [&](const Cell& c) {
        out << c.x << ' ' << c.y;
        if (d.dim == 3) out << ' ' << c.z;
    };
    for (auto& [v, p] : d.pos) {
        out << v << ' ';
        coords(p);
        out << '\n';
    }
    for (auto& [e, poly] : d.routes) {
        out << "e " << e.first << ' ' << e.second << " :";
        for (std::size_t i = 0; i < poly.size(); ++i) {
            out << (i ? " ; " : " ");
            coords(poly[i]);
        }
        out << '\n';
    }
    if (d.crossings_allowed) out << "crossings allowed\n";
    return out.str();
}

inline OrthoDrawing parse_drawing(std::istream& in) {
    auto lines = detail::content_lines(in);
    OrthoDrawing d;
    int coord_count = -1;
    auto learn = [&](int count, int line) {
        detail::want(count == 2 || count == 3, "coordinates are `x y` or `x y z`", line);
        if (coord_count < 0) coord_count = count;
        detail::want(coord_count == count, "mixed 2D and 3D coordinates", line);
    };
    for (const detail::ContentLine& line : lines) {
        const auto& t = line.tokens;
        if (t[0] == "crossings") {
            detail::want(t.size() == 2 && t[1] == "allowed", "unknown directive",
                         line.number);
            d.crossings_allowed = true;
            continue;
        }
        if (t[0] == "e") {
            detail::want(t.size() >= 4 && t[3] == ":", "route line is `e u v : x y ...`",
                         line.number);
            Edge e = make_edge(detail::to_int(t[1], line.number),
                               detail::to_int(t[2], line.number));
            detail::want(!d.routes.count(e), "route listed twice", line.number);
            std::vector<Cell>& poly = d.routes[e];
            std::vector<int> nums;
            for (std::size_t i = 4; i < t.size(); ++i) {
                if (t[i] == ";") {
                    learn((int)nums.size(), line.number);
                    poly.push_back({nums[0], nums[1], nums.size() == 3 ? nums[2] : 0});
                    nums.clear();
                } else {
                    nums.push_back(detail::to_int(t[i], line.number));
                }
            }
            learn((int)nums.size(), line.number);
            poly.push_back({nums[0], nums[1], nums.size() == 3 ? nums[2] : 0});
            continue;
        }
        detail::want(t.size() == 3 || t.size() == 4, "vertex line is `<id> x y [z]`",
                     line.number);
        int v = detail::to_int(t[0], line.number);
        detail::want(!d.pos.count(v), "vertex placed twice", line.number);
        learn((int)t.size() - 1, line.number);
        d.pos[v] = {detail::to_int(t[1], line.number), detail::to_int(t[2], line.number),
                    t.size() == 4 ? detail::to_int(t[3], line.number) : 0};
    }
    d.dim = coord_count == 3 ? 3 : 2;
    return d;
}

// ── Tree decomposition: `node μ: v1 v2 …` bags and `tedge μ ν` edges ────────

inline std::string emit_td(const TreeDecomposition& t) {
    std::ostringstream out;
    for (std::size_t mu = 0; mu < t.bags.size(); ++mu) {
        out << "node " << mu << ':';
        for (int v : t.bags[mu]) out << ' ' << v;
        out << '\n';
    }
    for (const Edge& e : t.tree.edges) out << "tedge " << e.first << ' ' << e.second << '\n';
    return out.str();
}

inline TreeDecomposition parse_td(std::istream& in) {
    auto lines = detail::content_lines(in);
    std::map<int, std::set<int>> bags;
    std::vector<std::pair<int, int>> tedges;
    for (const detail::ContentLine& line : lines) {
        const auto& t = line.tokens;
        if (t[0] == "node") {
            detail::want(t.size() >= 2 && t[1].size() > 1 && t[1].back() == ':',
                         "bag line is `node id: v1 v2 ...`", line.number);
            std::string head = t[1];
            head.pop_back();
            int mu = detail::to_int(head, line.number);
            detail::want(!bags.count(mu), "node listed twice", line.number);
            std::set<int>& bag = bags[mu];
            for (std::size_t i = 2; i < t.size(); ++i)
                bag.insert(detail::to_int(t[i], line.number));
        } else if (t[0] == "tedge") {
            detail::want(t.size() == 3, "tree edge line is `tedge u v`", line.number);
            tedges.push_back({detail::to_int(t[1], line.number),
                              detail::to_int(t[2], line.number)});
        } else {
            throw parse_error("expected a `node` or `tedge` line", line.number);
        }
    }
    int last = lines.empty() ? 1 : lines.back().number;
    TreeDecomposition t;
    t.tree.n = (int)bags.size();
    t.bags.resize(bags.size());
    t.width = -1;
    for (auto& [mu, bag] : bags) {
        detail::want(mu >= 0 && mu < t.tree.n, "node ids must cover 0..N-1", last);
        t.bags[mu] = bag;
        t.width = std::max<int>(t.width, (int)bag.size() - 1);
    }
    for (auto [a, b] : tedges) {
        try {
            t.tree.add_edge(a, b);
        } catch (const error& ex) {
            throw parse_error(ex.what(), last);
        }
    }
    return t;
}

// ── Representation: header `<dim> <n>`, one `x y [z] v` line per cell ───────

inline std::string emit_rep(const Representation& r) {
    std::ostringstream out;
    out << r.dim << ' ' << r.blobs.size() << '\n';
    for (auto& [v, blob] : r.blobs)
        for (const Cell& c : blob) {
            out << c.x << ' ' << c.y;
            if (r.dim == 3) out << ' ' << c.z;
            out << ' ' << v << '\n';
        }
    return out.str();
}

inline Representation parse_rep(std::istream& in) {
    auto lines = detail::content_lines(in);
    if (lines.empty()) throw parse_error("missing representation header", 1);
    detail::want(lines[0].tokens.size() == 2, "representation header is `dim n`",
                 lines[0].number);
    Representation r;
    r.dim = detail::to_int(lines[0].tokens[0], lines[0].number);
    int n = detail::to_int(lines[0].tokens[1], lines[0].number);
    detail::want(r.dim == 2 || r.dim == 3, "dimension must be 2 or 3", lines[0].number);
    std::size_t want_fields = r.dim == 2 ? 3 : 4;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& t = lines[i].tokens;
        detail::want(t.size() == want_fields,
                     r.dim == 2 ? "cell line is `x y v`" : "cell line is `x y z v`",
                     lines[i].number);
        Cell c{detail::to_int(t[0], lines[i].number), detail::to_int(t[1], lines[i].number),
               r.dim == 3 ? detail::to_int(t[2], lines[i].number) : 0};
        int v = detail::to_int(t.back(), lines[i].number);
        r.blobs[v].insert(c);
    }
    detail::want((int)r.blobs.size() == n, "blob count disagrees with the header",
                 lines.empty() ? 1 : lines.back().number);
    return r;
}

// ── Exporters ───────────────────────────────────────────────────────────────

namespace detail {

inline std::string css_color(int id) {
    int h = ((id * 47) % 360 + 360) % 360;
    double s = 0.62, v = 0.86;
    double c = v * s, x = c * (1 - std::abs(std::fmod(h / 60.0, 2.0) - 1)), m = v - c;
    double rgb[3] = {0, 0, 0};
    switch (h / 60) {
        case 0: rgb[0] = c, rgb[1] = x; break;
        case 1: rgb[0] = x, rgb[1] = c; break;
        case 2: rgb[1] = c, rgb[2] = x; break;
        case 3: rgb[1] = x, rgb[2] = c; break;
        case 4: rgb[0] = x, rgb[2] = c; break;
        default: rgb[0] = c, rgb[2] = x; break;
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", (int)((rgb[0] + m) * 255),
                  (int)((rgb[1] + m) * 255), (int)((rgb[2] + m) * 255));
    return buf;
}

}  // namespace detail

// One unit square per cell, color keyed by vertex id, north up.
inline std::string export_svg(const Representation& r) {
    if (r.dim != 2) throw error("svg export needs a 2D representation");
    int minx = INT_MAX, miny = INT_MAX, maxx = INT_MIN, maxy = INT_MIN;
    for (auto& [v, blob] : r.blobs)
        for (const Cell& c : blob) {
            minx = std::min(minx, c.x);
            miny = std::min(miny, c.y);
            maxx = std::max(maxx, c.x);
            maxy = std::max(maxy, c.y);
        }
    std::ostringstream out;
    int w = size(r) == 0 ? 1 : maxx - minx + 1;
    int h = size(r) == 0 ? 1 : maxy - miny + 1;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << ' ' << h
        << "\" shape-rendering=\"crispEdges\">\n";
    for (auto& [v, blob] : r.blobs) {
        out << "  <g id=\"vertex-" << v << "\" fill=\"" << detail::css_color(v) << "\">\n";
        for (const Cell& c : blob)
            out << "    <rect x=\"" << c.x - minx << "\" y=\"" << maxy - c.y
                << "\" width=\"1\" height=\"1\"/>\n";
        out << "  </g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

// One unit cube per cell, grouped and material-keyed by vertex id.
inline std::string export_obj(const Representation& r) {
    if (r.dim != 3) throw error("obj export needs a 3D representation");
    std::ostringstream out;
    out << "# " << size(r) << " cells, " << r.blobs.size() << " blobs\n";
    int base = 0;
    for (auto& [v, blob] : r.blobs) {
        out << "g blob-" << v << "\nusemtl " << detail::css_color(v).substr(1) << "\n";
        for (const Cell& c : blob) {
            for (int dz = 0; dz <= 1; ++dz)
                for (int dy = 0; dy <= 1; ++dy)
                    for (int dx = 0; dx <= 1; ++dx)
                        out << "v " << c.x + dx << ' ' << c.y + dy << ' ' << c.z + dz
                            << '\n';
            // corner order: x fastest, then y, then z
            const int f[6][4] = {{1, 2, 4, 3}, {5, 7, 8, 6}, {1, 5, 6, 2},
                                 {3, 4, 8, 7}, {1, 3, 7, 5}, {2, 6, 8, 4}};
            for (auto& q : f) {
                out << 'f';
                for (int k : q) out << ' ' << base + k;
                out << '\n';
            }
            base += 8;
        }
    }
    return out.str();
}

}  // namespace boxrep
