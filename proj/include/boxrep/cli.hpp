// Subcommand dispatch for the boxrep tool. Kept in a header so tests can
// drive the exact main() logic through string streams.
//
// Exit codes: 0 success, 1 parse/validation/build failure, 2 usage error.
#pragma once

#include <fstream>
#include <iostream>
#include <sstream>

#include "boxrep/construct.hpp"
#include "boxrep/gadgets.hpp"
#include "boxrep/io.hpp"
#include "boxrep/oracle.hpp"

namespace boxrep::cli {

namespace detail {

struct usage_error : error {
    using error::error;
};

inline const char* usage_text() {
    return
        "usage: boxrep <command> [args]\n"
        "\n"
        "commands:\n"
        "  build2d [embedding]                pixel representation of a plane graph\n"
        "  build3d-universal [graph]          voxel representation of any graph\n"
        "  build3d-treewidth [graph] [--td FILE | --exact | --heuristic]\n"
        "                                     voxel representation sized by treewidth\n"
        "  build3d-genus <graph> <rotation>   voxel representation from a rotation system\n"
        "  verify <rep> <graph>               check a representation against a graph\n"
        "  minimize [graph] [--dim D] [--grid WxH[xD]] [--cap C] [--budget N]\n"
        "                                     exhaustive search for a smallest representation\n"
        "  gadget wheel [angled]              wheel substitution of an angled graph\n"
        "  gadget cage2d <t> <w> <h>          pixel cage around a hollow\n"
        "  gadget cage3d <t> <w> <h> <d>      voxel cage around a hollow\n"
        "  gadget nested-triangles <k> [--fully-nested]\n"
        "                                     plane graph with peeling depth k (2k when fully nested)\n"
        "  gadget clique-union <q> <c>        disjoint union of c copies of K_q\n"
        "  stats [rep]                        dimension, vertex count, size, bounding box\n"
        "  export <svg|obj|txt> [rep]         render a representation\n"
        "  help                               this text\n"
        "\n"
        "file arguments read stdin when omitted or given as -\n";
}

// Split one subcommand's arguments into positionals, valued flags and
// switches. Anything starting with -- must be declared.
struct Parsed {
    std::vector<std::string> pos;
    std::map<std::string, std::string> flag;
    std::set<std::string> on;
};

inline Parsed parse_args(const std::vector<std::string>& args, std::size_t from,
                         const std::set<std::string>& valued,
                         const std::set<std::string>& switches) {
    Parsed p;
    for (std::size_t i = from; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a.rfind("--", 0) != 0 || a == "-") {
            p.pos.push_back(a);
        } else if (valued.count(a)) {
            if (++i == args.size()) throw usage_error(a + " needs a value");
            p.flag[a] = args[i];
        } else if (switches.count(a)) {
            p.on.insert(a);
        } else {
            throw usage_error("unknown option " + a);
        }
    }
    return p;
}

// Reads a named file, or all of `in` for a missing/'-' path. Each command
// may take at most one input from stdin.
struct Inputs {
    std::istream& in;
    bool stdin_used = false;

    std::stringstream slurp(const std::string& path) {
        std::stringstream buf;
        if (path.empty() || path == "-") {
            if (stdin_used) throw usage_error("only one input may come from stdin");
            stdin_used = true;
            buf << in.rdbuf();
            return buf;
        }
        std::ifstream f(path);
        if (!f) throw error("cannot open " + path);
        buf << f.rdbuf();
        return buf;
    }

    std::string pos_or_stdin(const Parsed& p, std::size_t i) {
        return i < p.pos.size() ? p.pos[i] : std::string();
    }
};

inline int to_int(const std::string& tok, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used == tok.size()) return v;
    } catch (...) {
    }
    throw usage_error(what + " must be an integer, got '" + tok + "'");
}

inline SearchBounds parse_grid(const std::string& spec) {
    std::vector<int> parts;
    std::string cur;
    for (char c : spec + "x") {
        if (c == 'x') {
            parts.push_back(to_int(cur, "grid extent"));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (parts.size() != 2 && parts.size() != 3)
        throw usage_error("grid is WxH or WxHxD, got '" + spec + "'");
    SearchBounds b;
    b.w = parts[0];
    b.h = parts[1];
    b.d = parts.size() == 3 ? parts[2] : 1;
    return b;
}

inline void want_arity(const Parsed& p, std::size_t lo, std::size_t hi) {
    if (p.pos.size() < lo || p.pos.size() > hi)
        throw usage_error("wrong number of arguments");
}

inline int cmd_verify(Inputs& files, const Parsed& p, std::ostream& out) {
    auto rs = files.slurp(p.pos[0]);
    auto gs = files.slurp(p.pos[1]);
    Representation r = parse_rep(rs);
    Graph g = parse_graph(gs);
    VerifyReport rep = verify(r, g);
    if (rep.valid) {
        out << "valid\n";
        return 0;
    }
    for (const Edge& e : rep.missing_edges)
        out << "missing contact " << e.first << ' ' << e.second << '\n';
    for (const Edge& e : rep.extra_contacts)
        out << "extra contact " << e.first << ' ' << e.second << '\n';
    for (const Cell& c : rep.overlap_cells) {
        out << "overlap " << c.x << ' ' << c.y;
        if (r.dim == 3) out << ' ' << c.z;
        out << '\n';
    }
    for (int v : rep.disconnected_vertices) out << "disconnected " << v << '\n';
    return 1;
}

inline int cmd_treewidth(Inputs& files, const Parsed& p, std::ostream& out) {
    if (p.on.count("--exact") + p.on.count("--heuristic") + p.flag.count("--td") > 1)
        throw usage_error("pick one of --td, --exact, --heuristic");
    auto gs = files.slurp(files.pos_or_stdin(p, 0));
    Graph g = parse_graph(gs);
    TreeDecomposition t;
    if (p.flag.count("--td")) {
        auto ts = files.slurp(p.flag.at("--td"));
        t = parse_td(ts);
        TdReport check = validate_td(g, t);
        if (!check.valid) throw error("invalid tree decomposition: " + check.reason);
    } else if (p.on.count("--exact")) {
        t = td_exact_small(g);
    } else {
        t = td_heuristic(g);
    }
    out << emit_rep(build_treewidth(g, to_nice(t)));
    return 0;
}

inline int cmd_minimize(Inputs& files, const Parsed& p, std::ostream& out,
                        std::ostream& err) {
    auto gs = files.slurp(files.pos_or_stdin(p, 0));
    Graph g = parse_graph(gs);
    int dim = p.flag.count("--dim") ? to_int(p.flag.at("--dim"), "--dim") : 2;
    SearchBounds b;
    if (dim == 3) b = {3, 3, 3};
    if (p.flag.count("--grid")) b = parse_grid(p.flag.at("--grid"));
    int cap = p.flag.count("--cap") ? to_int(p.flag.at("--cap"), "--cap") : 4;
    long long budget =
        p.flag.count("--budget") ? to_int(p.flag.at("--budget"), "--budget") : -1;
    MinRepResult res = min_rep_search(g, dim, b, cap, budget);
    if (res.status == SearchStatus::found) {
        out << "# minimum size " << res.size << '\n' << emit_rep(res.rep);
        return 0;
    }
    if (res.status == SearchStatus::infeasible)
        err << "no representation within the given bounds\n";
    else
        err << "search budget exhausted after " << res.nodes << " nodes\n";
    return 1;
}

inline int cmd_gadget(Inputs& files, const std::vector<std::string>& args,
                      std::ostream& out) {
    if (args.size() < 2) throw usage_error("gadget needs a kind");
    const std::string& kind = args[1];
    if (kind == "wheel") {
        Parsed p = parse_args(args, 2, {}, {});
        want_arity(p, 0, 1);
        auto as = files.slurp(files.pos_or_stdin(p, 0));
        AngledGraph a = parse_angled(as);
        out << emit_graph(wheel_gadget(a));
        return 0;
    }
    if (kind == "cage2d" || kind == "cage3d") {
        Parsed p = parse_args(args, 2, {}, {});
        bool flat = kind == "cage2d";
        want_arity(p, flat ? 3 : 4, flat ? 3 : 4);
        CageParams cp;
        cp.dim = flat ? 2 : 3;
        cp.t = to_int(p.pos[0], "t");
        cp.w = to_int(p.pos[1], "w");
        cp.h = to_int(p.pos[2], "h");
        if (!flat) cp.d = to_int(p.pos[3], "d");
        out << emit_rep(cage(cp).rep);
        return 0;
    }
    if (kind == "nested-triangles") {
        Parsed p = parse_args(args, 2, {}, {"--fully-nested"});
        want_arity(p, 1, 1);
        out << emit_embedding(
            nested_triangles(to_int(p.pos[0], "k"), p.on.count("--fully-nested") > 0));
        return 0;
    }
    if (kind == "clique-union") {
        Parsed p = parse_args(args, 2, {}, {});
        want_arity(p, 2, 2);
        out << emit_graph(clique_union(to_int(p.pos[0], "q"), to_int(p.pos[1], "c")));
        return 0;
    }
    throw usage_error("unknown gadget " + kind);
}

inline int cmd_stats(Inputs& files, const Parsed& p, std::ostream& out) {
    auto rs = files.slurp(files.pos_or_stdin(p, 0));
    Representation r = parse_rep(rs);
    out << "dim " << r.dim << '\n';
    out << "vertices " << r.blobs.size() << '\n';
    out << "size " << size(r) << '\n';
    int minx = 0, miny = 0, minz = 0, maxx = -1, maxy = -1, maxz = -1;
    bool first = true;
    for (auto& [v, blob] : r.blobs)
        for (const Cell& c : blob) {
            if (first) {
                minx = maxx = c.x;
                miny = maxy = c.y;
                minz = maxz = c.z;
                first = false;
            }
            minx = std::min(minx, c.x), maxx = std::max(maxx, c.x);
            miny = std::min(miny, c.y), maxy = std::max(maxy, c.y);
            minz = std::min(minz, c.z), maxz = std::max(maxz, c.z);
        }
    out << "bbox " << maxx - minx + 1 << ' ' << maxy - miny + 1;
    if (r.dim == 3) out << ' ' << maxz - minz + 1;
    out << '\n';
    if (r.dim == 2 && !r.blobs.empty() && rep_diagnostics(r).valid) {
        int k = rep_peeling_depth(r);
        out << "peeling-depth " << k << '\n';
        out << "peeling-bound " << peeling_lower_bound(k) << '\n';
    }
    return 0;
}

inline int cmd_export(Inputs& files, const Parsed& p, std::ostream& out) {
    const std::string& fmt = p.pos[0];
    auto rs = files.slurp(files.pos_or_stdin(p, 1));
    Representation r = parse_rep(rs);
    if (fmt == "svg")
        out << export_svg(r);
    else if (fmt == "obj")
        out << export_obj(r);
    else if (fmt == "txt")
        out << emit_rep(r);
    else
        throw usage_error("unknown export format " + fmt);
    return 0;
}

inline int dispatch(const std::vector<std::string>& args, std::istream& in,
                    std::ostream& out) {
    const std::string& cmd = args[0];
    Inputs files{in};

    if (cmd == "build2d") {
        Parsed p = parse_args(args, 1, {}, {});
        want_arity(p, 0, 1);
        auto es = files.slurp(files.pos_or_stdin(p, 0));
        out << emit_rep(build_2d(parse_embedding(es)));
        return 0;
    }
    if (cmd == "build3d-universal") {
        Parsed p = parse_args(args, 1, {}, {});
        want_arity(p, 0, 1);
        auto gs = files.slurp(files.pos_or_stdin(p, 0));
        out << emit_rep(build_universal(parse_graph(gs)));
        return 0;
    }
    if (cmd == "build3d-treewidth") {
        Parsed p = parse_args(args, 1, {"--td"}, {"--exact", "--heuristic"});
        want_arity(p, 0, 1);
        return cmd_treewidth(files, p, out);
    }
    if (cmd == "build3d-genus") {
        Parsed p = parse_args(args, 1, {}, {});
        want_arity(p, 2, 2);
        auto gs = files.slurp(p.pos[0]);
        Graph g = parse_graph(gs);
        auto rs = files.slurp(p.pos[1]);
        out << emit_rep(build_genus(g, parse_rotation(rs)));
        return 0;
    }
    if (cmd == "verify") {
        Parsed p = parse_args(args, 1, {}, {});
        want_arity(p, 2, 2);
        return cmd_verify(files, p, out);
    }
    if (cmd == "gadget") return cmd_gadget(files, args, out);
    if (cmd == "stats") {
        Parsed p = parse_args(args, 1, {}, {});
        want_arity(p, 0, 1);
        return cmd_stats(files, p, out);
    }
    if (cmd == "export") {
        Parsed p = parse_args(args, 1, {}, {});
        want_arity(p, 1, 2);
        return cmd_export(files, p, out);
    }
    throw usage_error("unknown command " + cmd);
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    if (args.empty()) {
        err << detail::usage_text();
        return 2;
    }
    if (args[0] == "help" || args[0] == "--help") {
        out << detail::usage_text();
        return 0;
    }
    try {
        if (args[0] == "minimize") {
            detail::Inputs files{in};
            detail::Parsed p = detail::parse_args(
                args, 1, {"--dim", "--grid", "--cap", "--budget"}, {});
            detail::want_arity(p, 0, 1);
            return detail::cmd_minimize(files, p, out, err);
        }
        return detail::dispatch(args, in, out);
    } catch (const detail::usage_error& e) {
        err << "error: " << e.what() << "\n\n" << detail::usage_text();
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace boxrep::cli
