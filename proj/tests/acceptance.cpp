// End-to-end acceptance checks. Each check prints exactly one PASS/FAIL line
// with its runtime and a short measurement note; the exit code is the number
// of failed checks. Frozen constants (size-bound factor, crossing counts)
// guard against silent regressions of the deterministic pipelines.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "boxrep/cli.hpp"
#include "boxrep/construct.hpp"
#include "boxrep/gadgets.hpp"
#include "boxrep/io.hpp"
#include "boxrep/oracle.hpp"
#include "generators.hpp"

using namespace boxrep;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& why) {
        if (!cond && ok) {
            ok = false;
            note = why;
        }
    }
};

Graph complete(int n) {
    Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph cycle(int n) {
    Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g;
    g.n = a + b;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph petersen() {
    Graph g;
    g.n = 10;
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

// 1. A crossing-free drawing of total length l becomes a representation of
// exactly 2l + n - m cells (checked across 2D planar and 3D split layouts).
Outcome check_drawing_identity() {
    Outcome out;
    gen::Rng rng(101);
    int made = 0;
    for (int i = 0; i < 60; ++i) {
        Graph t = gen::random_tree(rng, gen::pick(rng, 2, 40), 4);
        OrthoDrawing d = layout_deg4_planar(gen::tree_embedding(t));
        Representation r = drawing_to_rep(t, d);
        out.require(size(r) == (std::size_t)(2 * d.total_length() + t.n - t.m()),
                    "tree drawing size off");
        ++made;
    }
    for (int i = 0; i < 40; ++i) {
        PlaneEmbedding e =
            gen::random_outerplanar(rng, gen::pick(rng, 4, 40), 0.5, true);
        OrthoDrawing d = layout_deg4_planar(e);
        Representation r = drawing_to_rep(e.g, d);
        out.require(size(r) == (std::size_t)(2 * d.total_length() + e.g.n - e.g.m()),
                    "outerplanar drawing size off");
        ++made;
    }
    for (int i = 0; i < 100; ++i) {
        Graph g = gen::random_deg4(rng, gen::pick(rng, 4, 40), gen::pick(rng, 0, 12));
        BendSubdivision sub = subdivide_bends(layout_deg4_any(g));
        LayerSplit split = split_layers(sub.g, sub.d, sub.bends);
        Representation r = drawing_to_rep(split.g, split.d);
        out.require(
            size(r) == (std::size_t)(2 * split.d.total_length() + split.g.n - split.g.m()),
            "split drawing size off");
        ++made;
    }
    out.note = std::to_string(made) + " drawings";
    return out;
}

// 2. Applying the same minor recipe to a representation and to its graph
// keeps them in contact-correspondence.
Outcome check_minor_soundness() {
    Outcome out;
    gen::Rng rng(202);
    for (int i = 0; i < 100; ++i) {
        Graph g = gen::random_graph(rng, gen::pick(rng, 4, 12), 0.4);
        MinorRecipe rec = gen::random_recipe(rng, g);
        Representation r = take_minor(build_universal(g), rec);
        Graph target = apply_minor(g, rec).graph;
        out.require(verify(r, target).valid, "minor pair " + std::to_string(i) +
                                                 " lost contact correspondence");
    }
    out.note = "100 pairs";
    return out;
}

// 3. The quadratic construction hits its closed-form size on every K_n.
Outcome check_universal_closed_form() {
    Outcome out;
    for (int n = 1; n <= 25; ++n) {
        Graph g = complete(n);
        Representation r = build_universal(g);
        out.require(size(r) == (std::size_t)(n * (4 * n - 1)) + g.edges.size(),
                    "K_" + std::to_string(n) + " size off the closed form");
        out.require(verify(r, g).valid, "K_" + std::to_string(n) + " invalid");
    }
    out.note = "K_1..K_25";
    return out;
}

// 4. The layered pipeline stays within C * n * log2(n) * (width+1) cells.
// C is frozen from the first measured run; a regression breaking the
// asymptotics trips it immediately.
Outcome check_treewidth_bound() {
    constexpr double C = 420.0;
    Outcome out;
    gen::Rng rng(404);
    double worst = 0;
    int worst_n = 0, worst_w = 0;
    auto bound = [&](const Graph& g, const TreeDecomposition& td) {
        Representation r = build_treewidth(g, to_nice(td));
        out.require(verify(r, g).valid, "layered build invalid");
        double cap =
            (double)g.n * std::log2(std::max(g.n, 2)) * (td.width + 1);
        if ((double)size(r) / cap > worst) {
            worst = (double)size(r) / cap;
            worst_n = g.n;
            worst_w = td.width;
        }
    };
    for (int i = 0; i < 50; ++i) {
        bool big = i >= 40;
        int k = big ? gen::pick(rng, 1, 3) : gen::pick(rng, 1, 5);
        int n = big ? gen::pick(rng, 100, 200) : gen::pick(rng, k + 2, 60);
        auto inst = gen::random_partial_ktree(rng, n, k, 0.7);
        TreeDecomposition td = detail::td_from_order(inst.g, inst.elimination);
        out.require(td.width <= k, "elimination width exceeded k");
        bound(inst.g, td);
    }
    for (int i = 0; i < 20; ++i) {
        Graph t = gen::random_tree(rng, gen::pick(rng, 2, 200));
        TreeDecomposition td = td_heuristic(t);
        out.require(td.width == 1, "tree decomposition width is not 1");
        bound(t, td);
    }
    for (int i = 0; i < 10; ++i) {
        int q = gen::pick(rng, 2, 6);
        Graph g = clique_union(q, gen::pick(rng, 2, 6));
        TreeDecomposition td = td_heuristic(g);
        out.require(td.width == q - 1, "clique union width off");
        bound(g, td);
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "80 graphs, worst factor %.2f of %.0f (n=%d, width %d)",
                  worst, C, worst_n, worst_w);
    out.require(worst <= C, "size bound factor exceeded");
    out.note = out.ok ? buf : out.note + " | " + buf;
    return out;
}

// 5. Pixel representations built from embeddings respect the peeling lower
// bound: a representation that erodes in k rounds has at least 4k^2-4k cells.
Outcome check_peeling_bound() {
    Outcome out;
    gen::Rng rng(505);
    int deepest = 0;
    auto probe = [&](const PlaneEmbedding& e) {
        Representation r = build_2d(e);
        out.require(verify(r, e.g).valid, "planar build invalid");
        int k = rep_peeling_depth(r);
        deepest = std::max(deepest, k);
        out.require((long long)size(r) >= peeling_lower_bound(k),
                    "representation undercuts the peeling bound");
    };
    for (int i = 0; i < 50; ++i)
        probe(gen::random_outerplanar(rng, gen::pick(rng, 4, 150), 0.5));
    for (int i = 0; i < 50; ++i)
        probe(gen::random_planar(rng, gen::pick(rng, 4, 150), 0.15));
    out.note = "100 embeddings, deepest peel " + std::to_string(deepest);
    return out;
}

// 6. The rotation-system pipeline draws with crossings, then splits them all
// away: the 3D drawing is strictly crossing-free and the voxels verify.
// Crossing counts of the named graphs are frozen against layout regressions.
Outcome check_crossing_removal() {
    Outcome out;
    gen::Rng rng(606);
    struct Named {
        const char* name;
        Graph g;
        int crossings;
    };
    std::vector<Named> named = {{"K5", complete(5), 11},
                                {"K6", complete(6), 104},
                                {"K33", complete_bipartite(3, 3), 11},
                                {"Petersen", petersen(), 20}};
    auto audit = [&](const Graph& g, const std::vector<std::vector<int>>& rot) {
        CycleReduction red = reduce_degree_cycle(g, rot);
        OrthoDrawing flat = layout_deg4_any(red.g);
        BendSubdivision sub = subdivide_bends(flat);
        LayerSplit split = split_layers(sub.g, sub.d, sub.bends);
        validate_drawing(split.d);  // crossings_allowed is off in 3D
        out.require(count_crossings(split.d) == 0, "split drawing still crosses");
        out.require(verify(build_genus(g, rot), g).valid, "voxel build invalid");
        return count_crossings(flat);
    };
    std::string counts;
    for (auto& [name, g, frozen] : named) {
        int got = audit(g, g.adjacency());
        counts += std::string(name) + "=" + std::to_string(got) + " ";
        out.require(got == frozen, std::string(name) + " crossing count drifted");
        out.require(got > 0, std::string(name) + " drew without crossings");
    }
    for (int i = 0; i < 20; ++i) {
        auto inst = gen::random_nonplanar_deg4(rng, gen::pick(rng, 10, 80));
        audit(inst.g, inst.rotation);
    }
    out.note = counts + "+ 20 random nonplanar";
    return out;
}

// 7. The exhaustive search certifies the known minima of the smallest graphs
// and never beats itself: the certified minimum is at most any built size.
Outcome check_certified_minima() {
    Outcome out;
    struct Probe {
        const char* name;
        Graph g;
        std::size_t minimum;
    };
    std::vector<Probe> probes = {{"single vertex", complete(1), 1},
                                 {"single edge", complete(2), 2},
                                 {"triangle", complete(3), 4},
                                 {"four-cycle", cycle(4), 4}};
    for (auto& [name, g, want] : probes) {
        MinRepResult res = min_rep_search(g, 2, {4, 4, 1});
        out.require(res.status == SearchStatus::found,
                    std::string(name) + " search did not finish");
        out.require(res.size == want, std::string(name) + " minimum drifted");
        out.require(verify(res.rep, g).valid, std::string(name) + " witness invalid");
    }
    PlaneEmbedding tri;
    tri.g = complete(3);
    tri.rotation = {{1, 2}, {2, 0}, {0, 1}};
    tri.outer = {0, 1};
    PlaneEmbedding quad;
    quad.g = cycle(4);
    quad.rotation = {{1, 3}, {0, 2}, {1, 3}, {2, 0}};
    quad.outer = {0, 1};
    out.require(min_rep_search(complete(3), 2, {4, 4, 1}).size <= size(build_2d(tri)),
                "search beat by triangle build");
    out.require(min_rep_search(cycle(4), 2, {4, 4, 1}).size <= size(build_2d(quad)),
                "search beat by four-cycle build");
    for (int n = 1; n <= 3; ++n) {
        MinRepResult res = min_rep_search(complete(n), 3, {3, 3, 3});
        out.require(res.status == SearchStatus::found, "3D search did not finish");
        out.require(res.size <= size(build_universal(complete(n))),
                    "search beat by quadratic build");
    }
    out.note = "4 certified minima";
    return out;
}

// 8. Gadget bookkeeping: wheel substitution emits 9n + m vertices, and the
// two reference cages come out with 102 and 258 cells.
Outcome check_gadget_counts() {
    Outcome out;
    gen::Rng rng(808);
    for (int i = 0; i < 20; ++i) {
        int n = gen::pick(rng, 1, 8);
        AngledGraph a = gen::random_angled(rng, n, gen::pick(rng, 0, 2 * n));
        Graph h = wheel_gadget(a);
        out.require(h.n == 9 * a.g.n + (int)a.g.edges.size(), "wheel count off");
    }
    CageResult flat = cage({2, 3, 8, 3, 1});
    CageResult solid = cage({3, 1, 7, 3, 7});
    out.require(flat.g.n == 102, "2D cage count off");
    out.require(solid.g.n == 258, "3D cage count off");
    out.require(verify(flat.rep, flat.g).valid, "2D cage rep invalid");
    out.require(verify(solid.rep, solid.g).valid, "3D cage rep invalid");
    out.note = "20 wheels, cages 102/258";
    return out;
}

// 9. The nested-triangle families hit their designed peeling depths: k for
// the balanced outer face, 2k when fully nested.
Outcome check_nested_depths() {
    Outcome out;
    for (int k = 2; k <= 6; ++k) {
        int balanced = rep_peeling_depth(build_2d(nested_triangles(k)));
        int nested = rep_peeling_depth(build_2d(nested_triangles(k, true)));
        out.require(balanced == k, "balanced depth " + std::to_string(balanced) +
                                       " != " + std::to_string(k));
        out.require(nested == 2 * k, "nested depth " + std::to_string(nested) +
                                         " != " + std::to_string(2 * k));
    }
    out.note = "k = 2..6";
    return out;
}

// 10. Reruns are byte-identical: emitters and builders are functions of their
// input, independent of construction order or process history.
Outcome check_determinism() {
    Outcome out;
    auto twice = [&](auto make, const std::string& what) {
        out.require(make() == make(), what + " differs between runs");
    };
    twice([] { return emit_rep(build_universal(complete(7))); }, "quadratic build");
    twice([] { return emit_rep(build_2d(nested_triangles(3))); }, "planar build");
    twice(
        [] {
            Graph g = clique_union(3, 3);
            return emit_rep(build_treewidth(g, to_nice(td_heuristic(g))));
        },
        "layered build");
    twice(
        [] {
            gen::Rng rng(1010);
            auto inst = gen::random_nonplanar_deg4(rng, 30);
            return emit_rep(build_genus(inst.g, inst.rotation));
        },
        "rotation build");
    twice(
        [] {
            gen::Rng rng(1099);
            return emit_drawing(layout_deg4_any(gen::random_deg4(rng, 25, 8)));
        },
        "any-graph layout");

    Graph fwd = complete(7);
    Graph rev;
    rev.n = 7;
    for (int u = 6; u >= 0; --u)
        for (int v = 6; v > u; --v) rev.add_edge(v, u);
    out.require(emit_rep(build_universal(fwd)) == emit_rep(build_universal(rev)),
                "edge insertion order leaked into the output");

    std::string first, second;
    for (std::string* run : {&first, &second}) {
        std::istringstream in(emit_graph(complete(10)));
        std::ostringstream o, e;
        cli::run({"build3d-universal"}, in, o, e);
        *run = o.str();
    }
    out.require(first == second, "CLI output differs between runs");
    out.note = "6 pipelines + CLI";
    return out;
}

}  // namespace

int main() {
    struct Check {
        const char* name;
        Outcome (*fn)();
        double limit;  // seconds, 0 = untimed
    };
    const Check checks[] = {
        {"drawing-to-pixels size identity", check_drawing_identity, 10},
        {"minors preserve contact realizability", check_minor_soundness, 0},
        {"quadratic universal construction", check_universal_closed_form, 5},
        {"treewidth-layered size bound", check_treewidth_bound, 0},
        {"planar builds respect the peeling bound", check_peeling_bound, 0},
        {"rotation pipeline removes all crossings", check_crossing_removal, 0},
        {"exhaustive search certifies small minima", check_certified_minima, 300},
        {"gadget vertex counts", check_gadget_counts, 0},
        {"nested triangulation peeling depths", check_nested_depths, 0},
        {"byte-identical reruns", check_determinism, 0},
    };
    int failed = 0;
    int idx = 0;
    for (const Check& c : checks) {
        ++idx;
        Outcome out;
        auto t0 = std::chrono::steady_clock::now();
        try {
            out = c.fn();
        } catch (const std::exception& e) {
            out.ok = false;
            out.note = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                          .count();
        if (c.limit > 0 && secs > c.limit) {
            out.ok = false;
            out.note += " [over " + std::to_string((int)c.limit) + "s limit]";
        }
        std::printf("[%2d/10] %s %s (%.2fs)%s%s\n", idx, out.ok ? "PASS" : "FAIL",
                    c.name, secs, out.note.empty() ? "" : ": ", out.note.c_str());
        std::fflush(stdout);
        if (!out.ok) ++failed;
    }
    std::printf("%d/10 checks passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
