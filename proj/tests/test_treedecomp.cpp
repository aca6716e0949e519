#include "boxrep/treedecomp.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace boxrep;

namespace {

Graph clique(int n) {
    Graph g;
    g.n = n;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
    return g;
}

Graph path(int n) {
    Graph g;
    g.n = n;
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph grid3() {
    Graph g;
    g.n = 9;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            if (c + 1 < 3) g.add_edge(3 * r + c, 3 * r + c + 1);
            if (r + 1 < 3) g.add_edge(3 * r + c, 3 * (r + 1) + c);
        }
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

Graph random_graph(int n, double p, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Graph g;
    g.n = n;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng) < p) g.add_edge(a, b);
    return g;
}

Graph partial_two_tree(int n, unsigned seed) {
    std::mt19937 rng(seed);
    Graph g;
    g.n = n;
    std::vector<Edge> frame = {{0, 1}, {0, 2}, {1, 2}};
    for (int v = 3; v < n; ++v) {
        auto [a, b] = frame[std::uniform_int_distribution<int>(0, frame.size() - 1)(rng)];
        frame.push_back({a, v});
        frame.push_back({b, v});
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (auto [a, b] : frame)
        if (coin(rng) > 0.2) g.add_edge(a, b);
    return g;
}

TreeDecomposition strip(const NiceTreeDecomposition& t) {
    TreeDecomposition out;
    out.tree.n = t.nodes();
    out.bags = t.bags;
    out.width = t.width;
    for (int mu = 0; mu < t.nodes(); ++mu)
        for (int c : t.kids[mu])
            if (c != -1) out.tree.add_edge(mu, c);
    return out;
}

TEST(ValidateTd, AcceptsSingleBag) {
    TreeDecomposition t;
    t.tree.n = 1;
    t.bags = {{0, 1}};
    t.width = 1;
    EXPECT_TRUE(validate_td(clique(2), t).valid);
}

TEST(ValidateTd, AcceptsPathBags) {
    TreeDecomposition t;
    t.tree.n = 2;
    t.tree.add_edge(0, 1);
    t.bags = {{0, 1}, {1, 2}};
    t.width = 1;
    auto rep = validate_td(path(3), t);
    EXPECT_TRUE(rep.valid) << rep.reason;
}

TEST(ValidateTd, RejectsUncoveredEdge) {
    TreeDecomposition t;
    t.tree.n = 2;
    t.tree.add_edge(0, 1);
    t.bags = {{0, 1}, {0, 2}};
    t.width = 1;
    auto rep = validate_td(path(3), t);
    EXPECT_FALSE(rep.valid);
    EXPECT_NE(rep.reason.find("edge"), std::string::npos);
}

TEST(ValidateTd, RejectsBrokenSubtree) {
    TreeDecomposition t;
    t.tree.n = 3;
    t.tree.add_edge(0, 1);
    t.tree.add_edge(1, 2);
    t.bags = {{0, 1}, {1}, {0, 2}};
    t.width = 1;
    Graph g = path(3);
    g.edges = {{0, 1}};
    auto rep = validate_td(g, t);
    EXPECT_FALSE(rep.valid);
    EXPECT_NE(rep.reason.find("connected"), std::string::npos);
}

TEST(ValidateTd, RejectsWrongWidthField) {
    TreeDecomposition t;
    t.tree.n = 1;
    t.bags = {{0, 1}};
    t.width = 2;
    EXPECT_FALSE(validate_td(clique(2), t).valid);
}

TEST(ValidateTd, RejectsNonTree) {
    TreeDecomposition t;
    t.tree.n = 3;
    t.tree.add_edge(0, 1);
    t.tree.add_edge(1, 2);
    t.tree.add_edge(0, 2);
    t.bags = {{0}, {0}, {0}};
    t.width = 0;
    Graph g;
    g.n = 1;
    EXPECT_FALSE(validate_td(g, t).valid);
}

TEST(Heuristic, TreeIsWidthOne) {
    Graph t;
    t.n = 8;
    for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {1, 3}, {3, 4}, {0, 5}, {5, 6}, {5, 7}})
        t.add_edge(a, b);
    auto td = td_heuristic(t);
    EXPECT_EQ(td.width, 1);
    EXPECT_TRUE(validate_td(t, td).valid);
}

TEST(Heuristic, CliqueKeepsEveryone) {
    auto td = td_heuristic(clique(4));
    EXPECT_EQ(td.width, 3);
    EXPECT_TRUE(validate_td(clique(4), td).valid);
}

TEST(Heuristic, GridIsValid) {
    auto g = grid3();
    auto td = td_heuristic(g);
    auto rep = validate_td(g, td);
    EXPECT_TRUE(rep.valid) << rep.reason;
    EXPECT_GE(td.width, 2);
}

TEST(Exact, GridIsWidthThree) {
    auto g = grid3();
    auto td = td_exact_small(g);
    EXPECT_EQ(td.width, 3);
    EXPECT_TRUE(validate_td(g, td).valid);
}

TEST(Exact, PetersenIsWidthFour) {
    auto g = petersen();
    auto td = td_exact_small(g);
    EXPECT_EQ(td.width, 4);
    EXPECT_TRUE(validate_td(g, td).valid);
}

TEST(Exact, SmallFacts) {
    EXPECT_EQ(td_exact_small(path(4)).width, 1);
    EXPECT_EQ(td_exact_small(clique(4)).width, 3);
    Graph c5 = path(5);
    c5.add_edge(0, 4);
    EXPECT_EQ(td_exact_small(c5).width, 2);
}

TEST(Exact, NeverBeatenByHeuristic) {
    for (unsigned seed = 1; seed <= 6; ++seed) {
        auto g = random_graph(8, 0.15 * seed, seed);
        auto exact = td_exact_small(g);
        auto rough = td_heuristic(g);
        EXPECT_LE(exact.width, rough.width) << "seed " << seed;
        EXPECT_TRUE(validate_td(g, exact).valid);
        EXPECT_TRUE(validate_td(g, rough).valid);
    }
}

TEST(Exact, CapAtEleven) { EXPECT_THROW(td_exact_small(clique(11)), error); }

TEST(ToNice, SingleBagBecomesChain) {
    TreeDecomposition t;
    t.tree.n = 1;
    t.bags = {{0, 1}};
    t.width = 1;
    auto nice = to_nice(t);
    ASSERT_EQ(nice.nodes(), 2);
    EXPECT_EQ(nice.kind[0], NodeKind::leaf);
    EXPECT_EQ(nice.kind[1], NodeKind::introduce);
    EXPECT_EQ(nice.bags[nice.root], (std::set<int>{0, 1}));
    EXPECT_EQ(nice.width, 1);
}

TEST(ToNice, PathDecompositionStaysLinear) {
    TreeDecomposition t;
    t.tree.n = 4;
    for (int i = 0; i + 1 < 4; ++i) t.tree.add_edge(i, i + 1);
    t.bags = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    t.width = 1;
    auto nice = to_nice(t);
    EXPECT_EQ(nice.width, 1);
    EXPECT_LE(nice.nodes(), 20);
    EXPECT_TRUE(validate_nice(nice).valid);
}

TEST(ToNice, PreservesWidthAndValidates) {
    std::vector<Graph> zoo = {grid3(), clique(5), partial_two_tree(12, 3)};
    for (auto& g : zoo) {
        auto td = td_heuristic(g);
        auto nice = to_nice(td);
        EXPECT_EQ(nice.width, td.width);
        auto rep = validate_nice(nice);
        EXPECT_TRUE(rep.valid) << rep.reason;
        EXPECT_LE(nice.nodes(), 4 * g.n * (nice.width + 2));
    }
}

TEST(ToNice, Renormalizing) {
    auto td = td_heuristic(grid3());
    auto once = to_nice(td);
    auto twice = to_nice(strip(once));
    EXPECT_EQ(once.width, twice.width);
    EXPECT_EQ(once.nodes(), twice.nodes());
}

TEST(ToNice, RejectsEmpty) {
    TreeDecomposition t;
    t.tree.n = 1;
    t.bags = {{}};
    t.width = -1;
    EXPECT_THROW(to_nice(t), error);
}

TEST(Stars, SingleEdgeGoesToTheLateEndpoint) {
    TreeDecomposition t;
    t.tree.n = 1;
    t.bags = {{0, 1}};
    t.width = 1;
    auto nice = to_nice(t);
    auto sm = star_map(nice, clique(2));
    ASSERT_EQ(sm.assignment.size(), 1u);
    int mu = sm.assignment.at({0, 1});
    EXPECT_EQ(nice.kind[mu], NodeKind::introduce);
    EXPECT_EQ(sm.center.at(mu), changed_vertex(nice, mu));
}

TEST(Stars, EdgelessIsEmpty) {
    Graph g;
    g.n = 3;
    auto sm = star_map(to_nice(td_heuristic(g)), g);
    EXPECT_TRUE(sm.assignment.empty());
    EXPECT_TRUE(sm.center.empty());
}

TEST(Stars, CoversEverythingAsStars) {
    std::vector<Graph> zoo = {clique(3), grid3(), clique(5), partial_two_tree(14, 9)};
    for (auto& g : zoo) {
        auto nice = to_nice(td_heuristic(g));
        auto sm = star_map(nice, g);
        ASSERT_EQ(sm.assignment.size(), g.edges.size());
        std::map<int, std::set<int>> per_node;
        for (auto [e, mu] : sm.assignment) {
            EXPECT_TRUE(g.edges.count(e));
            EXPECT_TRUE(nice.bags[mu].count(e.first) && nice.bags[mu].count(e.second));
            int c = sm.center.at(mu);
            EXPECT_TRUE(e.first == c || e.second == c);
            per_node[mu].insert(e.first == c ? e.second : e.first);
        }
        for (auto& [mu, tips] : per_node) EXPECT_FALSE(tips.count(sm.center.at(mu)));
    }
}

TEST(Stars, ThrowsWhenUncoverable) {
    TreeDecomposition t;
    t.tree.n = 2;
    t.tree.add_edge(0, 1);
    t.bags = {{0, 1}, {1, 2}};
    t.width = 1;
    auto nice = to_nice(t);
    Graph g = path(3);
    g.add_edge(0, 2);
    EXPECT_THROW(star_map(nice, g), error);
}

TEST(Coloring, AllOneWhenBagsAreSingletons) {
    Graph g;
    g.n = 3;
    auto col = bag_coloring(to_nice(td_heuristic(g)));
    EXPECT_EQ(col.k, 1);
    for (int v = 0; v < 3; ++v) EXPECT_EQ(col.color.at(v), 1);
}

TEST(Coloring, TriangleUsesThree) {
    auto col = bag_coloring(to_nice(td_heuristic(clique(3))));
    EXPECT_EQ(col.k, 3);
    std::set<int> used;
    for (auto [v, c] : col.color) used.insert(c);
    EXPECT_EQ(used, (std::set<int>{1, 2, 3}));
}

TEST(Coloring, ProperOnEveryBag) {
    auto g = partial_two_tree(20, 7);
    auto nice = to_nice(td_heuristic(g));
    auto col = bag_coloring(nice);
    EXPECT_EQ(col.k, nice.width + 1);
    for (auto& b : nice.bags) {
        std::set<int> cs;
        for (int v : b) {
            int c = col.color.at(v);
            EXPECT_GE(c, 1);
            EXPECT_LE(c, col.k);
            cs.insert(c);
        }
        EXPECT_EQ(cs.size(), b.size());
    }
    for (int v = 0; v < g.n; ++v) EXPECT_TRUE(col.color.count(v));
}

TEST(Coloring, Deterministic) {
    auto g = partial_two_tree(16, 4);
    auto td = td_heuristic(g);
    auto a = to_nice(td);
    auto b = to_nice(td);
    EXPECT_EQ(a.kind, b.kind);
    EXPECT_EQ(a.kids, b.kids);
    EXPECT_EQ(a.bags, b.bags);
    EXPECT_EQ(star_map(a, g).assignment, star_map(b, g).assignment);
    EXPECT_EQ(bag_coloring(a).color, bag_coloring(b).color);
}

}  // namespace
