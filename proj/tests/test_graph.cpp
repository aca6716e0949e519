#include "boxrep/graph.hpp"

#include <gtest/gtest.h>

using namespace boxrep;

namespace {

Graph path(int n) {
    Graph g;
    g.n = n;
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

TEST(Graph, BasicInvariants) {
    Graph g;
    g.n = 4;
    g.add_edge(2, 0);
    EXPECT_TRUE(g.has_edge(0, 2));
    EXPECT_TRUE(g.has_edge(2, 0));
    g.add_edge(0, 2);  // duplicate collapses
    EXPECT_EQ(g.m(), 1);
    EXPECT_THROW(g.add_edge(1, 1), error);
    EXPECT_THROW(g.add_edge(0, 4), error);
    EXPECT_EQ(g.degrees(), (std::vector<int>{1, 0, 1, 0}));
}

TEST(Graph, Components) {
    Graph g = path(3);
    g.n = 5;
    g.add_edge(3, 4);
    auto comps = connected_components(g);
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_FALSE(is_connected(g));
    EXPECT_TRUE(is_connected(path(6)));
    EXPECT_TRUE(is_connected(Graph{}));

    auto layer = bfs_layers(g, {0});
    EXPECT_EQ(layer, (std::vector<int>{0, 1, 2, -1, -1}));
    layer = bfs_layers(g, {0, 3});
    EXPECT_EQ(layer, (std::vector<int>{0, 1, 2, 0, 1}));
}

TEST(ApplyMinor, IdentityAndRelabel) {
    Graph g = cycle(4);
    MinorResult r = apply_minor(g, {});
    EXPECT_EQ(r.graph, g);
    for (int v = 0; v < 4; ++v) EXPECT_EQ(r.label_to_id.at(v), v);
}

TEST(ApplyMinor, DeletionsThenContraction) {
    // C5, delete one edge, contract another: expect P3 plus the relabeling.
    Graph g = cycle(5);
    MinorRecipe rec;
    rec.deleted_edges = {make_edge(2, 3)};
    rec.contractions = {{0, 4, 0}};
    MinorResult r = apply_minor(g, rec);
    EXPECT_EQ(r.graph.n, 4);
    EXPECT_EQ(r.graph.m(), 3);
    // labels 0,1,2,3 survive; label 0 absorbed vertex 4's edge to 3
    EXPECT_TRUE(r.graph.has_edge(r.label_to_id.at(0), r.label_to_id.at(3)));
    EXPECT_TRUE(r.graph.has_edge(r.label_to_id.at(0), r.label_to_id.at(1)));
    EXPECT_FALSE(r.graph.has_edge(r.label_to_id.at(2), r.label_to_id.at(3)));
}

TEST(ApplyMinor, ParallelEdgesCollapse) {
    // Triangle with a pendant: contracting one triangle edge must not create
    // a double edge to the third corner.
    Graph g;
    g.n = 4;
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    MinorRecipe rec;
    rec.contractions = {{0, 1, 0}};
    MinorResult r = apply_minor(g, rec);
    EXPECT_EQ(r.graph.n, 3);
    EXPECT_EQ(r.graph.m(), 2);
}

TEST(ApplyMinor, VertexDeletionRequiresIsolation) {
    Graph g = path(3);
    MinorRecipe rec;
    rec.deleted_vertices = {1};
    EXPECT_THROW(apply_minor(g, rec), error);

    rec.deleted_edges = {make_edge(0, 1), make_edge(1, 2)};
    MinorResult r = apply_minor(g, rec);
    EXPECT_EQ(r.graph.n, 2);
    EXPECT_EQ(r.graph.m(), 0);
}

TEST(ApplyMinor, K5FromPetersen) {
    // The Petersen graph contracts to K5 along its five spokes.
    Graph g;
    g.n = 10;
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer C5
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    MinorRecipe rec;
    for (int i = 0; i < 5; ++i) rec.contractions.push_back({i, 5 + i, i});
    MinorResult r = apply_minor(g, rec);
    EXPECT_EQ(r.graph.n, 5);
    EXPECT_EQ(r.graph.m(), 10);
}

TEST(ApplyMinor, RejectsBadRecipes) {
    Graph g = path(3);
    MinorRecipe rec;
    rec.deleted_edges = {make_edge(0, 2)};
    EXPECT_THROW(apply_minor(g, rec), error);

    rec = {};
    rec.contractions = {{0, 2, 0}};
    EXPECT_THROW(apply_minor(g, rec), error);  // non-edge

    rec = {};
    rec.contractions = {{0, 1, 2}};
    EXPECT_THROW(apply_minor(g, rec), error);  // label collides with live vertex 2
}

TEST(Angled, PortBookkeeping) {
    AngledGraph a;
    a.g = path(3);
    a.port[{0, 1}] = Dir::E;
    a.port[{1, 0}] = Dir::W;
    a.port[{1, 2}] = Dir::N;
    a.port[{2, 1}] = Dir::S;
    validate_angled(a);
    EXPECT_EQ(a.port_at(1, 2), Dir::N);

    a.port[{1, 2}] = Dir::W;  // now clashes with the edge toward 0
    EXPECT_THROW(validate_angled(a), error);

    AngledGraph incomplete;
    incomplete.g = path(2);
    incomplete.port[{0, 1}] = Dir::E;
    EXPECT_THROW(validate_angled(incomplete), error);
}

TEST(Angled, DirHelpers) {
    for (Dir d : {Dir::N, Dir::E, Dir::S, Dir::W}) {
        EXPECT_EQ(dir_opposite(dir_opposite(d)), d);
        EXPECT_EQ(dir_from_char(dir_char(d)), d);
        Cell v = dir_vec(d), w = dir_vec(dir_opposite(d));
        EXPECT_EQ(v.x + w.x, 0);
        EXPECT_EQ(v.y + w.y, 0);
    }
    EXPECT_THROW(dir_from_char('x'), error);
}

}  // namespace
