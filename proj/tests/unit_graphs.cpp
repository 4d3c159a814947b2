#include <random>

#include "doctest.h"
#include "vzc/coarse.hpp"
#include "vzc/graphs.hpp"

using namespace vzc;

namespace {

DualGraph graph(std::vector<Vertex> vs, std::vector<std::pair<int, int>> es,
                std::vector<int> marks = {}) {
    DualGraph g;
    g.vertices = std::move(vs);
    g.edges = std::move(es);
    g.markings = std::move(marks);
    g.ambient_n = (int)g.markings.size();
    g.ambient_d = g.total_degree();
    return g;
}

// random (1,n,d)-graph: a tree or a cycle-with-trees, decorated arbitrarily
DualGraph random_graph(std::mt19937& rng) {
    std::uniform_int_distribution<int> d6(0, 5);
    int n_extra = d6(rng);
    bool cycle = d6(rng) % 2;
    DualGraph g;
    int ncore = cycle ? 1 + d6(rng) % 3 : 1;
    for (int i = 0; i < ncore; ++i) g.vertices.push_back({cycle ? 0 : 1, d6(rng)});
    if (cycle) {
        if (ncore == 1)
            g.edges.push_back({0, 0});
        else
            for (int i = 0; i < ncore; ++i) g.edges.push_back({i, (i + 1) % ncore});
    }
    for (int i = 0; i < n_extra; ++i) {
        std::uniform_int_distribution<int> pick(0, g.num_vertices() - 1);
        int at = pick(rng);
        g.vertices.push_back({0, d6(rng)});
        g.edges.push_back({at, g.num_vertices() - 1});
    }
    int nmarks = d6(rng) % 4;
    for (int i = 0; i < nmarks; ++i) {
        std::uniform_int_distribution<int> pick(0, g.num_vertices() - 1);
        g.markings.push_back(pick(rng));
    }
    g.ambient_n = (int)g.markings.size();
    g.ambient_d = g.total_degree();
    return g;
}

}  // namespace

TEST_CASE("stability") {
    // single genus-one vertex, one mark
    CHECK(is_stable(graph({{1, 0}}, {}, {0})));
    // genus-zero bivalent vertex on a 2-cycle, no degree, no marks
    CHECK(!is_stable(graph({{0, 0}, {0, 1}}, {{0, 1}, {0, 1}})));
    // a loop on a genus-zero degree-zero vertex: the loop counts twice toward
    // the valence, 0 - 2 + 2 = 0, so the graph is unstable
    CHECK(!is_stable(graph({{0, 0}}, {{0, 0}})));
    // same loop with positive degree is exempt
    CHECK(is_stable(graph({{0, 2}}, {{0, 0}})));
}

TEST_CASE("edge contraction") {
    // 2-cycle contracts to a loop
    DualGraph c2 = graph({{0, 1}, {0, 1}}, {{0, 1}, {0, 1}});
    DualGraph l = contract_edge(c2, 0);
    CHECK(l.num_vertices() == 1);
    CHECK(l.num_edges() == 1);
    CHECK(l.edges[0] == std::pair{0, 0});
    CHECK(l.vertices[0].genus == 0);
    CHECK(l.total_degree() == 2);
    CHECK(l.valid());

    // contracting the loop raises the genus
    DualGraph e = contract_edge(l, 0);
    CHECK(e.num_vertices() == 1);
    CHECK(e.vertices[0].genus == 1);
    CHECK(e.valid());

    // genus-one vertex with a marked tail
    DualGraph t = graph({{1, 2}, {0, 1}}, {{0, 1}}, {1, 1});
    DualGraph m = contract_edge(t, 0);
    CHECK(m.num_vertices() == 1);
    CHECK(m.vertices[0].genus == 1);
    CHECK(m.vertices[0].degree == 3);
    CHECK(m.markings == std::vector<int>{0, 0});
}

TEST_CASE("core extraction") {
    DualGraph g1 = graph({{1, 0}, {0, 1}, {0, 1}}, {{0, 1}, {0, 2}});
    CHECK(core(g1) == std::vector<int>{0});

    DualGraph c3 = graph({{0, 1}, {0, 0}, {0, 0}, {0, 1}, {0, 0}},
                         {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}}, {0, 2, 4, 4});
    auto c = core(c3);
    CHECK(c == std::vector<int>{0, 1, 2});

    DualGraph loop = graph({{0, 2}, {0, 1}}, {{0, 0}, {0, 1}});
    CHECK(core(loop) == std::vector<int>{0});
}

TEST_CASE("vertex poset") {
    // core - a - b chain
    DualGraph chain = graph({{1, 0}, {0, 1}, {0, 1}}, {{0, 1}, {1, 2}}, {0});
    VertexPoset p = vertex_poset(chain);
    CHECK(p.leq(1, 2));
    CHECK(!p.leq(2, 1));
    CHECK(p.leq(0, 2));  // core below everything
    // two independent tails are incomparable
    DualGraph fork = graph({{1, 0}, {0, 1}, {0, 1}}, {{0, 1}, {0, 2}});
    VertexPoset q = vertex_poset(fork);
    CHECK(!q.leq(1, 2));
    CHECK(!q.leq(2, 1));
    // all vertices on the core are tied minimal
    DualGraph c2 = graph({{0, 1}, {0, 1}}, {{0, 1}, {0, 1}}, {0, 1});
    VertexPoset r = vertex_poset(c2);
    CHECK(r.leq(0, 1));
    CHECK(r.leq(1, 0));
}

TEST_CASE("enhancement") {
    DualGraph g = graph({{1, 0}, {0, 2}}, {{0, 1}}, {1});
    auto e = enhancement(g, {0});
    CHECK(e.graph.num_vertices() == 1);
    CHECK(e.legs.size() == 1);
    CHECK(e.kept_markings.empty());

    auto whole = enhancement(g, {0, 1});
    CHECK(whole.legs.empty());
    CHECK(whole.graph.num_edges() == 1);

    DualGraph chain = graph({{1, 0}, {0, 1}, {0, 1}}, {{0, 1}, {1, 2}}, {0});
    auto mid = enhancement(chain, {1});
    CHECK(mid.legs.size() == 2);
}

TEST_CASE("alignment validation") {
    // core + one radius vertex of degree 2: valid
    DualGraph g = graph({{1, 0}, {0, 2}}, {{0, 1}});
    CentralAlignment a;
    a.support = {0, 1};
    a.level = {{0, 0}, {1, 1}};
    a.depth = 1;
    CHECK(validate_alignment(g, a).ok);

    // radius degree 1: sum <= 1
    DualGraph h = graph({{1, 0}, {0, 1}}, {{0, 1}}, {0});
    CHECK(!validate_alignment(h, a).ok);

    // descendant below a smaller-level ancestor
    DualGraph chain = graph({{1, 0}, {0, 0}, {0, 2}}, {{0, 1}, {1, 2}}, {1});
    CentralAlignment bad;
    bad.support = {0, 1, 2};
    bad.level = {{0, 0}, {1, 2}, {2, 1}};
    bad.depth = 2;
    auto rep = validate_alignment(chain, bad);
    CHECK(!rep.ok);

    CentralAlignment good;
    good.support = {0, 1, 2};
    good.level = {{0, 0}, {1, 1}, {2, 2}};
    good.depth = 2;
    CHECK(validate_alignment(chain, good).ok);

    // positive-degree vertex below the top level
    DualGraph two = graph({{1, 0}, {0, 1}, {0, 2}}, {{0, 1}, {1, 2}});
    CentralAlignment below;
    below.support = {0, 1, 2};
    below.level = {{0, 0}, {1, 1}, {2, 2}};
    below.depth = 2;
    CHECK(!validate_alignment(two, below).ok);
}

TEST_CASE("radial merge") {
    // depth-1 merge absorbs the radius into the core
    DualGraph g = graph({{1, 0}, {0, 2}, {0, 1}}, {{0, 1}, {0, 2}});
    CentralAlignment a;
    a.support = {0, 1, 2};
    a.level = {{0, 0}, {1, 1}, {2, 1}};
    a.depth = 1;
    auto m = radial_merge(g, a, 1);
    CHECK(!m.alignment.has_value());
    CHECK(m.graph.num_vertices() == 1);
    CHECK(m.graph.vertices[0].degree == 3);
    CHECK(m.graph.vertices[0].genus == 1);

    // depth-2 merge at the top gives depth 1
    DualGraph h = graph({{1, 0}, {0, 0}, {0, 2}}, {{0, 1}, {1, 2}}, {1});
    CentralAlignment b;
    b.support = {0, 1, 2};
    b.level = {{0, 0}, {1, 1}, {2, 2}};
    b.depth = 2;
    auto m2 = radial_merge(h, b, 2);
    REQUIRE(m2.alignment.has_value());
    CHECK(m2.alignment->depth == 1);
    CHECK(m2.validity.ok);
    CHECK(m2.graph.num_vertices() == 2);

    // merge at level 1 contracts the intermediate into the core
    auto m1 = radial_merge(h, b, 1);
    REQUIRE(m1.alignment.has_value());
    CHECK(m1.alignment->depth == 1);
    CHECK(m1.validity.ok);
    CHECK(m1.graph.num_vertices() == 2);
    CHECK(m1.graph.vertices[core(m1.graph)[0]].genus == 1);
}

TEST_CASE("rational tails and coarse representative") {
    // positive core with a two-vertex tail tree contracts to one tail
    DualGraph g = graph({{1, 2}, {0, 1}, {0, 1}}, {{0, 1}, {1, 2}}, {1, 2});
    auto tails = rational_tails(g, core(g));
    REQUIRE(tails.size() == 1);
    CHECK(tails[0].degree == 2);
    CHECK(tails[0].marks == std::vector<int>{1, 2});
    CHECK(tails[0].attach == 0);

    CoarseClass cc = coarse_representative(g, std::nullopt);
    CHECK(cc.kind() == StratumKind::PositiveGenusOneCore);
    CHECK(cc.core[0].tails.size() == 1);
    CHECK(cc.core[0].tails[0].delta == 2);
    CHECK(cc.codim() == 1);

    // idempotence: the coarse representative of the expansion is itself
    auto exp = to_dual_graph(cc);
    CoarseClass cc2 = coarse_representative(exp.graph, exp.alignment);
    CHECK(canonical_string(cc) == canonical_string(cc2));
}

TEST_CASE("coarse class expansion round trip with alignment") {
    CoarseClass cc;
    cc.n = 1;
    cc.d = 3;
    cc.depth = 1;
    CCore c;
    c.marks = {1};
    CBranch r1;
    r1.level = 1;
    r1.delta = 2;
    CBranch r2;
    r2.level = 1;
    r2.delta = 1;
    CTail t;
    t.delta = 0;
    t.marks = {};
    r1.tails = {};
    c.branches = {r1, r2};
    cc.core = {c};
    CHECK(check_coarse(cc).ok);
    auto exp = to_dual_graph(cc);
    REQUIRE(exp.alignment.has_value());
    CHECK(validate_alignment(exp.graph, *exp.alignment).ok);
    CHECK(exp.graph.valid());
    CoarseClass back = coarse_representative(exp.graph, exp.alignment);
    CHECK(canonical_string(back) == canonical_string(cc));
}

TEST_CASE("contraction preserves graph invariants on a random corpus") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 300; ++iter) {
        DualGraph g = random_graph(rng);
        REQUIRE(g.valid());
        std::vector<int> cr = core(g);
        for (int e = 0; e < g.num_edges(); ++e) {
            DualGraph h = contract_edge(g, e);
            CHECK(h.valid());
            CHECK(h.connected());
            CHECK(h.total_genus() == 1);
            CHECK(h.total_degree() == g.total_degree());
            // non-core edges: the core of the contraction is the image of the core
            auto [a, b] = g.edges[e];
            bool core_edge = std::count(cr.begin(), cr.end(), a) &&
                             std::count(cr.begin(), cr.end(), b);
            if (!core_edge && a != b) {
                int lo = std::min(a, b), hi = std::max(a, b);
                auto remap = [&](int v) { return v == hi ? lo : (v > hi ? v - 1 : v); };
                std::set<int> image;
                for (int v : cr) image.insert(remap(v));
                auto hc = core(h);
                CHECK(std::set<int>(hc.begin(), hc.end()) == image);
            }
        }
    }
}
