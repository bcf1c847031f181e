#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "corpus.hpp"
#include "zdga/graph.hpp"

using namespace zdga;
using tests::vertex_index;
using tests::vertex_set;

TEST_CASE("small fixtures") {
    ZeroDivisorGraph z9 = build_graph(build_ring("Z9"));
    REQUIRE(z9.vertex_count() == 2);
    CHECK(z9.labels == std::vector<std::string>{"3", "6"});
    CHECK(z9.has_edge(0, 1));
    CHECK(z9.degrees == std::vector<int>{1, 1});

    ZeroDivisorGraph g = build_graph(build_ring("Z2xZ4"));
    REQUIRE(g.vertex_count() == 5);
    std::set<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            if (g.has_edge(i, j)) edges.insert({g.labels[i], g.labels[j]});
    std::set<std::pair<std::string, std::string>> expected = {
        {"(0,1)", "(1,0)"}, {"(0,2)", "(1,0)"}, {"(0,3)", "(1,0)"}, {"(0,2)", "(1,2)"}};
    CHECK(edges == expected);
}

TEST_CASE("two fields make a complete bipartite graph") {
    ZeroDivisorGraph g = build_graph(build_ring("GF(4)xGF(4)"));
    REQUIRE(g.vertex_count() == 6);
    int edge_count = 0;
    for (int i = 0; i < 6; ++i) edge_count += g.degrees[i];
    CHECK(edge_count == 18); // 9 edges
    for (int v = 0; v < 6; ++v) CHECK(g.degrees[v] == 3);
}

TEST_CASE("neighborhood and degree queries") {
    ZeroDivisorGraph g = build_graph(build_ring("Z2xZ4"));
    int hub = vertex_index(g, "(1,0)");
    CHECK(degree(g, hub) == 3);
    CHECK(min_degree(g) == 1);

    ZeroDivisorGraph z9 = build_graph(build_ring("Z9"));
    CHECK(neighborhood(z9, 0).to_vector() == std::vector<int>{1});
    CHECK(closed_neighborhood(z9, 0).to_vector() == std::vector<int>{0, 1});
    CHECK_THROWS_AS(degree(z9, 2), IndexError);
}

TEST_CASE("deg_in counts neighbors in S, never the vertex itself") {
    ZeroDivisorGraph z9 = build_graph(build_ring("Z9"));
    CHECK(deg_in(z9, vertex_set(z9, {"3"}), vertex_index(z9, "6")) == 1);
    CHECK(deg_in(z9, vertex_set(z9, {"6"}), vertex_index(z9, "6")) == 0);

    ZeroDivisorGraph g = build_graph(build_ring("Z2xZ4"));
    CHECK(deg_in(g, vertex_set(g, {"(0,1)", "(0,3)", "(1,2)"}), vertex_index(g, "(1,0)")) == 2);
}

TEST_CASE("DOT export is byte-stable and sorted") {
    ZeroDivisorGraph z9 = build_graph(build_ring("Z9"));
    CHECK(export_dot(z9) == "graph zdg {\n"
                            "  \"3\";\n"
                            "  \"6\";\n"
                            "  \"3\" -- \"6\";\n"
                            "}\n");

    ZeroDivisorGraph g = build_graph(build_ring("Z2xZ4"));
    std::string dot = export_dot(g);
    CHECK(dot == export_dot(build_graph(build_ring("Z2xZ4"))));
    CHECK(dot.find("\"(0,2)\" -- \"(1,0)\"") != std::string::npos);
    CHECK(dot.substr(0, 12) == "graph zdg {\n");
}

TEST_CASE("connectivity and diameter") {
    CHECK(is_connected(build_graph(build_ring("Z9"))));
    CHECK(diameter(build_graph(build_ring("Z9"))) == 1);
    CHECK(diameter(build_graph(build_ring("GF(4)xGF(4)"))) == 2);
    CHECK(diameter(build_graph(build_ring("Z4"))) == 0); // single vertex
}

TEST_CASE("structural invariants over the corpus") {
    for (const auto& spec : tests::corpus_specs()) {
        CAPTURE(spec);
        FiniteRing ring = build_ring(spec);
        ZeroDivisorGraph g = build_graph(ring);
        REQUIRE(g.vertex_count() >= 1);

        long long degree_sum = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            CHECK_FALSE(g.adjacency[v].test(v));
            CHECK(g.adjacency[v].count() == g.degrees[v]);
            degree_sum += g.degrees[v];
            for (int w = 0; w < g.vertex_count(); ++w)
                CHECK(g.has_edge(v, w) == g.has_edge(w, v));
        }
        CHECK(degree_sum % 2 == 0);

        // Known structural facts for zero-divisor graphs.
        CHECK(is_connected(g));
        CHECK(diameter(g) <= 3);
    }
}

TEST_CASE("edge rule matches the multiplication table on random pairs") {
    std::mt19937 rng(987123);
    for (const char* spec : {"Z12", "Z30", "Z2xZ9", "GF(4)xGF(4)", "Z3x(Z3(+)Z3)"}) {
        CAPTURE(spec);
        FiniteRing ring = build_ring(spec);
        ZeroDivisorGraph g = build_graph(ring);
        std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
        for (int t = 0; t < 200; ++t) {
            int v = pick(rng), w = pick(rng);
            bool zero_product = ring.mul(g.vertex_elements[v], g.vertex_elements[w]) == 0;
            CHECK(g.has_edge(v, w) == (v != w && zero_product));
        }
    }
}
