#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <map>

#include <Eigen/Eigenvalues>

#include "specgraph/graph.hpp"

using namespace specgraph;

namespace {

int vi(Side s, int ring, int col, int n, int k) { return wnk_vertex_index(s, ring, col, n, k); }

std::map<int, int> degree_profile(const Graph& g) {
    std::map<int, int> profile;
    for (int v = 0; v < g.order(); ++v) ++profile[g.degree(v)];
    return profile;
}

}  // namespace

TEST_CASE("build_wnk(4,2) matches the pictured graph") {
    const Graph g = build_wnk(4, 2);
    CHECK(g.order() == 16);
    for (int v = 0; v < 16; ++v) CHECK(g.degree(v) == 3);
    CHECK(g.has_edge(vi(Side::W, 1, 1, 4, 2), vi(Side::V, 2, 1, 4, 2)));
    CHECK(g.has_edge(vi(Side::V, 1, 1, 4, 2), vi(Side::W, 1, 2, 4, 2)));
    CHECK_FALSE(g.has_edge(vi(Side::V, 1, 1, 4, 2), vi(Side::V, 1, 2, 4, 2)));

    // bipartition classes are exactly the V side and the W side
    const auto coloring = g.bipartition();
    REQUIRE(coloring.has_value());
    const auto& labels = *g.labels();
    for (int u = 0; u < 16; ++u)
        for (int v = u + 1; v < 16; ++v)
            if (labels[u].side == labels[v].side) CHECK((*coloring)[u] == (*coloring)[v]);
}

TEST_CASE("build_wnk(2,2) wraps the matching") {
    const Graph g = build_wnk(2, 2);
    CHECK(g.order() == 8);
    for (int v = 0; v < 8; ++v) CHECK(g.degree(v) == 3);
    CHECK(g.has_edge(vi(Side::W, 2, 1, 2, 2), vi(Side::V, 1, 1, 2, 2)));
    CHECK(g.has_edge(vi(Side::W, 2, 2, 2, 2), vi(Side::V, 1, 2, 2, 2)));
}

TEST_CASE("build_wnk(3,3) neighborhoods") {
    const int n = 3, k = 3;
    const Graph g = build_wnk(n, k);
    CHECK(g.order() == 18);
    for (int v = 0; v < 18; ++v) CHECK(g.degree(v) == 4);
    // v_{i,j} ~ {w_{i,1}, w_{i,2}, w_{i,3}, w_{i-1,j}}
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= k; ++j) {
            const int v = vi(Side::V, i, j, n, k);
            for (int l = 1; l <= k; ++l) CHECK(g.has_edge(v, vi(Side::W, i, l, n, k)));
            const int prev = (i == 1) ? n : i - 1;
            CHECK(g.has_edge(v, vi(Side::W, prev, j, n, k)));
        }
}

TEST_CASE("build_wnk parameter validation") {
    CHECK_THROWS_AS(build_wnk(1, 2), GraphError);
    CHECK_THROWS_AS(build_wnk(2, 1), GraphError);
    CHECK_THROWS_AS(build_wnk(100, 100, 1000), GraphError);  // over cap
}

TEST_CASE("wnk family is regular, bipartite and connected on a grid") {
    for (int n = 2; n <= 8; ++n)
        for (int k = 2; k <= 5; ++k) {
            const Graph g = build_wnk(n, k);
            CHECK(g.order() == 2 * n * k);
            for (int v = 0; v < g.order(); ++v) CHECK(g.degree(v) == k + 1);
            CHECK(g.bipartition().has_value());
            CHECK(g.is_connected());
        }
}

TEST_CASE("build_pnk removes the last w-ring") {
    SUBCASE("(4,2)") {
        const Graph g = build_pnk(4, 2);
        CHECK(g.order() == 14);
        CHECK(g.edge_count() == 18);  // (n-1)k(k+1) by handshake count
        const auto profile = degree_profile(g);
        CHECK(profile == std::map<int, int>{{1, 2}, {2, 2}, {3, 10}});
    }
    SUBCASE("(2,2)") {
        CHECK(build_pnk(2, 2).order() == 6);
    }
    SUBCASE("(3,3)") {
        const Graph g = build_pnk(3, 3);
        CHECK(g.order() == 15);
        CHECK(g.edge_count() == 24);
        CHECK(degree_profile(g) == std::map<int, int>{{1, 3}, {3, 3}, {4, 9}});
    }
}

TEST_CASE("build_heawood invariants") {
    const Graph g = build_heawood();
    CHECK(g.order() == 14);
    CHECK(g.edge_count() == 21);
    for (int v = 0; v < 14; ++v) CHECK(g.degree(v) == 3);
    const auto coloring = g.bipartition();
    REQUIRE(coloring.has_value());
    int part0 = 0;
    for (int c : *coloring) part0 += (c == 0);
    CHECK(part0 == 7);
    CHECK(g.girth() == 6);
}

TEST_CASE("build_cycle") {
    const Graph tri = build_cycle(3);
    CHECK(tri.order() == 3);
    for (int v = 0; v < 3; ++v) CHECK(tri.degree(v) == 2);
    CHECK(build_cycle(6).order() == 6);
    CHECK_THROWS_AS(build_cycle(2), GraphError);
}

TEST_CASE("adjacency_matrix export") {
    const IntMatrix tri = adjacency_matrix(build_cycle(3));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(tri(r, c) == (r == c ? 0 : 1));

    const IntMatrix w = adjacency_matrix(build_wnk(4, 2));
    CHECK(w.is_symmetric());
    for (int r = 0; r < 16; ++r) CHECK(w.row_sum(r) == 3);

    const IntMatrix p = adjacency_matrix(build_pnk(4, 2));
    for (int r = 0; r < 14; ++r) CHECK(p.row_sum(r) <= 3);
}

TEST_CASE("square_decompose blocks") {
    SUBCASE("(4,2)") {
        const auto [a_v, a_w] = square_decompose(build_wnk(4, 2));
        CHECK(a_v.rows() == 8);
        CHECK(a_w.rows() == 8);
        for (int r = 0; r < 8; ++r) {
            CHECK(a_v.row_sum(r) == 6);  // k^2 + k
            CHECK(a_w.row_sum(r) == 6);
        }
        CHECK(a_v.is_symmetric());
        CHECK(a_w.is_symmetric());
    }
    SUBCASE("(2,2) against a hand computation of A^2 - 3I") {
        const Graph g = build_wnk(2, 2);
        const IntMatrix a = adjacency_matrix(g);
        IntMatrix sq(8, 8);
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c) {
                std::int64_t s = 0;
                for (int t = 0; t < 8; ++t) s += a(r, t) * a(t, c);
                sq(r, c) = s;
            }
        const auto [a_v, a_w] = square_decompose(g);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                CHECK(a_v(r, c) == sq(r, c) - (r == c ? 3 : 0));
                CHECK(a_w(r, c) == sq(4 + r, 4 + c) - (r == c ? 3 : 0));
            }
    }
    SUBCASE("blocks are cospectral") {
        const auto [a_v, a_w] = square_decompose(build_wnk(5, 3));
        Eigen::MatrixXd mv(15, 15), mw(15, 15);
        for (int r = 0; r < 15; ++r)
            for (int c = 0; c < 15; ++c) {
                mv(r, c) = static_cast<double>(a_v(r, c));
                mw(r, c) = static_cast<double>(a_w(r, c));
            }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sv(mv), sw(mw);
        CHECK((sv.eigenvalues() - sw.eigenvalues()).cwiseAbs().maxCoeff() < 1e-8);
    }
    SUBCASE("rejects non-WNK input") {
        CHECK_THROWS_AS(square_decompose(build_cycle(5)), GraphError);
        CHECK_THROWS_AS(square_decompose(build_pnk(4, 2)), GraphError);
    }
}

TEST_CASE("off-ring entries of A_V are 0/1, within-ring entries 0/k") {
    const int n = 4, k = 3;
    const auto [a_v, a_w] = square_decompose(build_wnk(n, k));
    for (int r = 0; r < n * k; ++r)
        for (int c = 0; c < n * k; ++c) {
            if (r == c) continue;
            const bool same_ring = r / k == c / k;
            if (same_ring) CHECK((a_v(r, c) == 0 || a_v(r, c) == k));
            else CHECK((a_v(r, c) == 0 || a_v(r, c) == 1));
        }
}

TEST_CASE("graph file round-trip") {
    const auto tmp = std::filesystem::temp_directory_path() / "specgraph_roundtrip.json";
    for (const Graph& g : {build_wnk(4, 2), build_pnk(3, 3), build_heawood(), build_cycle(7)}) {
        save_graph(g, tmp.string());
        const Graph back = load_graph(tmp.string());
        CHECK(back == g);
        CHECK(graph_to_json(back) == graph_to_json(g));  // byte-identical serialization
    }
    std::filesystem::remove(tmp);
}

TEST_CASE("graph file validation errors") {
    CHECK_THROWS_AS(graph_from_json("not json"), GraphError);
    // edge not in u < v form
    CHECK_THROWS_AS(graph_from_json(R"({"format_version":1,"family":"other","order":3,"labels":null,"edges":[[1,0]]})"),
                    GraphError);
    // duplicate edge
    CHECK_THROWS_AS(graph_from_json(R"({"format_version":1,"family":"other","order":3,"labels":null,"edges":[[0,1],[0,1]]})"),
                    GraphError);
    // endpoint out of range
    CHECK_THROWS_AS(graph_from_json(R"({"format_version":1,"family":"other","order":2,"labels":null,"edges":[[0,5]]})"),
                    GraphError);
    // label count mismatch
    CHECK_THROWS_AS(graph_from_json(R"({"format_version":1,"family":"other","order":2,"labels":[{"side":"V","ring":1,"column":1}],"edges":[[0,1]]})"),
                    GraphError);
}
