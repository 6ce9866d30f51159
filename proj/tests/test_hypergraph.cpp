#include <doctest.h>

#include <numeric>
#include <set>

#include "hqp/hypergraph.hpp"

using namespace hqp;

namespace {

Hypergraph two_triangles() {
    return Hypergraph(4, {{0, 1, 2}, {1, 2, 3}});
}

} // namespace

TEST_CASE("parse_hmetis reads unweighted and weighted files") {
    const auto h = parse_hmetis("2 4\n1 2 3\n2 3 4\n");
    CHECK(h.num_vertices() == 4);
    REQUIRE(h.num_edges() == 2);
    CHECK(h.edge(0) == std::vector<int>{0, 1, 2});
    CHECK(h.edge(1) == std::vector<int>{1, 2, 3});
    CHECK(h.weight(0) == 1.0);

    const auto w = parse_hmetis("1 3 1\n2.5 1 2 3\n");
    REQUIRE(w.num_edges() == 1);
    CHECK(w.edge(0) == std::vector<int>{0, 1, 2});
    CHECK(w.weight(0) == 2.5);
}

TEST_CASE("parse_hmetis skips comment lines") {
    const auto h = parse_hmetis("% generated\n2 4\n% first edge\n1 2 3\n2 3 4\n");
    CHECK(h.num_edges() == 2);
}

TEST_CASE("parse_hmetis rejects malformed input with line numbers") {
    CHECK_THROWS_WITH_AS(parse_hmetis("1 3\n1 1 2\n"),
                         doctest::Contains("line 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_hmetis("1 3\n1 2 4\n"), std::invalid_argument); // out of range
    CHECK_THROWS_AS(parse_hmetis("1 3 1\n-1 1 2\n"), std::invalid_argument); // bad weight
    CHECK_THROWS_AS(parse_hmetis("x 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_hmetis("2 3\n1 2\n"), std::invalid_argument); // missing edge
}

TEST_CASE("serialize_hmetis round-trips and handles degenerate cases") {
    CHECK(serialize_hmetis(two_triangles()) == "2 4\n1 2 3\n2 3 4\n");
    CHECK(serialize_hmetis(Hypergraph(3, {})) == "0 3\n");

    const Hypergraph weighted(3, {{0, 1}, {1, 2}}, {0.5, 2.0});
    const auto text = serialize_hmetis(weighted);
    CHECK(text.substr(0, 6) == "2 3 1\n");
    CHECK(parse_hmetis(text) == weighted);
}

TEST_CASE("parse after serialize is the identity on random instances") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto h = generate_random_uniform(9, 3, 4.0, seed);
        CHECK(parse_hmetis(serialize_hmetis(h)) == h);
    }
}

TEST_CASE("degree and volume") {
    const auto h = two_triangles();
    CHECK(h.degree(1) == 2);
    CHECK(h.degree(0) == 1);
    CHECK(h.volume({0}) == 1);
    CHECK(h.volume({1, 2}) == 4);
    CHECK(h.volume({}) == 0);
    CHECK_THROWS_AS(h.degree(4), std::out_of_range);
    CHECK_THROWS_AS(h.volume({7}), std::out_of_range);

    const Hypergraph isolated(3, {{0, 1}});
    CHECK(isolated.degree(2) == 0);

    // sum of degrees equals sum of edge sizes equals volume(V)
    std::vector<int> all(h.num_vertices());
    std::iota(all.begin(), all.end(), 0);
    long long size_sum = 0;
    for (const auto &e : h.edges())
        size_sum += static_cast<long long>(e.size());
    CHECK(h.volume(all) == size_sum);
}

TEST_CASE("is_connected") {
    CHECK(two_triangles().is_connected());
    CHECK_FALSE(Hypergraph(4, {{0, 1}, {2, 3}}).is_connected());
    CHECK(Hypergraph(1, {}).is_connected());
    CHECK_FALSE(Hypergraph(2, {}).is_connected());
}

TEST_CASE("hypergraph validation") {
    CHECK_THROWS_AS(Hypergraph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, {{1}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, {{1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, {{0, 1}}, {0.0}), std::invalid_argument);
}

TEST_CASE("generate_random_uniform edge count, uniformity, connectivity") {
    // m = round(n * avg_degree / r)
    const auto h = generate_random_uniform(8, 3, 5.0, 7);
    CHECK(h.num_edges() == 13); // round(40 / 3)
    CHECK(h.is_connected());
    std::set<std::vector<int>> distinct;
    for (const auto &e : h.edges()) {
        CHECK(e.size() == 3);
        distinct.insert(e);
    }
    CHECK(distinct.size() == h.num_edges());
}

TEST_CASE("generate_random_uniform forced and deterministic cases") {
    const auto only = generate_random_uniform(3, 3, 1.0, 11);
    REQUIRE(only.num_edges() == 1);
    CHECK(only.edge(0) == std::vector<int>{0, 1, 2});

    const auto a = generate_random_uniform(10, 3, 5.0, 123);
    const auto b = generate_random_uniform(10, 3, 5.0, 123);
    CHECK(a == b);
    const auto c = generate_random_uniform(10, 3, 5.0, 124);
    CHECK(a.edges() != c.edges());

    CHECK_THROWS_AS(generate_random_uniform(4, 3, 6.0, 0), std::invalid_argument); // m > C(4,3)
    CHECK_THROWS_AS(generate_random_uniform(3, 4, 2.0, 0), std::invalid_argument);
}

TEST_CASE("induced_edge_partition") {
    const auto h = two_triangles();
    const NodePartition p({0, 0, 0, 1}, 2);
    CHECK(induced_edge_partition(h, p, 0) == std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(induced_edge_partition(h, p, 1) == std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK_THROWS_AS(induced_edge_partition(h, p, 2), std::out_of_range);

    const Hypergraph h3(4, {{0, 1, 2}});
    const NodePartition p3({0, 1, 2, 0}, 3);
    CHECK(induced_edge_partition(h3, p3, 0) ==
          std::vector<std::vector<int>>{{0}, {1}, {2}});

    // parts are disjoint, nonempty, and union to the edge
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto g = generate_random_uniform(8, 3, 4.0, seed);
        rng::Prng prng(seed);
        std::vector<int> labels(8);
        for (auto &l : labels)
            l = static_cast<int>(prng.below(3));
        const NodePartition q(labels, 3);
        for (std::size_t e = 0; e < g.num_edges(); ++e) {
            const auto parts = induced_edge_partition(g, q, e);
            std::vector<int> merged;
            for (const auto &part : parts) {
                CHECK_FALSE(part.empty());
                merged.insert(merged.end(), part.begin(), part.end());
            }
            std::sort(merged.begin(), merged.end());
            CHECK(merged == g.edge(e));
        }
    }
}

TEST_CASE("is_balanced") {
    CHECK(is_balanced(NodePartition({0, 0, 1, 1}, 2)));
    CHECK(is_balanced(NodePartition({0, 0, 0, 1, 1}, 2)));
    CHECK_FALSE(is_balanced(NodePartition({0, 0, 0, 0}, 2))); // empty part
    CHECK_FALSE(is_balanced(NodePartition({0, 0, 0, 1}, 2)));
    CHECK_THROWS_AS(NodePartition({0, 2}, 2), std::invalid_argument);
}
