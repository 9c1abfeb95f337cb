#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "evenfactor/graph6.hpp"
#include "evenfactor/oracle.hpp"
#include "evenfactor/sampler.hpp"
#include "evenfactor/theorem.hpp"

#ifndef EVENFACTOR_DATA_DIR
#define EVENFACTOR_DATA_DIR "data"
#endif

using namespace evenfactor;

namespace {

// Independent oracle: try every edge subset.
bool brute_force_even_factor(const Graph& g) {
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << m); ++subset) {
        std::vector<int> degree(g.order(), 0);
        for (int e = 0; e < m; ++e) {
            if ((subset >> e) & 1U) {
                ++degree[edges[e].first];
                ++degree[edges[e].second];
            }
        }
        if (std::all_of(degree.begin(), degree.end(), [](int d) { return d >= 2 && d % 2 == 0; })) return true;
    }
    return g.order() == 0;
}

// Independent check of the odd-component condition by plain subset enumeration.
bool brute_force_condition(const Graph& g) {
    const int n = g.order();
    for (VertexMask s = 0; s < (VertexMask{1} << n); ++s) {
        const int k = std::popcount(s);
        if (k >= 2 && odd_components(g, s) >= k) return false;
    }
    return true;
}

std::vector<Graph> corpus(int n) {
    std::vector<Graph> out;
    for (const auto& line : read_graph6_file(std::string(EVENFACTOR_DATA_DIR) + "/connected_n" + std::to_string(n) + ".g6")) {
        out.push_back(from_graph6(line.text));
    }
    return out;
}

}  // namespace

TEST_SUITE("oracle") {
    TEST_CASE("is_even_factor") {
        const Graph c5 = cycle(5);
        const auto all = c5.edges();
        CHECK(is_even_factor(c5, all));
        CHECK_FALSE(is_even_factor(c5, std::span(all).first(4)));
        const Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
        CHECK(is_even_factor(bowtie, bowtie.edges()));
        const std::vector<Edge> foreign{{0, 3}};
        CHECK_THROWS(is_even_factor(bowtie, foreign));
        const std::vector<Edge> repeated{{0, 1}, {1, 0}};
        CHECK_THROWS(is_even_factor(bowtie, repeated));
    }

    TEST_CASE("small examples") {
        const EvenFactorCertificate c7 = find_even_factor(cycle(7));
        CHECK(c7.status == SearchStatus::Found);
        CHECK(c7.edges == cycle(7).edges());
        CHECK(find_even_factor(complete_bipartite(1, 3)).status == SearchStatus::NoneExists);
        CHECK(find_even_factor(complete_bipartite(1, 3)).nodes_explored == 0);
        CHECK(find_even_factor(complete_bipartite(2, 3)).status == SearchStatus::NoneExists);
        CHECK(find_even_factor(path(5)).status == SearchStatus::NoneExists);
        CHECK(find_even_factor(complete(4)).status == SearchStatus::Found);
    }

    TEST_CASE("agrees with subset enumeration on every connected graph up to 6 vertices") {
        for (int n = 1; n <= 6; ++n) {
            for (const Graph& g : corpus(n)) {
                const EvenFactorCertificate cert = find_even_factor(g);
                CHECK(cert.status != SearchStatus::SearchCapExceeded);
                CHECK((cert.status == SearchStatus::Found) == brute_force_even_factor(g));
                if (cert.status == SearchStatus::Found) CHECK(is_even_factor(g, cert.edges));
            }
        }
    }

    TEST_CASE("agrees with subset enumeration on random sparse graphs") {
        std::mt19937_64 rng(5);
        int checked = 0;
        while (checked < 400) {
            const int n = uniform_int(rng, 4, 10);
            const Graph g = random_graph(rng, n, 0.2 + 0.4 * unit_uniform(rng));
            if (g.size() > 20) continue;
            ++checked;
            const EvenFactorCertificate cert = find_even_factor(g);
            INFO(to_graph6(g));
            CHECK((cert.status == SearchStatus::Found) == brute_force_even_factor(g));
        }
    }

    TEST_CASE("certificates are sound and deterministic on the 7-vertex corpus") {
        for (const Graph& g : corpus(7)) {
            const EvenFactorCertificate a = find_even_factor(g);
            const EvenFactorCertificate b = find_even_factor(g);
            CHECK(a.status == b.status);
            CHECK(a.edges == b.edges);
            CHECK(a.nodes_explored == b.nodes_explored);
            if (a.status == SearchStatus::Found) CHECK(is_even_factor(g, a.edges));
            if (min_degree(g) < 2) CHECK(a.status == SearchStatus::NoneExists);
        }
    }

    TEST_CASE("a factor stays a factor in every supergraph") {
        std::mt19937_64 rng(9);
        for (int i = 0; i < 100; ++i) {
            const Graph g = random_graph(rng, 9, 0.5);
            const EvenFactorCertificate cert = find_even_factor(g);
            if (cert.status != SearchStatus::Found) continue;
            Graph h = g;
            for (const Edge& e : non_edges(g)) {
                if (unit_uniform(rng) < 0.3) h = h.with_edge(e.first, e.second);
            }
            CHECK(is_even_factor(h, cert.edges));
        }
    }

    TEST_CASE("node cap is reported as a status") {
        OracleOptions tiny;
        tiny.node_cap = 1;
        CHECK(find_even_factor(complete(9), tiny).status == SearchStatus::SearchCapExceeded);
    }

    TEST_CASE("extremal graphs have even factors") {
        // Triangle on the join vertices and the isolated vertex plus a 5-cycle in K_5.
        const Graph g = extremal_graph({8, 2});
        const std::vector<Edge> hand{{0, 1}, {0, 7}, {1, 7}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 6}};
        CHECK(is_even_factor(g, hand));
        CHECK(find_even_factor(g).status == SearchStatus::Found);
    }

    TEST_CASE("odd-component condition") {
        CHECK(yan_kano(complete(6)).holds);
        const YanKanoReport k23 = yan_kano(complete_bipartite(2, 3));
        CHECK_FALSE(k23.holds);
        REQUIRE(k23.witness);
        CHECK(*k23.witness == VertexSet{0, 1});
        const YanKanoReport ext = yan_kano(join(complete(2), disjoint_union(complete(7), complete(1))));
        CHECK_FALSE(ext.holds);
        REQUIRE(ext.witness);
        CHECK(*ext.witness == VertexSet{0, 1});
        CHECK(odd_components(complete_bipartite(2, 3), 0b11) == 3);
    }

    TEST_CASE("odd-component condition agrees with subset enumeration and witnesses are valid") {
        for (int n = 1; n <= 7; ++n) {
            for (const Graph& g : corpus(n)) {
                const YanKanoReport r = yan_kano(g);
                CHECK(r.holds == brute_force_condition(g));
                if (r.witness) {
                    CHECK(r.witness->size() >= 2);
                    CHECK(odd_components(g, r.witness->mask(n)) >= r.witness->size());
                }
            }
        }
    }
}
