#include <doctest.h>

#include <sstream>

#include "evenfactor/errors.hpp"
#include "evenfactor/graph6.hpp"

#ifndef EVENFACTOR_DATA_DIR
#define EVENFACTOR_DATA_DIR "data"
#endif

using namespace evenfactor;

namespace {

std::string corpus_path(int n) { return std::string(EVENFACTOR_DATA_DIR) + "/connected_n" + std::to_string(n) + ".g6"; }

}  // namespace

TEST_SUITE("graph6") {
    // Reference encodings produced by networkx.
    TEST_CASE("decodes reference strings") {
        CHECK(from_graph6("C~") == complete(4));
        CHECK(from_graph6("Ch") == path(4));
        CHECK(from_graph6("Dhc") == cycle(5));
        CHECK(from_graph6("D]o") == complete_bipartite(2, 3));
        CHECK(from_graph6("?").order() == 0);
        CHECK(from_graph6("@") == empty_graph(1));
        const Graph petersen = from_graph6("IheA@GUAo");
        CHECK(petersen.order() == 10);
        CHECK(petersen.size() == 15);
        for (int v = 0; v < 10; ++v) CHECK(petersen.degree(v) == 3);
    }

    TEST_CASE("encodes reference strings") {
        CHECK(to_graph6(complete(4)) == "C~");
        CHECK(to_graph6(path(4)) == "Ch");
        CHECK(to_graph6(cycle(5)) == "Dhc");
        CHECK(to_graph6(complete(62)).size() == 1 + (62 * 61 / 2 + 5) / 6);
        CHECK_THROWS_AS(to_graph6(complete(63)), Graph6Error);
    }

    TEST_CASE("header and surrounding whitespace are ignored") {
        CHECK(from_graph6(">>graph6<<C~") == complete(4));
        CHECK(from_graph6("  C~\r\n") == complete(4));
    }

    TEST_CASE("malformed input is rejected") {
        CHECK_THROWS_AS(from_graph6(""), Graph6Error);
        CHECK_THROWS_AS(from_graph6("C"), Graph6Error);       // missing body
        CHECK_THROWS_AS(from_graph6("C~~"), Graph6Error);     // body too long
        CHECK_THROWS_AS(from_graph6("C\x7f"), Graph6Error);   // byte out of range
        CHECK_THROWS_AS(from_graph6("B@"), Graph6Error);      // nonzero padding bit
        CHECK_THROWS_AS(from_graph6("~?@?"), Graph6Error);    // n > 62 not supported
    }

    TEST_CASE("shipped corpora have the known connected-graph counts and round-trip") {
        const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853, 11117};
        for (int n = 1; n <= 8; ++n) {
            const auto lines = read_graph6_file(corpus_path(n));
            CHECK(lines.size() == expected[n - 1]);
            if (n > 7) continue;
            for (const Graph6Line& line : lines) {
                const Graph g = from_graph6(line.text);
                CHECK(g.order() == n);
                CHECK(is_connected(g));
                CHECK(to_graph6(g) == line.text);
            }
        }
    }

    TEST_CASE("line reader skips blank lines and keeps 1-based numbers") {
        std::istringstream in("C~\n\n  \nCh\n");
        const auto lines = read_graph6_lines(in);
        REQUIRE(lines.size() == 2);
        CHECK(lines[0].line_number == 1);
        CHECK(lines[1].line_number == 4);
        CHECK(lines[1].text == "Ch");
        CHECK_THROWS(read_graph6_file("/nonexistent/file.g6"));
    }
}
