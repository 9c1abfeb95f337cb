#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evenfactor/graph.hpp"

namespace evenfactor {

enum class SearchStatus { Found, NoneExists, SearchCapExceeded };

std::string to_string(SearchStatus status);

struct EvenFactorCertificate {
    SearchStatus status = SearchStatus::NoneExists;
    std::vector<Edge> edges;  // the factor when Found, sorted (u < v)
    long long nodes_explored = 0;
};

struct OracleOptions {
    long long node_cap = 100'000'000;
};

// True iff every vertex of g has nonzero even degree in `edges`.
// Throws std::invalid_argument if an edge is not in g or is repeated.
bool is_even_factor(const Graph& g, std::span<const Edge> edges);

// Exact decision by depth-first search over edge inclusion. See oracle.cpp
// for the propagation rules.
EvenFactorCertificate find_even_factor(const Graph& g, const OracleOptions& options = {});

struct YanKanoReport {
    bool holds = true;
    std::optional<VertexSet> witness;  // |S| >= 2 with o(G - S) >= |S|
    long long subsets_checked = 0;
};

int odd_components(const Graph& g, VertexMask removed);

// Checks o(G - S) < |S| for every S with |S| >= 2, smallest sets first,
// stopping at the first witness. Sets with |S| > n/2 are skipped since
// G - S then has fewer than |S| vertices.
YanKanoReport yan_kano(const Graph& g);

}  // namespace evenfactor
