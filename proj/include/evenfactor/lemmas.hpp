#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "evenfactor/graph.hpp"

namespace evenfactor {

// One inequality instance. margin > 0 (or >= -tolerance for non-strict
// checks) is a pass; it is the signed slack of the inequality.
struct LemmaCheck {
    std::string lemma;
    std::string point;
    double margin = 0.0;
    bool passed = false;
};

// Signed slack below which a strict spectral inequality is not trusted.
inline constexpr double kStrictMargin = 1e-9;

// rho_Q(G + e) - rho_Q(G) > 0 for a seeded connected G and non-edge e.
std::vector<LemmaCheck> check_signless_edge_addition(std::uint64_t seed, int count, int n_lo, int n_hi);
// rho_D(G - e) - rho_D(G) > 0 for a seeded connected G and non-bridge e.
std::vector<LemmaCheck> check_distance_edge_deletion(std::uint64_t seed, int count, int n_lo, int n_hi);

// For K_s v (K_{n_1} u ... u K_{n_t}) against K_s v (K_{n-s-p(t-1)} u (t-1)K_p)
// over every admissible (n, s, t, p, parts) with n <= n_max: rho_Q grows and
// rho_D shrinks. Emits "signless-clique-join" and "distance-clique-join" rows.
std::vector<LemmaCheck> check_clique_join_parts(int n_max, int s_max = 3, int t_max = 4);

// Each quotient family's closed-form matrix equals the computed quotient of
// the built graph, the partition is equitable, and the cubic's largest root
// matches the full-matrix eigenvalue within tolerance.
std::vector<LemmaCheck> check_equitable_quotients(int n_max, int delta_max, double tolerance = 1e-8);

// rho_D(G) >= 2W(G)/n.
std::vector<LemmaCheck> check_distance_rayleigh(std::span<const Graph> graphs, double tolerance = 1e-9);

// 2n - 2d < threshold_rho_q(n, d) < 2n - d for even n >= 7d - 7 up to n_max.
std::vector<LemmaCheck> check_extremal_bracket(int delta_lo, int delta_hi, int n_max);

// The extremal graph G* against G3 = K_2 v (K_{n-d-1} u K_{d-1}) built on the
// same labels: rho_D(G3) - rho_D(G*) >= x^T (D(G3) - D(G*)) x for the unit
// Perron vector x of D(G*), and the form equals (d-1)(d-2) i (2j - i) > 0
// with i, j the isolated and join entries of x.
std::vector<LemmaCheck> check_distance_perron_gap(int delta_lo, int delta_hi, int n_max, double tolerance = 1e-9);

// G3 at s = 2 on the extremal graph's labels: join {0, 1}, the large clique
// absorbs join vertices 2..d-1, the former isolated vertices form K_{d-1}.
Graph relabeled_equal_parts_s2(int n, int delta);

struct LemmaGrid {
    std::uint64_t seed = 42;
    int random_count = 1000;
    int random_n_lo = 5;
    int random_n_hi = 12;
    int clique_join_n_max = 12;
    int quotient_n_max = 24;
    int delta_lo = 2;
    int delta_hi = 6;
    int extremal_n_max = 60;
    std::span<const Graph> corpus;
};

std::vector<LemmaCheck> lemma_suite(const LemmaGrid& grid);

}  // namespace evenfactor
