#include <doctest.h>

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>
#include <random>

#include "evenfactor/errors.hpp"
#include "evenfactor/graph6.hpp"
#include "evenfactor/sampler.hpp"
#include "evenfactor/theorem.hpp"

using namespace evenfactor;

namespace {

// Largest eigenvalue of Q = D + A built straight from adjacency tests.
double eigen_rho_q(const Graph& g) {
    const int n = g.order();
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (g.adjacent(u, v)) {
                q(u, v) = 1.0;
                q(u, u) += 1.0;
            }
        }
    }
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(q).eigenvalues().maxCoeff();
}

// Largest eigenvalue of the distance matrix, distances by Floyd-Warshall.
double eigen_rho_d(const Graph& g) {
    const int n = g.order();
    Eigen::MatrixXd d = Eigen::MatrixXd::Constant(n, n, 1e9);
    for (int u = 0; u < n; ++u) {
        d(u, u) = 0;
        for (int v = 0; v < n; ++v) {
            if (g.adjacent(u, v)) d(u, v) = 1;
        }
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(d).eigenvalues().maxCoeff();
}

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(g, perm);
}

}  // namespace

TEST_SUITE("theorem") {
    TEST_CASE("extremal graph construction") {
        const Graph g = extremal_graph({8, 2});
        CHECK(g.order() == 8);
        CHECK(g.size() == 23);
        CHECK(g.degrees() == std::vector<int>{7, 7, 6, 6, 6, 6, 6, 2});
        CHECK(min_degree(g) == 2);

        const Graph tight = extremal_graph({6, 3});
        CHECK(tight.size() == 3 + 3 * 3);  // K_3 joined to K_1 and two isolated vertices
        CHECK(min_degree(tight) == 3);

        const Graph g14 = extremal_graph({14, 3});
        CHECK(min_degree(g14) == 3);
        CHECK(g14.size() == 3 + 36 + 3 * 11);

        CHECK_THROWS_AS(extremal_graph({8, 1}), ParameterError);
        CHECK_THROWS_AS(extremal_graph({5, 3}), ParameterError);
        CHECK_THROWS_AS(extremal_graph({66, 2}), ParameterError);
    }

    TEST_CASE("join families") {
        for (int d = 2; d <= 5; ++d) {
            for (int n = 2 * d; n <= 20; ++n) {
                CHECK(family_graph({n, d, d, {}}, JoinFamily::Singletons) == extremal_graph({n, d}));
            }
        }
        const Graph parts = family_graph({8, 2, 2, {5, 1}}, JoinFamily::Parts);
        CHECK(parts == extremal_graph({8, 2}));
        CHECK_THROWS_AS(family_graph({8, 2, 2, {4, 2}}, JoinFamily::Parts), ParameterError);
        CHECK_THROWS_AS(family_graph({8, 2, 2, {5}}, JoinFamily::Parts), ParameterError);
        CHECK_THROWS_AS(family_graph({9, 2, 2, {5, 1}}, JoinFamily::Parts), ParameterError);

        // s = 2, delta = 3: K_2 v (K_8 u K_2).
        const Graph equal = family_graph({12, 2, 3, {}}, JoinFamily::EqualParts);
        CHECK(equal == join(complete(2), disjoint_union(complete(8), complete(2))));
        CHECK(min_degree(equal) == 3);
        CHECK_THROWS_AS(family_graph({12, 3, 3, {}}, JoinFamily::EqualParts), ParameterError);
    }

    TEST_CASE("thresholds at (8, 2)") {
        const double q = threshold_rho_q({8, 2});
        const double d = threshold_rho_d({8, 2});
        CHECK(q > 12.0);
        CHECK(q < 13.0);
        CHECK(q == doctest::Approx(12.385164807134).epsilon(1e-12));
        CHECK(d > 8.0);
        CHECK(d < 9.0);
        CHECK(d == doctest::Approx(8.472135955).epsilon(1e-10));
        CHECK(wiener_index(extremal_graph({8, 2})) == 33);
    }

    TEST_CASE("thresholds match full eigenvalues of the extremal graph") {
        for (int d = 2; d <= 6; ++d) {
            for (int n = 2 * d; n <= 40; n += 1) {
                const Graph g = extremal_graph({n, d});
                INFO("n=" << n << " delta=" << d);
                CHECK(threshold_rho_q({n, d}) == doctest::Approx(eigen_rho_q(g)).epsilon(1e-9));
                CHECK(threshold_rho_d({n, d}) == doctest::Approx(eigen_rho_d(g)).epsilon(1e-9));
            }
        }
    }

    TEST_CASE("extremal recognition") {
        std::mt19937_64 rng(3);
        for (int d = 2; d <= 4; ++d) {
            for (int n : {2 * d, 2 * d + 1, 10, 14}) {
                const Graph g = extremal_graph({n, d});
                for (int i = 0; i < 5; ++i) CHECK(recognize_extremal(shuffled(g, rng), d));
                if (d < n - 1) CHECK_FALSE(recognize_extremal(g, d + 1));
                for (const Edge& e : g.edges()) CHECK_FALSE(recognize_extremal(g.without_edge(e.first, e.second), d));
                for (const Edge& e : non_edges(g)) CHECK_FALSE(recognize_extremal(g.with_edge(e.first, e.second), d));
            }
        }
        CHECK_FALSE(recognize_extremal(complete(8), 2));
        CHECK_FALSE(recognize_extremal(cycle(8), 2));
        CHECK_FALSE(recognize_extremal(family_graph({12, 2, 3, {}}, JoinFamily::EqualParts), 3));
    }

    TEST_CASE("order bounds are exact") {
        CHECK(order_bound(Theorem::SignlessLaplacian, 2) == Rational(8));
        CHECK(order_bound(Theorem::SignlessLaplacian, 24) == Rational(162));
        CHECK(order_bound(Theorem::SignlessLaplacian, 25) == Rational(699, 4));
        CHECK(order_bound(Theorem::Distance, 3) == Rational(17));
        CHECK(order_bound(Theorem::Distance, 23) == Rational(538, 3));
        CHECK(order_bound(Theorem::Distance, 2) == Rational(9));
    }

    TEST_CASE("verdicts") {
        TheoremOptions always;
        always.oracle_policy = OraclePolicy::Always;

        const TheoremVerdict ext = check_theorem_1(extremal_graph({8, 2}));
        CHECK(ext.hypotheses_met());
        CHECK(ext.spectral_condition);
        CHECK(ext.borderline);
        CHECK(ext.extremal);
        CHECK(ext.conclusion == Conclusion::ExtremalException);
        REQUIRE(ext.oracle);
        CHECK(ext.oracle->status == SearchStatus::Found);
        CHECK_FALSE(ext.violation());

        const TheoremVerdict c8 = check_theorem_1(cycle(8));
        CHECK(c8.conclusion == Conclusion::Inconclusive);
        CHECK(*c8.spectral_value == doctest::Approx(4.0));
        CHECK_FALSE(c8.oracle);
        CHECK(check_theorem_1(cycle(8), always).oracle);

        const TheoremVerdict k8 = check_theorem_1(complete(8));
        CHECK(k8.conclusion == Conclusion::NotApplicable);
        CHECK_FALSE(k8.hypotheses.order_bound_ok);
        CHECK(k8.hypotheses.required_order == Rational(42));
        CHECK(*k8.spectral_value == doctest::Approx(14.0));
        CHECK_FALSE(k8.threshold);

        const TheoremVerdict odd = check_theorem_1(extremal_graph({9, 2}));
        CHECK_FALSE(odd.hypotheses.even_order);
        CHECK(odd.conclusion == Conclusion::NotApplicable);

        const TheoremVerdict disconnected = check_theorem_2(disjoint_union(cycle(5), cycle(5)));
        CHECK_FALSE(disconnected.hypotheses.connected);
        CHECK_FALSE(disconnected.spectral_value);

        const TheoremVerdict d10 = check_theorem_2(extremal_graph({10, 2}));
        CHECK(d10.conclusion == Conclusion::ExtremalException);
        CHECK(d10.borderline);

        const TheoremVerdict c10 = check_theorem_2(cycle(10));
        CHECK(*c10.spectral_value == doctest::Approx(25.0));
        CHECK(c10.conclusion == Conclusion::Inconclusive);

        CHECK(to_string(Conclusion::EvenFactorGuaranteed) == "even-factor-guaranteed");
        CHECK(to_string(Conclusion::NotApplicable) == "not-applicable");
    }

    TEST_CASE("claims policy runs the oracle on every claim") {
        TheoremOptions claims;
        claims.oracle_policy = OraclePolicy::Claims;
        std::mt19937_64 rng(11);
        for (int i = 0; i < 50; ++i) {
            const Graph g = shuffled(extremal_graph({8, 2}), rng);
            const TheoremVerdict v = check_theorem_1(g, claims);
            CHECK(v.conclusion == Conclusion::ExtremalException);
            CHECK(v.oracle);
        }
    }

    TEST_CASE("violation requires a guaranteed conclusion and a refuting oracle") {
        TheoremVerdict v;
        v.conclusion = Conclusion::EvenFactorGuaranteed;
        CHECK_FALSE(v.violation());
        v.oracle = EvenFactorCertificate{SearchStatus::Found, {}, 1};
        CHECK_FALSE(v.violation());
        v.oracle->status = SearchStatus::SearchCapExceeded;
        CHECK_FALSE(v.violation());
        v.oracle->status = SearchStatus::NoneExists;
        CHECK(v.violation());
        v.conclusion = Conclusion::ExtremalException;
        CHECK_FALSE(v.violation());
    }

    TEST_CASE("delta override marks the verdict as diagnostic") {
        TheoremOptions o;
        o.delta_override = 3;
        const TheoremVerdict v = check_theorem_1(cycle(8), o);
        CHECK(v.diagnostic);
        CHECK(v.hypotheses.delta == 3);
        CHECK_FALSE(check_theorem_1(cycle(8)).diagnostic);
    }

    TEST_CASE("Perron vector of the extremal distance quotient") {
        const PerronABC p8 = perron_abc({8, 2});
        CHECK(p8.system_residual < 1e-10);
        CHECK(p8.elimination_ratio_residual < 1e-10);
        // The two ratio forms coincide at delta = 2.
        CHECK(p8.ratio_residual < 1e-10);
        CHECK(p8.two_b_minus_a > 0.0);

        const PerronABC p14 = perron_abc({14, 3});
        CHECK(p14.system_residual < 1e-10);
        CHECK(p14.elimination_ratio_residual < 1e-10);
        CHECK(p14.b == doctest::Approx(0.833271).epsilon(1e-5));
        // Denominator 2 rho + delta - 2 misses b by about 0.0497 here.
        CHECK(p14.ratio_residual == doctest::Approx(0.0497).epsilon(1e-2));
        CHECK(p14.two_b_minus_a > 0.0);

        // Independent: rescale the full distance-matrix Perron vector so the clique entry is 1.
        const Graph g = extremal_graph({14, 3});
        const SymMatrix dm = distance_matrix(g);
        Eigen::MatrixXd m(14, 14);
        for (int i = 0; i < 14; ++i)
            for (int j = 0; j < 14; ++j) m(i, j) = dm(i, j);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
        const Eigen::VectorXd x = solver.eigenvectors().col(13) / solver.eigenvectors()(3, 13);
        CHECK(x(0) == doctest::Approx(p14.b).epsilon(1e-9));
        CHECK(x(13) == doctest::Approx(p14.c).epsilon(1e-9));
    }
}
