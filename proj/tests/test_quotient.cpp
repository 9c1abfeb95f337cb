#include <doctest.h>

#include <cmath>
#include <random>

#include "evenfactor/errors.hpp"
#include "evenfactor/quotient.hpp"
#include "evenfactor/sampler.hpp"
#include "evenfactor/spectral.hpp"
#include "evenfactor/theorem.hpp"

using namespace evenfactor;

namespace {

using R = Rational;

Cubic monic(long long c2, long long c1, long long c0) { return Cubic{R(1), R(c2), R(c1), R(c0)}; }

bool is_signless(QuotientFamily f) {
    return f == QuotientFamily::SignlessExtremal || f == QuotientFamily::SignlessSingletons ||
           f == QuotientFamily::SignlessEqualParts;
}

// Uncorrected constant terms of the two equal-parts polynomials.
long long uncorrected_signless_equal_parts_c0(long long n, long long s, long long d) {
    const long long s2 = s * s, s3 = s2 * s, s4 = s3 * s, d2 = d * d, d3 = d2 * d, d4 = d3 * d;
    return 4 * s * d2 * n - 4 * d3 * n - 2 * d4 * s3 + 6 * d3 * s2 - 12 * d3 * s + 8 * d3 - 4 * d * n * n -
           4 * d * s2 * n + 8 * s * d * n + 8 * d * n + 4 * d * s4 - 16 * d * s3 + 28 * d * s2 - 24 * d * s +
           2 * s * n * n - 6 * n * s - 2 * s3 + 10 * s4 - 18 * s3 + 14 * s2;
}

long long uncorrected_distance_equal_parts_c0(long long n, long long s, long long d) {
    const long long s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s, d2 = d * d, d3 = d2 * d;
    return 4 * d - 12 * s + d * n - 14 * d * s - 4 * n * s + 20 * d * s2 - 4 * d2 * s - 11 * d * s3 + 2 * d * s4 +
           4 * n * s2 - n * s3 + d2 + 21 * s2 - 18 * s3 + 7 * s4 - s5 + 4 * d2 * s2 - d3 * s3 + d * n * s2 -
           3 * d * n * s + 4;
}

}  // namespace

TEST_SUITE("quotient") {
    TEST_CASE("closed-form cubics at small parameters") {
        CHECK(family_cubic(QuotientFamily::SignlessExtremal, 8, 0, 2) == monic(-20, 104, -120));
        CHECK(family_cubic(QuotientFamily::DistanceExtremal, 8, 0, 2) == monic(-5, -28, -12));
        CHECK(family_cubic(QuotientFamily::SignlessExtremal, 8, 0, 2).to_string() == "x^3 - 20x^2 + 104x - 120");
        const Cubic c = family_cubic(QuotientFamily::SignlessExtremal, 8, 0, 2);
        CHECK(c.sign_at(12.0) < 0);
        CHECK(c.sign_at(13.0) > 0);
    }

    TEST_CASE("every family cubic is the characteristic polynomial of the built graph's quotient") {
        for (int n = 4; n <= 40; ++n) {
            for (int d = 2; d <= 8; ++d) {
                std::vector<std::pair<QuotientFamily, int>> cases;
                if (n >= 2 * d) {
                    cases.push_back({QuotientFamily::SignlessExtremal, 0});
                    cases.push_back({QuotientFamily::DistanceExtremal, 0});
                }
                for (int s = 2; 2 * s <= n && s <= 8; ++s) {
                    cases.push_back({QuotientFamily::SignlessSingletons, s});
                    cases.push_back({QuotientFamily::DistanceSingletons, s});
                }
                for (int s = 2; s <= d - 1; ++s) {
                    if (n - s - (d + 1 - s) * (s - 1) < 1) continue;
                    cases.push_back({QuotientFamily::SignlessEqualParts, s});
                    cases.push_back({QuotientFamily::DistanceEqualParts, s});
                }
                for (auto [family, s] : cases) {
                    const Graph g = quotient_family_graph(family, n, s, d);
                    const SymMatrix m = is_signless(family) ? signless_laplacian(g) : distance_matrix(g);
                    const QuotientMatrix q = quotient_matrix(m, quotient_family_partition(family, n, s, d));
                    INFO(to_string(family) << " n=" << n << " s=" << s << " d=" << d);
                    CHECK(q.equitable());
                    CHECK(q == family_quotient_template(family, n, s, d));
                    CHECK(charpoly3(q) == family_cubic(family, n, s, d));
                }
            }
        }
    }

    TEST_CASE("uncorrected equal-parts constant terms differ from the true ones by fixed expressions") {
        for (long long d = 3; d <= 9; ++d) {
            for (long long s = 2; s <= d - 1; ++s) {
                for (long long n = 2 * d + 10; n <= 2 * d + 30; n += 5) {
                    const long long s2 = s * s, s3 = s2 * s, s5 = s3 * s2, d2 = d * d, d3 = d2 * d, d4 = d3 * d;
                    const R signless_true = family_cubic(QuotientFamily::SignlessEqualParts, n, s, d).c0;
                    const long long signless_offset = -4 * (d3 - d2) * n - 2 * (d4 - d2) * s3 + 6 * (d3 - d2) * s2 -
                                                      12 * (d3 - d2) * s + 8 * (d3 - d2) + 2 * s5 - 2 * s3;
                    CHECK(R(uncorrected_signless_equal_parts_c0(n, s, d)) == signless_true + R(signless_offset));
                    const R distance_true = family_cubic(QuotientFamily::DistanceEqualParts, n, s, d).c0;
                    CHECK(R(uncorrected_distance_equal_parts_c0(n, s, d)) == distance_true - R((d3 - d2) * s3));
                }
            }
        }
    }

    TEST_CASE("the closed s = 2 equal-parts polynomial is the signless cubic, not the distance one") {
        for (long long d = 3; d <= 10; ++d) {
            for (long long n = 2 * d + 2; n <= 60; ++n) {
                const Cubic closed = monic(4 - 3 * n, 2 * n * n + 4 * d * n - 10 * n - 4 * d * d + 8,
                                            4 * n * n - 4 * d * n * n + 4 * d * d * n + 8 * d * n - 12 * n - 8 * d * d + 8);
                INFO("n=" << n << " d=" << d);
                CHECK(closed == family_cubic(QuotientFamily::SignlessEqualParts, n, 2, d));
                CHECK(closed != family_cubic(QuotientFamily::DistanceEqualParts, n, 2, d));
            }
        }
    }

    TEST_CASE("factored identities hold exactly at random points") {
        std::mt19937_64 rng(3);
        std::vector<double> xs;
        for (int i = 0; i < 20; ++i) xs.push_back(-50.0 + 200.0 * unit_uniform(rng));
        for (long long d = 2; d <= 9; ++d) {
            for (long long n = 2 * d; n <= 2 * d + 30; n += 3) {
                for (long long s = d; 2 * s <= n; ++s) {
                    CHECK(identity_check(FactorIdentity::SignlessSingletons, n, s, d, xs) == 0.0);
                    CHECK(identity_check(FactorIdentity::DistanceSingletons, n, s, d, xs) == 0.0);
                }
                for (long long s = 2; s <= d - 1; ++s) {
                    if (n - s - (d + 1 - s) * (s - 1) < 1) continue;
                    CHECK(identity_check(FactorIdentity::SignlessEqualParts, n, s, d, xs) == 0.0);
                    CHECK(identity_check(FactorIdentity::DistanceEqualParts, n, s, d, xs) == 0.0);
                }
            }
        }
        CHECK_THROWS_AS(identity_check(FactorIdentity::SignlessSingletons, 10, 1, 2, xs), ParameterError);
        CHECK_THROWS_AS(identity_check(FactorIdentity::SignlessEqualParts, 10, 3, 3, xs), ParameterError);
    }

    TEST_CASE("specialised factors match the general ones") {
        for (long long d = 3; d <= 10; ++d) {
            for (long long n = 2 * d; n <= 60; ++n) {
                CHECK(factors::eta2_s2(n, d) == factors::eta2(n, 2, d));
                if (d >= 4) CHECK(factors::phi2_s3(n, d) == factors::phi2(n, 3, d));
            }
        }
    }

    TEST_CASE("bound polynomials keep their closed offsets") {
        for (long long d = 3; d <= 10; ++d) {
            for (long long s = 2; s <= d - 1; ++s) {
                for (long long n = 7 * d - 7; n <= 7 * d + 20; ++n) {
                    const double eta_at = factors::eta2(n, s, d).exact_value(static_cast<double>(2 * n - 2 * d));
                    CHECK(boost::rational_cast<double>(factors::eta2_bound(n, s, d)) == eta_at - 2.0 * d * d);
                    const double phi_at = factors::phi2(n, s, d).exact_value(static_cast<double>(n + d - 3));
                    CHECK(boost::rational_cast<double>(factors::phi2_bound(n, s, d)) == phi_at + 42.0 * s);
                }
            }
        }
    }

    TEST_CASE("root finding") {
        const Cubic c = family_cubic(QuotientFamily::SignlessExtremal, 8, 0, 2);
        const double r = largest_root(c, {12.0, 13.0}, {1e-12, std::nullopt});
        CHECK(r == doctest::Approx(12.385164807134504).epsilon(1e-12));
        CHECK(largest_real_root(c, 1e-12) == doctest::Approx(r).epsilon(1e-12));
        CHECK_THROWS_AS(largest_root(c, {13.0, 14.0}, {}), BracketError);
        CHECK_THROWS_AS(largest_root(c, {14.0, 13.0}, {}), BracketError);
        // Widening recovers a root just above the bracket, but never past the limit.
        CHECK(largest_root(c, {12.0, 12.2}, {1e-12, 20.0}) == doctest::Approx(r).epsilon(1e-12));
        CHECK_THROWS_AS(largest_root(c, {12.0, 12.2}, {1e-12, 12.3}), BracketError);
        // Exact roots at bracket ends are returned as-is.
        const Cubic cube = monic(-6, 11, -6);  // (x-1)(x-2)(x-3)
        CHECK(largest_root(cube, {2.5, 3.0}, {}) == 3.0);
        CHECK(largest_real_root(cube, 1e-14) == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(largest_real_root(monic(0, 0, -8), 1e-14) == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(largest_real_root(monic(0, 1, 0)) == doctest::Approx(0.0));
    }

    TEST_CASE("quotient matrix of a non-equitable partition") {
        const SymMatrix a = adjacency_matrix(path(3));
        const QuotientMatrix q = quotient_matrix(a, Partition({VertexSet{0, 1}, VertexSet{2}}));
        CHECK_FALSE(q.equitable());
        CHECK(q(0, 0) == R(1));
        CHECK(q(0, 1) == R(1, 2));
        CHECK(q(1, 0) == R(1));
        CHECK_THROWS_AS(quotient_matrix(a, Partition({VertexSet{0, 1}})), InvalidPartition);
        CHECK_THROWS_AS(quotient_matrix(a, Partition({VertexSet{0, 1}, VertexSet{1, 2}})), InvalidPartition);
        CHECK_THROWS_AS(quotient_matrix(a, Partition({VertexSet{0, 1, 2}, VertexSet{}})), InvalidPartition);
    }

    TEST_CASE("family parameters are validated") {
        CHECK_THROWS_AS(family_cubic(QuotientFamily::SignlessExtremal, 5, 0, 3), ParameterError);
        CHECK_THROWS_AS(family_cubic(QuotientFamily::SignlessEqualParts, 20, 1, 4), ParameterError);
        CHECK_THROWS_AS(family_cubic(QuotientFamily::DistanceEqualParts, 20, 4, 4), ParameterError);
        CHECK_THROWS_AS(family_cubic(QuotientFamily::DistanceSingletons, 5, 3, 2), ParameterError);
    }
}
