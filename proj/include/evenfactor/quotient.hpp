#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "evenfactor/graph.hpp"
#include "evenfactor/spectral.hpp"

namespace evenfactor {

using Rational = boost::rational<long long>;

// Ordered list of disjoint, nonempty vertex blocks.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<VertexSet> blocks) : blocks_(std::move(blocks)) {}

    const std::vector<VertexSet>& blocks() const { return blocks_; }
    int size() const { return static_cast<int>(blocks_.size()); }
    // Throws InvalidPartition unless the blocks partition 0..n-1.
    void validate(int n) const;

private:
    std::vector<VertexSet> blocks_;
};

// Matrix of average block row sums. Not symmetric in general.
class QuotientMatrix {
public:
    QuotientMatrix() = default;
    QuotientMatrix(int order, std::vector<Rational> entries, bool equitable);
    static QuotientMatrix from_integers(const std::vector<std::vector<long long>>& rows);

    int order() const { return order_; }
    bool equitable() const { return equitable_; }
    const Rational& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * order_ + j]; }
    double value(int i, int j) const;

    // Compares entries only.
    friend bool operator==(const QuotientMatrix& a, const QuotientMatrix& b) {
        return a.order_ == b.order_ && a.entries_ == b.entries_;
    }

private:
    int order_ = 0;
    std::vector<Rational> entries_;
    bool equitable_ = false;
};

// c3 x^3 + c2 x^2 + c1 x + c0 with exact rational coefficients. Also used
// for the quadratic factors (c3 = 0).
struct Cubic {
    Rational c3{0}, c2{0}, c1{0}, c0{0};

    double operator()(double x) const;
    double derivative(double x) const;
    // Sign of the value at x, computed exactly (x is a dyadic rational).
    int sign_at(double x) const;
    // Exact value at x, rounded to double.
    double exact_value(double x) const;
    std::string to_string() const;

    friend Cubic operator+(const Cubic& a, const Cubic& b);
    friend Cubic operator-(const Cubic& a, const Cubic& b);
    friend Cubic operator*(const Rational& k, const Cubic& a);
    friend bool operator==(const Cubic&, const Cubic&) = default;
};

QuotientMatrix quotient_matrix(const SymMatrix& m, const Partition& p);

// Monic det(xI - q) for a 3x3 quotient matrix.
Cubic charpoly3(const QuotientMatrix& q);

// Join graphs whose equitable three-block quotients have closed-form
// characteristic polynomials.
//   Extremal:    K_d v (K_{n-2d+1} u (d-1)K_1)
//   Singletons:  K_s v (K_{n-2s+1} u (s-1)K_1)
//   EqualParts:  K_s v (K_{n-s-(d+1-s)(s-1)} u (s-1)K_{d+1-s})
// Signless-Laplacian blocks are ordered (join, large clique, rest); distance
// blocks (large clique, join, rest).
enum class QuotientFamily {
    SignlessExtremal,
    SignlessSingletons,
    SignlessEqualParts,
    DistanceExtremal,
    DistanceSingletons,
    DistanceEqualParts,
};

std::string to_string(QuotientFamily family);

// Throws ParameterError outside the family's construction range. Extremal
// families ignore s; Singletons families ignore delta.
void check_family_params(QuotientFamily family, long long n, long long s, long long delta);

// The 3x3 quotient matrix template of the family, entrywise in (n, s, delta).
QuotientMatrix family_quotient_template(QuotientFamily family, long long n, long long s, long long delta);

// Closed-form characteristic polynomial of the family's quotient.
Cubic family_cubic(QuotientFamily family, long long n, long long s, long long delta);

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

struct RootOptions {
    double tolerance = 1e-10;
    // When set and the bracket has no sign change, hi is doubled away from lo
    // (never beyond this limit) until one appears.
    std::optional<double> widen_limit;
};

// Root in [lo, hi] by bisection with safeguarded Newton steps. Signs are
// evaluated exactly so the returned bracket midpoint is within tolerance of a
// true root. It is the largest real root when no root lies above hi.
// Throws BracketError if no sign change is found.
double largest_root(const Cubic& c, Bracket bracket, const RootOptions& options = {});

// Largest real root of a monic cubic, using the Cauchy bound as bracket top.
double largest_real_root(const Cubic& c, double tolerance = 1e-10);

// Factored differences between family cubics:
//   SignlessSingletons:  phi(Singletons, s) - phi(Extremal, d) = (s - d) * eta1
//   SignlessEqualParts:  phi(EqualParts) - phi(Extremal, d)    = (d - s) * eta2
//   DistanceSingletons:  phi(Singletons, s) - phi(Extremal, d) = (d - s) * phi1
//   DistanceEqualParts:  phi(EqualParts) - phi(Extremal, d)    = (s - d) * phi2
enum class FactorIdentity { SignlessSingletons, SignlessEqualParts, DistanceSingletons, DistanceEqualParts };

std::string to_string(FactorIdentity identity);
void check_identity_params(FactorIdentity identity, long long n, long long s, long long delta);

// Max over samples of |lhs - rhs| / max(1, |phi_a(x)|, |phi_b(x)|), with both
// sides evaluated exactly.
double identity_check(FactorIdentity identity, long long n, long long s, long long delta,
                      std::span<const double> x_samples);

// Quadratic factors and their lower-bound polynomials, as polynomials in x.
namespace factors {

Cubic eta1(long long n, long long s, long long delta);
Cubic eta2(long long n, long long s, long long delta);
// eta2 with s = 2 written out.
Cubic eta2_s2(long long n, long long delta);
Cubic phi1(long long n, long long s, long long delta);
Cubic phi2(long long n, long long s, long long delta);
// phi2 with s = 3 written out (linear in x).
Cubic phi2_s3(long long n, long long delta);

// Bound polynomials in n used to show eta2 and phi2 stay positive.
Rational eta2_bound(long long n, long long s, long long delta);
Rational phi2_bound(long long n, long long s, long long delta);

}  // namespace factors

}  // namespace evenfactor
