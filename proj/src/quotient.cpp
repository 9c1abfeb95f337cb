#include "evenfactor/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "evenfactor/errors.hpp"

namespace evenfactor {

namespace mp = boost::multiprecision;

namespace {

mp::cpp_rational exact(double x) {
    int exponent = 0;
    const double mantissa = std::frexp(x, &exponent);
    const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
    mp::cpp_rational r(scaled);
    const int shift = exponent - 53;
    mp::cpp_int power = 1;
    power <<= std::abs(shift);
    if (shift >= 0) return r * power;
    return r / power;
}

mp::cpp_rational exact(const Rational& q) {
    return mp::cpp_rational(q.numerator()) / mp::cpp_rational(q.denominator());
}

mp::cpp_rational evaluate(const Cubic& c, double x) {
    const mp::cpp_rational v = exact(x);
    return ((exact(c.c3) * v + exact(c.c2)) * v + exact(c.c1)) * v + exact(c.c0);
}

double as_double(const Rational& q) { return boost::rational_cast<double>(q); }

Cubic monic(Rational c2, Rational c1, Rational c0) { return Cubic{Rational(1), c2, c1, c0}; }

Cubic linear(Rational c1, Rational c0) { return Cubic{Rational(0), Rational(0), c1, c0}; }

Cubic quadratic(Rational c2, Rational c1, Rational c0) { return Cubic{Rational(0), c2, c1, c0}; }

void require(bool ok, const std::string& what) {
    if (!ok) throw ParameterError(what);
}

long long equal_parts_clique(long long n, long long s, long long d) { return n - s - (d + 1 - s) * (s - 1); }

}  // namespace

void Partition::validate(int n) const {
    std::vector<int> owner(n, -1);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (blocks_[b].empty()) throw InvalidPartition("partition block " + std::to_string(b) + " is empty");
        for (Vertex v : blocks_[b]) {
            if (v < 0 || v >= n) throw InvalidPartition("partition vertex " + std::to_string(v) + " out of range");
            if (owner[v] >= 0) throw InvalidPartition("vertex " + std::to_string(v) + " in two blocks");
            owner[v] = static_cast<int>(b);
        }
    }
    if (std::find(owner.begin(), owner.end(), -1) != owner.end()) {
        throw InvalidPartition("partition does not cover every vertex");
    }
}

QuotientMatrix::QuotientMatrix(int order, std::vector<Rational> entries, bool equitable)
    : order_(order), entries_(std::move(entries)), equitable_(equitable) {
    if (static_cast<int>(entries_.size()) != order * order) throw std::invalid_argument("quotient entry count");
}

QuotientMatrix QuotientMatrix::from_integers(const std::vector<std::vector<long long>>& rows) {
    const int r = static_cast<int>(rows.size());
    std::vector<Rational> e;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != r) throw std::invalid_argument("quotient matrix is not square");
        for (long long v : row) e.emplace_back(v);
    }
    return QuotientMatrix(r, std::move(e), true);
}

double QuotientMatrix::value(int i, int j) const { return as_double((*this)(i, j)); }

double Cubic::operator()(double x) const {
    const long double v = x;
    return static_cast<double>(((as_double(c3) * v + as_double(c2)) * v + as_double(c1)) * v + as_double(c0));
}

double Cubic::derivative(double x) const {
    const long double v = x;
    return static_cast<double>((3.0L * as_double(c3) * v + 2.0L * as_double(c2)) * v + as_double(c1));
}

int Cubic::sign_at(double x) const { return evaluate(*this, x).sign(); }

double Cubic::exact_value(double x) const { return static_cast<double>(evaluate(*this, x)); }

std::string Cubic::to_string() const {
    std::ostringstream out;
    const std::array<std::pair<Rational, const char*>, 4> terms{
        {{c3, "x^3"}, {c2, "x^2"}, {c1, "x"}, {c0, ""}}};
    bool first = true;
    for (const auto& [c, power] : terms) {
        if (c == Rational(0)) continue;
        const Rational mag = boost::abs(c);
        out << (c < Rational(0) ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (mag != Rational(1) || *power == '\0') out << mag.numerator() << (mag.denominator() != 1 ? "/" + std::to_string(mag.denominator()) : "");
        out << power;
        first = false;
    }
    return first ? "0" : out.str();
}

Cubic operator+(const Cubic& a, const Cubic& b) { return {a.c3 + b.c3, a.c2 + b.c2, a.c1 + b.c1, a.c0 + b.c0}; }

Cubic operator-(const Cubic& a, const Cubic& b) { return {a.c3 - b.c3, a.c2 - b.c2, a.c1 - b.c1, a.c0 - b.c0}; }

Cubic operator*(const Rational& k, const Cubic& a) { return {k * a.c3, k * a.c2, k * a.c1, k * a.c0}; }

QuotientMatrix quotient_matrix(const SymMatrix& m, const Partition& p) {
    p.validate(m.order());
    if (!m.is_integral()) throw std::invalid_argument("quotient_matrix requires an integral matrix");
    const int r = p.size();
    std::vector<Rational> entries;
    entries.reserve(static_cast<std::size_t>(r) * r);
    bool equitable = true;
    for (const VertexSet& rows : p.blocks()) {
        for (const VertexSet& cols : p.blocks()) {
            long long total = 0;
            std::optional<long long> common;
            for (Vertex i : rows) {
                long long row_sum = 0;
                for (Vertex j : cols) row_sum += static_cast<long long>(m(i, j));
                total += row_sum;
                if (!common) {
                    common = row_sum;
                } else if (*common != row_sum) {
                    equitable = false;
                }
            }
            entries.emplace_back(total, rows.size());
        }
    }
    return QuotientMatrix(r, std::move(entries), equitable);
}

Cubic charpoly3(const QuotientMatrix& q) {
    if (q.order() != 3) throw std::invalid_argument("charpoly3 needs a 3x3 matrix");
    const Rational trace = q(0, 0) + q(1, 1) + q(2, 2);
    const Rational minors = (q(0, 0) * q(1, 1) - q(0, 1) * q(1, 0)) + (q(0, 0) * q(2, 2) - q(0, 2) * q(2, 0)) +
                            (q(1, 1) * q(2, 2) - q(1, 2) * q(2, 1));
    const Rational det = q(0, 0) * (q(1, 1) * q(2, 2) - q(1, 2) * q(2, 1)) -
                         q(0, 1) * (q(1, 0) * q(2, 2) - q(1, 2) * q(2, 0)) +
                         q(0, 2) * (q(1, 0) * q(2, 1) - q(1, 1) * q(2, 0));
    return monic(-trace, minors, -det);
}

std::string to_string(QuotientFamily family) {
    switch (family) {
        case QuotientFamily::SignlessExtremal: return "signless-extremal";
        case QuotientFamily::SignlessSingletons: return "signless-singletons";
        case QuotientFamily::SignlessEqualParts: return "signless-equal-parts";
        case QuotientFamily::DistanceExtremal: return "distance-extremal";
        case QuotientFamily::DistanceSingletons: return "distance-singletons";
        case QuotientFamily::DistanceEqualParts: return "distance-equal-parts";
    }
    return "unknown";
}

void check_family_params(QuotientFamily family, long long n, long long s, long long delta) {
    switch (family) {
        case QuotientFamily::SignlessExtremal:
        case QuotientFamily::DistanceExtremal:
            require(delta >= 1, "extremal family needs delta >= 1");
            require(n >= 2 * delta, "extremal family needs n >= 2 delta");
            return;
        case QuotientFamily::SignlessSingletons:
        case QuotientFamily::DistanceSingletons:
            require(s >= 1, "singletons family needs s >= 1");
            require(n >= 2 * s, "singletons family needs n >= 2 s");
            return;
        case QuotientFamily::SignlessEqualParts:
        case QuotientFamily::DistanceEqualParts:
            require(s >= 2 && s <= delta - 1, "equal-parts family needs 2 <= s <= delta - 1");
            require(equal_parts_clique(n, s, delta) >= 1,
                    "equal-parts family needs n >= s + (delta + 1 - s)(s - 1) + 1");
            return;
    }
}

QuotientMatrix family_quotient_template(QuotientFamily family, long long n, long long s, long long d) {
    check_family_params(family, n, s, d);
    switch (family) {
        case QuotientFamily::SignlessSingletons: d = s; [[fallthrough]];
        case QuotientFamily::SignlessExtremal:
            return QuotientMatrix::from_integers({{n + d - 2, n - 2 * d + 1, d - 1}, {d, 2 * n - 3 * d, 0}, {d, 0, d}});
        case QuotientFamily::SignlessEqualParts: {
            const long long big = equal_parts_clique(n, s, d);
            const long long part = d + 1 - s;
            return QuotientMatrix::from_integers(
                {{n + s - 2, big, (s - 1) * part}, {s, 2 * n - s - 2 * part * (s - 1) - 2, 0}, {s, 0, 2 * d - s}});
        }
        case QuotientFamily::DistanceSingletons: d = s; [[fallthrough]];
        case QuotientFamily::DistanceExtremal:
            return QuotientMatrix::from_integers({{n - 2 * d, d, 2 * (d - 1)},
                                                  {n - 2 * d + 1, d - 1, d - 1},
                                                  {2 * (n - 2 * d + 1), d, 2 * (d - 2)}});
        case QuotientFamily::DistanceEqualParts: {
            const long long big = equal_parts_clique(n, s, d);
            const long long part = d + 1 - s;
            return QuotientMatrix::from_integers({{big - 1, s, 2 * (s - 1) * part},
                                                  {big, s - 1, (s - 1) * part},
                                                  {2 * big, s, d - s + 2 * (s - 2) * part}});
        }
    }
    throw std::logic_error("unhandled quotient family");
}

Cubic family_cubic(QuotientFamily family, long long n, long long s, long long d) {
    check_family_params(family, n, s, d);
    switch (family) {
        case QuotientFamily::SignlessSingletons: d = s; [[fallthrough]];
        case QuotientFamily::SignlessExtremal:
            return monic(-3 * n + d + 2, 2 * n * n + d * n - 4 * n - 4 * d * d + 4 * d,
                         -2 * d * n * n + 4 * d * d * n + 2 * d * n - 2 * d * d * d - 2 * d * d);
        case QuotientFamily::SignlessEqualParts: {
            const long long s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s, d2 = d * d;
            return monic(2 * d * s - 4 * d - 3 * n - 2 * s2 + 5 * s + 2,
                         -4 * d2 * s + 4 * d2 - 2 * d * n * s + 8 * d * n + 4 * d * s2 - 4 * d * s - 8 * d +
                             2 * n * n + 2 * n * s2 - 7 * n * s - 4 * n - 4 * s2 + 12 * s,
                         4 * d2 * n * s - 4 * d2 * n - 2 * d2 * s3 + 6 * d2 * s2 - 12 * d2 * s + 8 * d2 -
                             4 * d * n * n - 4 * d * n * s2 + 8 * d * n * s + 8 * d * n + 4 * d * s4 -
                             16 * d * s3 + 28 * d * s2 - 24 * d * s + 2 * n * n * s - 6 * n * s - 2 * s5 +
                             10 * s4 - 18 * s3 + 14 * s2);
        }
        case QuotientFamily::DistanceSingletons: d = s; [[fallthrough]];
        case QuotientFamily::DistanceExtremal:
            return monic(5 - n - d, 5 * d * d - n - 2 * d * n - 8 * d + 8,
                         d * d * n - 3 * d * n - 8 * d + 8 * d * d - 2 * d * d * d + 4);
        case QuotientFamily::DistanceEqualParts: {
            const long long s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s, d2 = d * d;
            return monic(-d * s + 2 * d - n + s2 - 3 * s + 5,
                         2 * d2 * s2 - 3 * d2 * s + d2 - 2 * d * n * s + d * n - 4 * d * s3 + 13 * d * s2 -
                             13 * d * s + 6 * d + 2 * n * s2 - 3 * n * s - n + 2 * s4 - 10 * s3 + 17 * s2 -
                             14 * s + 8,
                         -d2 * s3 + 4 * d2 * s2 - 4 * d2 * s + d2 + d * n * s2 - 3 * d * n * s + d * n +
                             2 * d * s4 - 11 * d * s3 + 20 * d * s2 - 14 * d * s + 4 * d - n * s3 + 4 * n * s2 -
                             4 * n * s - s5 + 7 * s4 - 18 * s3 + 21 * s2 - 12 * s + 4);
        }
    }
    throw std::logic_error("unhandled quotient family");
}

double largest_root(const Cubic& c, Bracket bracket, const RootOptions& options) {
    double lo = bracket.lo;
    double hi = bracket.hi;
    if (!(lo <= hi)) throw BracketError("bracket lower end exceeds upper end");
    int sign_lo = c.sign_at(lo);
    int sign_hi = c.sign_at(hi);
    if (sign_hi == 0) return hi;
    if (sign_lo == sign_hi && options.widen_limit) {
        while (sign_lo == sign_hi && hi < *options.widen_limit) {
            hi = std::min(*options.widen_limit, lo + 2.0 * (hi - lo) + 1.0);
            sign_hi = c.sign_at(hi);
            if (sign_hi == 0) return hi;
        }
    }
    if (sign_lo == 0) return lo;
    if (sign_lo == sign_hi) {
        throw BracketError("no sign change of " + c.to_string() + " on [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
    }

    auto shrink = [&](double x) {
        const int sx = c.sign_at(x);
        if (sx == 0) {
            lo = hi = x;
        } else if (sx == sign_lo) {
            lo = x;
        } else {
            hi = x;
        }
    };

    const double eps = options.tolerance / 4.0;
    while (hi - lo > options.tolerance) {
        const double width = hi - lo;
        const double mid = lo + width / 2.0;
        if (mid <= lo || mid >= hi) break;  // adjacent doubles
        const double slope = c.derivative(mid);
        if (slope != 0.0) {
            const double newton = mid - c(mid) / slope;
            if (newton - eps > lo && newton + eps < hi) {
                shrink(newton - eps);
                if (lo < hi && newton + eps < hi) shrink(newton + eps);
            }
        }
        if (hi - lo > width / 2.0) shrink(lo + (hi - lo) / 2.0);
    }
    return lo + (hi - lo) / 2.0;
}

double largest_real_root(const Cubic& c, double tolerance) {
    if (c.c3 != Rational(1)) throw std::invalid_argument("largest_real_root expects a monic cubic");
    const double bound = 1.0 + std::max({std::abs(as_double(c.c2)), std::abs(as_double(c.c1)), std::abs(as_double(c.c0))});
    // Critical points of x^3 + c2 x^2 + c1 x + c0.
    const double a = 3.0, b = 2.0 * as_double(c.c2), k = as_double(c.c1);
    const double disc = b * b - 4.0 * a * k;
    Bracket bracket{-bound, bound};
    if (disc > 0.0) {
        const double root_disc = std::sqrt(disc);
        const double p1 = (-b - root_disc) / (2.0 * a);
        const double p2 = (-b + root_disc) / (2.0 * a);
        const int at_min = c.sign_at(p2);
        if (at_min == 0) return p2;
        if (at_min < 0) {
            bracket = {p2, bound};
        } else {
            const int at_max = c.sign_at(p1);
            if (at_max == 0) return p1;
            bracket = {-bound, p1};
        }
    }
    return largest_root(c, bracket, {tolerance, std::nullopt});
}

std::string to_string(FactorIdentity identity) {
    switch (identity) {
        case FactorIdentity::SignlessSingletons: return "signless-singletons";
        case FactorIdentity::SignlessEqualParts: return "signless-equal-parts";
        case FactorIdentity::DistanceSingletons: return "distance-singletons";
        case FactorIdentity::DistanceEqualParts: return "distance-equal-parts";
    }
    return "unknown";
}

void check_identity_params(FactorIdentity identity, long long n, long long s, long long delta) {
    require(delta >= 2, "identity needs delta >= 2");
    require(n >= 2 * delta, "identity needs n >= 2 delta");
    switch (identity) {
        case FactorIdentity::SignlessSingletons:
        case FactorIdentity::DistanceSingletons:
            require(s >= delta, "singletons identity needs s >= delta");
            require(n >= 2 * s, "singletons identity needs n >= 2 s");
            return;
        case FactorIdentity::SignlessEqualParts:
        case FactorIdentity::DistanceEqualParts:
            check_family_params(QuotientFamily::SignlessEqualParts, n, s, delta);
            return;
    }
}

double identity_check(FactorIdentity identity, long long n, long long s, long long d,
                      std::span<const double> x_samples) {
    check_identity_params(identity, n, s, d);
    Cubic lhs_a, lhs_b, rhs;
    switch (identity) {
        case FactorIdentity::SignlessSingletons:
            lhs_a = family_cubic(QuotientFamily::SignlessSingletons, n, s, d);
            lhs_b = family_cubic(QuotientFamily::SignlessExtremal, n, s, d);
            rhs = Rational(s - d) * factors::eta1(n, s, d);
            break;
        case FactorIdentity::SignlessEqualParts:
            lhs_a = family_cubic(QuotientFamily::SignlessEqualParts, n, s, d);
            lhs_b = family_cubic(QuotientFamily::SignlessExtremal, n, s, d);
            rhs = Rational(d - s) * factors::eta2(n, s, d);
            break;
        case FactorIdentity::DistanceSingletons:
            lhs_a = family_cubic(QuotientFamily::DistanceSingletons, n, s, d);
            lhs_b = family_cubic(QuotientFamily::DistanceExtremal, n, s, d);
            rhs = Rational(d - s) * factors::phi1(n, s, d);
            break;
        case FactorIdentity::DistanceEqualParts:
            lhs_a = family_cubic(QuotientFamily::DistanceEqualParts, n, s, d);
            lhs_b = family_cubic(QuotientFamily::DistanceExtremal, n, s, d);
            rhs = Rational(s - d) * factors::phi2(n, s, d);
            break;
    }
    double worst = 0.0;
    for (double x : x_samples) {
        const mp::cpp_rational a = evaluate(lhs_a, x);
        const mp::cpp_rational b = evaluate(lhs_b, x);
        const mp::cpp_rational diff = abs((a - b) - evaluate(rhs, x));
        const double scale = std::max({1.0, std::abs(static_cast<double>(a)), std::abs(static_cast<double>(b))});
        worst = std::max(worst, static_cast<double>(diff) / scale);
    }
    return worst;
}

namespace factors {

Cubic eta1(long long n, long long s, long long d) {
    return quadratic(1, n + 4 - 4 * s - 4 * d,
                     -2 * n * n + 2 * n + 4 * s * n + 4 * d * n - 2 * s * s - 2 * d * d - 2 * s - 2 * d - 2 * s * d);
}

Cubic eta2(long long n, long long s, long long d) {
    const long long s2 = s * s, s3 = s2 * s, s4 = s3 * s;
    return quadratic(2 * s - 5, 7 * n - 12 - 4 * d * s - 2 * n * s + 8 * d + 4 * s,
                     2 * d * d + 4 * d * s * n - 8 * d * n - 2 * n * n + 6 * n + 2 * s4 - 2 * d * s3 + 6 * d * s2 -
                         10 * s3 + 18 * s2 - 10 * d * s - 14 * s + 10 * d);
}

Cubic eta2_s2(long long n, long long d) { return quadratic(-1, 3 * n - 4, 2 * d * d - 2 * d - 2 * n * n + 6 * n - 4); }

Cubic phi1(long long n, long long s, long long d) {
    return quadratic(1, 2 * n + 8 - 5 * s - 5 * d,
                     3 * n + 8 - s * n - d * n - 8 * s - 8 * d + 2 * s * s + 2 * s * d + 2 * d * d);
}

Cubic phi2(long long n, long long s, long long d) {
    const long long s2 = s * s, s3 = s2 * s, s4 = s3 * s;
    return quadratic(s - 3, 2 * s3 - 2 * d * s2 - 10 * s2 + 2 * n * s + 17 * s + 3 * d * s + 4 * d - 14 - 3 * n,
                     -s4 + 7 * s3 + d * s3 - 18 * s2 - n * s2 - 4 * d * s2 + 21 * s + 4 * n * s + 2 * d * s - 12 -
                         4 * n + d * n - 2 * d * d + 7 * d);
}

Cubic phi2_s3(long long n, long long d) { return linear(3 * n - 5 * d + 1, d * n - n - 2 * d * d + 4 * d - 3); }

Rational eta2_bound(long long n, long long s, long long d) {
    const long long s2 = s * s, s3 = s2 * s, s4 = s3 * s;
    return Rational((4 * s - 8) * n * n + (34 * d + 8 * s - 16 * d * s - 18) * n + 2 * s4 - 10 * s3 - 2 * d * s3 +
                    6 * d * s2 + 18 * s2 + 16 * d * d * s - 18 * d * s - 14 * s - 36 * d * d + 34 * d);
}

Rational phi2_bound(long long n, long long s, long long d) {
    const long long s2 = s * s, s3 = s2 * s, s4 = s3 * s;
    return Rational((3 * s - 6) * n * n + (2 * s3 - 11 * s2 - 2 * d * s2 + 7 * d * s + 9 * s - 4 * d + 9) * n - s4 +
                    3 * d * s3 + s3 - 2 * d * d * s2 - 8 * d * s2 + 12 * s2 + 4 * d * d * s + 4 * d * s + 21 * s -
                    d * d - d + 3);
}

}  // namespace factors

}  // namespace evenfactor
