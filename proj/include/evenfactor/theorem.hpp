#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evenfactor/graph.hpp"
#include "evenfactor/oracle.hpp"
#include "evenfactor/quotient.hpp"
#include "evenfactor/spectral.hpp"

namespace evenfactor {

// Order n and minimum degree delta of K_delta v (K_{n-2delta+1} u (delta-1)K_1).
// Construction needs delta >= 2 and n >= 2 delta; parity is only imposed by
// the theorem hypotheses.
struct ExtremalParams {
    int n = 0;
    int delta = 0;

    void validate() const;
};

// Clique-join K_s v (K_{n_1} u ... u K_{n_k}); parts nonincreasing, summing to n - s.
struct FamilyParams {
    int n = 0;
    int s = 0;
    int delta = 0;
    std::vector<int> parts;
};

enum class JoinFamily {
    Parts,       // K_s v (K_{n_1} u ... u K_{n_s}) with odd parts
    Singletons,  // K_s v (K_{n-2s+1} u (s-1)K_1)
    EqualParts,  // K_s v (K_{n-s-(delta+1-s)(s-1)} u (s-1)K_{delta+1-s})
};

// Labels: the join clique is 0..delta-1, the large clique follows, then the
// isolated vertices.
Graph extremal_graph(const ExtremalParams& p);
Graph family_graph(const FamilyParams& f, JoinFamily which);
// K_s v (K_{parts[0]} u K_{parts[1]} u ...), no parity or order requirement.
Graph clique_join(int s, const std::vector<int>& parts);

// Graph and partition whose quotient is family_quotient_template(family, ...).
Graph quotient_family_graph(QuotientFamily family, int n, int s, int delta);
Partition quotient_family_partition(QuotientFamily family, int n, int s, int delta);

// Largest root of the extremal signless/distance cubic. Memoized per (n, delta).
// Throws BracketError if the root cannot be bracketed below 4n.
double threshold_rho_q(const ExtremalParams& p);
double threshold_rho_d(const ExtremalParams& p);

// Structural test for K_delta v (K_{n-2delta+1} u (delta-1)K_1) up to isomorphism.
bool recognize_extremal(const Graph& g, int delta);

enum class Theorem { SignlessLaplacian = 1, Distance = 2 };
enum class Conclusion { EvenFactorGuaranteed, ExtremalException, Inconclusive, NotApplicable };

std::string to_string(Conclusion c);

// Order lower bound of the theorem at minimum degree delta, exactly:
//   signless: max(7 delta - 7, delta^2/4 + delta/2 + 6)
//   distance: max(8 delta - 7, delta^2/3 + 3)
Rational order_bound(Theorem theorem, int delta);

struct Hypotheses {
    bool connected = false;
    bool even_order = false;
    bool min_degree_ok = false;
    bool order_bound_ok = false;
    int delta = 0;
    Rational required_order{0};

    bool all() const { return connected && even_order && min_degree_ok && order_bound_ok; }
};

// When to run the even-factor search. Borderline comparisons always run it.
enum class OraclePolicy {
    Borderline,
    Claims,  // also whenever the spectral condition holds
    Always,
};

std::string to_string(OraclePolicy policy);

struct TheoremOptions {
    double epsilon = 1e-8;
    double borderline_band = 1e-6;
    OraclePolicy oracle_policy = OraclePolicy::Borderline;
    OracleOptions oracle;
    EigenOptions eigen;
    // Diagnostics only: use this delta instead of min_degree(g).
    std::optional<int> delta_override;
};

struct TheoremVerdict {
    Theorem theorem = Theorem::SignlessLaplacian;
    Hypotheses hypotheses;
    std::optional<double> spectral_value;
    std::optional<double> threshold;
    bool spectral_condition = false;
    bool borderline = false;
    bool extremal = false;
    bool diagnostic = false;
    Conclusion conclusion = Conclusion::NotApplicable;
    std::optional<EvenFactorCertificate> oracle;

    bool hypotheses_met() const { return hypotheses.all(); }
    // An even factor was promised and the oracle proved there is none.
    bool violation() const {
        return conclusion == Conclusion::EvenFactorGuaranteed && oracle &&
               oracle->status == SearchStatus::NoneExists;
    }
};

// Spectral values are computed whenever defined, even if a hypothesis fails.
TheoremVerdict check_theorem(const Graph& g, Theorem theorem, const TheoremOptions& options = {});
TheoremVerdict check_theorem_1(const Graph& g, const TheoremOptions& options = {});
TheoremVerdict check_theorem_2(const Graph& g, const TheoremOptions& options = {});

// Perron vector of the extremal distance quotient, blocks in quotient row
// order (large clique a, join b, isolated c), scaled to a = 1.
struct PerronABC {
    double rho = 0.0;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double system_residual = 0.0;              // max residual of the three block equations
    double ratio_residual = 0.0;               // |b - (rho + n - 2d + 2) / (2 rho + d - 2) a|
    double elimination_ratio_residual = 0.0;   // |b - (rho + n - 2d + 2) / (2 rho - d + 2) a|
    double two_b_minus_a = 0.0;
    double two_b_minus_a_closed_form = 0.0;    // (2n - 5d + 6) / (2 rho + d - 2) a
};

PerronABC perron_abc(const ExtremalParams& p);

}  // namespace evenfactor
