#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maggraph/combinatorics.hpp"
#include "maggraph/curvature.hpp"
#include "maggraph/lift.hpp"

namespace maggraph {

/// Eigenvalues at or below this are treated as the trivial eigenvalue.
inline constexpr double kTrivialEigenvalue = 1e-12;

/// LHS <= RHS + 1e-9 max(1, |RHS|).
bool inequality_holds(double lhs, double rhs);

struct HarnackRecord {
    double lambda = 0.0;
    int eigen_index = 0;
    int argmax_vertex = 0;
    double lhs = 0.0;  ///< max_x |grad f|^2(x)
    double rhs = 0.0;  ///< ((8 - 2/n) lambda - 4 kappa) max_z |f(z)|^2
    double slack = 0.0;
    bool pass = false;
};

/// One record for an explicit eigenpair; no normalization applied.
HarnackRecord harnack_record(const MagneticGraph& g, double lambda, const VertexFunction& f, double n, double kappa,
                             LaplacianKind kind);

/// Harnack inequality on every eigenpair with lambda > 0, each normalized to
/// max |f| = 1. kappa == nullopt uses the certified kappa_max(n). Throws
/// PreconditionError on a disconnected graph.
std::vector<HarnackRecord> harnack_check(const MagneticGraph& g, double n, std::optional<double> kappa,
                                         LaplacianKind kind);

struct AlphaRecord {
    double lambda = 0.0;
    int eigen_index = 0;
    double alpha = 0.0;
    bool applicable = false;       ///< alpha > 2 - 2 kappa / lambda
    bool ill_conditioned = false;  ///< denominator (alpha - 2) lambda + 2 kappa tiny
    std::vector<double> lhs;       ///< |grad f|^2(x) + alpha lambda |f(x)|^2
    double rhs = 0.0;
    bool pass = false;
};

/// Alpha-parameterized Harnack bound. alpha == nullopt picks, per eigenpair,
/// alpha = 4 - 2 kappa / lambda (the choice that yields the Harnack constant).
std::vector<AlphaRecord> alpha_bound_check(const MagneticGraph& g, double n, double kappa,
                                           std::optional<double> alpha, LaplacianKind kind);

struct EigenvalueBoundRecord {
    double lambda_min = 0.0;
    int diameter = 0;
    int lift_diameter = 0;
    int magnetic_girth = 0;
    int ell = 0;
    double max_degree = 0.0;
    double n = 0.0;
    double kappa = 0.0;
    double path_length = 0.0;  ///< 2 D + ell g^sigma
    double bound = 0.0;        ///< (1 + 4 kappa d L^2) / (d (8 - 2/n) L^2), L = 2D + ell g
    double lift_bound = 0.0;   ///< same with L = D_hat
    /// Variant with (2 + ell g)^2 in the denominator; reported, not gated.
    double bound_short_denominator = 0.0;
    bool vacuous = false;
    bool pass = false;
    bool pass_short_denominator = false;
};

/// Requires connected, unbalanced, entire and finite girth; throws
/// PreconditionError naming the first failed hypothesis.
EigenvalueBoundRecord eigenvalue_lower_bound(const MagneticGraph& g, double n, std::optional<double> kappa,
                                             long long budget = kDefaultBudget);

/// (1 + 4 kappa d L^2) / (d c L^2)
double curvature_eigen_bound(double kappa, double max_degree, double c, double length);

struct CheegerRecord {
    double lambda_min = 0.0;
    double h1 = 0.0;
    double max_degree = 0.0;
    double lower = 0.0;  ///< lambda / 2
    double upper = 0.0;  ///< 2 sqrt(2 d lambda)
    bool lower_pass = false;
    bool upper_pass = false;
    /// Curvature lower bound, present when the eigenvalue-bound hypotheses hold.
    std::optional<double> curvature_lower;
    std::optional<bool> curvature_pass;
    double kappa = 0.0;
    CheegerResult cheeger;
    bool pass() const;
};

CheegerRecord cheeger_bound_check(const MagneticGraph& g, double n, std::optional<double> kappa,
                                  long long budget = kDefaultBudget);

struct HypothesisFlags {
    bool connected = false;
    bool unbalanced = false;
    bool entire = false;
    bool girth_finite = false;
    bool all() const { return connected && unbalanced && entire && girth_finite; }
    /// First failed hypothesis, empty if none.
    std::string first_failure() const;
};

HypothesisFlags hypothesis_flags(const MagneticGraph& g, long long budget = kDefaultBudget);

struct BoundsReport {
    double n = 2.0;
    double kappa = 0.0;
    bool kappa_auto = true;
    HypothesisFlags hypotheses;
    std::vector<HarnackRecord> harnack;
    std::vector<AlphaRecord> alpha;
    std::optional<LiftDiameterCheck> lift_diameter;
    std::optional<EigenvalueBoundRecord> eigenvalue_bound;
    std::optional<CheegerRecord> cheeger;
    std::vector<std::string> skipped;  ///< "section: reason"

    bool all_pass() const;
};

/// Runs every applicable magnetic check. Throws PreconditionError if the
/// graph is disconnected.
BoundsReport verify(const MagneticGraph& g, double n, std::optional<double> kappa,
                    long long budget = kDefaultBudget);

}  // namespace maggraph
