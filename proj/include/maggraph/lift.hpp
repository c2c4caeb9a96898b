#pragma once

#include <optional>

#include "maggraph/operators.hpp"

namespace maggraph {

/// Covering graph on V x Z_ell. Lift vertex (x, k) has id x * ell + k and
/// represents the group element xi_k = exp(2 pi i k / ell).
class LiftGraph {
public:
    explicit LiftGraph(const MagneticGraph& base);

    const MagneticGraph& base() const noexcept { return base_; }
    /// Plain graph (ell = 1, every exponent 0).
    const MagneticGraph& graph() const noexcept { return graph_; }

    int ell() const noexcept { return base_.ell(); }
    int id(int x, int k) const noexcept { return x * base_.ell() + k; }
    int vertex_of(int id) const noexcept { return id / base_.ell(); }
    int level_of(int id) const noexcept { return id % base_.ell(); }

private:
    MagneticGraph base_;
    MagneticGraph graph_;
};

LiftGraph build_lift(const MagneticGraph& g);

/// f_hat(x * ell + k) = xi_k f(x).
VertexFunction lift_function(const MagneticGraph& g, const VertexFunction& f);

struct LiftIdentityReport {
    int trials = 0;
    /// max over trials and lift vertices of the relative mismatch in
    /// |grad f_hat|^2 (x,xi) = |grad^sigma f|^2 (x)
    double energy_residual = 0.0;
    /// same for (Delta_hat f_hat)(x,xi) = xi (Delta^sigma f)(x)
    double laplacian_residual = 0.0;
    /// max over eigenpairs of || (-Delta_hat) f_hat - lambda f_hat ||
    double eigenpair_residual = 0.0;
    bool pass = false;
};

/// Random-function check of the lift identities plus eigenpair transfer.
/// Deterministic for a given seed.
LiftIdentityReport verify_lift_identities(const MagneticGraph& g, int trials, unsigned long long seed = 0);

struct LiftDiameterCheck {
    int lift_diameter = 0;  ///< -1 if the lift is disconnected
    int base_diameter = 0;
    int magnetic_girth = 0;
    int bound = 0;  ///< 2 D + ell g^sigma
    bool pass = false;
};

/// Checks D_hat <= 2 D + ell g^sigma; throws PreconditionError naming the
/// failed hypothesis (connected, unbalanced, entire, finite girth).
LiftDiameterCheck lift_diameter_check(const MagneticGraph& g, long long girth_budget = 10'000'000);

}  // namespace maggraph
