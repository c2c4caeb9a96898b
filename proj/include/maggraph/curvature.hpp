#pragma once

#include <limits>
#include <vector>

#include "maggraph/operators.hpp"

namespace maggraph {

/// n = infinity is admitted and drops the |Delta f|^2 / n term.
inline constexpr double kInfiniteDimension = std::numeric_limits<double>::infinity();

/// 1/n, throwing DimensionError unless n is in (1, inf].
double inverse_dimension(double n);

/// Pointwise curvature quantities of a single function, evaluated directly from
/// the defining sums (no per-vertex matrices).
struct PointwiseCurvature {
    RVector gamma;      ///< Gamma(f,f)(x)
    RVector gamma2;     ///< Gamma_2(f,f)(x)
    RVector lap_sq;     ///< |Delta f(x)|^2
};

PointwiseCurvature pointwise_curvature(const MagneticGraph& g, const VertexFunction& f, LaplacianKind kind);

struct FunctionCdCheck {
    std::vector<bool> pass;
    RVector slack;  ///< Gamma_2 - |Delta f|^2 / n - kappa Gamma, per vertex
    bool all_pass() const;
};

FunctionCdCheck cd_check_function(const MagneticGraph& g, const VertexFunction& f, double n, double kappa,
                                  LaplacianKind kind);

struct GraphCdCheck {
    bool pass = false;
    std::vector<bool> vertex_pass;
    RVector min_eigenvalue;  ///< lambda_min(G2_x - Q_x / n - kappa G_x)
};

/// Exact graph-wide CD test: PSD check of the per-vertex curvature matrix.
GraphCdCheck cd_check_graph(const FormFamily& forms, double n, double kappa);
GraphCdCheck cd_check_graph(const MagneticGraph& g, double n, double kappa, LaplacianKind kind);

struct CurvatureResult {
    double n = 2.0;
    LaplacianKind kind = LaplacianKind::magnetic;
    std::vector<double> per_vertex_kappa;  ///< may hold -inf
    double kappa_max = 0.0;
    int witness_vertex = 0;
    /// Per vertex, a function attaining the optimal kappa at that vertex.
    std::vector<VertexFunction> witnesses;
};

/// Optimal curvature via the singular pencil (G2_x - Q_x/n, G_x), reduced onto
/// the range of G_x by a Schur complement over its kernel.
CurvatureResult kappa_max(const FormFamily& forms, double n);
CurvatureResult kappa_max(const MagneticGraph& g, double n, LaplacianKind kind);

/// Independent route: per-vertex bisection on the PSD test of cd_check_graph.
std::vector<double> kappa_by_bisection(const FormFamily& forms, double n, double tol = 1e-11);

}  // namespace maggraph
