#pragma once

#include <vector>

#include <Eigen/Dense>

#include "maggraph/graph.hpp"

namespace maggraph {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Complex-valued function on the vertices, in canonical vertex order.
using VertexFunction = CVector;

/// `plain` ignores the signature (sigma == 1 on every edge).
enum class LaplacianKind { plain, magnetic };

const char* to_string(LaplacianKind kind);

/// Degree-normalized (magnetic) Laplacian: row x is -e_x + sum_y p_xy sigma_xy e_y / d_x.
CMatrix laplacian_matrix(const MagneticGraph& g, LaplacianKind kind);

/// Pointwise energy |grad f|^2(x) = (1/d_x) sum_y p_xy |sigma_xy f(y) - f(x)|^2.
RVector energy(const MagneticGraph& g, const VertexFunction& f, LaplacianKind kind);

/// Per-vertex Hermitian matrices realizing the curvature quantities as
/// quadratic forms f^* M f:
///   gamma[x]  -> Gamma(f,f)(x)
///   gamma2[x] -> Gamma_2(f,f)(x)
///   lap_sq[x] -> |Delta f(x)|^2
/// Sesquilinear versions follow by polarization: Gamma(f,g)(x) = g^* gamma[x] f.
struct FormFamily {
    LaplacianKind kind = LaplacianKind::magnetic;
    std::vector<CMatrix> gamma;
    std::vector<CMatrix> gamma2;
    std::vector<CMatrix> lap_sq;
};

FormFamily form_family(const MagneticGraph& g, LaplacianKind kind);

/// Eigenpairs of -Delta (or -Delta^sigma), eigenvalues ascending. Column i of
/// `eigenvectors` is orthonormal under <f,g> = sum_x d_x f(x) conj(g(x)).
struct SpectralData {
    LaplacianKind kind = LaplacianKind::magnetic;
    RVector eigenvalues;
    CMatrix eigenvectors;
};

SpectralData spectrum(const MagneticGraph& g, LaplacianKind kind);

/// Smallest eigenvalue of -Delta^sigma.
double min_eigenvalue(const MagneticGraph& g, LaplacianKind kind);

/// A Hermitian matrix counts as PSD when lambda_min >= -1e-9 * max(1, ||M||_2).
inline constexpr double kPsdRelTol = 1e-9;

struct PsdTest {
    bool psd = false;
    double min_eigenvalue = 0.0;
    double norm = 0.0;
};

PsdTest psd_test(const CMatrix& m);

/// (M + M^*) / 2, throwing NumericalError if the anti-Hermitian part exceeds
/// `guard` relative to the norm of M.
CMatrix hermitian_part(const CMatrix& m, double guard = 1e-12);

}  // namespace maggraph
