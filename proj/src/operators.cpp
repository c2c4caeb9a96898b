#include "maggraph/operators.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace maggraph {

namespace {

Complex arc_phase(const MagneticGraph& g, const Arc& a, LaplacianKind kind) {
    return kind == LaplacianKind::magnetic ? g.phase(a.s) : Complex{1.0, 0.0};
}

}  // namespace

const char* to_string(LaplacianKind kind) {
    return kind == LaplacianKind::magnetic ? "magnetic" : "plain";
}

CMatrix laplacian_matrix(const MagneticGraph& g, LaplacianKind kind) {
    const int n = g.num_vertices();
    CMatrix m = CMatrix::Zero(n, n);
    for (int x = 0; x < n; ++x) {
        m(x, x) = -1.0;
        for (const Arc& a : g.neighbors(x)) {
            m(x, a.to) = a.w * arc_phase(g, a, kind) / g.degree(x);
        }
    }
    return m;
}

RVector energy(const MagneticGraph& g, const VertexFunction& f, LaplacianKind kind) {
    const int n = g.num_vertices();
    if (f.size() != n) {
        throw ValidationError("vertex function length does not match num_vertices");
    }
    RVector out(n);
    for (int x = 0; x < n; ++x) {
        double acc = 0.0;
        for (const Arc& a : g.neighbors(x)) {
            acc += a.w * std::norm(arc_phase(g, a, kind) * f(a.to) - f(x));
        }
        out(x) = acc / g.degree(x);
    }
    return out;
}

FormFamily form_family(const MagneticGraph& g, LaplacianKind kind) {
    const int n = g.num_vertices();
    const CMatrix lap = laplacian_matrix(g, kind);

    FormFamily ff;
    ff.kind = kind;
    ff.gamma.reserve(static_cast<std::size_t>(n));
    ff.lap_sq.reserve(static_cast<std::size_t>(n));
    ff.gamma2.reserve(static_cast<std::size_t>(n));

    // Gamma(f,f)(x) = 1/(2 d_x) sum_y p_xy |a^T f|^2 with a = sigma_xy e_y - e_x.
    for (int x = 0; x < n; ++x) {
        CMatrix gx = CMatrix::Zero(n, n);
        const double scale = 0.5 / g.degree(x);
        for (const Arc& a : g.neighbors(x)) {
            const Complex sig = arc_phase(g, a, kind);
            const double c = scale * a.w;
            gx(a.to, a.to) += c;
            gx(x, x) += c;
            gx(x, a.to) -= c * sig;
            gx(a.to, x) -= c * std::conj(sig);
        }
        ff.gamma.push_back(std::move(gx));
        ff.lap_sq.push_back(lap.row(x).adjoint() * lap.row(x));
    }

    // 2 Gamma_2 = Delta Gamma(f,g) - Gamma(f, Delta^s g) - Gamma(Delta^s f, g), where the
    // outer Delta is always the plain Laplacian acting on the family {Gamma(.)(y)}.
    for (int x = 0; x < n; ++x) {
        const CMatrix& gx = ff.gamma[static_cast<std::size_t>(x)];
        CMatrix outer = CMatrix::Zero(n, n);
        for (const Arc& a : g.neighbors(x)) {
            outer += a.w * (ff.gamma[static_cast<std::size_t>(a.to)] - gx);
        }
        outer /= g.degree(x);
        const CMatrix mixed = lap.adjoint() * gx + gx * lap;
        ff.gamma2.push_back(hermitian_part(0.5 * (outer - mixed)));
    }
    return ff;
}

SpectralData spectrum(const MagneticGraph& g, LaplacianKind kind) {
    const int n = g.num_vertices();
    RVector inv_sqrt_d(n);
    for (int x = 0; x < n; ++x) {
        inv_sqrt_d(x) = 1.0 / std::sqrt(g.degree(x));
    }
    // D^{1/2} (-Delta) D^{-1/2} = I - D^{-1/2} W D^{-1/2}, Hermitian.
    CMatrix sym = CMatrix::Identity(n, n);
    for (int x = 0; x < n; ++x) {
        for (const Arc& a : g.neighbors(x)) {
            sym(x, a.to) -= a.w * arc_phase(g, a, kind) * inv_sqrt_d(x) * inv_sqrt_d(a.to);
        }
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(sym);
    if (es.info() != Eigen::Success) {
        throw NumericalError("Hermitian eigensolver failed to converge");
    }
    SpectralData out;
    out.kind = kind;
    out.eigenvalues = es.eigenvalues();
    out.eigenvectors = inv_sqrt_d.asDiagonal() * es.eigenvectors();
    return out;
}

double min_eigenvalue(const MagneticGraph& g, LaplacianKind kind) {
    return spectrum(g, kind).eigenvalues(0);
}

PsdTest psd_test(const CMatrix& m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw NumericalError("Hermitian eigensolver failed to converge");
    }
    PsdTest t;
    const RVector& ev = es.eigenvalues();
    t.min_eigenvalue = ev.size() ? ev(0) : 0.0;
    t.norm = ev.size() ? std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1))) : 0.0;
    t.psd = t.min_eigenvalue >= -kPsdRelTol * std::max(1.0, t.norm);
    return t;
}

CMatrix hermitian_part(const CMatrix& m, double guard) {
    const double scale = std::max(1.0, m.norm());
    if ((m - m.adjoint()).norm() > guard * scale) {
        throw NumericalError("form is not Hermitian within tolerance");
    }
    return 0.5 * (m + m.adjoint());
}

}  // namespace maggraph
