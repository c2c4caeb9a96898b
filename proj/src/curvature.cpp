#include "maggraph/curvature.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace maggraph {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Relative thresholds for splitting the pencil.
constexpr double kGammaKernelTol = 1e-10;
constexpr double kKernelBlockTol = 1e-9;
constexpr double kRangeConditionTol = 1e-8;

Complex arc_phase(const MagneticGraph& g, const Arc& a, LaplacianKind kind) {
    return kind == LaplacianKind::magnetic ? g.phase(a.s) : Complex{1.0, 0.0};
}

// Gamma(f,h)(x), linear in f and conjugate-linear in h.
Complex gamma_at(const MagneticGraph& g, const VertexFunction& f, const VertexFunction& h, int x,
                 LaplacianKind kind) {
    Complex acc{0.0, 0.0};
    for (const Arc& a : g.neighbors(x)) {
        const Complex sig = arc_phase(g, a, kind);
        acc += a.w * (sig * f(a.to) - f(x)) * std::conj(sig * h(a.to) - h(x));
    }
    return acc / (2.0 * g.degree(x));
}

struct VertexKappa {
    double kappa = kNegInf;
    VertexFunction witness;
};

VertexKappa vertex_kappa(const CMatrix& gx, const CMatrix& ax) {
    const Eigen::Index n = gx.rows();
    Eigen::SelfAdjointEigenSolver<CMatrix> ges(gx);
    if (ges.info() != Eigen::Success) {
        throw NumericalError("eigensolver failed on Gamma form");
    }
    const RVector& mu = ges.eigenvalues();
    const double gnorm = std::max(std::abs(mu(0)), std::abs(mu(n - 1)));
    const double gcut = kGammaKernelTol * gnorm;

    std::vector<Eigen::Index> range_idx;
    std::vector<Eigen::Index> kernel_idx;
    for (Eigen::Index i = 0; i < n; ++i) {
        (mu(i) > gcut ? range_idx : kernel_idx).push_back(i);
    }
    const auto nr = static_cast<Eigen::Index>(range_idx.size());
    const auto nk = static_cast<Eigen::Index>(kernel_idx.size());
    if (nr == 0) {
        throw NumericalError("Gamma form vanishes at a vertex with neighbours");
    }

    CMatrix ur(n, nr);
    CMatrix uk(n, nk);
    RVector mu_r(nr);
    for (Eigen::Index i = 0; i < nr; ++i) {
        ur.col(i) = ges.eigenvectors().col(range_idx[static_cast<std::size_t>(i)]);
        mu_r(i) = mu(range_idx[static_cast<std::size_t>(i)]);
    }
    for (Eigen::Index i = 0; i < nk; ++i) {
        uk.col(i) = ges.eigenvectors().col(kernel_idx[static_cast<std::size_t>(i)]);
    }

    const double ascale = std::max(1.0, ax.norm());
    const CMatrix a_rr = hermitian_part(ur.adjoint() * ax * ur, 1e-10);
    CMatrix schur = a_rr;
    CMatrix kernel_lift = CMatrix::Zero(nk, nr);  // maps range coordinates to the optimal kernel part

    if (nk > 0) {
        const CMatrix a_kk = hermitian_part(uk.adjoint() * ax * uk, 1e-10);
        const CMatrix a_kr = uk.adjoint() * ax * ur;
        Eigen::SelfAdjointEigenSolver<CMatrix> kes(a_kk);
        if (kes.info() != Eigen::Success) {
            throw NumericalError("eigensolver failed on kernel block");
        }
        const RVector& nu = kes.eigenvalues();
        const double kcut = kKernelBlockTol * ascale;
        if (nu(0) < -kcut) {
            return {};  // the inequality fails on ker G_x for every kappa
        }
        CMatrix pinv = CMatrix::Zero(nk, nk);
        for (Eigen::Index i = 0; i < nk; ++i) {
            const CVector v = kes.eigenvectors().col(i);
            if (nu(i) > kcut) {
                pinv += (v * v.adjoint()) / nu(i);
            } else if ((v.adjoint() * a_kr).norm() > kRangeConditionTol * ascale) {
                return {};  // coupling into a null direction of A_KK: unbounded below
            }
        }
        kernel_lift = -pinv * a_kr;
        schur = hermitian_part(a_rr - a_kr.adjoint() * pinv * a_kr, 1e-10);
    }

    const RVector inv_sqrt_mu = mu_r.cwiseSqrt().cwiseInverse();
    const CMatrix reduced = inv_sqrt_mu.asDiagonal() * schur * inv_sqrt_mu.asDiagonal();
    Eigen::SelfAdjointEigenSolver<CMatrix> res(hermitian_part(reduced, 1e-10));
    if (res.info() != Eigen::Success) {
        throw NumericalError("eigensolver failed on reduced pencil");
    }
    const CVector vr = inv_sqrt_mu.asDiagonal() * res.eigenvectors().col(0);
    VertexKappa out;
    out.kappa = res.eigenvalues()(0);
    out.witness = ur * vr + uk * (kernel_lift * vr);
    out.witness /= out.witness.norm();
    return out;
}

}  // namespace

double inverse_dimension(double n) {
    if (std::isnan(n) || !(n > 1.0)) {
        throw DimensionError("dimension n must lie in (1, inf]");
    }
    return std::isinf(n) ? 0.0 : 1.0 / n;
}

PointwiseCurvature pointwise_curvature(const MagneticGraph& g, const VertexFunction& f, LaplacianKind kind) {
    const int n = g.num_vertices();
    if (f.size() != n) {
        throw ValidationError("vertex function length does not match num_vertices");
    }
    VertexFunction lf(n);
    for (int x = 0; x < n; ++x) {
        Complex acc{0.0, 0.0};
        for (const Arc& a : g.neighbors(x)) {
            acc += a.w * (arc_phase(g, a, kind) * f(a.to) - f(x));
        }
        lf(x) = acc / g.degree(x);
    }
    PointwiseCurvature pc;
    pc.gamma.resize(n);
    pc.gamma2.resize(n);
    pc.lap_sq.resize(n);
    for (int x = 0; x < n; ++x) {
        pc.gamma(x) = gamma_at(g, f, f, x, kind).real();
        pc.lap_sq(x) = std::norm(lf(x));
    }
    for (int x = 0; x < n; ++x) {
        double outer = 0.0;
        for (const Arc& a : g.neighbors(x)) {
            outer += a.w * (pc.gamma(a.to) - pc.gamma(x));
        }
        outer /= g.degree(x);
        pc.gamma2(x) = 0.5 * (outer - 2.0 * gamma_at(g, f, lf, x, kind).real());
    }
    return pc;
}

bool FunctionCdCheck::all_pass() const {
    return std::all_of(pass.begin(), pass.end(), [](bool b) { return b; });
}

FunctionCdCheck cd_check_function(const MagneticGraph& g, const VertexFunction& f, double n, double kappa,
                                  LaplacianKind kind) {
    const double inv_n = inverse_dimension(n);
    const PointwiseCurvature pc = pointwise_curvature(g, f, kind);
    FunctionCdCheck out;
    out.slack = pc.gamma2 - inv_n * pc.lap_sq - kappa * pc.gamma;
    out.pass.resize(static_cast<std::size_t>(g.num_vertices()));
    for (int x = 0; x < g.num_vertices(); ++x) {
        const double scale =
            std::max(1.0, std::abs(pc.gamma2(x)) + inv_n * pc.lap_sq(x) + std::abs(kappa) * pc.gamma(x));
        out.pass[static_cast<std::size_t>(x)] = out.slack(x) >= -kPsdRelTol * scale;
    }
    return out;
}

GraphCdCheck cd_check_graph(const FormFamily& forms, double n, double kappa) {
    const double inv_n = inverse_dimension(n);
    const auto nv = static_cast<Eigen::Index>(forms.gamma.size());
    GraphCdCheck out;
    out.pass = true;
    out.vertex_pass.resize(static_cast<std::size_t>(nv));
    out.min_eigenvalue.resize(nv);
    for (Eigen::Index x = 0; x < nv; ++x) {
        const auto i = static_cast<std::size_t>(x);
        const PsdTest t = psd_test(forms.gamma2[i] - inv_n * forms.lap_sq[i] - kappa * forms.gamma[i]);
        out.vertex_pass[i] = t.psd;
        out.min_eigenvalue(x) = t.min_eigenvalue;
        out.pass = out.pass && t.psd;
    }
    return out;
}

GraphCdCheck cd_check_graph(const MagneticGraph& g, double n, double kappa, LaplacianKind kind) {
    inverse_dimension(n);
    return cd_check_graph(form_family(g, kind), n, kappa);
}

CurvatureResult kappa_max(const FormFamily& forms, double n) {
    const double inv_n = inverse_dimension(n);
    CurvatureResult out;
    out.n = n;
    out.kind = forms.kind;
    out.kappa_max = std::numeric_limits<double>::infinity();
    for (std::size_t x = 0; x < forms.gamma.size(); ++x) {
        VertexKappa vk = vertex_kappa(forms.gamma[x], forms.gamma2[x] - inv_n * forms.lap_sq[x]);
        out.per_vertex_kappa.push_back(vk.kappa);
        out.witnesses.push_back(std::move(vk.witness));
        if (vk.kappa < out.kappa_max) {
            out.kappa_max = vk.kappa;
            out.witness_vertex = static_cast<int>(x);
        }
    }
    return out;
}

CurvatureResult kappa_max(const MagneticGraph& g, double n, LaplacianKind kind) {
    inverse_dimension(n);
    return kappa_max(form_family(g, kind), n);
}

std::vector<double> kappa_by_bisection(const FormFamily& forms, double n, double tol) {
    const double inv_n = inverse_dimension(n);
    constexpr double kLimit = 1e12;
    std::vector<double> out;
    for (std::size_t x = 0; x < forms.gamma.size(); ++x) {
        const CMatrix a = forms.gamma2[x] - inv_n * forms.lap_sq[x];
        const CMatrix& gx = forms.gamma[x];
        auto holds = [&](double kappa) { return psd_test(a - kappa * gx).psd; };

        double lo = -1.0;
        while (!holds(lo) && lo > -kLimit) {
            lo *= 2.0;
        }
        if (!holds(lo)) {
            out.push_back(kNegInf);
            continue;
        }
        double hi = 1.0;
        while (holds(hi)) {
            if (hi > kLimit) {
                throw NumericalError("curvature bisection did not find an upper bracket");
            }
            hi *= 2.0;
        }
        while (hi - lo > tol * std::max(1.0, std::abs(lo))) {
            const double mid = 0.5 * (lo + hi);
            (holds(mid) ? lo : hi) = mid;
        }
        out.push_back(lo);
    }
    return out;
}

}  // namespace maggraph
