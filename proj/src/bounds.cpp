#include "maggraph/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace maggraph {

namespace {

constexpr double kIneqRelTol = 1e-9;

double resolve_kappa(const MagneticGraph& g, double n, std::optional<double> kappa, LaplacianKind kind) {
    return kappa ? *kappa : kappa_max(g, n, kind).kappa_max;
}

void require_connected(const MagneticGraph& g) {
    if (!g.is_connected()) {
        throw PreconditionError("graph is not connected");
    }
}

double max_abs_sq(const VertexFunction& f) { return f.cwiseAbs2().maxCoeff(); }

}  // namespace

bool inequality_holds(double lhs, double rhs) { return lhs <= rhs + kIneqRelTol * std::max(1.0, std::abs(rhs)); }

HarnackRecord harnack_record(const MagneticGraph& g, double lambda, const VertexFunction& f, double n, double kappa,
                             LaplacianKind kind) {
    const double inv_n = inverse_dimension(n);
    const RVector en = energy(g, f, kind);
    HarnackRecord r;
    r.lambda = lambda;
    r.lhs = en.maxCoeff(&r.argmax_vertex);
    r.rhs = ((8.0 - 2.0 * inv_n) * lambda - 4.0 * kappa) * max_abs_sq(f);
    r.slack = r.rhs - r.lhs;
    r.pass = inequality_holds(r.lhs, r.rhs);
    return r;
}

std::vector<HarnackRecord> harnack_check(const MagneticGraph& g, double n, std::optional<double> kappa,
                                         LaplacianKind kind) {
    inverse_dimension(n);
    require_connected(g);
    const double k = resolve_kappa(g, n, kappa, kind);
    const SpectralData sd = spectrum(g, kind);
    std::vector<HarnackRecord> out;
    for (Eigen::Index i = 0; i < sd.eigenvalues.size(); ++i) {
        const double lambda = sd.eigenvalues(i);
        if (lambda <= kTrivialEigenvalue) {
            continue;
        }
        VertexFunction f = sd.eigenvectors.col(i);
        f /= std::sqrt(max_abs_sq(f));
        HarnackRecord r = harnack_record(g, lambda, f, n, k, kind);
        r.eigen_index = static_cast<int>(i);
        out.push_back(r);
    }
    return out;
}

std::vector<AlphaRecord> alpha_bound_check(const MagneticGraph& g, double n, double kappa,
                                           std::optional<double> alpha, LaplacianKind kind) {
    const double inv_n = inverse_dimension(n);
    const SpectralData sd = spectrum(g, kind);
    std::vector<AlphaRecord> out;
    for (Eigen::Index i = 0; i < sd.eigenvalues.size(); ++i) {
        const double lambda = sd.eigenvalues(i);
        if (lambda <= kTrivialEigenvalue) {
            continue;
        }
        VertexFunction f = sd.eigenvectors.col(i);
        f /= std::sqrt(max_abs_sq(f));

        AlphaRecord r;
        r.lambda = lambda;
        r.eigen_index = static_cast<int>(i);
        r.alpha = alpha ? *alpha : 4.0 - 2.0 * kappa / lambda;
        const double denom = (r.alpha - 2.0) * lambda + 2.0 * kappa;
        r.applicable = denom > 0.0;
        r.ill_conditioned = r.applicable && denom <= 1e-6 * lambda;
        const RVector en = energy(g, f, kind);
        const RVector mod_sq = f.cwiseAbs2();
        for (Eigen::Index x = 0; x < en.size(); ++x) {
            r.lhs.push_back(en(x) + r.alpha * lambda * mod_sq(x));
        }
        if (r.applicable) {
            r.rhs = ((r.alpha * r.alpha - 4.0 * inv_n) * lambda + 2.0 * kappa * r.alpha) / denom * lambda *
                    mod_sq.maxCoeff();
            r.pass = std::all_of(r.lhs.begin(), r.lhs.end(), [&](double l) { return inequality_holds(l, r.rhs); });
        }
        out.push_back(std::move(r));
    }
    return out;
}

double curvature_eigen_bound(double kappa, double max_degree, double c, double length) {
    const double l2 = length * length;
    return (1.0 + 4.0 * kappa * max_degree * l2) / (max_degree * c * l2);
}

std::string HypothesisFlags::first_failure() const {
    if (!connected) {
        return "graph is not connected";
    }
    if (!unbalanced) {
        return "signature is balanced";
    }
    if (!entire) {
        return "signature is not entire";
    }
    if (!girth_finite) {
        return "magnetic girth is infinite";
    }
    return {};
}

HypothesisFlags hypothesis_flags(const MagneticGraph& g, long long budget) {
    HypothesisFlags h;
    h.connected = g.is_connected();
    const SignatureStatus st = signature_status(g);
    h.unbalanced = !st.balanced;
    h.entire = st.entire;
    h.girth_finite = h.entire && magnetic_girth(g, budget).has_value();
    return h;
}

EigenvalueBoundRecord eigenvalue_lower_bound(const MagneticGraph& g, double n, std::optional<double> kappa,
                                             long long budget) {
    const double inv_n = inverse_dimension(n);
    const HypothesisFlags h = hypothesis_flags(g, budget);
    if (!h.all()) {
        throw PreconditionError(h.first_failure());
    }
    const LiftDiameterCheck ldc = lift_diameter_check(g, budget);
    if (ldc.lift_diameter < 0) {
        throw PreconditionError("lift is disconnected");
    }
    EigenvalueBoundRecord r;
    r.n = n;
    r.kappa = resolve_kappa(g, n, kappa, LaplacianKind::magnetic);
    r.lambda_min = min_eigenvalue(g, LaplacianKind::magnetic);
    r.diameter = ldc.base_diameter;
    r.lift_diameter = ldc.lift_diameter;
    r.magnetic_girth = ldc.magnetic_girth;
    r.ell = g.ell();
    r.max_degree = g.max_degree();
    r.path_length = 2.0 * r.diameter + static_cast<double>(r.ell) * r.magnetic_girth;

    const double c = 8.0 - 2.0 * inv_n;
    r.bound = curvature_eigen_bound(r.kappa, r.max_degree, c, r.path_length);
    r.lift_bound = curvature_eigen_bound(r.kappa, r.max_degree, c, r.lift_diameter);
    const double short_len = 2.0 + static_cast<double>(r.ell) * r.magnetic_girth;
    r.bound_short_denominator = (1.0 + 4.0 * r.kappa * r.max_degree * r.path_length * r.path_length) /
                                (r.max_degree * c * short_len * short_len);
    r.vacuous = r.bound <= 0.0;
    r.pass = r.lambda_min >= r.bound - 1e-12 && r.lambda_min >= r.lift_bound - 1e-12;
    r.pass_short_denominator = r.lambda_min >= r.bound_short_denominator - 1e-12;
    return r;
}

bool CheegerRecord::pass() const { return lower_pass && upper_pass && curvature_pass.value_or(true); }

CheegerRecord cheeger_bound_check(const MagneticGraph& g, double n, std::optional<double> kappa, long long budget) {
    const double inv_n = inverse_dimension(n);
    CheegerRecord r;
    r.cheeger = cheeger_number(g, SearchMode::exact, budget);
    r.h1 = r.cheeger.h1;
    r.lambda_min = min_eigenvalue(g, LaplacianKind::magnetic);
    const double lambda = std::max(0.0, r.lambda_min);
    r.max_degree = g.max_degree();
    r.lower = 0.5 * lambda;
    r.upper = 2.0 * std::sqrt(2.0 * r.max_degree * lambda);
    r.lower_pass = inequality_holds(r.lower, r.h1);
    r.upper_pass = inequality_holds(r.h1, r.upper);
    r.kappa = resolve_kappa(g, n, kappa, LaplacianKind::magnetic);

    const HypothesisFlags h = hypothesis_flags(g, budget);
    if (h.all()) {
        const Distance d = diameter(g);
        const Distance girth = magnetic_girth(g, budget);
        const double len = 2.0 * *d + static_cast<double>(g.ell()) * *girth;
        r.curvature_lower = curvature_eigen_bound(r.kappa, r.max_degree, 16.0 - 4.0 * inv_n, len);
        r.curvature_pass = inequality_holds(*r.curvature_lower, r.h1);
    }
    return r;
}

bool BoundsReport::all_pass() const {
    const bool h = std::all_of(harnack.begin(), harnack.end(), [](const HarnackRecord& r) { return r.pass; });
    const bool a = std::all_of(alpha.begin(), alpha.end(),
                               [](const AlphaRecord& r) { return !r.applicable || r.pass; });
    const bool l = !lift_diameter || lift_diameter->pass;
    const bool e = !eigenvalue_bound || eigenvalue_bound->pass;
    const bool c = !cheeger || cheeger->pass();
    return h && a && l && e && c;
}

BoundsReport verify(const MagneticGraph& g, double n, std::optional<double> kappa, long long budget) {
    inverse_dimension(n);
    require_connected(g);
    BoundsReport rep;
    rep.n = n;
    rep.kappa_auto = !kappa.has_value();
    rep.kappa = resolve_kappa(g, n, kappa, LaplacianKind::magnetic);
    rep.hypotheses = hypothesis_flags(g, budget);

    rep.harnack = harnack_check(g, n, rep.kappa, LaplacianKind::magnetic);
    rep.alpha = alpha_bound_check(g, n, rep.kappa, std::nullopt, LaplacianKind::magnetic);

    if (rep.hypotheses.all()) {
        rep.lift_diameter = lift_diameter_check(g, budget);
        rep.eigenvalue_bound = eigenvalue_lower_bound(g, n, rep.kappa, budget);
    } else {
        const std::string why = rep.hypotheses.first_failure();
        rep.skipped.push_back("lift_diameter: " + why);
        rep.skipped.push_back("eigenvalue_bound: " + why);
    }
    try {
        rep.cheeger = cheeger_bound_check(g, n, rep.kappa, budget);
    } catch (const SizeError& ex) {
        rep.skipped.push_back(std::string("cheeger: ") + ex.what());
    }
    return rep;
}

}  // namespace maggraph
