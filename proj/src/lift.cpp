#include "maggraph/lift.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "maggraph/combinatorics.hpp"

namespace maggraph {

namespace {

MagneticGraph make_lift_graph(const MagneticGraph& g) {
    const int ell = g.ell();
    std::vector<Edge> edges;
    edges.reserve(g.edges().size() * static_cast<std::size_t>(ell));
    for (const Edge& e : g.edges()) {
        for (int k = 0; k < ell; ++k) {
            edges.push_back({e.u * ell + k, e.v * ell + mod(k + e.s, ell), e.w, 0});
        }
    }
    return {g.num_vertices() * ell, 1, std::move(edges)};
}

VertexFunction random_function(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    VertexFunction f(n);
    for (int i = 0; i < n; ++i) {
        f(i) = Complex{normal(rng), normal(rng)};
    }
    return f;
}

}  // namespace

LiftGraph::LiftGraph(const MagneticGraph& base) : base_(base), graph_(make_lift_graph(base)) {}

LiftGraph build_lift(const MagneticGraph& g) { return LiftGraph(g); }

VertexFunction lift_function(const MagneticGraph& g, const VertexFunction& f) {
    if (f.size() != g.num_vertices()) {
        throw ValidationError("vertex function length does not match num_vertices");
    }
    const int ell = g.ell();
    VertexFunction out(g.num_vertices() * ell);
    for (int x = 0; x < g.num_vertices(); ++x) {
        for (int k = 0; k < ell; ++k) {
            out(x * ell + k) = g.phase(k) * f(x);
        }
    }
    return out;
}

LiftIdentityReport verify_lift_identities(const MagneticGraph& g, int trials, unsigned long long seed) {
    const LiftGraph lift(g);
    const MagneticGraph& lg = lift.graph();
    const int n = g.num_vertices();
    const int ell = g.ell();
    const CMatrix lap = laplacian_matrix(g, LaplacianKind::magnetic);
    const CMatrix lift_lap = laplacian_matrix(lg, LaplacianKind::plain);

    LiftIdentityReport rep;
    rep.trials = trials;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const VertexFunction f = random_function(n, rng);
        const VertexFunction fh = lift_function(g, f);
        const RVector en = energy(g, f, LaplacianKind::magnetic);
        const RVector en_hat = energy(lg, fh, LaplacianKind::plain);
        const CVector lf = lap * f;
        const CVector lf_hat = lift_lap * fh;
        for (int x = 0; x < n; ++x) {
            for (int k = 0; k < ell; ++k) {
                const int id = lift.id(x, k);
                const double e_rel = std::abs(en_hat(id) - en(x)) / std::max(1.0, std::abs(en(x)));
                const Complex want = g.phase(k) * lf(x);
                const double l_rel = std::abs(lf_hat(id) - want) / std::max(1.0, std::abs(want));
                rep.energy_residual = std::max(rep.energy_residual, e_rel);
                rep.laplacian_residual = std::max(rep.laplacian_residual, l_rel);
            }
        }
    }

    const SpectralData sd = spectrum(g, LaplacianKind::magnetic);
    for (Eigen::Index i = 0; i < sd.eigenvalues.size(); ++i) {
        const VertexFunction fh = lift_function(g, sd.eigenvectors.col(i));
        const double r = (-(lift_lap * fh) - sd.eigenvalues(i) * fh).norm();
        rep.eigenpair_residual = std::max(rep.eigenpair_residual, r);
    }
    rep.pass = rep.energy_residual <= 1e-12 && rep.laplacian_residual <= 1e-12 && rep.eigenpair_residual <= 1e-9;
    return rep;
}

LiftDiameterCheck lift_diameter_check(const MagneticGraph& g, long long girth_budget) {
    if (!g.is_connected()) {
        throw PreconditionError("graph is not connected");
    }
    const SignatureStatus st = signature_status(g);
    if (st.balanced) {
        throw PreconditionError("signature is balanced");
    }
    if (!st.entire) {
        throw PreconditionError("signature is not entire");
    }
    const Distance girth = magnetic_girth(g, girth_budget);
    if (!girth) {
        throw PreconditionError("magnetic girth is infinite");
    }
    const Distance lift_d = diameter(build_lift(g).graph());
    LiftDiameterCheck out;
    out.base_diameter = *diameter(g);
    out.magnetic_girth = *girth;
    out.lift_diameter = lift_d.value_or(-1);
    out.bound = 2 * out.base_diameter + g.ell() * out.magnetic_girth;
    // a generating cycle connects the lift, so a disconnected one is a failure
    out.pass = lift_d.has_value() && out.lift_diameter <= out.bound;
    return out;
}

}  // namespace maggraph
