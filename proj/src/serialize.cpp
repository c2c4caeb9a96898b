#include "maggraph/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace maggraph {

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

Json json_number(double v) {
    if (!std::isfinite(v)) {
        return format_number(v);
    }
    const double r = std::strtod(format_number(v).c_str(), nullptr);
    return r == 0.0 ? 0.0 : r;  // no "-0.0"
}

Json json_distance(const Distance& d) { return d ? Json(*d) : Json(nullptr); }

namespace {

Json complex_vector(const CVector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(Json::array({json_number(v(i).real()), json_number(v(i).imag())}));
    }
    return out;
}

Json complex_matrix(const CMatrix& m) {
    Json out = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out.push_back(complex_vector(m.row(r).transpose()));
    }
    return out;
}

template <class T>
Json json_array(const std::vector<T>& v) {
    Json out = Json::array();
    for (const T& x : v) {
        out.push_back(x);
    }
    return out;
}

}  // namespace

Json to_json(const SpectralData& sd) {
    Json out;
    out["kind"] = to_string(sd.kind);
    Json ev = Json::array();
    for (Eigen::Index i = 0; i < sd.eigenvalues.size(); ++i) {
        ev.push_back(json_number(sd.eigenvalues(i)));
    }
    out["eigenvalues"] = std::move(ev);
    Json vecs = Json::array();
    for (Eigen::Index i = 0; i < sd.eigenvectors.cols(); ++i) {
        vecs.push_back(complex_vector(sd.eigenvectors.col(i)));
    }
    out["eigenvectors"] = std::move(vecs);
    return out;
}

Json to_json(const FormFamily& ff) {
    Json out;
    out["kind"] = to_string(ff.kind);
    Json verts = Json::array();
    for (std::size_t x = 0; x < ff.gamma.size(); ++x) {
        Json v;
        v["vertex"] = x;
        v["gamma"] = complex_matrix(ff.gamma[x]);
        v["gamma2"] = complex_matrix(ff.gamma2[x]);
        v["laplacian_sq"] = complex_matrix(ff.lap_sq[x]);
        verts.push_back(std::move(v));
    }
    out["vertices"] = std::move(verts);
    return out;
}

Json to_json(const CurvatureResult& cr) {
    Json out;
    out["n"] = json_number(cr.n);
    out["kind"] = to_string(cr.kind);
    out["kappa_max"] = json_number(cr.kappa_max);
    Json pv = Json::array();
    for (double k : cr.per_vertex_kappa) {
        pv.push_back(json_number(k));
    }
    out["per_vertex"] = std::move(pv);
    out["witness_vertex"] = cr.witness_vertex;
    return out;
}

Json to_json(const LiftIdentityReport& r) {
    Json out;
    out["trials"] = r.trials;
    out["energy_residual"] = json_number(r.energy_residual);
    out["laplacian_residual"] = json_number(r.laplacian_residual);
    out["eigenpair_residual"] = json_number(r.eigenpair_residual);
    out["pass"] = r.pass;
    return out;
}

Json to_json(const LiftDiameterCheck& r) {
    Json out;
    out["lift_diameter"] = r.lift_diameter < 0 ? Json(nullptr) : Json(r.lift_diameter);
    out["diameter"] = r.base_diameter;
    out["magnetic_girth"] = r.magnetic_girth;
    out["bound"] = r.bound;
    out["pass"] = r.pass;
    return out;
}

Json to_json(const FrustrationResult& r) {
    Json out;
    out["value"] = json_number(r.value);
    out["subset"] = json_array(r.subset);
    out["tau"] = json_array(r.tau);
    out["mode"] = r.mode == SearchMode::exact ? "exact" : "local-search";
    return out;
}

Json to_json(const CheegerResult& r) {
    Json out;
    out["h1"] = json_number(r.h1);
    out["subset"] = json_array(r.subset);
    out["frustration"] = json_number(r.frustration);
    out["cut"] = json_number(r.cut);
    out["volume"] = json_number(r.volume);
    out["tau"] = json_array(r.tau);
    out["mode"] = to_string(r.mode);
    out["seed"] = r.mode == SearchMode::heuristic ? Json(r.seed) : Json(nullptr);
    return out;
}

Json to_json(const HarnackRecord& r) {
    Json out;
    out["lambda"] = json_number(r.lambda);
    out["eigen_index"] = r.eigen_index;
    out["argmax_vertex"] = r.argmax_vertex;
    out["lhs"] = json_number(r.lhs);
    out["rhs"] = json_number(r.rhs);
    out["slack"] = json_number(r.slack);
    out["pass"] = r.pass;
    return out;
}

Json to_json(const AlphaRecord& r) {
    Json out;
    out["lambda"] = json_number(r.lambda);
    out["eigen_index"] = r.eigen_index;
    out["alpha"] = json_number(r.alpha);
    out["applicable"] = r.applicable;
    out["ill_conditioned"] = r.ill_conditioned;
    Json lhs = Json::array();
    for (double v : r.lhs) {
        lhs.push_back(json_number(v));
    }
    out["lhs"] = std::move(lhs);
    out["rhs"] = r.applicable ? json_number(r.rhs) : Json(nullptr);
    out["pass"] = r.pass;
    return out;
}

Json to_json(const EigenvalueBoundRecord& r) {
    Json out;
    out["lambda_min"] = json_number(r.lambda_min);
    out["diameter"] = r.diameter;
    out["lift_diameter"] = r.lift_diameter;
    out["magnetic_girth"] = r.magnetic_girth;
    out["ell"] = r.ell;
    out["max_degree"] = json_number(r.max_degree);
    out["n"] = json_number(r.n);
    out["kappa"] = json_number(r.kappa);
    out["path_length"] = json_number(r.path_length);
    out["bound"] = json_number(r.bound);
    out["lift_bound"] = json_number(r.lift_bound);
    out["bound_short_denominator"] = json_number(r.bound_short_denominator);
    out["vacuous"] = r.vacuous;
    out["pass"] = r.pass;
    out["pass_short_denominator"] = r.pass_short_denominator;
    return out;
}

Json to_json(const CheegerRecord& r) {
    Json out;
    out["lambda_min"] = json_number(r.lambda_min);
    out["h1"] = json_number(r.h1);
    out["max_degree"] = json_number(r.max_degree);
    out["lower"] = json_number(r.lower);
    out["upper"] = json_number(r.upper);
    out["lower_pass"] = r.lower_pass;
    out["upper_pass"] = r.upper_pass;
    out["kappa"] = json_number(r.kappa);
    out["curvature_lower"] = r.curvature_lower ? json_number(*r.curvature_lower) : Json(nullptr);
    out["curvature_pass"] = r.curvature_pass ? Json(*r.curvature_pass) : Json(nullptr);
    out["cheeger"] = to_json(r.cheeger);
    out["pass"] = r.pass();
    return out;
}

Json to_json(const HypothesisFlags& h) {
    Json out;
    out["connected"] = h.connected;
    out["unbalanced"] = h.unbalanced;
    out["entire"] = h.entire;
    out["girth_finite"] = h.girth_finite;
    return out;
}

Json to_json(const BoundsReport& r) {
    Json out;
    out["n"] = json_number(r.n);
    out["kappa"] = json_number(r.kappa);
    out["kappa_auto"] = r.kappa_auto;
    out["hypotheses"] = to_json(r.hypotheses);
    Json h = Json::array();
    for (const auto& rec : r.harnack) {
        h.push_back(to_json(rec));
    }
    out["harnack"] = std::move(h);
    Json a = Json::array();
    for (const auto& rec : r.alpha) {
        a.push_back(to_json(rec));
    }
    out["alpha"] = std::move(a);
    out["lift_diameter"] = r.lift_diameter ? to_json(*r.lift_diameter) : Json(nullptr);
    out["eigenvalue_bound"] = r.eigenvalue_bound ? to_json(*r.eigenvalue_bound) : Json(nullptr);
    out["cheeger"] = r.cheeger ? to_json(*r.cheeger) : Json(nullptr);
    out["skipped"] = json_array(r.skipped);
    out["pass"] = r.all_pass();
    return out;
}

std::string to_markdown(const BoundsReport& r) {
    auto yn = [](bool b) { return b ? "pass" : "FAIL"; };
    std::ostringstream os;
    os << std::boolalpha << "# Verification report\n\n";
    os << "n = " << format_number(r.n) << ", kappa = " << format_number(r.kappa)
       << (r.kappa_auto ? " (certified kappa_max)" : " (given)") << "\n\n";
    os << "Hypotheses: connected=" << r.hypotheses.connected << ", unbalanced=" << r.hypotheses.unbalanced
       << ", entire=" << r.hypotheses.entire << ", girth_finite=" << r.hypotheses.girth_finite << "\n\n";

    os << "## Harnack\n\n| lambda | max energy | rhs | slack | result |\n|---|---|---|---|---|\n";
    for (const auto& h : r.harnack) {
        os << "| " << format_number(h.lambda) << " | " << format_number(h.lhs) << " | " << format_number(h.rhs)
           << " | " << format_number(h.slack) << " | " << yn(h.pass) << " |\n";
    }
    os << "\n## Alpha bound (alpha = 4 - 2 kappa / lambda)\n\n| lambda | alpha | max lhs | rhs | result |\n"
          "|---|---|---|---|---|\n";
    for (const auto& a : r.alpha) {
        double mx = 0.0;
        for (double v : a.lhs) {
            mx = std::max(mx, v);
        }
        os << "| " << format_number(a.lambda) << " | " << format_number(a.alpha) << " | " << format_number(mx)
           << " | " << (a.applicable ? format_number(a.rhs) : "n/a") << " | "
           << (a.applicable ? yn(a.pass) : "inapplicable") << " |\n";
    }
    if (r.lift_diameter) {
        const auto& l = *r.lift_diameter;
        os << "\n## Lift diameter\n\nD_hat = " << l.lift_diameter << " <= 2D + ell g = " << l.bound << ": "
           << yn(l.pass) << "\n";
    }
    if (r.eigenvalue_bound) {
        const auto& e = *r.eigenvalue_bound;
        os << "\n## Eigenvalue bound\n\n| quantity | value |\n|---|---|\n"
           << "| lambda_min | " << format_number(e.lambda_min) << " |\n"
           << "| D, D_hat, g | " << e.diameter << ", " << e.lift_diameter << ", " << e.magnetic_girth << " |\n"
           << "| d | " << format_number(e.max_degree) << " |\n"
           << "| bound (2D + ell g) | " << format_number(e.bound) << " |\n"
           << "| bound (D_hat) | " << format_number(e.lift_bound) << " |\n"
           << "| bound ((2 + ell g)^2 denominator) | " << format_number(e.bound_short_denominator) << " |\n"
           << "| result | " << yn(e.pass) << (e.vacuous ? " (vacuous)" : "") << " |\n";
    }
    if (r.cheeger) {
        const auto& c = *r.cheeger;
        os << "\n## Cheeger\n\n" << format_number(c.lower) << " <= h1 = " << format_number(c.h1) << " <= "
           << format_number(c.upper) << ": " << yn(c.lower_pass && c.upper_pass) << "\n";
        if (c.curvature_lower) {
            os << "\ncurvature lower bound " << format_number(*c.curvature_lower) << " <= h1: "
               << yn(*c.curvature_pass) << "\n";
        }
    }
    for (const auto& s : r.skipped) {
        os << "\nskipped " << s << "\n";
    }
    os << "\n**Overall: " << (r.all_pass() ? "pass" : "FAIL") << "**\n";
    return os.str();
}

}  // namespace maggraph
