// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "maggraph/bounds.hpp"
#include "maggraph/cli.hpp"
#include "maggraph/generate.hpp"

using namespace maggraph;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

std::vector<MagneticGraph> build_corpus() {
    std::vector<MagneticGraph> out;
    for (int i = 0; i < 200; ++i) {
        const int n = 3 + i % 8;
        const int ell = 2 + i % 3;
        out.push_back(random_magnetic_graph({n, 0.35, ell, 1000 + static_cast<std::uint64_t>(i)}));
    }
    return out;
}

std::vector<int> all_vertices(const MagneticGraph& g) {
    std::vector<int> v(static_cast<std::size_t>(g.num_vertices()));
    for (int i = 0; i < g.num_vertices(); ++i) {
        v[static_cast<std::size_t>(i)] = i;
    }
    return v;
}

CVector random_function(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CVector f(n);
    for (int i = 0; i < n; ++i) {
        f(i) = Complex{normal(rng), normal(rng)};
    }
    return f;
}

// Minimum edge deletions leaving an ell = 2 signature balanced, by brute force.
int min_deletions_for_balance(const MagneticGraph& g) {
    const int m = static_cast<int>(g.edges().size());
    const int n = g.num_vertices();
    int best = m;
    for (unsigned mask = 0; mask < (1U << m); ++mask) {
        int removed = 0;
        for (int i = 0; i < m; ++i) {
            removed += static_cast<int>((mask >> i) & 1U);
        }
        if (removed >= best) {
            continue;
        }
        bool ok = false;
        for (unsigned lab = 0; lab < (1U << n) && !ok; ++lab) {
            ok = true;
            for (int i = 0; i < m && ok; ++i) {
                if (((mask >> i) & 1U) == 0) {
                    const Edge& e = g.edges()[static_cast<std::size_t>(i)];
                    ok = ((((lab >> e.u) & 1U) + static_cast<unsigned>(e.s) + ((lab >> e.v) & 1U)) % 2U) == 0;
                }
            }
        }
        if (ok) {
            best = removed;
        }
    }
    return best;
}

MagneticGraph signed_cycle(int m, int ell) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < m; ++i) {
        edges.push_back({i, i + 1, 1.0, 0});
    }
    edges.push_back({m - 1, 0, 1.0, 1});
    return {m, ell, std::move(edges)};
}

void fail(Outcome& o, const std::string& why) {
    if (o.pass) {
        o.detail = why;
    }
    o.pass = false;
}

Outcome criterion_cycles() {
    Outcome o;
    int cases = 0;
    for (const int n : {2, 3, 4}) {
        for (const int ell : {2, 4}) {
            const MagneticGraph g = signed_cycle(2 * n, ell);
            const LiftDiameterCheck c = lift_diameter_check(g);
            const std::string tag = "n=" + std::to_string(n) + " ell=" + std::to_string(ell);
            if (c.magnetic_girth != 2 * n) {
                fail(o, tag + ": girth " + std::to_string(c.magnetic_girth));
            }
            if (c.base_diameter != n) {
                fail(o, tag + ": diameter " + std::to_string(c.base_diameter));
            }
            if (ell == 2 && c.lift_diameter != n * ell) {
                fail(o, tag + ": lift diameter " + std::to_string(c.lift_diameter));
            }
            if (!c.pass) {
                fail(o, tag + ": lift diameter above 2D + ell g");
            }
            ++cases;
        }
    }
    if (o.pass) {
        o.detail = std::to_string(cases) + " cycles";
    }
    return o;
}

Outcome criterion_lift(const std::vector<MagneticGraph>& corpus) {
    Outcome o;
    double energy = 0.0;
    double lap = 0.0;
    double eig = 0.0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const LiftIdentityReport r = verify_lift_identities(corpus[i], 20, i);
        energy = std::max(energy, r.energy_residual);
        lap = std::max(lap, r.laplacian_residual);
        eig = std::max(eig, r.eigenpair_residual);
        if (r.energy_residual > 1e-12 || r.laplacian_residual > 1e-12 || r.eigenpair_residual > 1e-9) {
            fail(o, "graph " + std::to_string(i));
        }
    }
    std::ostringstream s;
    s << "max residuals energy " << energy << ", laplacian " << lap << ", eigenpair " << eig;
    o.detail = (o.pass ? "" : o.detail + "; ") + s.str();
    return o;
}

Outcome criterion_curvature(const std::vector<MagneticGraph>& corpus, std::vector<double>& kappas) {
    Outcome o;
    std::mt19937_64 rng(17);
    double worst_gap = 0.0;
    int infinite = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const MagneticGraph& g = corpus[i];
        const FormFamily forms = form_family(g, LaplacianKind::magnetic);
        const CurvatureResult r = kappa_max(forms, 2.0);
        kappas.push_back(r.kappa_max);
        const std::string tag = "graph " + std::to_string(i);
        if (!std::isfinite(r.kappa_max)) {
            ++infinite;
            if (cd_check_graph(forms, 2.0, -1e6).pass) {
                fail(o, tag + ": -inf curvature but CD holds at -1e6");
            }
        } else {
            if (!cd_check_graph(forms, 2.0, r.kappa_max - 1e-6).pass) {
                fail(o, tag + ": certificate fails below kappa_max");
            }
            if (cd_check_graph(forms, 2.0, r.kappa_max + 1e-6).pass) {
                fail(o, tag + ": certificate passes above kappa_max");
            }
        }
        const std::vector<double> bis = kappa_by_bisection(forms, 2.0);
        for (std::size_t x = 0; x < bis.size(); ++x) {
            const double a = bis[x];
            const double b = r.per_vertex_kappa[x];
            if (std::isinf(a) || std::isinf(b)) {
                if (a != b) {
                    fail(o, tag + ": pencil/bisection disagree on -inf");
                }
                continue;
            }
            worst_gap = std::max(worst_gap, std::abs(a - b));
            if (std::abs(a - b) > 1e-6) {
                fail(o, tag + ": pencil/bisection gap " + std::to_string(std::abs(a - b)));
            }
        }
        for (int t = 0; t < 1000; ++t) {
            const CVector f = random_function(g.num_vertices(), rng);
            if (!cd_check_function(g, f, 2.0, r.kappa_max, LaplacianKind::magnetic).all_pass()) {
                fail(o, tag + ": random function violates CD at kappa_max");
                break;
            }
        }
    }
    std::ostringstream s;
    s << "max pencil/bisection gap " << worst_gap << ", " << infinite << " graphs with -inf";
    o.detail = (o.pass ? "" : o.detail + "; ") + s.str();
    return o;
}

bool theorem_hypotheses(const MagneticGraph& g) {
    const SignatureStatus st = signature_status(g);
    return g.is_connected() && !st.balanced && st.entire;
}

Outcome criterion_harnack(const std::vector<MagneticGraph>& corpus, const std::vector<double>& kappas) {
    Outcome o;
    int graphs = 0;
    int records = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (!theorem_hypotheses(corpus[i])) {
            continue;
        }
        ++graphs;
        for (const HarnackRecord& r : harnack_check(corpus[i], 2.0, kappas[i], LaplacianKind::magnetic)) {
            ++records;
            min_slack = std::min(min_slack, r.slack);
            if (!r.pass || r.slack < -1e-9) {
                fail(o, "graph " + std::to_string(i) + " lambda " + std::to_string(r.lambda));
            }
        }
    }
    std::ostringstream s;
    s << graphs << " graphs, " << records << " eigenpairs, min slack " << min_slack;
    o.detail = (o.pass ? "" : o.detail + "; ") + s.str();
    return o;
}

Outcome criterion_alpha(const std::vector<MagneticGraph>& corpus, const std::vector<double>& kappas) {
    Outcome o;
    double worst = 0.0;
    int compared = 0;
    for (std::size_t i = 0; i < 50; ++i) {
        const auto h = harnack_check(corpus[i], 2.0, kappas[i], LaplacianKind::magnetic);
        const auto a = alpha_bound_check(corpus[i], 2.0, kappas[i], std::nullopt, LaplacianKind::magnetic);
        if (h.size() != a.size()) {
            fail(o, "graph " + std::to_string(i) + ": record count mismatch");
            continue;
        }
        for (std::size_t k = 0; k < h.size(); ++k) {
            if (!std::isfinite(h[k].rhs)) {
                continue;
            }
            ++compared;
            const double gap = std::abs(a[k].rhs - h[k].rhs) / std::max(1.0, std::abs(h[k].rhs));
            worst = std::max(worst, gap);
            if (!a[k].applicable || gap > 1e-12) {
                fail(o, "graph " + std::to_string(i) + " eigenpair " + std::to_string(k));
            }
        }
    }
    std::ostringstream s;
    s << compared << " eigenpairs, max relative gap " << worst;
    o.detail = (o.pass ? "" : o.detail + "; ") + s.str();
    return o;
}

Outcome criterion_eigenvalue(const std::vector<MagneticGraph>& corpus, const std::vector<double>& kappas) {
    Outcome o;
    int graphs = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (!hypothesis_flags(corpus[i]).all()) {
            continue;
        }
        ++graphs;
        const EigenvalueBoundRecord r = eigenvalue_lower_bound(corpus[i], 2.0, kappas[i]);
        min_margin = std::min({min_margin, r.lambda_min - r.bound, r.lambda_min - r.lift_bound});
        if (r.lambda_min < r.bound - 1e-12 || r.lambda_min < r.lift_bound - 1e-12) {
            fail(o, "graph " + std::to_string(i));
        }
    }
    const EigenvalueBoundRecord c4 = eigenvalue_lower_bound(signed_cycle(4, 2), 2.0, std::nullopt);
    const double closed = 1.0 - std::cos(std::numbers::pi / 4.0);
    if (std::abs(c4.lambda_min - closed) > 1e-9) {
        fail(o, "C4 lambda_min " + std::to_string(c4.lambda_min));
    }
    if (!c4.pass) {
        fail(o, "C4 bound fails");
    }
    std::ostringstream s;
    s << graphs << " graphs, min margin " << min_margin << ", C4 lambda_min " << c4.lambda_min;
    o.detail = (o.pass ? "" : o.detail + "; ") + s.str();
    return o;
}

Outcome criterion_cheeger(const std::vector<MagneticGraph>& corpus, const std::vector<double>& kappas) {
    Outcome o;
    const MagneticGraph t3(3, 2, {{0, 1, 1.0, 0}, {1, 2, 1.0, 0}, {0, 2, 1.0, 1}});
    const CheegerRecord t = cheeger_bound_check(t3, 2.0, std::nullopt);
    if (std::abs(t.h1 - 1.0 / 3.0) > 1e-12 || !t.lower_pass || !t.upper_pass ||
        std::abs(t.lower - 0.25) > 1e-12 || std::abs(t.upper - 2.0 * std::sqrt(2.0)) > 1e-12) {
        fail(o, "T3");
    }
    int sandwiched = 0;
    int curvature = 0;
    int iota = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const MagneticGraph& g = corpus[i];
        const CheegerRecord r = cheeger_bound_check(g, 2.0, kappas[i]);
        ++sandwiched;
        if (!r.lower_pass || !r.upper_pass) {
            fail(o, "graph " + std::to_string(i) + ": sandwich");
        }
        if (r.curvature_pass) {
            ++curvature;
            if (!*r.curvature_pass) {
                fail(o, "graph " + std::to_string(i) + ": curvature lower bound");
            }
        }
        if (g.ell() == 2 && g.edges().size() <= 8) {
            ++iota;
            const double value = frustration_index(g, all_vertices(g), SearchMode::exact).value;
            if (std::abs(value - 2.0 * min_deletions_for_balance(g)) > 1e-12) {
                fail(o, "graph " + std::to_string(i) + ": iota != 2 e_min");
            }
        }
    }
    std::ostringstream s;
    s << "T3 h1 " << t.h1 << ", " << sandwiched << " sandwiches, " << curvature << " curvature bounds, " << iota
      << " edge-deletion checks";
    o.detail = (o.pass ? "" : o.detail + "; ") + s.str();
    return o;
}

std::string run_verify_in_process(const std::string& doc) {
    std::ostringstream out;
    std::ostringstream err;
    std::istringstream in(doc);
    cli::dispatch({"verify", "-", "--n", "2", "--json"}, out, err, in);
    return out.str();
}

std::string run_verify_subprocess(const std::string& exe, const std::string& path) {
    const std::string cmd = "\"" + exe + "\" verify \"" + path + "\" --n 2 --json";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) {
        return {};
    }
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe.get())) > 0) {
        out.append(buf, got);
    }
    return out;
}

Outcome criterion_determinism(const std::vector<MagneticGraph>& corpus, const std::string& exe) {
    Outcome o;
    int compared = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const std::string doc = dump_graph(corpus[i]);
        const std::string a = run_verify_in_process(doc);
        const std::string b = run_verify_in_process(doc);
        ++compared;
        if (a.empty() || a != b) {
            fail(o, "graph " + std::to_string(i) + " differs in process");
        }
        if (!exe.empty() && i < 20) {
            const std::string path = "acceptance_graph_" + std::to_string(i) + ".json";
            std::FILE* f = std::fopen(path.c_str(), "w");
            std::fwrite(doc.data(), 1, doc.size(), f);
            std::fclose(f);
            const std::string c = run_verify_subprocess(exe, path);
            const std::string d = run_verify_subprocess(exe, path);
            std::remove(path.c_str());
            if (c != d || c != a) {
                fail(o, "graph " + std::to_string(i) + " differs across processes");
            }
        }
    }
    o.detail = (o.pass ? "" : o.detail + "; ") + std::to_string(compared) + " graphs" +
               (exe.empty() ? "" : ", 20 also via the executable");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string exe = argc > 1 ? argv[1] : "";
    const std::vector<MagneticGraph> corpus = build_corpus();
    std::vector<double> kappas;
    bool all = true;

    auto report = [&](int id, double limit_s, const std::function<Outcome()>& body) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& ex) {
            o.pass = false;
            o.detail = std::string("exception: ") + ex.what();
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (limit_s > 0 && secs > limit_s) {
            o.pass = false;
            o.detail += "; over time limit";
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << o.detail << " ["
                  << std::to_string(secs) << " s]" << std::endl;
    };

    report(1, 1.0, criterion_cycles);
    report(2, 30.0, [&] { return criterion_lift(corpus); });
    report(3, 120.0, [&] { return criterion_curvature(corpus, kappas); });
    if (kappas.size() != corpus.size()) {
        for (std::size_t i = kappas.size(); i < corpus.size(); ++i) {
            kappas.push_back(kappa_max(corpus[i], 2.0, LaplacianKind::magnetic).kappa_max);
        }
    }
    report(4, 0.0, [&] { return criterion_harnack(corpus, kappas); });
    report(5, 0.0, [&] { return criterion_alpha(corpus, kappas); });
    report(6, 0.0, [&] { return criterion_eigenvalue(corpus, kappas); });
    report(7, 300.0, [&] { return criterion_cheeger(corpus, kappas); });
    report(8, 0.0, [&] { return criterion_determinism(corpus, exe); });
    return all ? 0 : 1;
}
