#pragma once

// Shared test graphs and brute-force oracles. Oracles here are written from the
// defining sums and never call into the code paths they check.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "maggraph/graph.hpp"
#include "maggraph/operators.hpp"

namespace fixtures {

using maggraph::Complex;
using maggraph::CVector;
using maggraph::Edge;
using maggraph::MagneticGraph;

/// Triangle, ell = 2, one negative edge {0,2}.
inline MagneticGraph t3() { return {3, 2, {{0, 1, 1.0, 0}, {1, 2, 1.0, 0}, {0, 2, 1.0, 1}}}; }

/// Triangle, ell = 2, identity signature.
inline MagneticGraph b3() { return {3, 2, {{0, 1, 1.0, 0}, {1, 2, 1.0, 0}, {0, 2, 1.0, 0}}}; }

/// Cycle on m vertices, signature 1 except one edge carrying the primitive root.
inline MagneticGraph signed_cycle(int m, int ell) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < m; ++i) {
        edges.push_back({i, i + 1, 1.0, 0});
    }
    edges.push_back({m - 1, 0, 1.0, 1});
    return {m, ell, std::move(edges)};
}

/// 4-cycle with one edge s = 1, ell = 2.
inline MagneticGraph c4sigma() { return signed_cycle(4, 2); }

inline MagneticGraph single_edge() { return {2, 1, {{0, 1, 1.0, 0}}}; }

inline CVector random_function(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CVector f(n);
    for (int i = 0; i < n; ++i) {
        f(i) = Complex{normal(rng), normal(rng)};
    }
    return f;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// sigma_xy looked up from the edge list, independent of MagneticGraph::phase.
inline Complex sigma(const MagneticGraph& g, int x, int y) {
    for (const Edge& e : g.edges()) {
        int s = -1;
        if (e.u == x && e.v == y) {
            s = e.s;
        } else if (e.u == y && e.v == x) {
            s = (g.ell() - e.s) % g.ell();
        }
        if (s >= 0) {
            return std::polar(1.0, 2.0 * std::numbers::pi * s / g.ell());
        }
    }
    return {0.0, 0.0};
}

inline double weight(const MagneticGraph& g, int x, int y) {
    for (const Edge& e : g.edges()) {
        if ((e.u == x && e.v == y) || (e.u == y && e.v == x)) {
            return e.w;
        }
    }
    return 0.0;
}

inline double degree(const MagneticGraph& g, int x) {
    double d = 0.0;
    for (int y = 0; y < g.num_vertices(); ++y) {
        d += weight(g, x, y);
    }
    return d;
}

/// Literal (Delta^sigma f)(x) by summing over all y with p_xy > 0.
inline CVector laplacian_literal(const MagneticGraph& g, const CVector& f, bool magnetic) {
    const int n = g.num_vertices();
    CVector out(n);
    for (int x = 0; x < n; ++x) {
        Complex acc{0.0, 0.0};
        for (int y = 0; y < n; ++y) {
            const double p = weight(g, x, y);
            if (p > 0.0) {
                acc += p * ((magnetic ? sigma(g, x, y) : Complex{1.0, 0.0}) * f(y) - f(x));
            }
        }
        out(x) = acc / degree(g, x);
    }
    return out;
}

/// Literal Gamma(f,h)(x) as a vector over x.
inline CVector gamma_literal(const MagneticGraph& g, const CVector& f, const CVector& h, bool magnetic) {
    const int n = g.num_vertices();
    CVector out(n);
    for (int x = 0; x < n; ++x) {
        Complex acc{0.0, 0.0};
        for (int y = 0; y < n; ++y) {
            const double p = weight(g, x, y);
            if (p > 0.0) {
                const Complex s = magnetic ? sigma(g, x, y) : Complex{1.0, 0.0};
                acc += p * (s * f(y) - f(x)) * std::conj(s * h(y) - h(x));
            }
        }
        out(x) = acc / (2.0 * degree(g, x));
    }
    return out;
}

/// Recursive Gamma_2(f,f): 1/2 [Delta Gamma(f,f) - Gamma(f, Delta^s f) - Gamma(Delta^s f, f)],
/// outer Delta plain.
inline CVector gamma2_literal(const MagneticGraph& g, const CVector& f, bool magnetic) {
    const CVector gam = gamma_literal(g, f, f, magnetic);
    const CVector lf = laplacian_literal(g, f, magnetic);
    const CVector outer = laplacian_literal(g, gam, false);
    return 0.5 * (outer - gamma_literal(g, f, lf, magnetic) - gamma_literal(g, lf, f, magnetic));
}

/// Frustration by plain enumeration of all ell^|subset| assignments (no gauge).
inline double frustration_brute(const MagneticGraph& g, const std::vector<int>& subset) {
    const int m = static_cast<int>(subset.size());
    const int ell = g.ell();
    std::vector<int> tau(static_cast<std::size_t>(m), 0);
    double best = std::numeric_limits<double>::infinity();
    while (true) {
        double total = 0.0;
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                const int x = subset[static_cast<std::size_t>(i)];
                const int y = subset[static_cast<std::size_t>(j)];
                const double p = weight(g, x, y);
                if (p > 0.0) {
                    const Complex tx = std::polar(1.0, 2.0 * std::numbers::pi * tau[static_cast<std::size_t>(i)] / ell);
                    const Complex ty = std::polar(1.0, 2.0 * std::numbers::pi * tau[static_cast<std::size_t>(j)] / ell);
                    total += p * std::abs(tx - sigma(g, x, y) * ty);
                }
            }
        }
        best = std::min(best, total);
        int k = 0;
        while (k < m && ++tau[static_cast<std::size_t>(k)] == ell) {
            tau[static_cast<std::size_t>(k)] = 0;
            ++k;
        }
        if (k == m) {
            break;
        }
    }
    return best;
}

/// Cheeger number by enumerating every nonempty subset with brute-force frustration.
inline double cheeger_brute(const MagneticGraph& g) {
    const int n = g.num_vertices();
    double best = std::numeric_limits<double>::infinity();
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        std::vector<int> subset;
        double vol = 0.0;
        double cut = 0.0;
        for (int x = 0; x < n; ++x) {
            if ((mask >> x) & 1U) {
                subset.push_back(x);
                vol += degree(g, x);
            }
        }
        for (const Edge& e : g.edges()) {
            if (((mask >> e.u) & 1U) != ((mask >> e.v) & 1U)) {
                cut += e.w;
            }
        }
        best = std::min(best, (frustration_brute(g, subset) + cut) / vol);
    }
    return best;
}

/// ell = 2: minimum number of edges whose deletion leaves a balanced signature,
/// by checking every edge subset (cycle-product test via potentials).
inline int min_deletions_for_balance(const MagneticGraph& g) {
    const int m = static_cast<int>(g.edges().size());
    int best = m;
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
        const int removed = std::popcount(mask);
        if (removed >= best) {
            continue;
        }
        // Balanced iff some 0/1 labelling makes every kept edge consistent.
        const int n = g.num_vertices();
        bool ok = false;
        for (std::uint32_t lab = 0; lab < (1U << n) && !ok; ++lab) {
            ok = true;
            for (int i = 0; i < m && ok; ++i) {
                if ((mask >> i) & 1U) {
                    continue;
                }
                const Edge& e = g.edges()[static_cast<std::size_t>(i)];
                const int lu = (lab >> e.u) & 1U;
                const int lv = (lab >> e.v) & 1U;
                ok = ((lu + e.s + lv) % 2) == 0;
            }
        }
        if (ok) {
            best = removed;
        }
    }
    return best;
}

}  // namespace fixtures
