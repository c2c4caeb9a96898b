#include "maggraph/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <queue>
#include <random>

namespace maggraph {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool generates(int exponent_sum, int ell) { return std::gcd(mod(exponent_sum, ell), ell) == 1; }

// ell^k <= budget without overflow.
bool power_within(int ell, int k, long long budget) {
    long long acc = 1;
    for (int i = 0; i < k; ++i) {
        if (acc > budget / ell) {
            return false;
        }
        acc *= ell;
    }
    return acc <= budget;
}

class GirthSearch {
public:
    GirthSearch(const MagneticGraph& g, long long budget)
        : g_(g), budget_(budget), on_path_(static_cast<std::size_t>(g.num_vertices()), false) {}

    Distance run() {
        for (int s = 0; s < g_.num_vertices(); ++s) {
            start_ = s;
            dist_to_start_ = bfs_distances(g_, s);
            on_path_[static_cast<std::size_t>(s)] = true;
            extend(s, 0, 0);
            on_path_[static_cast<std::size_t>(s)] = false;
        }
        if (best_ == std::numeric_limits<int>::max()) {
            return std::nullopt;
        }
        return best_;
    }

private:
    // Cycles are enumerated from their smallest vertex only.
    void extend(int v, int length, int exponent_sum) {
        if (++states_ > budget_) {
            throw SizeError("magnetic girth search exceeded its state budget");
        }
        for (const Arc& a : g_.neighbors(v)) {
            if (a.to == start_) {
                if (length >= 2 && length + 1 < best_ && generates(exponent_sum + a.s, g_.ell())) {
                    best_ = length + 1;
                }
                continue;
            }
            if (a.to < start_ || on_path_[static_cast<std::size_t>(a.to)]) {
                continue;
            }
            const Distance back = dist_to_start_[static_cast<std::size_t>(a.to)];
            if (!back || length + 1 + *back >= best_) {
                continue;
            }
            on_path_[static_cast<std::size_t>(a.to)] = true;
            extend(a.to, length + 1, exponent_sum + a.s);
            on_path_[static_cast<std::size_t>(a.to)] = false;
        }
    }

    const MagneticGraph& g_;
    long long budget_;
    long long states_ = 0;
    int start_ = 0;
    int best_ = std::numeric_limits<int>::max();
    std::vector<bool> on_path_;
    std::vector<Distance> dist_to_start_;
};

// Induced subgraph in local indices with a precomputed cost table.
struct Induced {
    int ell = 1;
    std::vector<int> vertices;
    std::vector<std::vector<Arc>> adj;  // local ids, exponent of local x -> y
    std::vector<double> cost;           // root_distance(k, ell) for k in [0, ell)

    Induced(const MagneticGraph& g, std::span<const int> subset)
        : ell(g.ell()), vertices(subset.begin(), subset.end()), adj(subset.size()), cost(static_cast<std::size_t>(g.ell())) {
        for (const Edge& e : g.induced_edges(subset)) {
            adj[static_cast<std::size_t>(e.u)].push_back({e.v, e.w, e.s});
            adj[static_cast<std::size_t>(e.v)].push_back({e.u, e.w, mod(-e.s, ell)});
        }
        for (int k = 0; k < ell; ++k) {
            cost[static_cast<std::size_t>(k)] = root_distance(k, ell);
        }
    }

    int size() const { return static_cast<int>(vertices.size()); }

    // |xi^tx - xi^(s + ty)|
    double edge_cost(int tx, int ty, int s) const { return cost[static_cast<std::size_t>(mod(tx - s - ty, ell))]; }

    double objective(std::span<const int> tau) const {
        double total = 0.0;
        for (int x = 0; x < size(); ++x) {
            for (const Arc& a : adj[static_cast<std::size_t>(x)]) {
                if (x < a.to) {
                    total += a.w * edge_cost(tau[static_cast<std::size_t>(x)], tau[static_cast<std::size_t>(a.to)], a.s);
                }
            }
        }
        return total;
    }

    // Connected components in BFS order from their lowest local vertex.
    std::vector<std::vector<int>> components() const {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(vertices.size(), false);
        for (int r = 0; r < size(); ++r) {
            if (seen[static_cast<std::size_t>(r)]) {
                continue;
            }
            std::vector<int> comp{r};
            seen[static_cast<std::size_t>(r)] = true;
            for (std::size_t head = 0; head < comp.size(); ++head) {
                for (const Arc& a : adj[static_cast<std::size_t>(comp[head])]) {
                    if (!seen[static_cast<std::size_t>(a.to)]) {
                        seen[static_cast<std::size_t>(a.to)] = true;
                        comp.push_back(a.to);
                    }
                }
            }
            out.push_back(std::move(comp));
        }
        return out;
    }
};

// Branch and bound over one component; the first vertex is gauged to 0.
class ComponentSolver {
public:
    ComponentSolver(const Induced& ind, const std::vector<int>& order, double cap)
        : ind_(ind), order_(order), position_(static_cast<std::size_t>(ind.size()), -1), best_(cap) {
        for (std::size_t i = 0; i < order_.size(); ++i) {
            position_[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
        }
        labels_.assign(order_.size(), 0);
    }

    // Returns false if nothing at or below `cap` exists.
    bool solve() {
        labels_[0] = 0;
        descend(1, 0.0);
        return found_;
    }

    double best() const { return best_; }
    const std::vector<int>& best_labels() const { return best_labels_; }  // indexed by order position

private:
    void descend(std::size_t depth, double partial) {
        if (depth == order_.size()) {
            if (partial < best_ || (!found_ && partial <= best_)) {
                best_ = partial;
                best_labels_ = labels_;
                found_ = true;
            }
            return;
        }
        const int x = order_[depth];
        for (int t = 0; t < ind_.ell; ++t) {
            double add = 0.0;
            for (const Arc& a : ind_.adj[static_cast<std::size_t>(x)]) {
                const int p = position_[static_cast<std::size_t>(a.to)];
                if (p >= 0 && static_cast<std::size_t>(p) < depth) {
                    add += a.w * ind_.edge_cost(t, labels_[static_cast<std::size_t>(p)], a.s);
                }
            }
            const double next = partial + add;
            if (next > best_ || (found_ && next >= best_)) {
                continue;
            }
            labels_[depth] = t;
            descend(depth + 1, next);
        }
    }

    const Induced& ind_;
    const std::vector<int>& order_;
    std::vector<int> position_;
    std::vector<int> labels_;
    std::vector<int> best_labels_;
    double best_;
    bool found_ = false;
};

struct ExactFrustration {
    bool found = false;
    double value = 0.0;
    std::vector<int> tau;
};

// Exact minimum over all assignments, or found == false if it exceeds `cap`.
ExactFrustration exact_frustration(const Induced& ind, double cap) {
    ExactFrustration out;
    out.tau.assign(static_cast<std::size_t>(ind.size()), 0);
    double total = 0.0;
    for (const auto& comp : ind.components()) {
        if (comp.size() == 1) {
            continue;
        }
        ComponentSolver solver(ind, comp, cap - total);
        if (!solver.solve()) {
            return out;
        }
        total += solver.best();
        for (std::size_t i = 0; i < comp.size(); ++i) {
            out.tau[static_cast<std::size_t>(comp[i])] = solver.best_labels()[i];
        }
    }
    out.found = true;
    out.value = ind.objective(out.tau);
    return out;
}

std::vector<int> greedy_frustration(const Induced& ind, int restarts, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> label(0, ind.ell - 1);
    std::vector<int> best_tau(static_cast<std::size_t>(ind.size()), 0);
    double best = ind.objective(best_tau);
    for (int r = 0; r < restarts; ++r) {
        std::vector<int> tau(static_cast<std::size_t>(ind.size()));
        for (int& t : tau) {
            t = label(rng);
        }
        bool improved = true;
        while (improved) {
            improved = false;
            for (int x = 0; x < ind.size(); ++x) {
                auto local = [&](int t) {
                    double c = 0.0;
                    for (const Arc& a : ind.adj[static_cast<std::size_t>(x)]) {
                        c += a.w * ind.edge_cost(t, tau[static_cast<std::size_t>(a.to)], a.s);
                    }
                    return c;
                };
                const int cur = tau[static_cast<std::size_t>(x)];
                double cur_cost = local(cur);
                for (int t = 0; t < ind.ell; ++t) {
                    const double c = local(t);
                    if (c < cur_cost - 1e-12) {
                        cur_cost = c;
                        tau[static_cast<std::size_t>(x)] = t;
                        improved = true;
                    }
                }
            }
        }
        const double val = ind.objective(tau);
        if (val < best - 1e-12) {
            best = val;
            best_tau = tau;
        }
    }
    return best_tau;
}

std::vector<int> validated_subset(const MagneticGraph& g, std::span<const int> subset) {
    if (subset.empty()) {
        throw EmptySubsetError("vertex subset must be nonempty");
    }
    std::vector<int> s(subset.begin(), subset.end());
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
        throw ValidationError("vertex subset has duplicates");
    }
    if (s.front() < 0 || s.back() >= g.num_vertices()) {
        throw ValidationError("vertex subset index out of range");
    }
    return s;
}

struct SubsetMeasure {
    double cut = 0.0;
    double volume = 0.0;
};

SubsetMeasure measure(const MagneticGraph& g, const std::vector<bool>& in) {
    SubsetMeasure m;
    for (int x = 0; x < g.num_vertices(); ++x) {
        if (in[static_cast<std::size_t>(x)]) {
            m.volume += g.degree(x);
        }
    }
    for (const Edge& e : g.edges()) {
        if (in[static_cast<std::size_t>(e.u)] != in[static_cast<std::size_t>(e.v)]) {
            m.cut += e.w;
        }
    }
    return m;
}

std::vector<int> members(const std::vector<bool>& in) {
    std::vector<int> out;
    for (std::size_t i = 0; i < in.size(); ++i) {
        if (in[i]) {
            out.push_back(static_cast<int>(i));
        }
    }
    return out;
}

CheegerResult exact_cheeger(const MagneticGraph& g, long long budget) {
    const int n = g.num_vertices();
    if (n > 62 || !power_within(2, n, budget)) {
        throw SizeError("exact Cheeger enumeration needs 2^N <= budget");
    }
    if (!power_within(g.ell(), n, budget)) {
        throw SizeError("exact frustration needs ell^N <= budget");
    }
    CheegerResult best;
    best.mode = SearchMode::exact;
    best.h1 = kInf;
    const auto total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        std::vector<bool> in(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) {
            in[static_cast<std::size_t>(x)] = ((mask >> x) & 1U) != 0;
        }
        const SubsetMeasure m = measure(g, in);
        const double tie = 1e-12 * std::max(1.0, best.h1 == kInf ? 1.0 : best.h1);
        const double limit = best.h1 + tie;  // accept ties for the lexicographic rule
        if (m.cut / m.volume > limit) {
            continue;
        }
        const std::vector<int> subset = members(in);
        const Induced ind(g, subset);
        const ExactFrustration fr = exact_frustration(ind, limit * m.volume - m.cut);
        if (!fr.found) {
            continue;
        }
        const double ratio = (fr.value + m.cut) / m.volume;
        const bool better = ratio < best.h1 - tie;
        const bool tied = !better && ratio <= best.h1 + tie;
        if (better || (tied && subset < best.subset)) {
            best.h1 = ratio;
            best.subset = subset;
            best.frustration = fr.value;
            best.cut = m.cut;
            best.volume = m.volume;
            best.tau = fr.tau;
        }
    }
    return best;
}

CheegerResult annealed_cheeger(const MagneticGraph& g, std::uint64_t seed) {
    const int n = g.num_vertices();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    struct Eval {
        double ratio;
        double frustration;
        SubsetMeasure m;
        std::vector<int> tau;
    };
    auto evaluate = [&](const std::vector<bool>& in) {
        const std::vector<int> subset = members(in);
        const Induced ind(g, subset);
        std::vector<int> tau = greedy_frustration(ind, 4, rng);
        const double fr = ind.objective(tau);
        const SubsetMeasure m = measure(g, in);
        return Eval{(fr + m.cut) / m.volume, fr, m, std::move(tau)};
    };

    std::vector<bool> cur(static_cast<std::size_t>(n), true);
    Eval cur_eval = evaluate(cur);
    CheegerResult best;
    best.mode = SearchMode::heuristic;
    best.seed = seed;
    auto record = [&](const std::vector<bool>& in, const Eval& e) {
        if (best.subset.empty() || e.ratio < best.h1 - 1e-12) {
            best.h1 = e.ratio;
            best.subset = members(in);
            best.frustration = e.frustration;
            best.cut = e.m.cut;
            best.volume = e.m.volume;
            best.tau = e.tau;
        }
    };
    record(cur, cur_eval);

    constexpr int kSteps = 4000;
    const double t_start = 0.5;
    const double t_end = 1e-3;
    for (int step = 0; step < kSteps; ++step) {
        const double temp = t_start * std::pow(t_end / t_start, static_cast<double>(step) / (kSteps - 1));
        std::vector<bool> next = cur;
        const int v = pick(rng);
        next[static_cast<std::size_t>(v)] = !next[static_cast<std::size_t>(v)];
        if (std::none_of(next.begin(), next.end(), [](bool b) { return b; })) {
            continue;
        }
        Eval e = evaluate(next);
        const double delta = e.ratio - cur_eval.ratio;
        if (delta <= 0.0 || unit(rng) < std::exp(-delta / temp)) {
            cur = std::move(next);
            cur_eval = std::move(e);
            record(cur, cur_eval);
        }
    }
    return best;
}

}  // namespace

const char* to_string(SearchMode mode) { return mode == SearchMode::exact ? "exact" : "heuristic"; }

double root_distance(int exponent_difference, int ell) {
    const int k = mod(exponent_difference, ell);
    const int r = std::min(k, ell - k);
    if (r == 0) {
        return 0.0;
    }
    return 2.0 * std::sin(std::numbers::pi * static_cast<double>(r) / static_cast<double>(ell));
}

Distance magnetic_girth(const MagneticGraph& g, long long budget) {
    if (!signature_status(g).entire) {
        return std::nullopt;
    }
    return GirthSearch(g, budget).run();
}

Distance closed_walk_girth(const MagneticGraph& g) {
    const int ell = g.ell();
    const int n = g.num_vertices();
    Distance best;
    for (int s = 0; s < n; ++s) {
        // state (vertex, accumulated exponent); first step taken explicitly so
        // that the empty walk is never counted.
        std::vector<int> dist(static_cast<std::size_t>(n * ell), -1);
        std::queue<int> q;
        for (const Arc& a : g.neighbors(s)) {
            const int st = a.to * ell + a.s;
            if (dist[static_cast<std::size_t>(st)] < 0) {
                dist[static_cast<std::size_t>(st)] = 1;
                q.push(st);
            }
        }
        while (!q.empty()) {
            const int st = q.front();
            q.pop();
            const int v = st / ell;
            const int e = st % ell;
            const int d = dist[static_cast<std::size_t>(st)];
            if (v == s && generates(e, ell)) {
                if (!best || d < *best) {
                    best = d;
                }
                break;
            }
            for (const Arc& a : g.neighbors(v)) {
                const int nx = a.to * ell + mod(e + a.s, ell);
                if (dist[static_cast<std::size_t>(nx)] < 0) {
                    dist[static_cast<std::size_t>(nx)] = d + 1;
                    q.push(nx);
                }
            }
        }
    }
    return best;
}

double frustration_objective(const MagneticGraph& g, std::span<const int> subset, std::span<const int> tau) {
    const std::vector<int> s = validated_subset(g, subset);
    if (tau.size() != s.size()) {
        throw ValidationError("tau length does not match subset size");
    }
    if (!std::equal(s.begin(), s.end(), subset.begin())) {
        throw ValidationError("subset must be sorted to pair with tau");
    }
    return Induced(g, s).objective(tau);
}

FrustrationResult frustration_index(const MagneticGraph& g, std::span<const int> subset, SearchMode mode,
                                    long long budget, std::uint64_t seed) {
    const std::vector<int> s = validated_subset(g, subset);
    const Induced ind(g, s);
    FrustrationResult out;
    out.subset = s;
    out.mode = mode;
    if (mode == SearchMode::exact) {
        if (!power_within(g.ell(), static_cast<int>(s.size()), budget)) {
            throw SizeError("exact frustration needs ell^|subset| <= budget");
        }
        ExactFrustration fr = exact_frustration(ind, kInf);
        out.value = fr.value;
        out.tau = std::move(fr.tau);
    } else {
        std::mt19937_64 rng(seed);
        out.tau = greedy_frustration(ind, 16, rng);
        out.value = ind.objective(out.tau);
    }
    return out;
}

CheegerResult cheeger_number(const MagneticGraph& g, SearchMode mode, long long budget, std::uint64_t seed) {
    return mode == SearchMode::exact ? exact_cheeger(g, budget) : annealed_cheeger(g, seed);
}

double cheeger_ratio(const MagneticGraph& g, std::span<const int> subset, std::span<const int> tau) {
    std::vector<bool> in(static_cast<std::size_t>(g.num_vertices()), false);
    for (int x : validated_subset(g, subset)) {
        in[static_cast<std::size_t>(x)] = true;
    }
    const SubsetMeasure m = measure(g, in);
    return (frustration_objective(g, subset, tau) + m.cut) / m.volume;
}

}  // namespace maggraph
