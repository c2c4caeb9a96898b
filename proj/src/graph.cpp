#include "maggraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

namespace maggraph {

namespace {

std::string edge_label(const Edge& e) {
    std::ostringstream os;
    os << "edge {" << e.u << ", " << e.v << "}";
    return os.str();
}

}  // namespace

MagneticGraph::MagneticGraph(int num_vertices, int ell, std::vector<Edge> edges)
    : n_(num_vertices), ell_(ell), edges_(std::move(edges)) {
    if (n_ < 1) {
        throw ValidationError("num_vertices must be at least 1");
    }
    if (ell_ < 1) {
        throw ValidationError("ell must be at least 1");
    }
    adj_.assign(static_cast<std::size_t>(n_), {});
    degree_.assign(static_cast<std::size_t>(n_), 0.0);

    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
            throw ValidationError(edge_label(e) + ": vertex index out of range");
        }
        if (e.u == e.v) {
            throw ValidationError(edge_label(e) + ": loops are not allowed");
        }
        if (!(e.w > 0.0) || !std::isfinite(e.w)) {
            throw ValidationError(edge_label(e) + ": weight must be positive and finite");
        }
        if (e.s < 0 || e.s >= ell_) {
            throw ValidationError(edge_label(e) + ": exponent out of range [0, ell)");
        }
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
            throw ValidationError(edge_label(e) + ": duplicate edge");
        }
        adj_[static_cast<std::size_t>(e.u)].push_back({e.v, e.w, e.s});
        adj_[static_cast<std::size_t>(e.v)].push_back({e.u, e.w, mod(-e.s, ell_)});
    }
    for (auto& arcs : adj_) {
        std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.to < b.to; });
    }
    for (int x = 0; x < n_; ++x) {
        double d = 0.0;
        for (const Arc& a : adj_[static_cast<std::size_t>(x)]) {
            d += a.w;
        }
        if (!(d > 0.0)) {
            throw ValidationError("vertex " + std::to_string(x) + " is isolated");
        }
        degree_[static_cast<std::size_t>(x)] = d;
    }
}

double MagneticGraph::max_degree() const noexcept {
    return *std::max_element(degree_.begin(), degree_.end());
}

Complex MagneticGraph::phase(int exponent) const {
    const int k = mod(exponent, ell_);
    if (k == 0) {
        return {1.0, 0.0};
    }
    // Exact values where cheap, so that real signatures stay real.
    if (2 * k == ell_) {
        return {-1.0, 0.0};
    }
    if (4 * k == ell_) {
        return {0.0, 1.0};
    }
    if (4 * k == 3 * ell_) {
        return {0.0, -1.0};
    }
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(ell_);
    return std::polar(1.0, theta);
}

std::optional<int> MagneticGraph::exponent(int x, int y) const {
    for (const Arc& a : neighbors(x)) {
        if (a.to == y) {
            return a.s;
        }
    }
    return std::nullopt;
}

bool MagneticGraph::is_connected() const {
    const auto dist = bfs_distances(*this, 0);
    return std::all_of(dist.begin(), dist.end(), [](const Distance& d) { return d.has_value(); });
}

MagneticGraph MagneticGraph::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) {
        throw ValidationError("permutation length does not match num_vertices");
    }
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) {
        out.push_back({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)], e.w, e.s});
    }
    return {n_, ell_, std::move(out)};
}

std::vector<Edge> MagneticGraph::induced_edges(std::span<const int> subset) const {
    std::vector<int> local(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < subset.size(); ++i) {
        local.at(static_cast<std::size_t>(subset[i])) = static_cast<int>(i);
    }
    std::vector<Edge> out;
    for (const Edge& e : edges_) {
        const int a = local[static_cast<std::size_t>(e.u)];
        const int b = local[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) {
            out.push_back({a, b, e.w, e.s});
        }
    }
    return out;
}

MagneticGraph load_graph(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw ParseError(std::string("invalid JSON: ") + ex.what());
    }
    try {
        if (!doc.is_object()) {
            throw ParseError("graph document must be a JSON object");
        }
        for (const char* key : {"ell", "num_vertices", "edges"}) {
            if (!doc.contains(key)) {
                throw ParseError(std::string("missing key \"") + key + "\"");
            }
        }
        if (!doc["ell"].is_number_integer() || !doc["num_vertices"].is_number_integer()) {
            throw ParseError("\"ell\" and \"num_vertices\" must be integers");
        }
        if (!doc["edges"].is_array()) {
            throw ParseError("\"edges\" must be an array");
        }
        std::vector<Edge> edges;
        for (const auto& item : doc["edges"]) {
            if (!item.is_object() || !item.contains("u") || !item.contains("v") || !item.contains("w") ||
                !item.contains("s")) {
                throw ParseError("each edge needs keys u, v, w, s");
            }
            if (!item["u"].is_number_integer() || !item["v"].is_number_integer() ||
                !item["s"].is_number_integer() || !item["w"].is_number()) {
                throw ParseError("edge fields have wrong types");
            }
            edges.push_back({item["u"].get<int>(), item["v"].get<int>(), item["w"].get<double>(), item["s"].get<int>()});
        }
        return {doc["num_vertices"].get<int>(), doc["ell"].get<int>(), std::move(edges)};
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed graph document: ") + ex.what());
    }
}

MagneticGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return load_graph(buf.str());
}

std::string dump_graph(const MagneticGraph& g) {
    nlohmann::ordered_json doc;
    doc["ell"] = g.ell();
    doc["num_vertices"] = g.num_vertices();
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges()) {
        edges.push_back({{"u", e.u}, {"v", e.v}, {"w", e.w}, {"s", e.s}});
    }
    doc["edges"] = std::move(edges);
    return doc.dump();
}

std::vector<Distance> bfs_distances(const MagneticGraph& g, int source) {
    std::vector<Distance> dist(static_cast<std::size_t>(g.num_vertices()));
    std::queue<int> q;
    dist.at(static_cast<std::size_t>(source)) = 0;
    q.push(source);
    while (!q.empty()) {
        const int x = q.front();
        q.pop();
        for (const Arc& a : g.neighbors(x)) {
            auto& d = dist[static_cast<std::size_t>(a.to)];
            if (!d) {
                d = *dist[static_cast<std::size_t>(x)] + 1;
                q.push(a.to);
            }
        }
    }
    return dist;
}

Distance diameter(const MagneticGraph& g) {
    int best = 0;
    for (int x = 0; x < g.num_vertices(); ++x) {
        for (const Distance& d : bfs_distances(g, x)) {
            if (!d) {
                return std::nullopt;
            }
            best = std::max(best, *d);
        }
    }
    return best;
}

std::vector<int> switching_potential(const MagneticGraph& g) {
    std::vector<int> t(static_cast<std::size_t>(g.num_vertices()), -1);
    for (int root = 0; root < g.num_vertices(); ++root) {
        if (t[static_cast<std::size_t>(root)] >= 0) {
            continue;
        }
        t[static_cast<std::size_t>(root)] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int x = q.front();
            q.pop();
            for (const Arc& a : g.neighbors(x)) {
                auto& ty = t[static_cast<std::size_t>(a.to)];
                if (ty < 0) {
                    ty = mod(t[static_cast<std::size_t>(x)] + a.s, g.ell());
                    q.push(a.to);
                }
            }
        }
    }
    return t;
}

namespace {

bool potential_consistent(const MagneticGraph& g, const std::vector<int>& t) {
    for (const Edge& e : g.edges()) {
        if (mod(t[static_cast<std::size_t>(e.u)] + e.s - t[static_cast<std::size_t>(e.v)], g.ell()) != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

SignatureStatus signature_status(const MagneticGraph& g) {
    SignatureStatus st;
    st.balanced = potential_consistent(g, switching_potential(g));
    int gen = g.ell();
    for (const Edge& e : g.edges()) {
        gen = std::gcd(gen, e.s);
    }
    st.entire = (gen == 1);
    return st;
}

bool is_balanced_on(const MagneticGraph& g, std::span<const int> subset) {
    const int m = static_cast<int>(subset.size());
    std::vector<std::vector<Arc>> adj(static_cast<std::size_t>(m));
    for (const Edge& e : g.induced_edges(subset)) {
        adj[static_cast<std::size_t>(e.u)].push_back({e.v, e.w, e.s});
        adj[static_cast<std::size_t>(e.v)].push_back({e.u, e.w, mod(-e.s, g.ell())});
    }
    std::vector<int> t(static_cast<std::size_t>(m), -1);
    for (int root = 0; root < m; ++root) {
        if (t[static_cast<std::size_t>(root)] >= 0) {
            continue;
        }
        t[static_cast<std::size_t>(root)] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int x = q.front();
            q.pop();
            for (const Arc& a : adj[static_cast<std::size_t>(x)]) {
                const int want = mod(t[static_cast<std::size_t>(x)] + a.s, g.ell());
                auto& ty = t[static_cast<std::size_t>(a.to)];
                if (ty < 0) {
                    ty = want;
                    q.push(a.to);
                } else if (ty != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace maggraph
