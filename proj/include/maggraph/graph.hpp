#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maggraph/errors.hpp"

namespace maggraph {

using Complex = std::complex<double>;

/// One undirected edge; `s` is the signature exponent of the orientation u -> v.
struct Edge {
    int u = 0;
    int v = 0;
    double w = 1.0;
    int s = 0;
};

/// A neighbour as seen from a fixed vertex x: the exponent is that of x -> y.
struct Arc {
    int to = 0;
    double w = 1.0;
    int s = 0;
};

/// Hop distance, with nullopt standing for "unreachable / infinite".
using Distance = std::optional<int>;

/// Weighted simple graph whose oriented edges carry an element of the cyclic
/// group of order ell, stored as an integer exponent. Immutable once built.
class MagneticGraph {
public:
    /// Validates and builds; throws ValidationError on any invariant violation.
    MagneticGraph(int num_vertices, int ell, std::vector<Edge> edges);

    int num_vertices() const noexcept { return n_; }
    int ell() const noexcept { return ell_; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Arc> neighbors(int x) const { return adj_.at(static_cast<std::size_t>(x)); }
    double degree(int x) const { return degree_.at(static_cast<std::size_t>(x)); }
    std::span<const double> degrees() const noexcept { return degree_; }
    double max_degree() const noexcept;

    /// sigma_xy = exp(2 pi i s / ell) for an exponent s.
    Complex phase(int exponent) const;

    /// Exponent of the orientation x -> y, or nullopt if x and y are not adjacent.
    std::optional<int> exponent(int x, int y) const;

    bool is_connected() const;

    /// Same graph with vertex x renamed perm[x].
    MagneticGraph relabeled(std::span<const int> perm) const;

    /// Subgraph induced by `subset` (sorted, distinct); vertices renumbered in
    /// subset order. Isolated vertices are allowed here, so this returns edges only.
    std::vector<Edge> induced_edges(std::span<const int> subset) const;

private:
    int n_;
    int ell_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Arc>> adj_;
    std::vector<double> degree_;
};

/// Parses the canonical JSON graph document.
MagneticGraph load_graph(std::string_view text);
MagneticGraph load_graph_file(const std::string& path);

/// Serializes to the canonical document (edge order preserved).
std::string dump_graph(const MagneticGraph& g);

/// Hop-count BFS distances from `source`.
std::vector<Distance> bfs_distances(const MagneticGraph& g, int source);

/// Max hop distance over vertex pairs; nullopt if disconnected.
Distance diameter(const MagneticGraph& g);

struct SignatureStatus {
    bool balanced = false;
    bool entire = false;
};

SignatureStatus signature_status(const MagneticGraph& g);

/// Spanning-forest potential t with s_xy == t_y - t_x (mod ell) on tree arcs.
/// Used for switching to the trivial signature on balanced graphs.
std::vector<int> switching_potential(const MagneticGraph& g);

/// Balance of the sub-signature induced on `subset`.
bool is_balanced_on(const MagneticGraph& g, std::span<const int> subset);

inline int mod(int a, int m) {
    const int r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace maggraph
