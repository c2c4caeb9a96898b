#pragma once

#include <cstdint>

#include "maggraph/graph.hpp"

namespace maggraph {

struct RandomGraphParams {
    int vertices = 6;
    double edge_prob = 0.4;
    int ell = 2;
    std::uint64_t seed = 0;
};

/// Connected random magnetic graph with unit weights: a random recursive tree
/// (vertex i attaches to a uniform j < i) plus every other pair with
/// probability edge_prob, exponents uniform in [0, ell).
MagneticGraph random_magnetic_graph(const RandomGraphParams& p);

}  // namespace maggraph
