#include "maggraph/generate.hpp"

#include <random>
#include <set>

namespace maggraph {

MagneticGraph random_magnetic_graph(const RandomGraphParams& p) {
    if (p.vertices < 2) {
        throw ValidationError("random graphs need at least 2 vertices");
    }
    if (p.edge_prob < 0.0 || p.edge_prob > 1.0) {
        throw ValidationError("edge probability must lie in [0, 1]");
    }
    if (p.ell < 1) {
        throw ValidationError("ell must be at least 1");
    }
    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<int> exponent(0, p.ell - 1);
    std::bernoulli_distribution coin(p.edge_prob);

    std::vector<Edge> edges;
    std::set<std::pair<int, int>> used;
    for (int i = 1; i < p.vertices; ++i) {
        const int j = std::uniform_int_distribution<int>(0, i - 1)(rng);
        edges.push_back({j, i, 1.0, exponent(rng)});
        used.emplace(j, i);
    }
    for (int a = 0; a < p.vertices; ++a) {
        for (int b = a + 1; b < p.vertices; ++b) {
            if (used.count({a, b}) == 0 && coin(rng)) {
                edges.push_back({a, b, 1.0, exponent(rng)});
            }
        }
    }
    return {p.vertices, p.ell, std::move(edges)};
}

}  // namespace maggraph
