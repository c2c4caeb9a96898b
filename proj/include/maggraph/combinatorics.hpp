#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "maggraph/graph.hpp"

namespace maggraph {

inline constexpr long long kDefaultBudget = 10'000'000;

/// Shortest simple cycle whose exponent sum generates Z_ell; nullopt if the
/// signature is not entire or no such cycle exists. Throws SizeError when the
/// DFS visits more than `budget` states.
Distance magnetic_girth(const MagneticGraph& g, long long budget = kDefaultBudget);

/// Shortest closed walk (not necessarily simple) with generating exponent sum,
/// found by BFS on the lift. Never larger than the magnetic girth; diagnostic only.
Distance closed_walk_girth(const MagneticGraph& g);

enum class SearchMode { exact, heuristic };

const char* to_string(SearchMode mode);

/// |xi^a - xi^(b)| for the exponent difference a - b, from the integer
/// difference: 2 |sin(pi k / ell)|.
double root_distance(int exponent_difference, int ell);

struct FrustrationResult {
    double value = 0.0;
    std::vector<int> subset;  ///< sorted vertex ids
    std::vector<int> tau;     ///< exponent of tau(x) for each subset vertex
    SearchMode mode = SearchMode::exact;
};

/// Frustration index of the induced sub-signature on `subset`:
///   min over tau : subset -> Z_ell of sum_{xy} p_xy |tau(x) - sigma_xy tau(y)|.
/// Exact mode gauges the lowest vertex of each induced component to 1 and runs
/// a branch-and-bound enumeration; requires ell^|subset| <= budget.
/// Heuristic mode is greedy single-vertex relabeling from 16 random starts
/// and returns an upper bound.
FrustrationResult frustration_index(const MagneticGraph& g, std::span<const int> subset, SearchMode mode,
                                    long long budget = kDefaultBudget, std::uint64_t seed = 0);

/// Objective value of a given assignment (exponents, in subset order).
double frustration_objective(const MagneticGraph& g, std::span<const int> subset, std::span<const int> tau);

struct CheegerResult {
    double h1 = 0.0;
    std::vector<int> subset;
    double frustration = 0.0;
    double cut = 0.0;
    double volume = 0.0;
    std::vector<int> tau;
    SearchMode mode = SearchMode::exact;
    std::uint64_t seed = 0;
};

/// Magnetic Cheeger number, minimizing (frustration + cut weight) / volume over
/// nonempty vertex subsets (the full vertex set included). Exact mode needs
/// 2^N <= budget and ell^N <= budget; ties go to the lexicographically smallest
/// subset. Heuristic mode runs simulated annealing and returns an upper bound.
CheegerResult cheeger_number(const MagneticGraph& g, SearchMode mode, long long budget = kDefaultBudget,
                             std::uint64_t seed = 0);

/// Recomputes (frustration(tau) + cut) / volume for a result's witness.
double cheeger_ratio(const MagneticGraph& g, std::span<const int> subset, std::span<const int> tau);

}  // namespace maggraph
