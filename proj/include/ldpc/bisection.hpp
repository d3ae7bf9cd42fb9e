#ifndef LDPC_BISECTION_HPP
#define LDPC_BISECTION_HPP

#include <cstdint>
#include <vector>

#include "ldpc/config_model.hpp"

namespace ldpc {

// A balanced vertex partition. side[v] is 0 or 1: left nodes occupy indices
// 0..n_left-1, right nodes n_left..n_left+n_right-1. width counts crossing
// edge-units including multiplicity; exact is true only for results produced
// by exhaustive search.
struct BisectionResult {
    std::vector<std::uint8_t> side;
    std::int64_t width = 0;
    bool exact = false;
};

inline constexpr std::int64_t kDefaultExactCap = 26;

// Crossing multiplicity of a candidate assignment. Throws Unbalanced when the
// side sizes differ by more than one.
std::int64_t bisection_width(const Multigraph& graph, const std::vector<std::uint8_t>& side);

// Global minimum over all balanced bipartitions, via depth-first
// branch-and-bound over vertex assignments (vertex 0's side is fixed when the
// vertex count is even, since the two orientations are mirror images). The
// returned assignment is the first minimum reached in the fixed search order,
// so results are deterministic. Throws TooLarge above the cap.
BisectionResult exact_mbw(const Multigraph& graph, std::int64_t exact_cap = kDefaultExactCap);

// Upper-bound search: steepest-descent balanced pair swaps (Kernighan-Lin
// style) from seeded random balanced starts. Never below the true minimum.
BisectionResult heuristic_mbw(const Multigraph& graph, int restarts, std::uint64_t seed);

}  // namespace ldpc

#endif
