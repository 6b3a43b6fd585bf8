#pragma once

#include <cstdint>
#include <vector>

#include "tristance/anticodes.hpp"

namespace tristance {

struct InterleavingBound {
    std::int64_t value = 0;
    std::int64_t anticode_size = 0;  // |A_{t-1}| of the constructed anticode
};

// Lower bound on the degree of a t-interleaving that tolerates r repeats.
InterleavingBound interleaving_lower_bound(Model m, int t, int r);

struct GobanState {
    int board_size = 19;
    std::vector<Point> stones;
    int k = 0;
};

// Cells from which 0-3 stones can be joined with at most k further moves,
// computed on the infinite lattice and then clipped to the board.
Anticode go_locus(const GobanState& state);

}  // namespace tristance
