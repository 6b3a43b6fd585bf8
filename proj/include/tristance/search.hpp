#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tristance/anticodes.hpp"

namespace tristance {

struct SearchOptions {
    bool witnesses = false;          // collect every optimum up to symmetry
    std::uint64_t node_budget = 0;   // 0 means unlimited
    double wall_seconds = 0;         // 0 means unlimited
    int threads = 1;
};

struct SearchReport {
    Model model = Model::grid2;
    Kind kind = Kind::tristance;
    int diameter = 0;
    int max_size = 0;
    std::vector<Region> witnesses;  // canonical, sorted, pairwise non-isomorphic
    std::uint64_t nodes_explored = 0;
    bool wall_budget_hit = false;   // max_size is then only a lower bound
    double seconds = 0;
};

SearchReport max_anticode(Model m, Kind k, int d, const SearchOptions& opt = {});

using Symmetry = std::function<Point(const Point&)>;
const std::vector<Symmetry>& symmetry_group(Model m);

// Lexicographically least translate-to-origin image over the symmetry group.
Region canonicalize(const Region& region);

}  // namespace tristance
