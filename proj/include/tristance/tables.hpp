#pragma once

#include <cstdint>
#include <vector>

#include "tristance/shapes.hpp"

namespace tristance {

// Optimal parameter rows by diameter d >= 1. When two solutions exist for a
// residue class the canonical one comes first.
std::vector<OctagonABC> grid2_tristance_rows(int d);
std::vector<OctagonABC> inf2_tristance_rows(int d);
std::vector<Hexagon> hex2_tristance_rows(int d);
Icosihexahedron grid3_tristance_shape(int d);
QuadOctagon grid2_quadristance_shape(int d);

// The size column printed next to each row.
std::int64_t grid2_tristance_size_column(int d);
std::int64_t inf2_tristance_size_column(int d);
std::int64_t hex2_tristance_size_column(int d);

// Ceiling formulas for the optimum (grid3 has none; quadristance is a lower bound).
std::int64_t grid2_tristance_optimum(int d);
std::int64_t inf2_tristance_optimum(int d);
std::int64_t hex2_tristance_optimum(int d);
std::int64_t grid2_quadristance_bound(int d);

// Edge truncation candidates for the cubic-lattice rows, with the value the
// nearest-integer rule would pick.
struct Grid3Choice {
    int e_floor = 0, e_ceil = 0, e_rounded = 0, e = 0;
};
Grid3Choice grid3_edge_choice(int d);

std::int64_t ceil_div(std::int64_t n, std::int64_t m);

}  // namespace tristance
