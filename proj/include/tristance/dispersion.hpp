#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tristance/region.hpp"

namespace tristance {

// Number of edges of a Steiner minimal tree on three points.
int tristance(Model m, const Point& a, const Point& b, const Point& c);

// Grid-graph Steiner tree size on four points.
int quadristance(const Point& a, const Point& b, const Point& c, const Point& d);

// The eight rank correspondences for which the four-point tree is two spans only.
const std::vector<std::array<int, 4>>& quadristance_group();

// Closed-form r-dispersion for r <= 3 in every model and r = 4 in grid2.
// Throws DomainError("unsupported") otherwise.
int dispersion(Model m, std::span<const Point> pts);
bool has_closed_form(Model m, std::size_t r);

struct OracleOptions {
    int margin = 2;
    std::size_t node_budget = 20000;
};

// Exact Steiner minimal tree size over the window graph (bounding box of the
// inputs dilated by margin), by terminal-subset dynamic programming.
int steiner_oracle(Model m, std::span<const Point> pts, OracleOptions opt = {});

struct TupleWitness {
    std::vector<Point> points;
    int value = 0;
};

// Max r-dispersion over r-multisets of the region, with an attaining tuple.
TupleWitness diameter_witness(Model m, int r, const Region& region);
int dispersion_diameter(Model m, int r, const Region& region);

// First tuple whose dispersion exceeds d, if any.
std::optional<TupleWitness> find_violation(Model m, int r, const Region& region, int d);

}  // namespace tristance
