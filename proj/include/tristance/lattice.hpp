#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tristance {

enum class Model { grid2, inf2, hex2, grid3 };

std::string_view model_name(Model m);
Model parse_model(std::string_view s);  // throws DomainError("unknown-model")
inline int model_dim(Model m) { return m == Model::grid3 ? 3 : 2; }
inline bool is_planar(Model m) { return m != Model::grid3; }

// One value type serves all four models. Planar models keep z == 0; for hex2
// (x, y) are Eisenstein coordinates of x + wy with w a primitive cube root of 1.
struct Point {
    int x = 0, y = 0, z = 0;
    friend auto operator<=>(const Point&, const Point&) = default;
    Point operator+(const Point& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y, z - o.z}; }
    int operator[](int k) const { return k == 0 ? x : (k == 1 ? y : z); }
    int& operator[](int k) { return k == 0 ? x : (k == 1 ? y : z); }
};
using Point2 = Point;
using HexPoint = Point;
using Point3 = Point;

std::string to_string(const Point& p, int dim);

// hmax{a,b} = max{a,b,0}, hmin{a,b} = min{a,b,0}
inline int hmax(int a, int b) { return std::max(std::max(a, b), 0); }
inline int hmin(int a, int b) { return std::min(std::min(a, b), 0); }
inline int hex_norm(int dx, int dy) { return hmax(dx, dy) - hmin(dx, dy); }

int distance(Model m, const Point& p, const Point& q);
std::vector<Point> neighbors(Model m, const Point& p);
const std::vector<Point>& unit_steps(Model m);

// (x, y) -> (x - y, x + y). Images lie in the checkerboard lattice D2.
Point phi(const Point& p);
Point phi_inverse(const Point& p);  // throws DomainError("parity") if x + y is odd

// A rational point with denominators in {1, 2}, stored doubled.
struct HalfCenter {
    int x2 = 0, y2 = 0;
    static HalfCenter at(const Point& p) { return {2 * p.x, 2 * p.y}; }
    bool integral() const { return x2 % 2 == 0 && y2 % 2 == 0; }
};

}  // namespace tristance
