#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tristance/dispersion.hpp"
#include "tristance/shapes.hpp"

namespace tristance {

enum class Kind { distance, tristance, quadristance };
enum class Exactness { exact, conjectural, lower_bound_construction };

std::string_view kind_name(Kind k);
Kind parse_kind(std::string_view s);  // throws DomainError("unknown-kind")
int kind_arity(Kind k);
std::string_view exactness_name(Exactness e);
Exactness parse_exactness(std::string_view s);

// Named parameters of the shape a region was built from, in display order.
struct ShapeInfo {
    std::string family;
    std::vector<std::pair<std::string, int>> params;
    friend bool operator==(const ShapeInfo&, const ShapeInfo&) = default;
};

ShapeInfo describe(const OctagonABC& o);
ShapeInfo describe(const Hexagon& h);
ShapeInfo describe(const Icosihexahedron& s);  // uniform truncations only
ShapeInfo describe(const QuadOctagon& q);

struct Anticode {
    Region region;
    Kind kind = Kind::tristance;
    int diameter = 0;
    std::optional<ShapeInfo> shape;
    Exactness exactness = Exactness::exact;
};

// {(x,y) : |x-x0| + |y-y0| <= r} with the center and radius given doubled.
Region l1_sphere(HalfCenter center, int radius2);

Region optimal_distance_anticode(Model m, int d);

// Half-step shift used for odd diameters around a single center.
enum class Xi { east, north, west, south };
Xi parse_xi(std::string_view s);
HalfCenter shifted(const Point& z0, Xi xi);

Region centered_anticode_1pt(const Point& z0, int d, Xi xi = Xi::east);
Region centered_anticode_2pt(Model m, const Point& p1, const Point& p2, int d);
Region centered_quadristance_anticode_3pt(const Point& z1, const Point& z2, const Point& z3, int d);

Anticode optimal_anticode(Model m, Kind k, int d);
std::vector<Anticode> optimal_anticode_solutions(Model m, Kind k, int d);

struct AnticodeCheck {
    bool ok = true;
    std::optional<TupleWitness> violation;
};
AnticodeCheck is_anticode(const Region& region, Kind k, int d);

}  // namespace tristance
