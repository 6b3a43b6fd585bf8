#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "tristance/region.hpp"

namespace tristance {

// alpha[0] <= x <= alpha[4], alpha[1] <= y <= alpha[5],
// alpha[2] <= x+y <= alpha[6], alpha[3] <= x-y <= alpha[7]
struct OctagonAlpha {
    std::array<int, 8> alpha{};
    bool contains(const Point& p) const;
    friend bool operator==(const OctagonAlpha&, const OctagonAlpha&) = default;
};

// 0 <= x <= a, 0 <= y <= b, c0 <= x+y <= a+b-c2, c3-b <= x-y <= a-c1.
// Corners: c0 south-west, c1 south-east, c2 north-east, c3 north-west.
struct OctagonABC {
    int a = 0, b = 0, c0 = 0, c1 = 0, c2 = 0, c3 = 0;
    bool contains(const Point& p) const;
    int min_corner() const { return std::min(std::min(c0, c1), std::min(c2, c3)); }
    friend bool operator==(const OctagonABC&, const OctagonABC&) = default;
};

OctagonAlpha to_alpha(const OctagonABC& o);
Region enumerate(const OctagonAlpha& o);
Region enumerate(const OctagonABC& o);

// Tightens every bound to an attained value and translates the lower-left
// box corner to the origin. Empty octagons give nullopt.
std::optional<OctagonABC> normalize(const OctagonAlpha& o);
OctagonABC normalize(const OctagonABC& o);  // throws DomainError("empty-region")

OctagonAlpha octagon_intersect(const OctagonAlpha& o1, const OctagonAlpha& o2);
std::int64_t octagon_size(const OctagonABC& o);
int octagon_tristance_diameter(const OctagonABC& o);
int octagon_infinity_diameter(const OctagonABC& o);

// Eisenstein hexagon: 0 <= x <= a, 0 <= y <= b, c3-b <= x-y <= a-c1.
struct Hexagon {
    int a = 0, b = 0, c1 = 0, c3 = 0;
    bool contains(const Point& p) const;
    friend bool operator==(const Hexagon&, const Hexagon&) = default;
};

Region enumerate(const Hexagon& h);
Hexagon normalize(const Hexagon& h);  // throws DomainError("empty-region")
struct SizeDiameter {
    std::int64_t size = 0;
    int diameter = 0;
};
SizeDiameter hexagon_size_and_diameter(const Hexagon& h);

// Cuboid [0,a]x[0,b]x[0,c] with its 12 edges and 8 vertices cut off.
// Index 1 is the "+" side of an axis (x near a) and 0 the barred side.
struct Icosihexahedron {
    int a = 0, b = 0, c = 0;
    int e_xy[2][2]{}, e_xz[2][2]{}, e_yz[2][2]{};
    int theta[2][2][2]{};

    bool contains(const Point& p) const;
    bool uniform() const;
    static Icosihexahedron with_uniform(int a, int b, int c, int e, int theta);
    friend bool operator==(const Icosihexahedron&, const Icosihexahedron&) = default;
};

Region enumerate(const Icosihexahedron& s);
Icosihexahedron tighten(const Icosihexahedron& s);  // throws DomainError("empty-region")

struct VolumeResult {
    std::int64_t value = 0;
    bool closed_form = true;  // false when the formula's range was left and points were counted
};
VolumeResult icosihexahedron_volume(const Icosihexahedron& s);
int icosihexahedron_diameter(const Icosihexahedron& s);

// O(a, b, c): an octagon with all four corners cut by c.
struct QuadOctagon {
    int a = 0, b = 0, c = 0;
    OctagonABC octagon() const { return {a, b, c, c, c, c}; }
};
int quad_octagon_diameter(const QuadOctagon& q);  // throws DomainError("constraint")
std::array<Point, 4> quad_octagon_diametric(const QuadOctagon& q);
std::int64_t quad_octagon_size(const QuadOctagon& q);

}  // namespace tristance
