#include "tristance/anticodes.hpp"

#include <algorithm>
#include <cstdlib>

#include "tristance/error.hpp"
#include "tristance/tables.hpp"

namespace tristance {

std::string_view kind_name(Kind k) {
    switch (k) {
        case Kind::distance: return "distance";
        case Kind::tristance: return "tristance";
        case Kind::quadristance: return "quadristance";
    }
    return "?";
}

Kind parse_kind(std::string_view s) {
    if (s == "distance") return Kind::distance;
    if (s == "tristance") return Kind::tristance;
    if (s == "quadristance") return Kind::quadristance;
    throw DomainError("unknown-kind", "unknown kind '" + std::string(s) + "'");
}

int kind_arity(Kind k) { return k == Kind::distance ? 2 : (k == Kind::tristance ? 3 : 4); }

std::string_view exactness_name(Exactness e) {
    switch (e) {
        case Exactness::exact: return "EXACT";
        case Exactness::conjectural: return "CONJECTURAL";
        case Exactness::lower_bound_construction: return "LOWER-BOUND-CONSTRUCTION";
    }
    return "?";
}

Exactness parse_exactness(std::string_view s) {
    if (s == "EXACT") return Exactness::exact;
    if (s == "CONJECTURAL") return Exactness::conjectural;
    if (s == "LOWER-BOUND-CONSTRUCTION") return Exactness::lower_bound_construction;
    throw DomainError("constraint", "unknown exactness '" + std::string(s) + "'");
}

ShapeInfo describe(const OctagonABC& o) {
    return {"octagon", {{"a", o.a}, {"b", o.b}, {"c0", o.c0}, {"c1", o.c1}, {"c2", o.c2}, {"c3", o.c3}}};
}

ShapeInfo describe(const Hexagon& h) {
    return {"hexagon", {{"a", h.a}, {"b", h.b}, {"c1", h.c1}, {"c3", h.c3}}};
}

ShapeInfo describe(const Icosihexahedron& s) {
    return {"icosihexahedron",
            {{"a", s.a}, {"b", s.b}, {"c", s.c}, {"e", s.e_xy[0][0]}, {"theta", s.theta[0][0][0]}}};
}

ShapeInfo describe(const QuadOctagon& q) {
    return {"quad-octagon", {{"a", q.a}, {"b", q.b}, {"c", q.c}}};
}

Region l1_sphere(HalfCenter c, int radius2) {
    const int halves = (c.x2 & 1) + (c.y2 & 1);
    if (radius2 < 0) throw DomainError("constraint", "negative radius");
    if (!((halves == 0 && radius2 % 2 == 0) || (halves == 1 && radius2 % 2 == 1)))
        throw DomainError("parity", "sphere center and radius parities do not match");
    const int r = radius2 / 2 + 1;
    const int cx = c.x2 >> 1, cy = c.y2 >> 1;
    return enumerate_box(Model::grid2, {cx - r, cy - r, 0}, {cx + r, cy + r, 0}, [&](const Point& p) {
        return std::abs(2 * p.x - c.x2) + std::abs(2 * p.y - c.y2) <= radius2;
    });
}

Region optimal_distance_anticode(Model m, int d) {
    if (d < 0) throw DomainError("constraint", "diameter must be nonnegative");
    switch (m) {
        case Model::grid2: return l1_sphere({d % 2, 0}, d);
        case Model::inf2:
            return enumerate_box(Model::inf2, {0, 0, 0}, {d, d, 0}, [](const Point&) { return true; });
        case Model::hex2: {
            const int r = d / 2 + 1;
            if (d % 2 == 0)
                return enumerate_box(Model::hex2, {-r, -r, 0}, {r, r, 0}, [&](const Point& p) {
                    return hex_norm(p.x, p.y) <= d / 2;
                });
            // ball of radius (d+1)/2 about the deep hole (1/3, -1/3), scaled by 6
            const int lim = 3 * (d + 1);
            return enumerate_box(Model::hex2, {-r, -r - 1, 0}, {r + 1, r, 0}, [&](const Point& p) {
                return std::abs(6 * p.x - 2) <= lim && std::abs(6 * p.y + 2) <= lim &&
                       std::abs(6 * (p.x - p.y) - 4) <= lim;
            });
        }
        case Model::grid3: break;
    }
    throw DomainError("unsupported", "no distance anticode construction for grid3");
}

Xi parse_xi(std::string_view s) {
    if (s == "east") return Xi::east;
    if (s == "north") return Xi::north;
    if (s == "west") return Xi::west;
    if (s == "south") return Xi::south;
    throw DomainError("constraint", "xi must be east, north, west or south");
}

HalfCenter shifted(const Point& z0, Xi xi) {
    HalfCenter h = HalfCenter::at(z0);
    switch (xi) {
        case Xi::east: h.x2 += 1; break;
        case Xi::west: h.x2 -= 1; break;
        case Xi::north: h.y2 += 1; break;
        case Xi::south: h.y2 -= 1; break;
    }
    return h;
}

Region centered_anticode_1pt(const Point& z0, int d, Xi xi) {
    if (d < 0) throw DomainError("constraint", "diameter must be nonnegative");
    return d % 2 == 0 ? l1_sphere(HalfCenter::at(z0), d) : l1_sphere(shifted(z0, xi), d);
}

namespace {

// Lattice points within grid-graph distance c of the box [lo, hi] (planar or 3-D).
Region l1_dilated_box(Model m, const Point& lo, const Point& hi, int c) {
    const int dim = model_dim(m);
    Point wlo = lo, whi = hi;
    for (int k = 0; k < dim; ++k) wlo[k] -= c, whi[k] += c;
    return enumerate_box(m, wlo, whi, [&](const Point& p) {
        // every sign vector s: s.p <= max over the box of s.v, plus c
        for (int sx = -1; sx <= 1; ++sx)
            for (int sy = -1; sy <= 1; ++sy)
                for (int sz = (dim == 3 ? -1 : 0); sz <= (dim == 3 ? 1 : 0); ++sz) {
                    const int s[3] = {sx, sy, sz};
                    int lhs = 0, rhs = c;
                    for (int k = 0; k < 3; ++k) {
                        lhs += s[k] * p[k];
                        rhs += s[k] > 0 ? hi[k] : (s[k] < 0 ? -lo[k] : 0);
                    }
                    if (lhs > rhs) return false;
                }
        return true;
    });
}

Point box_min(const Point& a, const Point& b) {
    return {std::min(a.x, b.x), std::min(a.y, b.y), std::min(a.z, b.z)};
}
Point box_max(const Point& a, const Point& b) {
    return {std::max(a.x, b.x), std::max(a.y, b.y), std::max(a.z, b.z)};
}

}  // namespace

Region centered_anticode_2pt(Model m, const Point& p1, const Point& p2, int d) {
    if (m != Model::grid2 && p1 == p2)
        throw DomainError("constraint", "two-center anticode needs distinct centers");
    const int c = d - distance(m, p1, p2);
    if (c < 0) return Region(m, {});
    const Point lo = box_min(p1, p2), hi = box_max(p1, p2);
    switch (m) {
        case Model::grid2:
        case Model::grid3: return l1_dilated_box(m, lo, hi, c);
        case Model::hex2: {
            const int tlo = std::min(p1.x - p1.y, p2.x - p2.y), thi = std::max(p1.x - p1.y, p2.x - p2.y);
            return enumerate_box(m, {lo.x - c, lo.y - c, 0}, {hi.x + c, hi.y + c, 0}, [&](const Point& p) {
                const int t = p.x - p.y;
                return tlo - c <= t && t <= thi + c;
            });
        }
        case Model::inf2: {
            // the grid-graph octagon of the phi-images, dilated by 2c, pulled back
            const Point u1 = phi(p1), u2 = phi(p2);
            const Point ulo = box_min(u1, u2), uhi = box_max(u1, u2);
            const int cc = 2 * c;
            const OctagonAlpha img{{ulo.x - cc, ulo.y - cc, ulo.x + ulo.y - cc, ulo.x - uhi.y - cc,
                                    uhi.x + cc, uhi.y + cc, uhi.x + uhi.y + cc, uhi.x - ulo.y + cc}};
            return enumerate_box(m, {lo.x - d, lo.y - d, 0}, {hi.x + d, hi.y + d, 0},
                                 [&](const Point& p) { return img.contains(phi(p)); });
        }
    }
    return Region(m, {});
}

Region centered_quadristance_anticode_3pt(const Point& z1, const Point& z2, const Point& z3, int d) {
    if (z1 == z2 || z1 == z3 || z2 == z3)
        throw DomainError("constraint", "three-center anticode needs distinct centers");
    const int c = d - tristance(Model::grid2, z1, z2, z3);
    if (c < 0) return Region(Model::grid2, {});
    const Point z[3] = {z1, z2, z3};
    // pairs of bounding rectangles R(z1,z2), R(z1,z3), R(z2,z3) and their intersections
    const int rect[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    const int meet[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    std::vector<OctagonAlpha> octs;
    for (const auto& mp : meet) {
        const auto& r = rect[mp[0]];
        const auto& s = rect[mp[1]];
        const int al = std::max(std::min(z[r[0]].x, z[r[1]].x), std::min(z[s[0]].x, z[s[1]].x));
        const int be = std::min(std::max(z[r[0]].x, z[r[1]].x), std::max(z[s[0]].x, z[s[1]].x));
        const int ga = std::max(std::min(z[r[0]].y, z[r[1]].y), std::min(z[s[0]].y, z[s[1]].y));
        const int de = std::min(std::max(z[r[0]].y, z[r[1]].y), std::max(z[s[0]].y, z[s[1]].y));
        octs.push_back({{al - c, ga - c, al + ga - c, al - de - c, be + c, de + c, be + de + c,
                         be - ga + c}});
    }
    Region out(Model::grid2, {});
    for (const auto& o : octs) out = region_union(out, enumerate(o));
    return out;
}

namespace {

Anticode make(Region r, Kind k, int d, std::optional<ShapeInfo> shape, Exactness ex) {
    Anticode a;
    a.region = std::move(r);
    a.kind = k;
    a.diameter = d;
    a.shape = std::move(shape);
    a.exactness = ex;
    return a;
}

Region as_model(Model m, const Region& r) { return Region(m, r.points()); }

}  // namespace

std::vector<Anticode> optimal_anticode_solutions(Model m, Kind k, int d) {
    std::vector<Anticode> out;
    if (k == Kind::distance) {
        ShapeInfo info;
        if (m == Model::grid2) info = {"l1-sphere", {{"center_x2", d % 2}, {"center_y2", 0}, {"radius2", d}}};
        if (m == Model::inf2) info = {"square", {{"side", d}}};
        if (m == Model::hex2) info = {"hex-sphere", {{"diameter", d}}};
        out.push_back(make(optimal_distance_anticode(m, d), k, d, info, Exactness::exact));
        return out;
    }
    if (d < 1) throw DomainError("constraint", "diameter must be at least 1");
    if (k == Kind::quadristance) {
        if (m != Model::grid2)
            throw DomainError("unsupported", "quadristance anticodes exist only for grid2");
        const QuadOctagon q = grid2_quadristance_shape(d);
        out.push_back(make(enumerate(q.octagon()), k, d, describe(q), Exactness::lower_bound_construction));
        return out;
    }
    switch (m) {
        case Model::grid2:
            for (const auto& o : grid2_tristance_rows(d))
                out.push_back(make(enumerate(o), k, d, describe(o), Exactness::exact));
            break;
        case Model::inf2:
            for (const auto& o : inf2_tristance_rows(d))
                out.push_back(make(as_model(Model::inf2, enumerate(o)), k, d, describe(o), Exactness::exact));
            break;
        case Model::hex2:
            for (const auto& h : hex2_tristance_rows(d))
                out.push_back(make(enumerate(h), k, d, describe(h), Exactness::exact));
            break;
        case Model::grid3: {
            const Icosihexahedron s = grid3_tristance_shape(d);
            out.push_back(make(enumerate(s), k, d, describe(s), Exactness::conjectural));
            break;
        }
    }
    return out;
}

Anticode optimal_anticode(Model m, Kind k, int d) { return optimal_anticode_solutions(m, k, d).front(); }

AnticodeCheck is_anticode(const Region& region, Kind k, int d) {
    AnticodeCheck res;
    res.violation = find_violation(region.model(), kind_arity(k), region, d);
    res.ok = !res.violation.has_value();
    return res;
}

}  // namespace tristance
