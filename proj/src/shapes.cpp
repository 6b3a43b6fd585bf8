#include "tristance/shapes.hpp"

#include <algorithm>
#include <climits>

#include "tristance/error.hpp"

namespace tristance {

// ---- octagons ----

bool OctagonAlpha::contains(const Point& p) const {
    const auto& al = alpha;
    const int s = p.x + p.y, t = p.x - p.y;
    return p.z == 0 && al[0] <= p.x && p.x <= al[4] && al[1] <= p.y && p.y <= al[5] &&
           al[2] <= s && s <= al[6] && al[3] <= t && t <= al[7];
}

OctagonAlpha to_alpha(const OctagonABC& o) {
    return {{0, 0, o.c0, o.c3 - o.b, o.a, o.b, o.a + o.b - o.c2, o.a - o.c1}};
}

bool OctagonABC::contains(const Point& p) const { return to_alpha(*this).contains(p); }

Region enumerate(const OctagonAlpha& o) {
    // x and y are also boxed by the diagonal bounds
    const auto& al = o.alpha;
    const int xlo = std::max(al[0], (al[2] + al[3] + 1) >> 1);
    const int xhi = std::min(al[4], (al[6] + al[7]) >> 1);
    const int ylo = std::max(al[1], (al[2] - al[7] + 1) >> 1);
    const int yhi = std::min(al[5], (al[6] - al[3]) >> 1);
    return enumerate_box(Model::grid2, {xlo, ylo, 0}, {xhi, yhi, 0},
                         [&](const Point& p) { return o.contains(p); });
}

Region enumerate(const OctagonABC& o) { return enumerate(to_alpha(o)); }

std::optional<OctagonABC> normalize(const OctagonAlpha& o) {
    const Region r = enumerate(o);
    if (r.empty()) return std::nullopt;
    int lo[4] = {INT_MAX, INT_MAX, INT_MAX, INT_MAX}, hi[4] = {INT_MIN, INT_MIN, INT_MIN, INT_MIN};
    for (const Point& p : r.points()) {
        const int v[4] = {p.x, p.y, p.x + p.y, p.x - p.y};
        for (int k = 0; k < 4; ++k) {
            lo[k] = std::min(lo[k], v[k]);
            hi[k] = std::max(hi[k], v[k]);
        }
    }
    OctagonABC n;
    n.a = hi[0] - lo[0];
    n.b = hi[1] - lo[1];
    n.c0 = lo[2] - lo[0] - lo[1];
    n.c2 = hi[0] + hi[1] - hi[2];
    n.c1 = hi[0] - hi[3] - lo[1];
    n.c3 = lo[3] - lo[0] + hi[1];
    return n;
}

OctagonABC normalize(const OctagonABC& o) {
    auto n = normalize(to_alpha(o));
    if (!n) throw DomainError("empty-region", "octagon is empty");
    return *n;
}

OctagonAlpha octagon_intersect(const OctagonAlpha& o1, const OctagonAlpha& o2) {
    OctagonAlpha r;
    for (int i = 0; i < 4; ++i) r.alpha[i] = std::max(o1.alpha[i], o2.alpha[i]);
    for (int i = 4; i < 8; ++i) r.alpha[i] = std::min(o1.alpha[i], o2.alpha[i]);
    return r;
}

namespace {

std::int64_t tri(std::int64_t c) { return c * (c + 1) / 2; }

}  // namespace

std::int64_t octagon_size(const OctagonABC& raw) {
    const OctagonABC o = normalize(raw);
    // corner triangles must fit along each side; tight octagons always satisfy this
    const bool disjoint = o.c0 + o.c1 <= o.a && o.c2 + o.c3 <= o.a && o.c1 + o.c2 <= o.b &&
                          o.c0 + o.c3 <= o.b;
    if (!disjoint) return static_cast<std::int64_t>(enumerate(o).size());
    return std::int64_t(o.a + 1) * (o.b + 1) - tri(o.c0) - tri(o.c1) - tri(o.c2) - tri(o.c3);
}

int octagon_tristance_diameter(const OctagonABC& o) {
    if (enumerate(o).empty()) throw DomainError("empty-region", "octagon is empty");
    return o.a + o.b - o.min_corner();
}

int octagon_infinity_diameter(const OctagonABC& o) {
    if (enumerate(o).empty()) throw DomainError("empty-region", "octagon is empty");
    const int m = std::min({o.a + o.c0 + o.c1, o.a + o.c2 + o.c3, o.b + o.c0 + o.c3,
                            o.b + o.c1 + o.c2});
    return o.a + o.b - m / 2;
}

// ---- hexagons ----

bool Hexagon::contains(const Point& p) const {
    const int t = p.x - p.y;
    return p.z == 0 && 0 <= p.x && p.x <= a && 0 <= p.y && p.y <= b && c3 - b <= t && t <= a - c1;
}

Region enumerate(const Hexagon& h) {
    return enumerate_box(Model::hex2, {0, 0, 0}, {h.a, h.b, 0},
                         [&](const Point& p) { return h.contains(p); });
}

Hexagon normalize(const Hexagon& h) {
    const Region r = enumerate(h);
    if (r.empty()) throw DomainError("empty-region", "hexagon is empty");
    const Point lo = r.lower(), hi = r.upper();
    int tlo = INT_MAX, thi = INT_MIN;
    for (const Point& p : r.points()) {
        tlo = std::min(tlo, p.x - p.y);
        thi = std::max(thi, p.x - p.y);
    }
    Hexagon n;
    n.a = hi.x - lo.x;
    n.b = hi.y - lo.y;
    n.c1 = n.a - (thi - lo.x + lo.y);
    n.c3 = (tlo - lo.x + lo.y) + n.b;
    return n;
}

SizeDiameter hexagon_size_and_diameter(const Hexagon& raw) {
    const Hexagon h = normalize(raw);
    return {std::int64_t(h.a + 1) * (h.b + 1) - tri(h.c1) - tri(h.c3),
            h.a + h.b - std::min(h.c1, h.c3)};
}

// ---- icosihexahedra ----

namespace {

struct Facet {
    int s[3];
};

// The 26 nonzero sign vectors in {-1,0,1}^3.
const std::vector<Facet>& facets() {
    static const std::vector<Facet> all = [] {
        std::vector<Facet> f;
        for (int x = -1; x <= 1; ++x)
            for (int y = -1; y <= 1; ++y)
                for (int z = -1; z <= 1; ++z)
                    if (x || y || z) f.push_back({{x, y, z}});
        return f;
    }();
    return all;
}

int bit(int sign) { return sign > 0 ? 1 : 0; }

// Truncation attached to facet s; 0 for the six box faces.
int& truncation(Icosihexahedron& t, const Facet& f) {
    static int zero;
    const int* s = f.s;
    const int nz = (s[0] != 0) + (s[1] != 0) + (s[2] != 0);
    if (nz == 3) return t.theta[bit(s[0])][bit(s[1])][bit(s[2])];
    if (nz == 2) {
        if (!s[2]) return t.e_xy[bit(s[0])][bit(s[1])];
        if (!s[1]) return t.e_xz[bit(s[0])][bit(s[2])];
        return t.e_yz[bit(s[1])][bit(s[2])];
    }
    zero = 0;
    return zero;
}

int truncation(const Icosihexahedron& t, const Facet& f) {
    return truncation(const_cast<Icosihexahedron&>(t), f);
}

int upper_bound(const Icosihexahedron& t, const Facet& f) {
    const int ext[3] = {t.a, t.b, t.c};
    int u = 0;
    for (int k = 0; k < 3; ++k)
        if (f.s[k] > 0) u += ext[k];
    return u - truncation(t, f);
}

}  // namespace

bool Icosihexahedron::contains(const Point& p) const {
    for (const Facet& f : facets())
        if (f.s[0] * p.x + f.s[1] * p.y + f.s[2] * p.z > upper_bound(*this, f)) return false;
    return true;
}

bool Icosihexahedron::uniform() const {
    const int e = e_xy[0][0], th = theta[0][0][0];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (e_xy[i][j] != e || e_xz[i][j] != e || e_yz[i][j] != e) return false;
            for (int k = 0; k < 2; ++k)
                if (theta[i][j][k] != th) return false;
        }
    return true;
}

Icosihexahedron Icosihexahedron::with_uniform(int a, int b, int c, int e, int th) {
    Icosihexahedron s;
    s.a = a;
    s.b = b;
    s.c = c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            s.e_xy[i][j] = s.e_xz[i][j] = s.e_yz[i][j] = e;
            for (int k = 0; k < 2; ++k) s.theta[i][j][k] = th;
        }
    return s;
}

Region enumerate(const Icosihexahedron& s) {
    return enumerate_box(Model::grid3, {0, 0, 0}, {s.a, s.b, s.c},
                         [&](const Point& p) { return s.contains(p); });
}

Icosihexahedron tighten(const Icosihexahedron& s) {
    const Region r = enumerate(s);
    if (r.empty()) throw DomainError("empty-region", "icosihexahedron is empty");
    const Point lo = r.lower(), hi = r.upper();
    Icosihexahedron t;
    t.a = hi.x - lo.x;
    t.b = hi.y - lo.y;
    t.c = hi.z - lo.z;
    for (const Facet& f : facets()) {
        int best = INT_MIN;
        for (const Point& p : r.points()) {
            const Point q = p - lo;
            best = std::max(best, f.s[0] * q.x + f.s[1] * q.y + f.s[2] * q.z);
        }
        const int nz = (f.s[0] != 0) + (f.s[1] != 0) + (f.s[2] != 0);
        if (nz >= 2) truncation(t, f) = upper_bound(t, f) - best;  // upper_bound still has trunc 0
    }
    return t;
}

VolumeResult icosihexahedron_volume(const Icosihexahedron& s) {
    if (s.uniform()) {
        const std::int64_t a = s.a, b = s.b, c = s.c, e = s.e_xy[0][0], th = s.theta[0][0][0];
        const bool in_range = 3 * e <= 2 * th && th <= 2 * e && 2 * e <= std::min({a, b, c});
        const std::int64_t inner = 3 * th * (6 * e - 1) - 9 * e * (3 * e - 1) - (2 * th + 1) * (2 * th - 1);
        if (in_range && (4 * th * inner) % 3 == 0) {
            const std::int64_t v = (a + 1) * (b + 1) * (c + 1) - 2 * e * (e + 1) * (a + b + c + 3) +
                                   24 * e * e * e + 4 * th * inner / 3;
            return {v, true};
        }
    }
    return {static_cast<std::int64_t>(enumerate(s).size()), false};
}

int icosihexahedron_diameter(const Icosihexahedron& i) {
    if (enumerate(i).empty()) throw DomainError("empty-region", "icosihexahedron is empty");
    int s = INT_MAX, t = INT_MAX;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) {
                s = std::min(s, i.e_xy[x][y] + i.e_xz[1 - x][z] + i.e_yz[1 - y][1 - z]);
                const int opposite =
                    std::min({i.e_xy[1 - x][1 - y], i.e_xz[1 - x][1 - z], i.e_yz[1 - y][1 - z]});
                t = std::min(t, opposite + i.theta[x][y][z]);
            }
    return i.a + i.b + i.c - std::min(s, t);
}

// ---- quadristance octagons ----

namespace {

void check_quad(const QuadOctagon& q) {
    if (q.c < 0 || q.b < 2 * q.c || q.a < q.b)
        throw DomainError("constraint", "O(a,b,c) needs a >= b >= 2c >= 0");
}

}  // namespace

int quad_octagon_diameter(const QuadOctagon& q) {
    check_quad(q);
    return q.a + 2 * q.b - 2 * q.c;
}

std::array<Point, 4> quad_octagon_diametric(const QuadOctagon& q) {
    check_quad(q);
    return {Point{0, q.b - q.c, 0}, Point{q.c, 0, 0}, Point{q.a - q.c, q.b, 0}, Point{q.a, q.c, 0}};
}

std::int64_t quad_octagon_size(const QuadOctagon& q) {
    check_quad(q);
    return std::int64_t(q.a + 1) * (q.b + 1) - 2 * tri(q.c) * 2;
}

}  // namespace tristance
