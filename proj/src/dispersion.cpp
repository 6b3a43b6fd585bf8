#include "tristance/dispersion.hpp"

#include <algorithm>
#include <set>

#include "tristance/error.hpp"

namespace tristance {

namespace {

int span3(int a, int b, int c) { return std::max({a, b, c}) - std::min({a, b, c}); }

int mid3(int a, int b, int c) { return std::max(std::min(a, b), std::min(std::max(a, b), c)); }

int grid2_tristance(const Point& a, const Point& b, const Point& c) {
    return span3(a.x, b.x, c.x) + span3(a.y, b.y, c.y);
}

}  // namespace

int tristance(Model m, const Point& a, const Point& b, const Point& c) {
    switch (m) {
        case Model::grid2: return grid2_tristance(a, b, c);
        case Model::grid3: return grid2_tristance(a, b, c) + span3(a.z, b.z, c.z);
        case Model::inf2: return (grid2_tristance(phi(a), phi(b), phi(c)) + 1) / 2;
        case Model::hex2: {
            // hub at the coordinatewise median; each term is a hex distance to it
            const int xm = mid3(a.x, b.x, c.x), ym = mid3(a.y, b.y, c.y);
            return hex_norm(a.x - xm, a.y - ym) + hex_norm(b.x - xm, b.y - ym) +
                   hex_norm(c.x - xm, c.y - ym);
        }
    }
    return 0;
}

const std::vector<std::array<int, 4>>& quadristance_group() {
    static const std::vector<std::array<int, 4>> group = [] {
        using Perm = std::array<int, 4>;
        const Perm gens[] = {{1, 0, 2, 3}, {0, 1, 3, 2}, {2, 3, 0, 1}};
        std::set<Perm> g{{0, 1, 2, 3}};
        for (bool grew = true; grew;) {
            grew = false;
            for (Perm a : std::vector<Perm>(g.begin(), g.end()))
                for (const Perm& b : gens) {
                    Perm ab;
                    for (int i = 0; i < 4; ++i) ab[i] = a[b[i]];
                    grew |= g.insert(ab).second;
                }
        }
        return std::vector<Perm>(g.begin(), g.end());
    }();
    return group;
}

int quadristance(const Point& a, const Point& b, const Point& c, const Point& d) {
    const Point z[4] = {a, b, c, d};
    std::array<int, 4> s{0, 1, 2, 3}, t{0, 1, 2, 3};
    std::stable_sort(s.begin(), s.end(), [&](int i, int j) { return z[i].x < z[j].x; });
    std::stable_sort(t.begin(), t.end(), [&](int i, int j) { return z[i].y < z[j].y; });
    // One stable sort suffices: swapping tied ranks 1,2 or 3,4 stays inside the
    // group, and a tie between ranks 2,3 zeroes the correction term.
    std::array<int, 4> xrank{}, rank{};
    for (int r = 0; r < 4; ++r) xrank[s[r]] = r;
    for (int j = 0; j < 4; ++j) rank[j] = xrank[t[j]];
    int value = (z[s[3]].x - z[s[0]].x) + (z[t[3]].y - z[t[0]].y);
    const auto& g = quadristance_group();
    if (!std::binary_search(g.begin(), g.end(), rank))
        value += std::min(z[s[2]].x - z[s[1]].x, z[t[2]].y - z[t[1]].y);
    return value;
}

bool has_closed_form(Model m, std::size_t r) {
    return r <= 3 || (r == 4 && m == Model::grid2);
}

int dispersion(Model m, std::span<const Point> p) {
    switch (p.size()) {
        case 0:
        case 1: return 0;
        case 2: return distance(m, p[0], p[1]);
        case 3: return tristance(m, p[0], p[1], p[2]);
        case 4:
            if (m == Model::grid2) return quadristance(p[0], p[1], p[2], p[3]);
            break;
        default: break;
    }
    throw DomainError("unsupported", "no closed form for r=" + std::to_string(p.size()) + " in " +
                                         std::string(model_name(m)));
}

namespace {

// Visits every r-multiset of indices i1 <= i2 <= ... until f returns false.
template <class F>
void for_each_multiset(int n, int r, F&& f) {
    switch (r) {
        case 1:
            for (int i = 0; i < n; ++i)
                if (!f(i, i, i, i)) return;
            return;
        case 2:
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j)
                    if (!f(i, j, j, j)) return;
            return;
        case 3:
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j)
                    for (int k = j; k < n; ++k)
                        if (!f(i, j, k, k)) return;
            return;
        case 4:
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j)
                    for (int k = j; k < n; ++k)
                        for (int l = k; l < n; ++l)
                            if (!f(i, j, k, l)) return;
            return;
    }
    throw DomainError("unsupported", "diameter needs 1 <= r <= 4");
}

void check_diameter_args(Model m, int r, const Region& region) {
    if (region.empty()) throw DomainError("empty-region", "diameter of an empty region");
    if (r < 1 || r > 4 || !has_closed_form(m, r))
        throw DomainError("unsupported", "no closed-form " + std::to_string(r) + "-dispersion in " +
                                             std::string(model_name(m)));
}

}  // namespace

TupleWitness diameter_witness(Model m, int r, const Region& region) {
    check_diameter_args(m, r, region);
    const auto& p = region.points();
    TupleWitness best{{p[0]}, 0};
    best.points.assign(r, p[0]);
    for_each_multiset(static_cast<int>(p.size()), r, [&](int i, int j, int k, int l) {
        const Point t[4] = {p[i], p[j], p[k], p[l]};
        const int v = dispersion(m, std::span<const Point>(t, r));
        if (v > best.value) best = {std::vector<Point>(t, t + r), v};
        return true;
    });
    return best;
}

int dispersion_diameter(Model m, int r, const Region& region) {
    return diameter_witness(m, r, region).value;
}

std::optional<TupleWitness> find_violation(Model m, int r, const Region& region, int d) {
    if (region.empty()) return std::nullopt;
    check_diameter_args(m, r, region);
    const auto& p = region.points();
    std::optional<TupleWitness> bad;
    for_each_multiset(static_cast<int>(p.size()), r, [&](int i, int j, int k, int l) {
        const Point t[4] = {p[i], p[j], p[k], p[l]};
        const int v = dispersion(m, std::span<const Point>(t, r));
        if (v > d) {
            bad = TupleWitness{std::vector<Point>(t, t + r), v};
            return false;
        }
        return true;
    });
    return bad;
}

}  // namespace tristance
