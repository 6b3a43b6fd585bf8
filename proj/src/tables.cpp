#include "tristance/tables.hpp"

#include <algorithm>
#include <cmath>

#include "tristance/error.hpp"

namespace tristance {

std::int64_t ceil_div(std::int64_t n, std::int64_t m) { return (n + m - 1) / m; }

namespace {

void need_positive(int d) {
    if (d < 1) throw DomainError("constraint", "table rows start at diameter 1");
}

// exact division; rows are only ever evaluated inside their residue class
int q(int num, int den) {
    if (num % den != 0 || num < 0)
        throw DomainError("constraint", "table row evaluated outside its residue class");
    return num / den;
}

OctagonABC uniform_octagon(int a, int b, int c) { return {a, b, c, c, c, c}; }

}  // namespace

std::vector<OctagonABC> grid2_tristance_rows(int d) {
    need_positive(d);
    switch (d % 7) {
        case 0: return {uniform_octagon(q(4 * d, 7), q(4 * d, 7), q(d, 7))};
        case 1: return {uniform_octagon(q(4 * d + 3, 7), q(4 * d - 4, 7), q(d - 1, 7))};
        case 2: return {uniform_octagon(q(4 * d - 1, 7), q(4 * d - 1, 7), q(d - 2, 7))};
        case 3: return {uniform_octagon(q(4 * d + 2, 7), q(4 * d - 5, 7), q(d - 3, 7))};
        case 4: return {uniform_octagon(q(4 * d - 2, 7), q(4 * d - 2, 7), q(d - 4, 7))};
        case 5:
            return {uniform_octagon(q(4 * d + 1, 7), q(4 * d + 1, 7), q(d + 2, 7)),
                    uniform_octagon(q(4 * d + 1, 7), q(4 * d - 6, 7), q(d - 5, 7))};
        default:
            return {uniform_octagon(q(4 * d - 3, 7), q(4 * d - 3, 7), q(d - 6, 7)),
                    uniform_octagon(q(4 * d + 4, 7), q(4 * d - 3, 7), q(d + 1, 7))};
    }
}

std::int64_t grid2_tristance_size_column(int d) {
    static const int k[7] = {7, 6, 8, 6, 7, 4, 4};
    const std::int64_t n = 2 * std::int64_t(d) * d + 6 * d + k[d % 7];
    return n / 7;
}

std::vector<OctagonABC> inf2_tristance_rows(int d) {
    need_positive(d);
    int a, c0, c1;
    switch (d % 7) {
        case 0: a = q(6 * d, 7), c0 = q(2 * d, 7), c1 = q(2 * d, 7); break;
        case 1: a = q(6 * d + 1, 7), c0 = q(2 * d - 2, 7), c1 = q(2 * d + 5, 7); break;
        case 2: a = q(6 * d + 2, 7), c0 = q(2 * d + 3, 7), c1 = q(2 * d + 3, 7); break;
        case 3: a = q(6 * d - 4, 7), c0 = q(2 * d - 6, 7), c1 = q(2 * d - 6, 7); break;
        case 4: a = q(6 * d - 3, 7), c0 = q(2 * d - 8, 7), c1 = q(2 * d - 1, 7); break;
        case 5: a = q(6 * d - 2, 7), c0 = q(2 * d - 3, 7), c1 = q(2 * d - 3, 7); break;
        default: a = q(6 * d - 1, 7), c0 = q(2 * d - 5, 7), c1 = q(2 * d + 2, 7); break;
    }
    return {OctagonABC{a, a, c0, c1, c0, c1}};
}

std::int64_t inf2_tristance_size_column(int d) {
    static const int k[7] = {7, 2, 3, 3, 2, 7, 4};
    return (4 * std::int64_t(d) * d + 8 * d + k[d % 7]) / 7;
}

std::vector<Hexagon> hex2_tristance_rows(int d) {
    need_positive(d);
    auto h = [](int a, int b, int c) { return Hexagon{a, b, c, c}; };
    switch (d % 3) {
        case 0: return {h(q(2 * d, 3), q(2 * d, 3), q(d, 3))};
        case 1:
            return {h(q(2 * d + 1, 3), q(2 * d + 1, 3), q(d + 2, 3)),
                    h(q(2 * d + 1, 3), q(2 * d - 2, 3), q(d - 1, 3))};
        default:
            return {h(q(2 * d - 1, 3), q(2 * d - 1, 3), q(d - 2, 3)),
                    h(q(2 * d + 2, 3), q(2 * d - 1, 3), q(d + 1, 3))};
    }
}

std::int64_t hex2_tristance_size_column(int d) {
    return (std::int64_t(d) * d + 3 * d + (d % 3 == 0 ? 3 : 2)) / 3;
}

std::int64_t grid2_tristance_optimum(int d) { return ceil_div(2 * std::int64_t(d + 1) * (d + 2), 7); }
std::int64_t inf2_tristance_optimum(int d) { return ceil_div(4 * std::int64_t(d) * d + 8 * d + 2, 7); }
std::int64_t hex2_tristance_optimum(int d) { return ceil_div(std::int64_t(d + 1) * (d + 2), 3); }
std::int64_t grid2_quadristance_bound(int d) { return ceil_div(std::int64_t(d + 1) * (d + 3), 6); }

namespace {

Icosihexahedron grid3_row(int d, int e) {
    int a, b, c;
    switch (d % 3) {
        case 0: a = b = c = d / 3; break;
        case 1: a = (d + 2) / 3, b = c = (d - 1) / 3; break;
        default: a = b = (d + 1) / 3, c = (d - 2) / 3; break;
    }
    return Icosihexahedron::with_uniform(a + e, b + e, c + e, e, 2 * e);
}

}  // namespace

Grid3Choice grid3_edge_choice(int d) {
    need_positive(d);
    // mu = (d+1) - sqrt(N/3) with N = 2(d+1)(d+2), plus 1 off the d = 0 mod 3 class
    const std::int64_t n = 2 * std::int64_t(d + 1) * (d + 2) + (d % 3 ? 1 : 0);
    std::int64_t fl = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n) / 3.0));
    while (3 * fl * fl > n) --fl;
    while (3 * (fl + 1) * (fl + 1) <= n) ++fl;
    // nearest integer to sqrt(N/3): m with 3(2m-1)^2 <= 4N < 3(2m+1)^2
    std::int64_t m = fl;
    if (3 * (2 * m + 1) * (2 * m + 1) <= 4 * n) ++m;

    Grid3Choice ch;
    const bool perfect = 3 * fl * fl == n;
    ch.e_ceil = static_cast<int>(d + 1 - fl);
    ch.e_floor = perfect ? ch.e_ceil : ch.e_ceil - 1;
    ch.e_rounded = static_cast<int>(d + 1 - m);

    std::int64_t best = -1;
    ch.e = -1;
    for (int e : {ch.e_rounded, ch.e_floor, ch.e_ceil}) {
        if (e < 0) continue;
        const Icosihexahedron s = grid3_row(d, e);
        if (2 * e > std::min({s.a, s.b, s.c})) continue;
        if (icosihexahedron_diameter(s) != d) continue;
        const VolumeResult v = icosihexahedron_volume(s);
        // strict comparison keeps the rounded choice on ties
        if (v.value > best) best = v.value, ch.e = e;
    }
    if (ch.e < 0) throw DomainError("constraint", "no admissible edge truncation for d=" + std::to_string(d));
    return ch;
}

Icosihexahedron grid3_tristance_shape(int d) { return grid3_row(d, grid3_edge_choice(d).e); }

QuadOctagon grid2_quadristance_shape(int d) {
    need_positive(d);
    QuadOctagon best{d, 0, 0};
    std::int64_t best_size = -1;
    for (int c = 0; 4 * c <= d; ++c)
        for (int b = 2 * c; 3 * b <= d + 2 * c; ++b) {
            const QuadOctagon cand{d - 2 * b + 2 * c, b, c};
            const std::int64_t s = quad_octagon_size(cand);
            // ties: smallest c first (outer loop), then the largest b
            if (s > best_size || (s == best_size && c == best.c))
                best = cand, best_size = s;
        }
    return best;
}

}  // namespace tristance
