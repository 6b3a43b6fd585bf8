#include "tristance/apps.hpp"

#include <algorithm>

#include "tristance/error.hpp"
#include "tristance/tables.hpp"

namespace tristance {

InterleavingBound interleaving_lower_bound(Model m, int t, int r) {
    if (t < 2) throw DomainError("constraint", "interleaving bound needs t >= 2");
    const std::int64_t tt = t;
    InterleavingBound b;
    if (r == 2) {
        switch (m) {
            case Model::grid2: b.value = ceil_div(tt * (tt + 1), 7); break;
            case Model::hex2: b.value = ceil_div(tt * (tt + 1), 6); break;
            case Model::inf2: b.value = ceil_div(2 * tt * tt - 1, 7); break;
            default: throw DomainError("unsupported", "no interleaving bound for grid3");
        }
        b.anticode_size = static_cast<std::int64_t>(optimal_anticode(m, Kind::tristance, t - 1).region.size());
        return b;
    }
    if (r == 3 && m == Model::grid2) {
        b.value = ceil_div(tt * (tt + 2), 18);
        b.anticode_size = static_cast<std::int64_t>(optimal_anticode(m, Kind::quadristance, t - 1).region.size());
        return b;
    }
    throw DomainError("unsupported", "interleaving bound needs r = 2, or r = 3 with grid2");
}

namespace {

Region clip(const Region& r, int board) {
    std::vector<Point> in;
    for (const Point& p : r.points())
        if (p.x >= 0 && p.y >= 0 && p.x < board && p.y < board) in.push_back(p);
    return Region(Model::grid2, std::move(in));
}

}  // namespace

Anticode go_locus(const GobanState& st) {
    if (st.board_size < 1) throw DomainError("constraint", "board size must be positive");
    if (st.k < 0) throw DomainError("constraint", "k must be nonnegative");
    if (st.stones.size() > 3)
        throw DomainError("unsupported", "loci are only defined for at most three stones");
    for (std::size_t i = 0; i < st.stones.size(); ++i) {
        const Point& s = st.stones[i];
        if (s.x < 0 || s.y < 0 || s.x >= st.board_size || s.y >= st.board_size || s.z != 0)
            throw DomainError("constraint", "stone " + to_string(s, 2) + " is off the board");
        for (std::size_t j = 0; j < i; ++j)
            if (st.stones[j] == s) throw DomainError("constraint", "stones must be distinct");
    }

    Anticode out;
    out.kind = Kind::tristance;
    out.diameter = st.k + 2;
    const auto& z = st.stones;
    switch (z.size()) {
        case 0: {
            Anticode a = optimal_anticode(Model::grid2, Kind::tristance, st.k + 2);
            const Point lo = a.region.lower(), hi = a.region.upper();
            const Point off{(st.board_size - 1 - (hi.x - lo.x)) / 2 - lo.x,
                            (st.board_size - 1 - (hi.y - lo.y)) / 2 - lo.y, 0};
            out = a;
            out.region = a.region.translated(off);
            break;
        }
        case 1: out.region = centered_anticode_1pt(z[0], st.k + 2); break;
        case 2: out.region = centered_anticode_2pt(Model::grid2, z[0], z[1], st.k + 2); break;
        default:
            out.kind = Kind::quadristance;
            out.diameter = st.k + 3;
            out.region = centered_quadristance_anticode_3pt(z[0], z[1], z[2], st.k + 3);
            break;
    }
    out.region = clip(out.region, st.board_size);
    return out;
}

}  // namespace tristance
