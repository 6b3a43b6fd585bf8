#include "tristance/lattice.hpp"

#include <cstdlib>

#include "tristance/error.hpp"

namespace tristance {

std::string_view model_name(Model m) {
    switch (m) {
        case Model::grid2: return "grid2";
        case Model::inf2: return "inf2";
        case Model::hex2: return "hex2";
        case Model::grid3: return "grid3";
    }
    return "?";
}

Model parse_model(std::string_view s) {
    if (s == "grid2") return Model::grid2;
    if (s == "inf2") return Model::inf2;
    if (s == "hex2") return Model::hex2;
    if (s == "grid3") return Model::grid3;
    throw DomainError("unknown-model", "unknown model '" + std::string(s) + "'");
}

std::string to_string(const Point& p, int dim) {
    std::string s = "(" + std::to_string(p.x) + "," + std::to_string(p.y);
    if (dim == 3) s += "," + std::to_string(p.z);
    return s + ")";
}

int distance(Model m, const Point& p, const Point& q) {
    const int dx = p.x - q.x, dy = p.y - q.y;
    switch (m) {
        case Model::grid2: return std::abs(dx) + std::abs(dy);
        case Model::inf2: return std::max(std::abs(dx), std::abs(dy));
        case Model::hex2: return hex_norm(dx, dy);
        case Model::grid3: return std::abs(dx) + std::abs(dy) + std::abs(p.z - q.z);
    }
    return 0;
}

const std::vector<Point>& unit_steps(Model m) {
    static const std::vector<Point> grid2{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
    static const std::vector<Point> inf2{{1, 0, 0},  {-1, 0, 0}, {0, 1, 0},  {0, -1, 0},
                                         {1, 1, 0},  {1, -1, 0}, {-1, 1, 0}, {-1, -1, 0}};
    static const std::vector<Point> hex2{{1, 0, 0},  {-1, 0, 0}, {0, 1, 0},
                                         {0, -1, 0}, {1, 1, 0},  {-1, -1, 0}};
    static const std::vector<Point> grid3{{1, 0, 0},  {-1, 0, 0}, {0, 1, 0},
                                          {0, -1, 0}, {0, 0, 1},  {0, 0, -1}};
    switch (m) {
        case Model::grid2: return grid2;
        case Model::inf2: return inf2;
        case Model::hex2: return hex2;
        case Model::grid3: return grid3;
    }
    return grid2;
}

std::vector<Point> neighbors(Model m, const Point& p) {
    std::vector<Point> out;
    for (const Point& s : unit_steps(m)) out.push_back(p + s);
    return out;
}

Point phi(const Point& p) { return {p.x - p.y, p.x + p.y, 0}; }

Point phi_inverse(const Point& p) {
    if ((p.x + p.y) % 2 != 0)
        throw DomainError("parity", "phi_inverse needs an even coordinate sum, got " + to_string(p, 2));
    return {(p.x + p.y) / 2, (p.y - p.x) / 2, 0};
}

}  // namespace tristance
