#include <cmath>
#include <cstdio>
#include <string>

#include "tristance/document.hpp"

namespace tristance {

namespace {

// One text block per z-slice. Hex rows are sheared by half a cell per row so
// that the three lattice directions read as they would in a drawing.
std::string ascii_slice(const Region& r, const Point& lo, const Point& hi, int z) {
    const bool hex = r.model() == Model::hex2;
    std::string out;
    for (int y = hi.y; y >= lo.y; --y) {
        std::string row(hex ? static_cast<std::size_t>(hi.y - y) : 0, ' ');
        for (int x = lo.x; x <= hi.x; ++x) {
            row += r.contains({x, y, z}) ? '#' : '.';
            if (x < hi.x) row += ' ';
        }
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += row + '\n';
    }
    return out;
}

}  // namespace

std::string render_ascii(const Region& r) {
    if (r.empty()) return "(empty)\n";
    const Point lo = r.lower(), hi = r.upper();
    if (model_dim(r.model()) < 3) return ascii_slice(r, lo, hi, 0);
    std::string out;
    for (int z = lo.z; z <= hi.z; ++z) {
        out += "z=" + std::to_string(z) + "\n";
        out += ascii_slice(r, lo, hi, z);
    }
    return out;
}

std::string render_svg(const Region& r) {
    const double unit = 20.0, rad = 6.0, pad = 20.0;
    const bool hex = r.model() == Model::hex2;
    const int dim = model_dim(r.model());
    Point lo{0, 0, 0}, hi{0, 0, 0};
    if (!r.empty()) lo = r.lower(), hi = r.upper();
    const int slices = dim == 3 ? hi.z - lo.z + 1 : 1;

    // hex lattice point x + wy sits at (x - y/2, y*sqrt(3)/2)
    auto px = [&](int x, int y) { return hex ? (x - lo.x) - 0.5 * (y - lo.y) + 0.5 * (hi.y - lo.y) : double(x - lo.x); };
    auto py = [&](int y) { return (hi.y - y) * (hex ? std::sqrt(3.0) / 2 : 1.0); };
    const double cols = (hi.x - lo.x) + (hex ? 0.5 * (hi.y - lo.y) : 0.0);
    const double slice_w = cols * unit + 2 * pad;
    const double height = py(lo.y) * unit + 2 * pad;
    const double width = slice_w * slices;

    char buf[256];
    std::string out;
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.1f\" height=\"%.1f\" "
                  "viewBox=\"0 0 %.1f %.1f\">\n",
                  width, height, width, height);
    out += buf;
    out += "<style>.lattice{fill:#e4e4e4}.pt{fill:#1f3b73}</style>\n";
    if (r.empty()) return out + "</svg>\n";
    for (int s = 0; s < slices; ++s) {
        const int z = lo.z + s;
        for (int y = lo.y; y <= hi.y; ++y)
            for (int x = lo.x; x <= hi.x; ++x) {
                const bool on = r.contains({x, y, dim == 3 ? z : 0});
                std::snprintf(buf, sizeof buf, "<circle class=\"%s\" cx=\"%.2f\" cy=\"%.2f\" r=\"%.1f\"/>\n",
                              on ? "pt" : "lattice", s * slice_w + pad + px(x, y) * unit, pad + py(y) * unit,
                              on ? rad : rad / 2);
                out += buf;
            }
    }
    return out + "</svg>\n";
}

}  // namespace tristance
