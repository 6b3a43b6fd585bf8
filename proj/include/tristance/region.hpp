#pragma once

#include <span>
#include <vector>

#include "tristance/lattice.hpp"

namespace tristance {

// Finite point set tagged with its model. Points are kept sorted and unique.
class Region {
public:
    Region() = default;
    Region(Model m, std::vector<Point> pts);

    Model model() const { return model_; }
    const std::vector<Point>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    bool contains(const Point& p) const;

    Point lower() const;  // coordinatewise minimum
    Point upper() const;
    Region translated(const Point& offset) const;

    friend bool operator==(const Region& a, const Region& b) {
        return a.model_ == b.model_ && a.points_ == b.points_;
    }

private:
    Model model_ = Model::grid2;
    std::vector<Point> points_;
};

Region region_union(const Region& a, const Region& b);
Region region_intersection(const Region& a, const Region& b);
bool is_subset(const Region& a, const Region& b);

// Enumerates the box [lo, hi] (inclusive) keeping points where keep(p) holds.
template <class Pred>
Region enumerate_box(Model m, Point lo, Point hi, Pred keep) {
    std::vector<Point> pts;
    if (is_planar(m)) lo.z = hi.z = 0;
    for (int x = lo.x; x <= hi.x; ++x)
        for (int y = lo.y; y <= hi.y; ++y)
            for (int z = lo.z; z <= hi.z; ++z) {
                Point p{x, y, z};
                if (keep(p)) pts.push_back(p);
            }
    return Region(m, std::move(pts));
}

}  // namespace tristance
