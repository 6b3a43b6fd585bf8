#include "tristance/region.hpp"

#include <algorithm>
#include <climits>

#include "tristance/error.hpp"

namespace tristance {

Region::Region(Model m, std::vector<Point> pts) : model_(m), points_(std::move(pts)) {
    if (is_planar(m))
        for (const Point& p : points_)
            if (p.z != 0) throw DomainError("constraint", "planar region with nonzero z");
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool Region::contains(const Point& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

Point Region::lower() const {
    if (points_.empty()) throw DomainError("empty-region", "empty region has no bounds");
    Point lo{INT_MAX, INT_MAX, INT_MAX};
    for (const Point& p : points_)
        for (int k = 0; k < 3; ++k) lo[k] = std::min(lo[k], p[k]);
    return lo;
}

Point Region::upper() const {
    if (points_.empty()) throw DomainError("empty-region", "empty region has no bounds");
    Point hi{INT_MIN, INT_MIN, INT_MIN};
    for (const Point& p : points_)
        for (int k = 0; k < 3; ++k) hi[k] = std::max(hi[k], p[k]);
    return hi;
}

Region Region::translated(const Point& offset) const {
    std::vector<Point> pts;
    pts.reserve(points_.size());
    for (const Point& p : points_) pts.push_back(p + offset);
    return Region(model_, std::move(pts));
}

Region region_union(const Region& a, const Region& b) {
    std::vector<Point> pts;
    std::set_union(a.points().begin(), a.points().end(), b.points().begin(), b.points().end(),
                   std::back_inserter(pts));
    return Region(a.model(), std::move(pts));
}

Region region_intersection(const Region& a, const Region& b) {
    std::vector<Point> pts;
    std::set_intersection(a.points().begin(), a.points().end(), b.points().begin(),
                          b.points().end(), std::back_inserter(pts));
    return Region(a.model(), std::move(pts));
}

bool is_subset(const Region& a, const Region& b) {
    return std::includes(b.points().begin(), b.points().end(), a.points().begin(), a.points().end());
}

}  // namespace tristance
