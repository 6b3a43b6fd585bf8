#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tristance/anticodes.hpp"
#include "tristance/search.hpp"

namespace tristance {

struct RegionDocument {
    std::string model;
    std::string kind;
    int diameter = 0;
    std::size_t size = 0;
    std::vector<std::vector<int>> points;  // sorted lexicographically
    std::optional<ShapeInfo> shape;
    std::string exactness = "EXACT";
    friend bool operator==(const RegionDocument&, const RegionDocument&) = default;
};

RegionDocument make_document(const Anticode& a);
Region document_region(const RegionDocument& doc);

// Compact JSON, keys in a fixed order; identical inputs give identical bytes.
std::string emit(const RegionDocument& doc);
RegionDocument parse_document(const std::string& text);  // throws DomainError("parse")

std::string emit(const SearchReport& rep);

// "x1,y1;x2,y2;..." (three coordinates per point for grid3)
std::vector<Point> parse_points(const std::string& text, int dim);

// Renderings mark exactly one cell per region point.
std::string render_ascii(const Region& r);
std::string render_svg(const Region& r);

}  // namespace tristance
