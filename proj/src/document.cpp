#include "tristance/document.hpp"

#include <cctype>
#include <json.hpp>
#include <sstream>

#include "tristance/error.hpp"

namespace tristance {

using ojson = nlohmann::ordered_json;

RegionDocument make_document(const Anticode& a) {
    RegionDocument doc;
    const Model m = a.region.model();
    doc.model = model_name(m);
    doc.kind = kind_name(a.kind);
    doc.diameter = a.diameter;
    doc.size = a.region.size();
    for (const Point& p : a.region.points()) {
        if (model_dim(m) == 3)
            doc.points.push_back({p.x, p.y, p.z});
        else
            doc.points.push_back({p.x, p.y});
    }
    doc.shape = a.shape;
    doc.exactness = exactness_name(a.exactness);
    return doc;
}

Region document_region(const RegionDocument& doc) {
    const Model m = parse_model(doc.model);
    std::vector<Point> pts;
    for (const auto& c : doc.points) {
        if (static_cast<int>(c.size()) != model_dim(m))
            throw DomainError("parse", "point arity does not match the model");
        pts.push_back({c[0], c[1], c.size() == 3 ? c[2] : 0});
    }
    return Region(m, std::move(pts));
}

namespace {

ojson to_ojson(const RegionDocument& doc) {
    ojson j;
    j["model"] = doc.model;
    j["kind"] = doc.kind;
    j["diameter"] = doc.diameter;
    j["size"] = doc.size;
    j["points"] = doc.points;
    if (doc.shape) {
        ojson s;
        s["family"] = doc.shape->family;
        for (const auto& [k, v] : doc.shape->params) s[k] = v;
        j["shape"] = s;
    }
    j["exactness"] = doc.exactness;
    return j;
}

}  // namespace

std::string emit(const RegionDocument& doc) { return to_ojson(doc).dump(); }

RegionDocument parse_document(const std::string& text) {
    try {
        const ojson j = ojson::parse(text);
        RegionDocument doc;
        doc.model = j.at("model").get<std::string>();
        doc.kind = j.at("kind").get<std::string>();
        doc.diameter = j.at("diameter").get<int>();
        doc.size = j.at("size").get<std::size_t>();
        doc.points = j.at("points").get<std::vector<std::vector<int>>>();
        if (j.contains("shape")) {
            ShapeInfo s;
            for (const auto& [k, v] : j["shape"].items()) {
                if (k == "family")
                    s.family = v.get<std::string>();
                else
                    s.params.emplace_back(k, v.get<int>());
            }
            doc.shape = s;
        }
        doc.exactness = j.at("exactness").get<std::string>();
        if (doc.size != doc.points.size()) throw DomainError("parse", "size does not match points");
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("parse", std::string("bad region document: ") + e.what());
    }
}

std::string emit(const SearchReport& rep) {
    ojson j;
    j["model"] = model_name(rep.model);
    j["kind"] = kind_name(rep.kind);
    j["diameter"] = rep.diameter;
    j["max_size"] = rep.max_size;
    j["lower_bound_only"] = rep.wall_budget_hit;
    ojson w = ojson::array();
    for (const Region& r : rep.witnesses) {
        ojson pts = ojson::array();
        for (const Point& p : r.points())
            pts.push_back(model_dim(rep.model) == 3 ? std::vector<int>{p.x, p.y, p.z}
                                                    : std::vector<int>{p.x, p.y});
        w.push_back(pts);
    }
    j["witnesses"] = w;
    j["nodes_explored"] = rep.nodes_explored;
    j["wall_budget_hit"] = rep.wall_budget_hit;
    j["seconds"] = rep.seconds;
    return j.dump();
}

std::vector<Point> parse_points(const std::string& text, int dim) {
    std::vector<Point> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ';')) {
        std::vector<int> c;
        std::string num;
        std::stringstream is(item);
        while (std::getline(is, num, ',')) {
            std::size_t used = 0;
            std::size_t b = num.find_first_not_of(" \t"), e = num.find_last_not_of(" \t");
            if (b == std::string::npos) throw DomainError("parse", "empty coordinate in '" + item + "'");
            num = num.substr(b, e - b + 1);
            int v = 0;
            try {
                v = std::stoi(num, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != num.size()) throw DomainError("parse", "bad coordinate '" + num + "'");
            c.push_back(v);
        }
        if (c.empty() && item.find_first_not_of(" \t") == std::string::npos) continue;
        if (static_cast<int>(c.size()) != dim)
            throw DomainError("parse", "point '" + item + "' needs " + std::to_string(dim) + " coordinates");
        out.push_back({c[0], c[1], dim == 3 ? c[2] : 0});
    }
    return out;
}

}  // namespace tristance
