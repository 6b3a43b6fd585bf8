#include "tristance/service.hpp"

#include <httplib.h>

#include <json.hpp>

#include "tristance/apps.hpp"
#include "tristance/document.hpp"
#include "tristance/error.hpp"

namespace tristance {

namespace {

std::string param(const QueryParams& p, const std::string& key, const std::string& fallback = {}) {
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

std::string required(const QueryParams& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw DomainError("missing-parameter", "missing query parameter '" + key + "'");
    return it->second;
}

int to_int(const std::string& s, const std::string& key) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (s.empty() || used != s.size()) throw DomainError("parse", "parameter '" + key + "' must be an integer");
    return v;
}

std::string error_body(const std::string& code, const std::string& message) {
    return nlohmann::ordered_json{{"error", code}, {"message", message}}.dump();
}

ApiResponse locus(const QueryParams& p) {
    GobanState st;
    st.stones = parse_points(param(p, "stones"), 2);
    st.k = to_int(param(p, "k", "0"), "k");
    st.board_size = to_int(param(p, "board", "19"), "board");
    return {200, emit(make_document(go_locus(st)))};
}

ApiResponse anticode(const QueryParams& p) {
    const Model m = parse_model(required(p, "model"));
    const Kind k = parse_kind(param(p, "kind", "tristance"));
    const int d = to_int(required(p, "d"), "d");
    return {200, emit(make_document(optimal_anticode(m, k, d)))};
}

ApiResponse dispersion_value(const QueryParams& p) {
    const Model m = parse_model(required(p, "model"));
    const auto pts = parse_points(required(p, "points"), model_dim(m));
    if (pts.empty()) throw DomainError("parse", "no points given");
    const bool oracle = param(p, "oracle") == "1" || param(p, "oracle") == "true";
    const int v = (oracle || !has_closed_form(m, pts.size())) ? steiner_oracle(m, pts) : dispersion(m, pts);
    return {200, nlohmann::ordered_json{{"value", v}}.dump()};
}

}  // namespace

ApiResponse handle_api(const std::string& path, const QueryParams& params) {
    try {
        if (path == "/api/locus") return locus(params);
        if (path == "/api/anticode") return anticode(params);
        if (path == "/api/dispersion") return dispersion_value(params);
        return {404, error_body("not-found", "no endpoint " + path)};
    } catch (const DomainError& e) {
        return {400, error_body(e.code(), e.what())};
    }
}

struct ApiServer::Impl {
    ServeOptions opt;
    httplib::Server srv;
};

ApiServer::ApiServer(ServeOptions opt) : impl_(std::make_unique<Impl>()) {
    impl_->opt = std::move(opt);
    auto& srv = impl_->srv;
    auto api = [](const httplib::Request& req, httplib::Response& res) {
        QueryParams q(req.params.begin(), req.params.end());
        const ApiResponse r = handle_api(req.path, q);
        res.status = r.status;
        res.set_content(r.body, "application/json");
    };
    srv.Get(R"(/api/.*)", api);
    if (!impl_->opt.static_dir.empty()) srv.set_mount_point("/", impl_->opt.static_dir);
    srv.set_post_routing_handler([](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Origin", "*");
    });
    srv.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
        if (res.status == 404 && res.body.empty())
            res.set_content(error_body("not-found", "no endpoint " + req.path), "application/json");
    });
}

ApiServer::~ApiServer() = default;

int ApiServer::bind() {
    if (impl_->opt.port == 0) return impl_->srv.bind_to_any_port(impl_->opt.host);
    return impl_->srv.bind_to_port(impl_->opt.host, impl_->opt.port) ? impl_->opt.port : -1;
}

void ApiServer::run() { impl_->srv.listen_after_bind(); }

void ApiServer::stop() { impl_->srv.stop(); }

bool serve(const ServeOptions& opt) {
    ApiServer s(opt);
    if (s.bind() < 0) return false;
    s.run();
    return true;
}

}  // namespace tristance
