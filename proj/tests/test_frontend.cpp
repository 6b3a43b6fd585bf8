#include <doctest.h>

#include <httplib.h>

#include <algorithm>
#include <sstream>
#include <thread>

#include "tristance/apps.hpp"
#include "tristance/cli.hpp"
#include "tristance/document.hpp"
#include "tristance/error.hpp"
#include "tristance/service.hpp"

namespace tristance {

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult cli(std::vector<const char*> args) {
    args.insert(args.begin(), "tristance");
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + needle.size())) ++n;
    return n;
}

}  // namespace

TEST_CASE("region documents round-trip") {
    for (const Anticode& a : {optimal_anticode(Model::grid2, Kind::tristance, 7),
                              optimal_anticode(Model::hex2, Kind::tristance, 4),
                              optimal_anticode(Model::grid3, Kind::tristance, 5),
                              optimal_anticode(Model::grid2, Kind::quadristance, 6),
                              go_locus({19, {{9, 9}}, 2})}) {
        const RegionDocument doc = make_document(a);
        CHECK(doc.size == doc.points.size());
        CHECK(std::is_sorted(doc.points.begin(), doc.points.end()));
        const std::string text = emit(doc);
        CHECK(parse_document(text) == doc);
        CHECK(emit(parse_document(text)) == text);
        CHECK(document_region(doc) == a.region);
    }
    const std::string t = emit(make_document(optimal_anticode(Model::grid2, Kind::tristance, 2)));
    CHECK(t.rfind(R"({"model":"grid2","kind":"tristance","diameter":2,"size":4,"points":)", 0) == 0);
    CHECK(t.find(R"("exactness":"EXACT")") != std::string::npos);
    CHECK_THROWS_AS(parse_document("{"), DomainError);
    CHECK_THROWS_AS(parse_document(R"({"model":"grid2","kind":"tristance","diameter":1,"size":2,"points":[[0,0]],"exactness":"EXACT"})"),
                    DomainError);
}

TEST_CASE("point lists") {
    CHECK(parse_points("0,0;1,-2", 2) == std::vector<Point>{{0, 0}, {1, -2}});
    CHECK(parse_points("1,2,3", 3) == std::vector<Point>{{1, 2, 3}});
    CHECK(parse_points("", 2).empty());
    CHECK_THROWS_AS(parse_points("1,2,3", 2), DomainError);
    CHECK_THROWS_AS(parse_points("1,x", 2), DomainError);
}

TEST_CASE("renderings mark one cell per point") {
    for (Model m : {Model::grid2, Model::inf2, Model::hex2, Model::grid3}) {
        const Region r = optimal_anticode(m, Kind::tristance, 5).region;
        const std::string a = render_ascii(r), s = render_svg(r);
        INFO(model_name(m));
        CHECK(static_cast<std::size_t>(std::count(a.begin(), a.end(), '#')) == r.size());
        CHECK(count(s, R"(class="pt")") == r.size());
    }
    CHECK(render_ascii(l1_sphere({0, 0}, 2)) == ". # .\n# # #\n. # .\n");
}

TEST_CASE("api endpoints") {
    const auto locus = handle_api("/api/locus", {{"stones", "9,9"}, {"k", "2"}});
    CHECK(locus.status == 200);
    CHECK(parse_document(locus.body).size == 13);
    const auto disp = handle_api("/api/dispersion", {{"model", "hex2"}, {"points", "0,0;2,0;0,2"}});
    CHECK(disp.status == 200);
    CHECK(disp.body == R"({"value":4})");
    CHECK(handle_api("/api/dispersion", {{"model", "hex2"}, {"points", "0,0;2,0;0,2"}, {"oracle", "1"}}).body ==
          R"({"value":4})");
    CHECK(handle_api("/api/dispersion", {{"model", "hex2"}, {"points", "0,0;2,0;0,2;1,3"}}).status == 200);
    const auto anti = handle_api("/api/anticode", {{"model", "inf2"}, {"kind", "tristance"}, {"d", "2"}});
    CHECK(parse_document(anti.body).size == 5);

    const auto bad = handle_api("/api/anticode", {{"model", "torus"}, {"d", "2"}});
    CHECK(bad.status == 400);
    CHECK(bad.body.find(R"("error":"unknown-model")") != std::string::npos);
    CHECK(handle_api("/api/anticode", {{"model", "grid2"}}).body.find("missing-parameter") != std::string::npos);
    CHECK(handle_api("/api/anticode", {{"model", "grid2"}, {"d", "x"}}).status == 400);
    CHECK(handle_api("/api/locus", {{"stones", "0,0;1,0;2,0;3,0"}}).status == 400);
    CHECK(handle_api("/api/nothing", {}).status == 404);
}

TEST_CASE("http server matches the cli byte for byte") {
    ServeOptions opt;
    opt.port = 0;
    ApiServer server(opt);
    const int port = server.bind();
    REQUIRE(port > 0);
    std::thread t([&] { server.run(); });
    httplib::Client c("127.0.0.1", port);
    c.set_connection_timeout(5);

    auto r = c.Get("/api/locus?stones=9,9&k=2");
    REQUIRE(r);
    CHECK(r->status == 200);
    CHECK(r->get_header_value("Access-Control-Allow-Origin") == "*");
    CHECK(r->get_header_value("Content-Type") == "application/json");
    CHECK(r->body + "\n" == cli({"go-locus", "--stones", "9,9", "--k", "2"}).out);

    r = c.Get("/api/anticode?model=grid2&kind=tristance&d=7");
    REQUIRE(r);
    CHECK(r->body + "\n" == cli({"anticode", "--model", "grid2", "--kind", "tristance", "-d", "7", "--format", "json"}).out);

    r = c.Get("/api/dispersion?model=hex2&points=0,0;2,0;0,2");
    REQUIRE(r);
    CHECK(r->body == R"({"value":4})");

    r = c.Get("/api/anticode?model=grid2&kind=pentastance&d=3");
    REQUIRE(r);
    CHECK(r->status == 400);
    CHECK(r->body.find("unknown-kind") != std::string::npos);

    r = c.Get("/elsewhere");
    REQUIRE(r);
    CHECK(r->status == 404);
    CHECK(r->body.find("not-found") != std::string::npos);

    server.stop();
    t.join();
}

TEST_CASE("cli commands and exit codes") {
    auto r = cli({"dispersion", "--model", "grid2", "--points", "0,0;1,0;0,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");
    r = cli({"dispersion", "--model", "hex2", "--points", "0,0;2,0;0,2", "--oracle"});
    CHECK(r.code == 0);
    CHECK(r.out == "4\nclosed-form 4 agree\n");
    r = cli({"anticode", "--model", "grid2", "--kind", "tristance", "--diameter", "7", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(parse_document(r.out).size == 21);
    r = cli({"anticode", "--model", "grid2", "--kind", "tristance", "--diameter", "5", "--all"});
    CHECK(r.code == 0);
    r = cli({"centered", "--model", "inf2", "--centers", "0,0;2,0", "-d", "2"});
    CHECK(r.code == 0);
    CHECK(parse_document(r.out).size == 5);
    r = cli({"verify-tables", "--table", "3", "--max-d", "20"});
    CHECK(r.code == 0);
    CHECK(count(r.out, "PASS") == 20);
    CHECK(count(r.out, "FAIL") == 0);
    r = cli({"search", "--model", "grid2", "--kind", "quadristance", "-d", "3", "--witnesses"});
    CHECK(r.code == 0);
    CHECK(r.out.find(R"("max_size":4)") != std::string::npos);
    r = cli({"bound", "--model", "grid2", "--t", "8", "--r", "2"});
    CHECK(r.out == "11\n");

    CHECK(cli({"dispersion", "--model", "grid2", "--points", "0,0;1"}).code == 2);
    CHECK(cli({"dispersion", "--model", "torus", "--points", "0,0"}).code == 2);
    CHECK(cli({"anticode", "--model", "grid2", "--kind", "pentastance", "-d", "3"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({}).code == 2);
    auto e = cli({"go-locus", "--stones", "0,0;1,0;2,0;3,0"});
    CHECK(e.code == 1);
    CHECK(!e.err.empty());
    CHECK(std::count(e.err.begin(), e.err.end(), '\n') == 1);
    CHECK(cli({"anticode", "--model", "hex2", "--kind", "quadristance", "-d", "3"}).code == 1);
}

}  // namespace tristance
