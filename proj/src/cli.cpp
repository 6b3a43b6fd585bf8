#include "tristance/cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <sstream>

#include "tristance/apps.hpp"
#include "tristance/document.hpp"
#include "tristance/error.hpp"
#include "tristance/service.hpp"
#include "tristance/tables.hpp"

namespace tristance {

namespace {

std::string fmt_shape(const ShapeInfo& s) {
    std::string out = s.family + "(";
    for (std::size_t i = 0; i < s.params.size(); ++i) out += (i ? "," : "") + std::to_string(s.params[i].second);
    return out + ")";
}

struct Checker {
    bool pass = true;
    std::string notes;
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes += " mismatch:" + what;
        }
    }
};

VerifyLine finish(int table, int d, const Checker& c, const std::string& detail) {
    return {c.pass, d,
            std::string(c.pass ? "PASS" : "FAIL") + " table=" + std::to_string(table) + " d=" + std::to_string(d) +
                " " + detail + c.notes};
}

void search_check(Checker& c, std::string& detail, Model m, Kind k, int d, std::int64_t expected) {
    const SearchReport rep = max_anticode(m, k, d);
    detail += " search=" + std::to_string(rep.max_size);
    c.expect(!rep.wall_budget_hit && rep.max_size == expected, "search");
}

}  // namespace

int default_search_limit(int table) {
    switch (table) {
        case 1: return 5;
        case 2: return 3;
        case 3: return 4;
        case 4: return 3;
        default: return 4;
    }
}

std::vector<VerifyLine> verify_table(int table, int max_d, int search_max_d) {
    if (table < 1 || table > 5) throw DomainError("constraint", "tables are numbered 1 to 5");
    if (search_max_d < 0) search_max_d = default_search_limit(table);
    std::vector<VerifyLine> lines;
    // brute-force diameter checks stay cheap up to these diameters
    const int brute_limit = table == 4 ? 6 : (table == 5 ? 9 : 14);
    for (int d = 1; d <= max_d; ++d) {
        Checker c;
        std::string detail;
        switch (table) {
            case 1:
            case 2: {
                const Model m = table == 1 ? Model::grid2 : Model::inf2;
                const auto rows = table == 1 ? grid2_tristance_rows(d) : inf2_tristance_rows(d);
                const std::int64_t column = table == 1 ? grid2_tristance_size_column(d) : inf2_tristance_size_column(d);
                const std::int64_t optimum = table == 1 ? grid2_tristance_optimum(d) : inf2_tristance_optimum(d);
                for (const auto& o : rows) {
                    detail += fmt_shape(describe(o)) + " ";
                    const Region r(m, enumerate(o).points());
                    c.expect(octagon_size(o) == column, "size-formula");
                    c.expect(static_cast<std::int64_t>(r.size()) == column, "enumeration");
                    const int diam = table == 1 ? octagon_tristance_diameter(o) : octagon_infinity_diameter(o);
                    c.expect(diam == d, "diameter-formula");
                    if (d <= brute_limit) c.expect(dispersion_diameter(m, 3, r) == d, "brute-diameter");
                }
                c.expect(column == optimum, "optimum");
                detail += "size=" + std::to_string(column);
                if (d <= search_max_d) search_check(c, detail, m, Kind::tristance, d, optimum);
                break;
            }
            case 3: {
                for (const auto& h : hex2_tristance_rows(d)) {
                    detail += fmt_shape(describe(h)) + " ";
                    const Region r = enumerate(h);
                    const SizeDiameter sd = hexagon_size_and_diameter(h);
                    c.expect(sd.size == hex2_tristance_size_column(d), "size-formula");
                    c.expect(static_cast<std::int64_t>(r.size()) == sd.size, "enumeration");
                    c.expect(sd.diameter == d, "diameter-formula");
                    if (d <= brute_limit) c.expect(dispersion_diameter(Model::hex2, 3, r) == d, "brute-diameter");
                }
                c.expect(hex2_tristance_size_column(d) == hex2_tristance_optimum(d), "optimum");
                detail += "size=" + std::to_string(hex2_tristance_size_column(d));
                if (d <= search_max_d) search_check(c, detail, Model::hex2, Kind::tristance, d, hex2_tristance_optimum(d));
                break;
            }
            case 4: {
                const Icosihexahedron s = grid3_tristance_shape(d);
                const VolumeResult v = icosihexahedron_volume(s);
                const Region r = enumerate(s);
                detail += fmt_shape(describe(s)) + " size=" + std::to_string(v.value);
                c.expect(v.closed_form, "volume-range");
                c.expect(static_cast<std::int64_t>(r.size()) == v.value, "enumeration");
                c.expect(icosihexahedron_diameter(s) == d, "diameter-formula");
                if (d <= brute_limit) c.expect(dispersion_diameter(Model::grid3, 3, r) == d, "brute-diameter");
                if (d <= search_max_d) search_check(c, detail, Model::grid3, Kind::tristance, d, v.value);
                break;
            }
            default: {
                const QuadOctagon q = grid2_quadristance_shape(d);
                const Region r = enumerate(q.octagon());
                const std::int64_t bound = grid2_quadristance_bound(d);
                detail += fmt_shape(describe(q)) + " size=" + std::to_string(r.size()) + " bound=" + std::to_string(bound);
                c.expect(quad_octagon_size(q) == static_cast<std::int64_t>(r.size()), "size-formula");
                c.expect(static_cast<std::int64_t>(r.size()) >= bound, "bound");
                c.expect(quad_octagon_diameter(q) == d, "diameter-formula");
                if (d <= brute_limit) c.expect(dispersion_diameter(Model::grid2, 4, r) == d, "brute-diameter");
                if (d <= search_max_d) search_check(c, detail, Model::grid2, Kind::quadristance, d, bound);
                break;
            }
        }
        lines.push_back(finish(table, d, c, detail));
    }
    return lines;
}

namespace {

void print_region(std::ostream& out, const Anticode& a, const std::string& format) {
    if (format == "ascii")
        out << render_ascii(a.region);
    else if (format == "svg")
        out << render_svg(a.region);
    else
        out << emit(make_document(a)) << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lattice dispersion toolkit: tristance, quadristance and anticodes"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"ascii", "json", "svg"};

    std::string model = "grid2", kind = "tristance", points, format = "json", xi = "east";
    int diameter = 0, margin = 2, table = 1, max_d = 10, search_max = -1, k = 0, board = 19, t = 2, r = 2;
    int port = 8080, threads = 1;
    std::uint64_t budget_nodes = 0;
    double budget_seconds = 0;
    bool oracle = false, witnesses = false, all = false;
    std::string host = "127.0.0.1", static_dir;

    auto* disp = app.add_subcommand("dispersion", "r-dispersion of a point tuple");
    disp->add_option("--model", model)->required();
    disp->add_option("--points", points, "x1,y1;x2,y2;...")->required();
    disp->add_flag("--oracle", oracle, "use the Steiner tree oracle and compare");
    disp->add_option("--margin", margin, "oracle window margin")->check(CLI::NonNegativeNumber);

    auto* anti = app.add_subcommand("anticode", "optimal anticode");
    anti->add_option("--model", model)->required();
    anti->add_option("--kind", kind);
    anti->add_option("--diameter,-d", diameter)->required();
    anti->add_option("--format", format)->check(CLI::IsMember(formats));
    anti->add_flag("--all", all, "every listed optimal parameter set");

    auto* cent = app.add_subcommand("centered", "anticode centered at 1-3 points");
    cent->add_option("--model", model);
    cent->add_option("--centers", points)->required();
    cent->add_option("--diameter,-d", diameter)->required();
    cent->add_option("--xi", xi, "half-step shift for odd d with one center")
        ->check(CLI::IsMember({"east", "north", "west", "south"}));
    cent->add_option("--format", format)->check(CLI::IsMember(formats));

    auto* ver = app.add_subcommand("verify-tables", "re-derive a parameter table");
    ver->add_option("--table", table)->required()->check(CLI::Range(1, 5));
    ver->add_option("--max-d", max_d)->check(CLI::PositiveNumber);
    ver->add_option("--search-max-d", search_max, "run exhaustive search up to this d");

    auto* srch = app.add_subcommand("search", "exhaustive maximum anticode search");
    srch->add_option("--model", model)->required();
    srch->add_option("--kind", kind);
    srch->add_option("--diameter,-d", diameter)->required();
    srch->add_flag("--witnesses", witnesses);
    srch->add_option("--budget-nodes", budget_nodes);
    srch->add_option("--budget-seconds", budget_seconds);
    srch->add_option("--threads", threads)->check(CLI::PositiveNumber);

    auto* go = app.add_subcommand("go-locus", "connectivity locus on a goban");
    go->add_option("--stones", points);
    go->add_option("--k", k)->check(CLI::NonNegativeNumber);
    go->add_option("--board", board)->check(CLI::PositiveNumber);
    go->add_option("--format", format)->check(CLI::IsMember(formats));

    auto* bnd = app.add_subcommand("bound", "interleaving degree lower bound");
    bnd->add_option("--model", model)->required();
    bnd->add_option("--t", t)->required();
    bnd->add_option("--r", r);

    auto* srv = app.add_subcommand("serve", "JSON HTTP service");
    srv->add_option("--port", port)->check(CLI::Range(0, 65535));
    srv->add_option("--host", host);
    srv->add_option("--static", static_dir, "directory served at /");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, eo;
        const int code = app.exit(e, o, eo);
        out << o.str();
        err << eo.str();
        return code == 0 ? 0 : 2;
    }

    try {
        if (disp->parsed()) {
            const Model m = parse_model(model);
            const auto pts = parse_points(points, model_dim(m));
            if (pts.empty()) throw DomainError("parse", "no points given");
            const bool closed = has_closed_form(m, pts.size());
            if (!oracle && closed) {
                out << dispersion(m, pts) << "\n";
                return 0;
            }
            OracleOptions opt;
            opt.margin = margin;
            const int v = steiner_oracle(m, pts, opt);
            out << v << "\n";
            if (oracle) {
                if (!closed) {
                    out << "closed-form n/a\n";
                } else {
                    const int c = dispersion(m, pts);
                    out << "closed-form " << c << (c == v ? " agree" : " DISAGREE") << "\n";
                    if (c != v) return 1;
                }
            }
            return 0;
        }
        if (anti->parsed()) {
            const auto sols = optimal_anticode_solutions(parse_model(model), parse_kind(kind), diameter);
            for (std::size_t i = 0; i < (all ? sols.size() : 1); ++i) print_region(out, sols[i], format);
            return 0;
        }
        if (cent->parsed()) {
            const Model m = parse_model(model);
            const auto c = parse_points(points, model_dim(m));
            Anticode a;
            a.diameter = diameter;
            if (c.size() == 1) {
                if (m != Model::grid2) throw DomainError("unsupported", "one-center anticodes are grid2 only");
                a.region = centered_anticode_1pt(c[0], diameter, parse_xi(xi));
            } else if (c.size() == 2) {
                a.region = centered_anticode_2pt(m, c[0], c[1], diameter);
            } else if (c.size() == 3) {
                if (m != Model::grid2) throw DomainError("unsupported", "three-center anticodes are grid2 only");
                a.kind = Kind::quadristance;
                a.region = centered_quadristance_anticode_3pt(c[0], c[1], c[2], diameter);
            } else {
                throw DomainError("constraint", "give one, two or three centers");
            }
            if (a.region.empty()) a.region = Region(m, {});
            print_region(out, a, format);
            return 0;
        }
        if (ver->parsed()) {
            bool ok = true;
            for (const auto& line : verify_table(table, max_d, search_max)) {
                out << line.text << "\n";
                ok &= line.pass;
            }
            return ok ? 0 : 1;
        }
        if (srch->parsed()) {
            SearchOptions opt;
            opt.witnesses = witnesses;
            opt.node_budget = budget_nodes;
            opt.wall_seconds = budget_seconds;
            opt.threads = threads;
            out << emit(max_anticode(parse_model(model), parse_kind(kind), diameter, opt)) << "\n";
            return 0;
        }
        if (go->parsed()) {
            GobanState st;
            st.board_size = board;
            st.k = k;
            st.stones = parse_points(points, 2);
            print_region(out, go_locus(st), format);
            return 0;
        }
        if (bnd->parsed()) {
            out << interleaving_lower_bound(parse_model(model), t, r).value << "\n";
            return 0;
        }
        if (srv->parsed()) {
            ServeOptions opt{host, port, static_dir};
            ApiServer s(opt);
            const int bound = s.bind();
            if (bound < 0) {
                err << "error: cannot bind " << host << ":" << port << "\n";
                return 1;
            }
            err << "listening on http://" << host << ":" << bound << "\n";
            s.run();
            return 0;
        }
    } catch (const DomainError& e) {
        err << "error[" << e.code() << "]: " << e.what() << "\n";
        const std::string& c = e.code();
        return (c == "parse" || c == "unknown-model" || c == "unknown-kind") ? 2 : 1;
    }
    return 2;
}

}  // namespace tristance
