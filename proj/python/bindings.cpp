#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tristance/apps.hpp"
#include "tristance/document.hpp"
#include "tristance/error.hpp"
#include "tristance/search.hpp"

namespace py = pybind11;
using namespace tristance;

namespace {

using Coords = std::vector<int>;

Point to_point(const Coords& c) {
    if (c.size() < 2 || c.size() > 3) throw py::value_error("points need 2 or 3 coordinates");
    return {c[0], c[1], c.size() == 3 ? c[2] : 0};
}

std::vector<Point> to_points(const std::vector<Coords>& cs) {
    std::vector<Point> out;
    for (const auto& c : cs) out.push_back(to_point(c));
    return out;
}

std::vector<Coords> from_region(const Region& r) {
    std::vector<Coords> out;
    for (const Point& p : r.points())
        out.push_back(model_dim(r.model()) == 3 ? Coords{p.x, p.y, p.z} : Coords{p.x, p.y});
    return out;
}

py::object document(const Anticode& a) {
    return py::module_::import("json").attr("loads")(emit(make_document(a)));
}

}  // namespace

PYBIND11_MODULE(_tristance, m) {
    m.doc() = "Tristance, quadristance and lattice anticodes";

    static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const DomainError& e) {
            PyErr_SetString(domain_error.ptr(), (e.code() + ": " + e.what()).c_str());
        }
    });

    m.def("distance", [](const std::string& model, const Coords& p, const Coords& q) {
        return distance(parse_model(model), to_point(p), to_point(q));
    });
    m.def("tristance", [](const std::string& model, const Coords& a, const Coords& b, const Coords& c) {
        return tristance::tristance(parse_model(model), to_point(a), to_point(b), to_point(c));
    });
    m.def("quadristance", [](const Coords& a, const Coords& b, const Coords& c, const Coords& d) {
        return quadristance(to_point(a), to_point(b), to_point(c), to_point(d));
    });
    m.def("dispersion", [](const std::string& model, const std::vector<Coords>& pts) {
        return dispersion(parse_model(model), to_points(pts));
    });
    m.def(
        "steiner_oracle",
        [](const std::string& model, const std::vector<Coords>& pts, int margin) {
            OracleOptions opt;
            opt.margin = margin;
            return steiner_oracle(parse_model(model), to_points(pts), opt);
        },
        py::arg("model"), py::arg("points"), py::arg("margin") = 2);
    m.def("phi", [](const Coords& p) {
        const Point q = phi(to_point(p));
        return Coords{q.x, q.y};
    });
    m.def("phi_inverse", [](const Coords& p) {
        const Point q = phi_inverse(to_point(p));
        return Coords{q.x, q.y};
    });
    m.def("optimal_anticode", [](const std::string& model, const std::string& kind, int d) {
        return document(optimal_anticode(parse_model(model), parse_kind(kind), d));
    });
    m.def(
        "centered_anticode",
        [](const std::string& model, const std::vector<Coords>& centers, int d) {
            const Model mm = parse_model(model);
            const auto c = to_points(centers);
            if (c.size() == 1) return from_region(centered_anticode_1pt(c[0], d));
            if (c.size() == 2) return from_region(centered_anticode_2pt(mm, c[0], c[1], d));
            if (c.size() == 3) return from_region(centered_quadristance_anticode_3pt(c[0], c[1], c[2], d));
            throw py::value_error("give one, two or three centers");
        },
        py::arg("model"), py::arg("centers"), py::arg("d"));
    m.def(
        "go_locus",
        [](const std::vector<Coords>& stones, int k, int board) {
            GobanState st;
            st.stones = to_points(stones);
            st.k = k;
            st.board_size = board;
            return document(go_locus(st));
        },
        py::arg("stones"), py::arg("k"), py::arg("board") = 19);
    m.def("interleaving_bound", [](const std::string& model, int t, int r) {
        return interleaving_lower_bound(parse_model(model), t, r).value;
    });
    m.def(
        "max_anticode",
        [](const std::string& model, const std::string& kind, int d, bool witnesses) {
            SearchOptions opt;
            opt.witnesses = witnesses;
            SearchReport rep;
            {
                py::gil_scoped_release release;
                rep = max_anticode(parse_model(model), parse_kind(kind), d, opt);
            }
            return py::module_::import("json").attr("loads")(emit(rep));
        },
        py::arg("model"), py::arg("kind"), py::arg("d"), py::arg("witnesses") = false);
    m.def("canonicalize", [](const std::string& model, const std::vector<Coords>& pts) {
        return from_region(canonicalize(Region(parse_model(model), to_points(pts))));
    });
}
