#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "tristance/error.hpp"
#include "tristance/lattice.hpp"

namespace tristance {

TEST_CASE("pairwise distance examples") {
    CHECK(distance(Model::grid2, {0, 0}, {2, 3}) == 5);
    CHECK(distance(Model::inf2, {0, 0}, {2, 3}) == 3);
    CHECK(distance(Model::hex2, {0, 0}, {1, -2}) == 3);
    CHECK(distance(Model::grid3, {0, 0, 0}, {1, -2, 3}) == 6);
}

TEST_CASE("neighbors are exactly the points at distance one") {
    for (Model m : {Model::grid2, Model::inf2, Model::hex2, Model::grid3}) {
        const Point o{0, 0, 0};
        auto nb = neighbors(m, o);
        std::sort(nb.begin(), nb.end());
        std::vector<Point> want;
        const int zr = is_planar(m) ? 0 : 1;
        for (int x = -1; x <= 1; ++x)
            for (int y = -1; y <= 1; ++y)
                for (int z = -zr; z <= zr; ++z)
                    if (distance(m, o, {x, y, z}) == 1) want.push_back({x, y, z});
        CHECK(nb == want);
    }
    CHECK(neighbors(Model::grid2, {}).size() == 4);
    CHECK(neighbors(Model::inf2, {}).size() == 8);
    CHECK(neighbors(Model::hex2, {}).size() == 6);
    CHECK(neighbors(Model::grid3, {}).size() == 6);

    auto hex = neighbors(Model::hex2, {0, 0});
    std::sort(hex.begin(), hex.end());
    std::vector<Point> want{{-1, -1}, {-1, 0}, {0, -1}, {0, 1}, {1, 0}, {1, 1}};
    CHECK(hex == want);
}

TEST_CASE("distance equals BFS path length") {
    for (Model m : {Model::grid2, Model::inf2, Model::hex2, Model::grid3}) {
        const int hi = is_planar(m) ? 6 : 4;
        // paths never need to leave the bounding box, so the box graph is enough
        oracle::BoxGraph g(m, {0, 0, 0}, {hi, hi, hi});
        for (const Point& p : g.nodes)
            for (const Point& q : g.nodes) REQUIRE(distance(m, p, q) == g.dist[g.id(p)][g.id(q)]);
    }
}

TEST_CASE("metric axioms on sampled triples") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> c(-8, 8);
    for (Model m : {Model::grid2, Model::inf2, Model::hex2, Model::grid3}) {
        for (int i = 0; i < 3000; ++i) {
            const int dz = is_planar(m) ? 0 : 1;
            Point p{c(rng), c(rng), dz * c(rng)}, q{c(rng), c(rng), dz * c(rng)}, r{c(rng), c(rng), dz * c(rng)};
            CHECK(distance(m, p, q) == distance(m, q, p));
            CHECK((distance(m, p, q) == 0) == (p == q));
            CHECK(distance(m, p, r) <= distance(m, p, q) + distance(m, q, r));
        }
    }
}

TEST_CASE("phi is a bijection onto the even sublattice") {
    CHECK(phi({1, 2}) == Point{-1, 3});
    CHECK(phi_inverse(phi({7, -4})) == Point{7, -4});
    CHECK(distance(Model::inf2, {0, 0}, {2, 3}) == 3);
    CHECK(distance(Model::grid2, phi({0, 0}), phi({2, 3})) == 6);
    for (int x = -6; x <= 6; ++x)
        for (int y = -6; y <= 6; ++y) {
            const Point p{x, y};
            CHECK((phi(p).x + phi(p).y) % 2 == 0);
            CHECK(phi_inverse(phi(p)) == p);
            for (int u = -3; u <= 3; ++u)
                for (int v = -3; v <= 3; ++v)
                    CHECK(2 * distance(Model::inf2, p, {u, v}) == distance(Model::grid2, phi(p), phi({u, v})));
        }
    CHECK_THROWS_AS(phi_inverse({1, 0}), DomainError);
    try {
        phi_inverse({2, 1});
    } catch (const DomainError& e) {
        CHECK(e.code() == "parity");
    }
}

TEST_CASE("model names round-trip") {
    for (Model m : {Model::grid2, Model::inf2, Model::hex2, Model::grid3}) CHECK(parse_model(model_name(m)) == m);
    CHECK_THROWS_AS(parse_model("torus"), DomainError);
}

}  // namespace tristance
