#include <doctest.h>

#include "atv/chain_complex.hpp"
#include "atv/error.hpp"
#include "atv/homology.hpp"
#include "test_builders.hpp"

using atv::ChainComplex;
using atv::IntMatrix;

TEST_CASE("validate accepts builders, rejects dd != 0") {
    for (const auto& [name, cc] : atv_tests::all_builders()) {
        CAPTURE(name);
        CHECK_NOTHROW(cc.validate());
    }
    ChainComplex bad({1, 1, 1}, {IntMatrix{{1}}, IntMatrix{{1}}});
    CHECK_THROWS_WITH_AS(bad.validate(),
                         doctest::Contains("BoundarySquareNonzero"), atv::Error);
}

TEST_CASE("construction rejects shape mismatches") {
    CHECK_THROWS_WITH_AS(ChainComplex({2, 2}, {IntMatrix(2, 3)}),
                         doctest::Contains("ShapeMismatch"), atv::Error);
}

TEST_CASE("coboundary is the transpose of the next boundary") {
    auto s1 = atv::build_sphere_minimal(1);
    CHECK(s1.coboundary(0) == s1.boundary(1).transpose());

    auto lens = atv::build_lens(5, 1);
    CHECK(lens.coboundary(1) == IntMatrix{{5}});

    CHECK_THROWS_AS(lens.coboundary(3), atv::Error); // p = dim
}

TEST_CASE("minimal sphere") {
    auto s1 = atv::build_sphere_minimal(1);
    CHECK(s1.ranks() == std::vector<std::size_t>{2, 2});
    CHECK(s1.boundary(1) == IntMatrix{{1, -1}, {1, -1}});

    auto s2 = atv::build_sphere_minimal(2);
    CHECK(atv::homology(s2, 0).betti == 1);
    CHECK(atv::homology(s2, 1).betti == 0);
    CHECK(atv::homology(s2, 2).betti == 1);
    for (std::size_t p = 0; p <= 2; ++p) CHECK(atv::homology(s2, p).torsion.empty());

    CHECK_NOTHROW(atv::build_sphere_minimal(3).validate());
    CHECK_THROWS_AS(atv::build_sphere_minimal(0), atv::Error);
}

TEST_CASE("figure decomposition of S^3") {
    auto cc = atv::build_sphere3_figure();
    CHECK(cc.ranks() == std::vector<std::size_t>{4, 5, 3, 2});
    CHECK_NOTHROW(cc.validate());
    CHECK(atv::homology(cc, 0).betti == 1);
    CHECK(atv::homology(cc, 1).betti == 0);
    CHECK(atv::homology(cc, 2).betti == 0);
    CHECK(atv::homology(cc, 3).betti == 1);
    for (std::size_t p = 0; p <= 3; ++p) CHECK(atv::homology(cc, p).torsion.empty());
}

TEST_CASE("lens spaces") {
    auto l5 = atv::build_lens(5, 1);
    CHECK(l5.ranks() == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(l5.boundary(2) == IntMatrix{{5}});
    CHECK(atv::homology(l5, 1).torsion == std::vector<mpz_class>{5});
    CHECK(l5.metadata().at("lens_s") == "1");

    auto l2 = atv::build_lens(2, 1);
    CHECK(atv::homology(l2, 0).betti == 1);
    CHECK(atv::homology(l2, 1).betti == 0);
    CHECK(atv::homology(l2, 1).torsion == std::vector<mpz_class>{2});
    CHECK(atv::homology(l2, 2).betti == 0);
    CHECK(atv::homology(l2, 3).betti == 1);

    CHECK_THROWS_WITH_AS(atv::build_lens(4, 2), doctest::Contains("InvalidParameters"),
                         atv::Error);
}

TEST_CASE("tensor product") {
    auto s1 = atv::build_sphere_minimal(1);

    SUBCASE("point complex is a unit") {
        ChainComplex point({1}, {});
        auto prod = atv::tensor_product(s1, point);
        CHECK(prod.ranks() == s1.ranks());
        CHECK(prod.boundary(1) == s1.boundary(1));
    }
    SUBCASE("torus T^2") {
        auto t2 = atv::tensor_product(s1, s1);
        CHECK_NOTHROW(t2.validate());
        CHECK(atv::homology(t2, 0).betti == 1);
        CHECK(atv::homology(t2, 1).betti == 2);
        CHECK(atv::homology(t2, 2).betti == 1);
    }
    SUBCASE("S^1 x S^2") {
        auto prod = atv::tensor_product(s1, atv::build_sphere_minimal(2));
        CHECK_NOTHROW(prod.validate());
        for (std::size_t p = 0; p <= 3; ++p) {
            CHECK(atv::homology(prod, p).betti == 1);
            CHECK(atv::homology(prod, p).torsion.empty());
        }
    }
    SUBCASE("torsion spreads by Kunneth") {
        auto prod = atv::tensor_product(atv::build_lens(4, 1), s1);
        CHECK_NOTHROW(prod.validate());
        CHECK(atv::homology(prod, 1).torsion == std::vector<mpz_class>{4});
        CHECK(atv::homology(prod, 2).torsion == std::vector<mpz_class>{4});
    }
}

TEST_CASE("all builders are connected") {
    for (const auto& [name, cc] : atv_tests::all_builders()) {
        CAPTURE(name);
        CHECK(atv::homology(cc, 0).betti == 1);
    }
}

TEST_CASE("builtin spec parsing") {
    CHECK(atv::build_builtin("sphere3-fig").ranks() == std::vector<std::size_t>{4, 5, 3, 2});
    CHECK(atv::build_builtin("lens:3:1xsphere-min:2").dim() == 5);
    CHECK_THROWS_AS(atv::build_builtin("klein-bottle"), atv::Error);
    CHECK_THROWS_AS(atv::build_builtin("lens:4:2"), atv::Error);
}
