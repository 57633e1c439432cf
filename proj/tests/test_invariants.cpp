#include <doctest.h>

#include <cmath>
#include <numeric>

#include "atv/chain_complex.hpp"
#include "atv/error.hpp"
#include "atv/invariants.hpp"
#include "test_builders.hpp"

using atv::BfMethod;
using atv::TvMethod;
using atv::TvNormalization;

namespace {

mpq_class tv(const atv::ChainComplex& cc, std::size_t p, long k,
             TvMethod m = TvMethod::snf, TvNormalization n = TvNormalization::closed) {
    return atv::tv_invariant(cc, p, k, m, n).value;
}

} // namespace

TEST_CASE("TV of S^3 is 1 in every degree, by every method") {
    auto fig = atv::build_sphere3_figure();
    for (auto m : {TvMethod::brute, TvMethod::snf, TvMethod::formula}) {
        CHECK(tv(fig, 1, 7, m) == 1);
        for (long k = 1; k <= 8; ++k) {
            CHECK(tv(fig, 0, k, m) == 1);
            CHECK(tv(fig, 1, k, m) == 1);
            CHECK(tv(fig, 2, k, m) == 1);
        }
    }
}

TEST_CASE("TV of minimal spheres is 1") {
    for (std::size_t n = 2; n <= 5; ++n) {
        auto sn = atv::build_sphere_minimal(n);
        for (std::size_t p = 0; p < n; ++p) {
            for (long k = 2; k <= 5; ++k) {
                CAPTURE(n); CAPTURE(p); CAPTURE(k);
                CHECK(tv(sn, p, k, TvMethod::brute) == 1);
                CHECK(tv(sn, p, k, TvMethod::snf) == 1);
                CHECK(tv(sn, p, k, TvMethod::formula) == 1);
            }
        }
    }
}

TEST_CASE("TV of lens spaces is gcd(r,k)") {
    for (long r : {2, 5, 6, 12}) {
        auto lens = atv::build_lens(r, 1);
        for (long k = 1; k <= 12; ++k) {
            CHECK(tv(lens, 1, k) == std::gcd(r, k));
        }
    }
}

TEST_CASE("tqft normalization") {
    auto fig = atv::build_sphere3_figure();
    for (long k = 1; k <= 6; ++k) {
        CHECK(tv(fig, 1, k, TvMethod::snf, TvNormalization::tqft) == mpq_class(1, k));
    }
    auto s1s2 = atv::build_builtin("sphere-min:1xsphere-min:2");
    for (long k = 1; k <= 6; ++k) {
        CHECK(tv(s1s2, 1, k, TvMethod::snf, TvNormalization::tqft) == 1);
    }
}

TEST_CASE("TV is independent of the decomposition of S^3") {
    auto fig = atv::build_sphere3_figure();
    auto min = atv::build_sphere_minimal(3);
    for (std::size_t p = 0; p <= 2; ++p) {
        for (long k = 1; k <= 8; ++k) {
            CHECK(tv(fig, p, k) == tv(min, p, k));
        }
    }
}

TEST_CASE("TV rejects bad inputs") {
    auto fig = atv::build_sphere3_figure();
    CHECK_THROWS_AS(tv(fig, 3, 2), atv::Error); // p = dim
    CHECK_THROWS_AS(atv::tv_invariant(fig, 1, 0), atv::Error);

    // Two disjoint points: b_0 = 2.
    atv::ChainComplex disconnected({2, 0}, {atv::IntMatrix(2, 0)});
    CHECK_THROWS_WITH_AS(tv(disconnected, 0, 2), doctest::Contains("NotConnected"),
                         atv::Error);
}

TEST_CASE("closed form") {
    auto t3 = atv::build_builtin("sphere-min:1xsphere-min:1xsphere-min:1");
    CHECK(atv::tv_closed_form(t3, 1, 3).value == 27);
    CHECK(atv::tv_closed_form(atv::build_lens(4, 1), 1, 6).value == 2);
    for (const auto& [name, cc] : atv_tests::all_builders()) {
        CAPTURE(name);
        for (std::size_t p = 0; p < cc.dim(); ++p) {
            CHECK(atv::tv_closed_form(cc, p, 1).value == 1);
        }
    }
}

TEST_CASE("method agreement across the builder zoo") {
    for (const auto& [name, cc] : atv_tests::all_builders()) {
        CAPTURE(name);
        for (std::size_t p = 0; p < cc.dim(); ++p) {
            for (long k = 1; k <= 5; ++k) {
                CAPTURE(p); CAPTURE(k);
                mpq_class snf = tv(cc, p, k, TvMethod::snf);
                CHECK(snf == tv(cc, p, k, TvMethod::formula));
                if (cc.rank_of(p + 1) > 0) {
                    CHECK(snf == atv::tv_closed_form(cc, p, k).value);
                }
                mpz_class states;
                mpz_ui_pow_ui(states.get_mpz_t(), k, cc.rank_of(p));
                if (states <= 100000) {
                    CHECK(snf == tv(cc, p, k, TvMethod::brute));
                }
            }
        }
    }
}

TEST_CASE("BF partition function") {
    for (long r : {2, 6, 12}) {
        auto lens = atv::build_lens(r, 1);
        for (long k = 1; k <= 12; ++k) {
            CHECK(atv::bf_partition(lens, 1, k).value == std::gcd(r, k) * r);
        }
    }
    CHECK(atv::bf_partition(atv::build_lens(6, 1), 1, 4).value == 12);

    auto s3 = atv::build_sphere_minimal(3);
    auto t3 = atv::build_builtin("sphere-min:1xsphere-min:1xsphere-min:1");
    for (long k = 1; k <= 6; ++k) {
        CHECK(atv::bf_partition(s3, 1, k).value == 1);
        CHECK(atv::bf_partition(t3, 1, k).value == 1);
    }

    // p = 0 and p = n are excluded.
    CHECK_THROWS_AS(atv::bf_partition(s3, 0, 2), atv::Error);
    CHECK_THROWS_AS(atv::bf_partition(s3, 3, 2), atv::Error);
}

TEST_CASE("BF torsion duality across degrees") {
    for (const auto& [name, cc] : atv_tests::all_builders()) {
        CAPTURE(name);
        const std::size_t n = cc.dim();
        for (std::size_t p = 1; p + 1 <= n; ++p) {
            const std::size_t q = n - 1 - p;
            if (q < 1 || q + 1 > n) continue;
            for (long k = 1; k <= 6; ++k) {
                CHECK(atv::bf_partition(cc, p, k).value == atv::bf_partition(cc, q, k).value);
            }
        }
    }
}

TEST_CASE("pairing sum") {
    SUBCASE("pinned 2x2 case") {
        atv::TorsionPairing tp = atv::lens_pairing(2, 1);
        CHECK(atv::pairing_sum(tp, 1) == 2); // brute: 1 + 1 + 1 - 1
    }
    SUBCASE("lens pairings match gcd(r,k) r") {
        for (auto [r, k] : std::vector<std::pair<long, long>>{{5, 10}, {6, 4}, {7, 3}}) {
            auto tp = atv::lens_pairing(r, 1);
            mpz_class expected = std::gcd(r, k) * r;
            CHECK(atv::pairing_sum(tp, k) == expected);
            CHECK(atv::pairing_sum_float(tp, k)
                  == doctest::Approx(expected.get_d()).epsilon(1e-9));
        }
    }
    SUBCASE("k multiple of all orders gives |B| |A|") {
        atv::TorsionPairing tp;
        tp.orders_b = {2, 4};
        tp.orders_a = {4};
        tp.q = {{mpq_class(1, 2)}, {mpq_class(1, 4)}};
        CHECK(atv::pairing_sum(tp, 4) == 8 * 4);
    }
    SUBCASE("pairing_sum equals bf_partition on lens complexes") {
        for (long r = 2; r <= 12; ++r) {
            for (long s = 1; s < r; ++s) {
                if (std::gcd(r, s) != 1) continue;
                auto cc = atv::build_lens(r, s);
                for (long k = 1; k <= 12; ++k) {
                    CHECK(atv::pairing_sum(atv::lens_pairing(r, s), k)
                          == atv::bf_partition(cc, 1, k).value);
                }
            }
        }
    }
    SUBCASE("ill-formed pairings are rejected") {
        atv::TorsionPairing tp;
        tp.orders_b = {2};
        tp.orders_a = {3};
        tp.q = {{mpq_class(1, 5)}}; // 5 does not divide lcm(2,3)
        CHECK_THROWS_WITH_AS(atv::pairing_sum(tp, 1), doctest::Contains("IllFormedPairing"),
                             atv::Error);

        atv::TorsionPairing shape;
        shape.orders_b = {2};
        shape.orders_a = {2};
        shape.q = {};
        CHECK_THROWS_AS(atv::pairing_sum(shape, 1), atv::Error);
    }
}

TEST_CASE("discrete BF double sum") {
    for (std::size_t n = 1; n <= 3; ++n) {
        auto sn = atv::build_sphere_minimal(n);
        for (std::size_t p = 0; p < n; ++p) {
            CHECK(atv::discrete_bf_double_sum(sn, p, 3) == 1);
        }
    }
    CHECK(atv::discrete_bf_double_sum(atv::build_sphere3_figure(), 1, 2) == 1);
    CHECK(atv::discrete_bf_double_sum(atv::build_lens(3, 1), 1, 3) == 3);

    SUBCASE("equals the TV invariant wherever computable") {
        for (const auto& [name, cc] : atv_tests::all_builders()) {
            CAPTURE(name);
            for (std::size_t p = 0; p < cc.dim(); ++p) {
                for (long k = 1; k <= 4; ++k) {
                    mpz_class states;
                    mpz_ui_pow_ui(states.get_mpz_t(), k, cc.rank_of(p) + cc.rank_of(p + 1));
                    if (states > 100000) continue;
                    CHECK(atv::discrete_bf_double_sum(cc, p, k) == tv(cc, p, k));
                }
            }
        }
    }
    SUBCASE("cap") {
        auto t3 = atv::build_builtin("sphere-min:1xsphere-min:1xsphere-min:1");
        CHECK_THROWS_AS(atv::discrete_bf_double_sum(t3, 1, 5, 1000), atv::Error);
    }
}

TEST_CASE("BF <-> TV relation") {
    SUBCASE("lens spaces: factor reduces to r") {
        for (auto [r, k] : std::vector<std::pair<long, long>>{{2, 2}, {6, 4}, {5, 7}}) {
            auto rep = atv::bf_tv_relation_check(atv::build_lens(r, 1), 1, k);
            CHECK(rep.ok);
            CHECK(rep.factor == r);
        }
        auto rep = atv::bf_tv_relation_check(atv::build_lens(5, 1), 1, 10);
        CHECK(rep.bf == 25);
        CHECK(rep.tv == 5);
        CHECK(rep.factor == 5);
        CHECK(rep.ok);
    }
    SUBCASE("S^3 figure: everything is 1") {
        for (long k = 1; k <= 6; ++k) {
            auto rep = atv::bf_tv_relation_check(atv::build_sphere3_figure(), 1, k);
            CHECK(rep.bf == 1);
            CHECK(rep.tv == 1);
            CHECK(rep.factor == 1);
            CHECK(rep.ok);
        }
    }
    SUBCASE("T^3 at p = 1, k = 3") {
        auto t3 = atv::build_builtin("sphere-min:1xsphere-min:1xsphere-min:1");
        auto rep = atv::bf_tv_relation_check(t3, 1, 3);
        CHECK(rep.bf == 1);
        CHECK(rep.tv == 27);
        CHECK(rep.factor == mpq_class(1, 27));
        CHECK(rep.ok);
    }
    SUBCASE("holds across the builder zoo") {
        for (const auto& [name, cc] : atv_tests::all_builders()) {
            CAPTURE(name);
            for (std::size_t p = 1; p < cc.dim(); ++p) {
                for (long k = 1; k <= 6; ++k) {
                    CAPTURE(p); CAPTURE(k);
                    CHECK(atv::bf_tv_relation_check(cc, p, k).ok);
                }
            }
        }
    }
    SUBCASE("degree bounds") {
        auto s3 = atv::build_sphere_minimal(3);
        CHECK_THROWS_AS(atv::bf_tv_relation_check(s3, 0, 2), atv::Error);
        CHECK_THROWS_AS(atv::bf_tv_relation_check(s3, 3, 2), atv::Error);
    }
}

TEST_CASE("k = 1 collapses every invariant to 1") {
    for (const auto& [name, cc] : atv_tests::all_builders()) {
        CAPTURE(name);
        for (std::size_t p = 0; p < cc.dim(); ++p) {
            CHECK(tv(cc, p, 1) == 1);
            if (p >= 1) CHECK(atv::bf_partition(cc, p, 1).value == atv::homology(cc, p).torsion_order());
        }
    }
}
