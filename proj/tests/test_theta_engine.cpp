#include "doctest.h"

#include "thetalift/error.hpp"
#include "thetalift/theta_engine.hpp"

using namespace thetalift;
using namespace thetalift::theta;

TEST_CASE("lift_ktype") {
    auto l00 = lift_ktype(0, 0);
    CHECK(l00.lowest_factor == 8);
    CHECK(l00.highest_factor == 4);
    CHECK(l00.generator_so2_weight == 4);
    auto l10 = lift_ktype(1, 0);
    CHECK(l10.lowest_factor == 10);
    CHECK(l10.highest_factor == 4);
    CHECK(l10.generator_so2_weight == 6);
    auto l01 = lift_ktype(0, 1);
    CHECK(l01.lowest_factor == 9);
    CHECK(l01.highest_factor == 5);
    CHECK(l01.generator_so2_weight == 4);
    CHECK_THROWS_AS(lift_ktype(-1, 0), InputError);

    for (long m = 0; m <= 10; ++m)
        for (long n = 0; n <= 10; ++n) CHECK(lift_ktype(m, n).generator_so2_weight == 2 * m + 4);

    auto check = cross_validate(lift_ktype(1, 2), 4);
    CHECK(check.ok);
    CHECK(check.model_generator_weight == 6);
    CHECK(check.filtration_ranks == std::vector<std::size_t>{1, 3, 6, 10, 15});
}

TEST_CASE("lift_so2type") {
    auto k8 = lift_so2type(8);
    CHECK(k8.m == 2);
    CHECK(k8.ktype_bound == std::vector<TauLabel>{{0, 0}, {1, 0}, {2, 0}});
    REQUIRE(k8.d5_label);
    CHECK(*k8.d5_label == Weight{2, 0, 0, 0, 0});

    auto k4 = lift_so2type(4);
    CHECK(k4.ktype_bound == std::vector<TauLabel>{{0, 0}});
    CHECK_FALSE(k4.d5_label);
    CHECK_FALSE(k4.out_of_theorem_scope);

    auto k2 = lift_so2type(2);
    CHECK(k2.m == -1);
    CHECK(k2.ktype_bound == std::vector<TauLabel>{{0, 0}});
    CHECK(k2.out_of_theorem_scope);

    CHECK_THROWS_AS(lift_so2type(7), InputError);
    for (long m = 1; m <= 6; ++m) CHECK(lift_so2type(2 * m + 4).ktype_bound.size() == static_cast<std::size_t>(m + 1));
}

TEST_CASE("hom_dim_ktype is independent of n") {
    CHECK(hom_dim_ktype(So2Support::lowest(4), 3, 5) == 1);
    CHECK(hom_dim_ktype(So2Support::lowest(8), 0, 0) == 0);
    for (const auto& sigma : {So2Support::highest(-2), So2Support::lowest(6), So2Support::finite({4, 10}),
                              So2Support::full_even(), So2Support::highest(8)})
        for (long m = 0; m <= 8; ++m) {
            const int base = hom_dim_ktype(sigma, m, 0);
            for (long n = 1; n <= 8; ++n) CHECK(hom_dim_ktype(sigma, m, n) == base);
            if (sigma == So2Support::highest(-2)) CHECK(base == 0);
        }
}

TEST_CASE("theta_support") {
    auto s4 = theta_support(So2Support::lowest(4));
    CHECK_FALSE(s4.vanishes);
    CHECK(s4.minimal_m == 0);
    CHECK_FALSE(s4.maximal_m);
    CHECK(s4.enumerate(3, 3).size() == 16);

    auto s6 = theta_support(So2Support::lowest(6));
    CHECK(s6.minimal_m == 1);
    CHECK_FALSE(s6.contains({0, 5}));
    CHECK(s6.contains({1, 0}));
    CHECK(s6.contains({7, 3}));

    CHECK(theta_support(So2Support::highest(-2)).vanishes);
    CHECK(theta_support(So2Support::highest(-6)).vanishes);
    CHECK(theta_support(So2Support::highest(2)).vanishes);
    auto h8 = theta_support(So2Support::highest(8));
    CHECK(h8.minimal_m == 0);
    CHECK(h8.maximal_m == 2);
    CHECK(theta_support(So2Support::finite({-4, 2})).vanishes);
    auto fin = theta_support(So2Support::finite({2, 10, 14}));
    CHECK(fin.minimal_m == 3);
    CHECK(fin.maximal_m == 5);
    CHECK(fin.enumerate(6, 0) == std::vector<TauLabel>{{3, 0}, {5, 0}});
    CHECK(theta_support(So2Support::lowest(-10)).minimal_m == 0);
}

TEST_CASE("match_lowest_types") {
    auto r8 = match_lowest_types(So2Support::lowest(8));
    CHECK(r8.pass);
    CHECK(r8.minimal_m == 2);
    CHECK(r8.lowest_ktype == TauLabel{2, 0});
    CHECK(r8.below_dims == std::vector<int>{0, 0});
    for (int d : r8.hom_chain_dims()) CHECK(d == 1);
    CHECK(r8.split_contradiction);

    auto r4 = match_lowest_types(So2Support::lowest(4));
    CHECK(r4.pass);
    CHECK(r4.minimal_m == 0);
    CHECK(r4.below_dims.empty());

    auto full = match_lowest_types(So2Support::full_even());
    CHECK(full.pass);
    CHECK(full.lowest_ktype == TauLabel{0, 0});

    auto zero = match_lowest_types(So2Support::highest(-2));
    CHECK(zero.theta_vanishes);
    CHECK_FALSE(zero.minimal_m);
    CHECK(zero.hom_chain.empty());

    for (const auto& sigma : {So2Support::lowest(4), So2Support::lowest(6), So2Support::lowest(12),
                              So2Support::finite({6, 12}), So2Support::highest(10)}) {
        auto report = match_lowest_types(sigma);
        REQUIRE(report.lowest_ktype);
        auto support = theta_support(sigma);
        CHECK(support.contains(*report.lowest_ktype));
        for (long j = 0; j < report.lowest_ktype->m; ++j) CHECK_FALSE(support.contains({j, 0}));
    }
}

TEST_CASE("dual_support") {
    CHECK(dual_support(So2Support::lowest(4)) == So2Support::highest(-4));
    CHECK(dual_support(So2Support::highest(-4)) == So2Support::lowest(4));
    CHECK(dual_support(So2Support::full_even()) == So2Support::full_even());
    CHECK(dual_support(So2Support::finite({2, 6})) == So2Support::finite({-2, -6}));
    for (const auto& s : {So2Support::lowest(10), So2Support::finite({0, 4, -8})})
        CHECK(dual_support(dual_support(s)) == s);
}

TEST_CASE("pi_compact_table") {
    auto rows = pi_compact_table(2);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].sl2_lowest_weight == 12);
    CHECK(rows[0].hc_parameter == 11);
    CHECK(rows[0].dimension == 1);
    CHECK(rows[0].infinitesimal_character == Weight::halves({11, 5, 3, 1}));
    CHECK(rows[0].taus == std::vector<std::pair<TauLabel, std::int64_t>>{{{0, 0}, 1}});

    CHECK(rows[1].sl2_lowest_weight == 14);
    CHECK(rows[1].hc_parameter == 13);
    CHECK(rows[1].dimension == 26);
    CHECK(rows[1].infinitesimal_character == Weight::halves({13, 5, 3, 1}));
    CHECK(rows[1].taus.size() == 3);

    CHECK(rows[2].sl2_lowest_weight == 16);
    CHECK(rows[2].hc_parameter == 15);
    CHECK(rows[2].dimension == 324);
    for (const auto& row : rows) {
        CHECK(row.tau_closed);
        CHECK(row.dimension_conserved);
        CHECK(row.hc_parameter == 2 * row.infinitesimal_character[0]);
    }

    CHECK_THROWS_WITH_AS(pi_compact_table(3, 1000), doctest::Contains("cap exceeded"), InputError);
}
