#include "doctest.h"

#include "thetalift/characters.hpp"
#include "thetalift/error.hpp"
#include "thetalift/oracles.hpp"

#include <algorithm>

using namespace thetalift;

namespace {

IrrepLabel b4(std::initializer_list<long> halves) { return {SystemLabel::B4, Weight::halves(halves)}; }

const IrrepLabel kVarpi4{SystemLabel::F4, Weight{1, 0, 0, 0}};
const IrrepLabel kLambda{SystemLabel::B4, Weight{1, 0, 0, 0}};
const IrrepLabel kMu{SystemLabel::B4, Weight::halves({1, 1, 1, 1})};

std::vector<IrrepLabel> small_irreps(SystemLabel label, long max_label_sum, std::int64_t max_dim) {
    const RootSystem& sys = root_system(label);
    std::vector<IrrepLabel> out;
    std::vector<long> labels(sys.rank(), 0);
    while (true) {
        long sum = 0;
        for (long v : labels) sum += v;
        if (sum <= max_label_sum) {
            std::vector<Rational> q(labels.begin(), labels.end());
            IrrepLabel rep{label, sys.from_dynkin_labels(q)};
            if (weyl_dim(rep) <= max_dim) out.push_back(rep);
        }
        std::size_t i = 0;
        while (i < labels.size() && labels[i] == max_label_sum) labels[i++] = 0;
        if (i == labels.size()) break;
        ++labels[i];
    }
    return out;
}

}  // namespace

TEST_CASE("weyl_dim on the named representations") {
    CHECK(weyl_dim(kVarpi4) == 26);
    CHECK(weyl_dim(kMu) == 16);
    CHECK(weyl_dim(kLambda) == 9);
    for (auto label : {SystemLabel::F4, SystemLabel::B4, SystemLabel::D5, SystemLabel::A1})
        CHECK(weyl_dim({label, Weight::zero(root_system(label).rank())}) == 1);
    CHECK(weyl_dim(e_n(2)) == 324);
    CHECK(weyl_dim(e_n(3)) == 2652);
}

TEST_CASE("invalid highest weights are rejected") {
    CHECK_THROWS_WITH_AS(weyl_dim(b4({0, 2, 0, 0})), doctest::Contains("invalid highest weight"), InputError);
    CHECK_THROWS_AS(weyl_dim({SystemLabel::B4, Weight{Rational(1, 3), 0, 0, 0}}), InputError);
    CHECK_THROWS_AS(freudenthal_character({SystemLabel::F4, Weight{1, 0, 0}}), InputError);
    CHECK_THROWS_AS(infinitesimal_character(b4({-2, 0, 0, 0})), InputError);
}

TEST_CASE("Freudenthal on sl2 strings") {
    const auto& a1 = root_system(SystemLabel::A1);
    for (long n = 0; n <= 8; ++n) {
        const auto chi = freudenthal_character({SystemLabel::A1, Rational(n, 2) * a1.simple_roots()[0]});
        const auto full = chi->expanded();
        CHECK(full.size() == static_cast<std::size_t>(n + 1));
        for (long w = -n; w <= n; w += 2) CHECK(full.at(Weight{Rational(w)}) == 1);
    }
}

TEST_CASE("Freudenthal: standard B4 and 26-dimensional F4 characters") {
    const auto std9 = freudenthal_character(kLambda)->expanded();
    CHECK(std9.size() == 9);
    CHECK(std9.at(Weight::zero(4)) == 1);
    for (int i = 0; i < 4; ++i)
        for (int s : {1, -1}) {
            Weight w(4);
            w[i] = s;
            CHECK(std9.at(w) == 1);
        }

    const auto chi26 = freudenthal_character(kVarpi4);
    const auto f26 = chi26->expanded();
    CHECK(f26.size() == 25);
    CHECK(f26.at(Weight::zero(4)) == 2);
    std::int64_t nonzero = 0;
    for (const auto& [w, m] : f26)
        if (!w.is_zero()) {
            CHECK(m == 1);
            nonzero += m;
        }
    CHECK(nonzero == 24);
    CHECK(chi26->dimension() == 26);
}

TEST_CASE("Freudenthal total equals the Weyl dimension") {
    std::vector<IrrepLabel> reps;
    for (auto r : small_irreps(SystemLabel::F4, 2, 20000)) reps.push_back(r);
    for (auto r : small_irreps(SystemLabel::B4, 3, 20000)) reps.push_back(r);
    for (auto r : small_irreps(SystemLabel::D5, 2, 20000)) reps.push_back(r);
    for (auto r : small_irreps(SystemLabel::A1, 12, 20000)) reps.push_back(r);
    reps.push_back(e_n(3));
    CHECK(reps.size() > 60);
    for (const auto& rep : reps) {
        CAPTURE(to_string(rep));
        const auto chi = freudenthal_character(rep);
        CHECK(chi->dimension() == weyl_dim(rep));
        std::int64_t total = 0;
        for (const auto& [w, m] : chi->expanded()) total += m;
        CHECK(total == weyl_dim(rep));
    }
}

TEST_CASE("characters are Weyl invariant and B4 characters are self-dual") {
    for (const auto& rep : {kVarpi4, e_n(2), kMu, b4({4, 2, 2, 2}), b4({3, 1, 1, 1})}) {
        const auto& sys = root_system(rep.system);
        const auto chi = freudenthal_character(rep);
        const auto full = chi->expanded();
        for (const auto& [w, m] : full) {
            for (const auto& alpha : sys.simple_roots()) CHECK(chi->multiplicity(sys.reflect(w, alpha)) == m);
            if (rep.system == SystemLabel::B4) CHECK(full.at(-w) == m);
        }
    }
}

TEST_CASE("tensor_decompose: unit, examples and character-product oracle") {
    const IrrepLabel trivial{SystemLabel::B4, Weight::zero(4)};
    CHECK(tensor_decompose(kMu, trivial) == DecompositionList{{kMu, 1}});

    const DecompositionList lambda_sq = tensor_decompose(kLambda, kLambda);
    const DecompositionList expected{{{SystemLabel::B4, Weight{2, 0, 0, 0}}, 1},
                                     {{SystemLabel::B4, Weight{1, 1, 0, 0}}, 1},
                                     {trivial, 1}};
    CHECK(lambda_sq == expected);
    CHECK(weyl_dim(expected[0].irrep) == 44);
    CHECK(weyl_dim(expected[1].irrep) == 36);
    CHECK(lambda_sq == oracle::tensor_by_character_product(kLambda, kLambda));

    const auto sq26 = tensor_decompose(kVarpi4, kVarpi4);
    auto it = std::find_if(sq26.begin(), sq26.end(),
                           [](const DecompositionEntry& e) { return e.irrep == e_n(2); });
    REQUIRE(it != sq26.end());
    CHECK(it->multiplicity == 1);
    CHECK(sq26 == oracle::tensor_by_character_product(kVarpi4, kVarpi4));

    CHECK_THROWS_AS(tensor_decompose(kVarpi4, kLambda), InputError);
}

TEST_CASE("tensor products commute") {
    const std::vector<std::pair<IrrepLabel, IrrepLabel>> pairs{
        {kLambda, kMu}, {kMu, b4({2, 2, 0, 0})}, {kVarpi4, e_n(2)},
        {{SystemLabel::D5, Weight{1, 0, 0, 0, 0}}, {SystemLabel::D5, Weight::halves({1, 1, 1, 1, 1})}}};
    for (const auto& [a, b] : pairs) CHECK(tensor_decompose(a, b) == tensor_decompose(b, a));
}

TEST_CASE("infinitesimal characters") {
    for (long n = 0; n <= 20; ++n) CHECK(infinitesimal_character(e_n(n)) == Weight::halves({2 * n + 11, 5, 3, 1}));
    for (auto label : {SystemLabel::F4, SystemLabel::B4, SystemLabel::D5, SystemLabel::A1}) {
        const auto& sys = root_system(label);
        CHECK(infinitesimal_character({label, Weight::zero(sys.rank())}) == sys.rho());
    }
    CHECK(infinitesimal_character(kMu) == Weight{4, 3, 2, 1});
}

TEST_CASE("theta_infchar_transfer") {
    const auto at11 = theta_infchar_transfer(11);
    CHECK(at11.value == root_system(SystemLabel::F4).rho());
    CHECK_FALSE(at11.singular);
    CHECK_FALSE(at11.nonpositive);
    for (long n = 0; n <= 20; ++n) CHECK(theta_infchar_transfer(2 * n + 11).value == infinitesimal_character(e_n(n)));

    const auto wall = theta_infchar_transfer(5);
    CHECK(wall.value == Weight::halves({5, 5, 3, 1}));
    CHECK(wall.singular);

    const auto negative = theta_infchar_transfer(-3);
    CHECK(negative.nonpositive);
    CHECK(negative.value == Weight::halves({-3, 5, 3, 1}));
    CHECK(root_system(SystemLabel::F4).is_dominant(negative.dominant));
}
