#include "doctest.h"

#include "thetalift/branching.hpp"
#include "thetalift/error.hpp"
#include "thetalift/oracles.hpp"

#include <algorithm>

using namespace thetalift;

namespace {

std::vector<TauLabel> tau_list(const DecompositionList& dec) {
    std::vector<TauLabel> out;
    auto c = classify_tau(dec);
    REQUIRE(c.closed());
    for (const auto& [tau, mult] : c.taus) {
        CHECK(mult == 1);
        out.push_back(tau);
    }
    std::sort(out.begin(), out.end());
    return out;
}

DecompositionList sorted(DecompositionList d) {
    std::sort(d.begin(), d.end(), [](const auto& a, const auto& b) {
        return a.irrep.highest_weight < b.irrep.highest_weight;
    });
    return d;
}

}  // namespace

TEST_CASE("embeddings") {
    const auto f4 = make_embedding("B4_in_F4");
    const auto d5 = make_embedding("B4_in_D5");
    CHECK(f4.apply(Weight::halves({1, 1, 1, 1})) == Weight::halves({1, 1, 1, 1}));
    CHECK(d5.apply(Weight{3, 0, 0, 0, 0}) == Weight{3, 0, 0, 0});
    CHECK(d5.apply(Weight{1, 2, 3, 4, 5}) == Weight{1, 2, 3, 4});
    CHECK_THROWS_WITH_AS(make_embedding("B4_in_E6"), doctest::Contains("unknown embedding"), InputError);
}

TEST_CASE("F4 positive roots = B4 positive roots + the positive spin weights") {
    const auto emb = make_embedding("B4_in_F4");
    std::set<Weight> image;
    for (const auto& r : root_system(SystemLabel::F4).positive_roots()) image.insert(emb.apply(r));
    std::set<Weight> expected(root_system(SystemLabel::B4).positive_roots().begin(),
                              root_system(SystemLabel::B4).positive_roots().end());
    int spin = 0;
    for (const auto& w : root_system(SystemLabel::B4).weyl_orbit(Weight::halves({1, 1, 1, 1})))
        if (w[0] > 0) {
            expected.insert(w);
            ++spin;
        }
    CHECK(spin == 8);
    CHECK(image == expected);
    CHECK(image.size() == 24);
}

TEST_CASE("branch F4 -> B4") {
    const auto emb = make_embedding("B4_in_F4");
    CHECK(tau_list(branch(e_n(0), emb)) == std::vector<TauLabel>{{0, 0}});

    const auto e1 = branch(e_n(1), emb);
    CHECK(tau_list(e1) == std::vector<TauLabel>{{0, 0}, {0, 1}, {1, 0}});
    std::vector<std::int64_t> dims;
    for (const auto& entry : e1) dims.push_back(weyl_dim(entry.irrep));
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<std::int64_t>{1, 9, 16});

    for (long n = 0; n <= 3; ++n) {
        CAPTURE(n);
        const auto dec = branch(e_n(n), emb);
        CHECK(total_dimension(dec) == weyl_dim(e_n(n)));
        CHECK(classify_tau(dec).closed());
    }
}

TEST_CASE("branch D5 (m,0,0,0,0) -> tau(0,0) + ... + tau(m,0)") {
    const auto emb = make_embedding("B4_in_D5");
    for (long m = 0; m <= 6; ++m) {
        CAPTURE(m);
        Weight hw(5);
        hw[0] = m;
        std::vector<TauLabel> expected;
        for (long k = 0; k <= m; ++k) expected.push_back({k, 0});
        CHECK(tau_list(branch({SystemLabel::D5, hw}, emb)) == expected);
    }
}

TEST_CASE("D5 -> B4 branching agrees with interlacing") {
    const auto emb = make_embedding("B4_in_D5");
    const auto& d5 = root_system(SystemLabel::D5);
    int tested = 0;
    // Highest weights with at most two nonzero coordinates.
    for (long a = 0; a <= 6; ++a)
        for (long b = 0; b <= a; ++b)
            for (bool spinor : {false, true}) {
                Weight hw(5);
                if (spinor) {
                    hw = Weight::halves({2 * a + 1, 2 * b + 1, 1, 1, 1});
                    if (a > 2) continue;
                } else {
                    hw[0] = a;
                    hw[1] = b;
                }
                IrrepLabel rep{SystemLabel::D5, hw};
                if (!d5.is_dominant_integral(hw) || weyl_dim(rep) > 5000) continue;
                CAPTURE(to_string(rep));
                CHECK(sorted(branch(rep, emb)) == sorted(oracle::d5_to_b4_interlacing(hw)));
                ++tested;
            }
    CHECK(tested >= 15);

    // Negative last coordinate and a non-tau constituent mix.
    Weight hw = Weight::halves({3, 1, 1, 1, -1});
    CHECK(sorted(branch({SystemLabel::D5, hw}, emb)) == sorted(oracle::d5_to_b4_interlacing(hw)));
}

TEST_CASE("classify_tau") {
    const DecompositionList single{{{SystemLabel::B4, Weight{1, 0, 0, 0}}, 1}};
    auto c = classify_tau(single);
    REQUIRE(c.closed());
    CHECK(c.taus.front().first == TauLabel{1, 0});

    const DecompositionList bad{{{SystemLabel::B4, Weight{1, 1, 0, 0}}, 1}};
    auto f = classify_tau(bad);
    CHECK_FALSE(f.closed());
    CHECK(f.failures.size() == 1);
    CHECK(f.taus.empty());

    for (long m = 0; m <= 5; ++m)
        for (long n = 0; n <= 5; ++n) {
            TauLabel t{m, n};
            CHECK(t.highest_weight() == Weight::halves({2 * m + n, n, n, n}));
            CHECK(as_tau(t.highest_weight()) == t);
        }
}

TEST_CASE("branch errors") {
    CHECK_THROWS_AS(branch({SystemLabel::B4, Weight{1, 0, 0, 0}}, make_embedding("B4_in_F4")), InputError);
    // A multiset that is not a character cannot be peeled.
    WeightMultiplicities not_a_character{{Weight{1, 0, 0, 0}, 1}};
    CHECK_THROWS_WITH_AS(peel(SystemLabel::B4, not_a_character), doctest::Contains("inconsistent embedding"),
                         ConsistencyError);
}
