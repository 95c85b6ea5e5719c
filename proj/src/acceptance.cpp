#include "thetalift/acceptance.hpp"

#include "thetalift/branching.hpp"
#include "thetalift/characters.hpp"
#include "thetalift/error.hpp"
#include "thetalift/oracles.hpp"
#include "thetalift/sl2_lab.hpp"
#include "thetalift/theta_engine.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

namespace thetalift::acceptance {

namespace {

using thetalift::to_string;

/// Collects failures; the check passes iff nothing was recorded.
class Checker {
public:
    template <typename A, typename B>
    void equal(const A& actual, const B& expected, const std::string& what) {
        ++count_;
        if (!(actual == expected)) failures_.push_back(what);
    }
    void expect(bool ok, const std::string& what) {
        ++count_;
        if (!ok) failures_.push_back(what);
    }
    const std::vector<std::string>& failures() const { return failures_; }
    int count() const { return count_; }

private:
    std::vector<std::string> failures_;
    int count_ = 0;
};

struct Settings {
    std::int64_t en_max;
    std::size_t filtration_max;   // criterion 5
    std::size_t lift_degree_max;  // criterion 6
};

Settings settings_for(Profile profile) {
    if (profile == Profile::Quick) return {2, 8, 5};
    return {3, 12, 8};
}

std::string str(std::int64_t v) { return std::to_string(v); }

Weight d5_vector(std::int64_t m) {
    Weight w(5);
    w[0] = m;
    return w;
}

DecompositionList sorted(DecompositionList d) {
    std::sort(d.begin(), d.end(), [](const auto& a, const auto& b) {
        return a.irrep.highest_weight < b.irrep.highest_weight;
    });
    return d;
}

const std::vector<std::pair<long, long>> kTruncationPairs{{8, 4}, {10, 4}, {9, 5}, {12, 4}};
const std::vector<std::pair<long, long>> kLiftSamples{{0, 0}, {1, 0}, {0, 1}, {2, 3}, {5, 5},
                                                     {10, 0}, {0, 10}, {10, 10}, {3, 7}};

void dimension_triple(Checker& c, const Settings&) {
    c.equal(weyl_dim({SystemLabel::F4, Weight{1, 0, 0, 0}}), 26, "dim (F4, varpi4) != 26");
    c.equal(weyl_dim({SystemLabel::B4, Weight::halves({1, 1, 1, 1})}), 16, "dim (B4, mu) != 16");
    c.equal(weyl_dim({SystemLabel::B4, Weight{1, 0, 0, 0}}), 9, "dim (B4, lambda) != 9");
}

void infinitesimal_characters(Checker& c, const Settings&) {
    for (long n = 0; n <= 20; ++n) {
        const Weight infchar = infinitesimal_character(e_n(n));
        c.equal(infchar, Weight::halves({2 * n + 11, 5, 3, 1}), "infchar(E_" + str(n) + ") = " + to_string(infchar));
        const Rational p = sl2::hc_parameter(sl2::build_lowest_weight_module(2 * n + 12, 1));
        c.equal(p, Rational(2 * n + 11), "hc_parameter(delta(" + str(2 * n + 12) + ")) = " + to_string(p));
        c.equal(p, 2 * infchar[0], "sl2 parameter is not the first entry for n = " + str(n));
    }
}

void fm_restriction(Checker& c, const Settings&) {
    const auto emb = make_embedding("B4_in_D5");
    for (long m = 1; m <= 6; ++m) {
        const auto dec = branch({SystemLabel::D5, d5_vector(m)}, emb);
        std::vector<TauLabel> taus;
        auto classified = classify_tau(dec);
        c.expect(classified.closed(), "D5 (" + str(m) + ",0,0,0,0) has non-tau constituents");
        for (const auto& [tau, mult] : classified.taus) {
            c.equal(mult, 1, "multiplicity of " + to_string(tau) + " for m = " + str(m));
            taus.push_back(tau);
        }
        std::sort(taus.begin(), taus.end());
        std::vector<TauLabel> expected;
        for (long k = 0; k <= m; ++k) expected.push_back({k, 0});
        c.equal(taus, expected, "restriction of D5 (" + str(m) + ",0,0,0,0) is not tau(0,0)+...+tau(m,0)");
        c.equal(theta::lift_so2type(2 * m + 4).ktype_bound, taus, "lift_so2type bound mismatch for m = " + str(m));
    }
}

void tau_closure(Checker& c, const Settings& s) {
    const auto emb = make_embedding("B4_in_F4");
    for (long n = 0; n <= s.en_max; ++n) {
        const auto dec = branch(e_n(n), emb);
        c.equal(total_dimension(dec), weyl_dim(e_n(n)), "dimension not conserved for E_" + str(n));
        const auto classified = classify_tau(dec);
        c.expect(classified.closed(), "E_" + str(n) + " has " + str(static_cast<long>(classified.failures.size())) +
                                          " non-tau constituents");
        if (n == 1) {
            std::vector<TauLabel> taus;
            for (const auto& [tau, mult] : classified.taus) {
                c.equal(mult, 1, "E_1 multiplicity of " + to_string(tau));
                taus.push_back(tau);
            }
            std::sort(taus.begin(), taus.end());
            c.equal(taus, std::vector<TauLabel>{{0, 0}, {0, 1}, {1, 0}}, "E_1 does not restrict to tau(0,0)+tau(1,0)+tau(0,1)");
        }
    }
}

void truncation_isomorphism(Checker& c, const Settings& s) {
    const std::size_t depth = 2 * (s.filtration_max + 1);
    for (auto [n, m] : kTruncationPairs) {
        const auto model = sl2::tensor_modules(sl2::build_lowest_weight_module(n, depth),
                                               sl2::build_highest_weight_module(m, depth));
        for (std::size_t N = 0; N <= s.filtration_max; ++N) {
            const std::size_t rank = sl2::filtration_rank(model, model.index(0, 0), N);
            c.equal(rank, oracle::free_module_count(N),
                    "filtration rank " + std::to_string(rank) + " for (" + str(n) + "," + str(m) + "), N = " + std::to_string(N));
        }
    }
}

void generator_identity(Checker& c, const Settings& s) {
    for (long m = 0; m <= 10; ++m)
        for (long n = 0; n <= 10; ++n) {
            const auto lift = theta::lift_ktype(m, n);
            c.equal(lift.generator_so2_weight, 2 * m + 4, "generator weight of " + to_string(TauLabel{m, n}));
            c.equal(lift.lowest_factor - lift.highest_factor, 2 * m + 4, "factor difference of " + to_string(TauLabel{m, n}));
        }
    for (auto [m, n] : kLiftSamples) {
        const auto check = theta::cross_validate(theta::lift_ktype(m, n), s.lift_degree_max);
        c.expect(check.ok, "sl2 model of the lift of " + to_string(TauLabel{m, n}) + " failed");
    }
}

void lowest_type_matching(Checker& c, const Settings&) {
    using sl2::So2Support;
    const std::vector<std::pair<So2Support, std::int64_t>> nonvanishing{
        {So2Support::lowest(4), 0}, {So2Support::lowest(6), 1}, {So2Support::lowest(8), 2},
        {So2Support::lowest(12), 4}, {So2Support::full_even(), 0}};
    for (const auto& [sigma, m] : nonvanishing) {
        const auto report = theta::match_lowest_types(sigma);
        const std::string name = to_string(sigma);
        c.expect(report.pass, "match_lowest_types failed for " + name);
        c.expect(!report.theta_vanishes, "lift vanishes for " + name);
        c.expect(report.lowest_ktype == TauLabel{m, 0}, "lowest K-type for " + name);
        for (int d : report.hom_chain_dims()) c.equal(d, 1, "Hom chain dimension for " + name);
        for (int d : report.below_dims) c.equal(d, 0, "smaller type present for " + name);
        const auto support = theta::theta_support(sigma);
        c.expect(support.contains({m, 0}), "support misses the lowest type for " + name);
        for (std::int64_t j = 0; j < m; ++j)
            c.expect(!support.contains({j, 0}), "support contains a smaller tau for " + name);
    }
    for (const auto& sigma : {So2Support::highest(-2), So2Support::highest(-6)}) {
        c.expect(theta::theta_support(sigma).vanishes, "lift of " + to_string(sigma) + " does not vanish");
        c.expect(theta::match_lowest_types(sigma).theta_vanishes, "matching reports nonzero lift for " + to_string(sigma));
    }
    for (const auto& sigma : {So2Support::lowest(4), So2Support::lowest(6), So2Support::lowest(8),
                              So2Support::lowest(12), So2Support::full_even()})
        c.expect(!theta::theta_support(sigma).vanishes, "lift of " + to_string(sigma) + " vanishes");
}

std::vector<std::pair<IrrepLabel, IrrepLabel>> tensor_instances() {
    auto b4 = [](std::initializer_list<long> h) { return IrrepLabel{SystemLabel::B4, Weight::halves(h)}; };
    auto d5 = [](std::initializer_list<long> h) { return IrrepLabel{SystemLabel::D5, Weight::halves(h)}; };
    const IrrepLabel a1_3{SystemLabel::A1, Weight{3}};
    const IrrepLabel a1_4{SystemLabel::A1, Weight{4}};
    return {
        {b4({2, 0, 0, 0}), b4({2, 0, 0, 0})},
        {b4({2, 0, 0, 0}), b4({1, 1, 1, 1})},
        {b4({1, 1, 1, 1}), b4({1, 1, 1, 1})},
        {b4({0, 0, 0, 0}), b4({3, 1, 1, 1})},
        {b4({2, 2, 0, 0}), b4({1, 1, 1, 1})},
        {b4({3, 1, 1, 1}), b4({2, 0, 0, 0})},
        {b4({4, 0, 0, 0}), b4({2, 2, 0, 0})},
        {e_n(1), e_n(1)},
        {e_n(1), e_n(2)},
        {d5({2, 0, 0, 0, 0}), d5({1, 1, 1, 1, 1})},
        {d5({1, 1, 1, 1, 1}), d5({1, 1, 1, 1, -1})},
        {d5({2, 2, 0, 0, 0}), d5({2, 0, 0, 0, 0})},
        {a1_3, a1_4},
    };
}

void oracle_equivalences(Checker& c, const Settings&) {
    for (const auto& [a, b] : tensor_instances()) {
        const std::int64_t product_dim = weyl_dim(a) * weyl_dim(b);
        c.expect(product_dim <= 10000, "tensor instance exceeds the product-dimension bound");
        c.equal(tensor_decompose(a, b), oracle::tensor_by_character_product(a, b),
                "Brauer-Klimyk != character product for " + to_string(a) + " x " + to_string(b));
    }
    const auto emb = make_embedding("B4_in_D5");
    for (long m = 1; m <= 6; ++m)
        c.equal(sorted(branch({SystemLabel::D5, d5_vector(m)}, emb)), sorted(oracle::d5_to_b4_interlacing(d5_vector(m))),
                "branching != interlacing for D5 (" + str(m) + ",0,0,0,0)");
}

void structural_invariants(Checker& c, const Settings& s) {
    const std::vector<std::pair<SystemLabel, std::int64_t>> orders{
        {SystemLabel::F4, 1152}, {SystemLabel::B4, 384}, {SystemLabel::D5, 1920}, {SystemLabel::A1, 2}};
    for (auto [label, order] : orders) {
        c.equal(root_system(label).weyl_order(), order, "Weyl order of " + to_string(label) + " via rho-orbit");
        c.equal(oracle::weyl_group_order_by_matrices(label), order, "Weyl order of " + to_string(label) + " via matrices");
    }

    const std::size_t depth = 2 * (s.filtration_max + 1);
    for (auto [n, m] : kTruncationPairs) {
        c.expect(sl2::check_brackets(sl2::build_lowest_weight_module(n, depth)).ok(), "brackets on delta(" + str(n) + ")");
        c.expect(sl2::check_brackets(sl2::build_highest_weight_module(m, depth)).ok(), "brackets on conj-delta(" + str(m) + ")");
        c.expect(sl2::check_brackets(sl2::tensor_modules(sl2::build_lowest_weight_module(n, depth),
                                                         sl2::build_highest_weight_module(m, depth)))
                     .ok(),
                 "brackets on the tensor model (" + str(n) + "," + str(m) + ")");
    }
    for (auto [m, n] : kLiftSamples) {
        const auto lift = theta::lift_ktype(m, n);
        const std::size_t d = 2 * (s.lift_degree_max + 1);
        c.expect(sl2::check_brackets(sl2::tensor_modules(sl2::build_lowest_weight_module(lift.lowest_factor, d),
                                                         sl2::build_highest_weight_module(lift.highest_factor, d)))
                     .ok(),
                 "brackets on the lift model of " + to_string(TauLabel{m, n}));
    }

    // branch throws ConsistencyError on any negative residual.
    for (long n = 0; n <= s.en_max; ++n) {
        try {
            branch(e_n(n), make_embedding("B4_in_F4"));
            c.expect(true, "");
        } catch (const ConsistencyError& e) {
            c.expect(false, std::string("E_") + str(n) + ": " + e.what());
        }
    }
    for (long m = 1; m <= 6; ++m) {
        try {
            branch({SystemLabel::D5, d5_vector(m)}, make_embedding("B4_in_D5"));
            c.expect(true, "");
        } catch (const ConsistencyError& e) {
            c.expect(false, std::string("D5 m = ") + str(m) + ": " + e.what());
        }
    }
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    void (*run)(Checker&, const Settings&);
};

const Criterion kCriteria[] = {
    {1, "dimension triple 26/16/9", 1, dimension_triple},
    {2, "infinitesimal character of E_n", 1, infinitesimal_characters},
    {3, "F_m restriction D5 -> B4", 10, fm_restriction},
    {4, "tau-closure of the K-types of E_n", 120, tau_closure},
    {5, "free-module isomorphism at truncation", 30, truncation_isomorphism},
    {6, "K-type lift generator weight", 30, generator_identity},
    {7, "lowest-type matching and nonvanishing", 1, lowest_type_matching},
    {8, "oracle equivalences", 60, oracle_equivalences},
    {9, "structural invariants", 30, structural_invariants},
};

}  // namespace

Profile parse_profile(std::string_view text) {
    if (text == "quick") return Profile::Quick;
    if (text == "full") return Profile::Full;
    throw InputError("unknown profile '" + std::string(text) + "'");
}

std::string to_string(Profile profile) { return profile == Profile::Quick ? "quick" : "full"; }

std::vector<CheckResult> run_all(Profile profile, const std::function<void(const CheckResult&)>& on_result) {
    const Settings settings = settings_for(profile);
    std::vector<CheckResult> results;
    for (const auto& criterion : kCriteria) {
        CheckResult result;
        result.id = criterion.id;
        result.name = criterion.name;
        result.budget_seconds = criterion.budget_seconds;

        Checker checker;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(checker, settings);
        } catch (const std::exception& e) {
            checker.expect(false, std::string("exception: ") + e.what());
        }
        result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        result.details = checker.failures();
        const bool within_budget = result.elapsed_seconds < result.budget_seconds;
        if (!within_budget) result.details.push_back("runtime budget exceeded");
        result.pass = checker.failures().empty() && within_budget;
        result.details.push_back(std::to_string(checker.count()) + " assertions");
        if (on_result) on_result(result);
        results.push_back(std::move(result));
    }
    return results;
}

std::string format_line(const CheckResult& result) {
    std::ostringstream out;
    out << (result.pass ? "PASS" : "FAIL") << "  [" << result.id << "] " << result.name << "  ("
        << std::fixed << std::setprecision(3) << result.elapsed_seconds << " s / budget "
        << std::setprecision(0) << result.budget_seconds << " s)";
    for (const auto& d : result.details)
        if (!result.pass || &d == &result.details.back()) out << "\n      " << d;
    return out.str();
}

}  // namespace thetalift::acceptance
