#include "thetalift/theta_engine.hpp"

#include "thetalift/error.hpp"

#include <algorithm>
#include <future>

namespace thetalift::theta {

KTypeLift lift_ktype(std::int64_t m, std::int64_t n) {
    if (m < 0 || n < 0) throw InputError("lift_ktype requires m, n >= 0");
    KTypeLift lift;
    lift.m = m;
    lift.n = n;
    lift.lowest_factor = 2 * m + n + 8;
    lift.highest_factor = n + 4;
    lift.generator_so2_weight = lift.lowest_factor - lift.highest_factor;
    return lift;
}

KTypeLiftCheck cross_validate(const KTypeLift& lift, std::size_t max_degree) {
    const std::size_t depth = 2 * (max_degree + 1);
    const auto model = sl2::tensor_modules(sl2::build_lowest_weight_module(lift.lowest_factor, depth),
                                           sl2::build_highest_weight_module(lift.highest_factor, depth));
    const std::size_t gen = model.index(0, 0);

    KTypeLiftCheck check;
    check.model_generator_weight = model.h.get(gen, gen).get_num().get_si();
    check.ok = check.model_generator_weight == 2 * lift.m + 4 && check_brackets(model).ok();
    for (std::size_t N = 0; N <= max_degree; ++N) {
        const std::size_t rank = sl2::filtration_rank(model, gen, N);
        check.filtration_ranks.push_back(rank);
        check.ok = check.ok && rank == (N + 1) * (N + 2) / 2;
    }
    return check;
}

So2TypeLift lift_so2type(std::int64_t k) {
    if (k % 2 != 0) throw InputError("odd SO(2) weight excluded: " + std::to_string(k));
    So2TypeLift lift;
    lift.k = k;
    lift.m = (k - 4) / 2;
    lift.out_of_theorem_scope = lift.m < 0;

    if (lift.m <= 0) {
        lift.ktype_bound = {TauLabel{0, 0}};
        return lift;
    }

    for (std::int64_t j = 0; j <= lift.m; ++j) lift.ktype_bound.push_back({j, 0});

    Weight d5(5);
    d5[0] = lift.m;
    lift.d5_label = d5;
    const auto classified = classify_tau(branch({SystemLabel::D5, d5}, make_embedding("B4_in_D5")));
    std::vector<TauLabel> recomputed;
    for (const auto& [tau, mult] : classified.taus)
        for (std::int64_t c = 0; c < mult; ++c) recomputed.push_back(tau);
    std::sort(recomputed.begin(), recomputed.end());
    if (!classified.closed() || recomputed != lift.ktype_bound)
        throw ConsistencyError("restriction of D5 (" + std::to_string(lift.m) +
                               ",0,0,0,0) to B4 disagrees with tau(0,0) + ... + tau(m,0)");
    return lift;
}

int hom_dim_ktype(const So2Support& sigma, std::int64_t m, std::int64_t n) {
    if (m < 0 || n < 0) throw InputError("hom_dim_ktype requires m, n >= 0");
    return sigma.contains(2 * m + 4) ? 1 : 0;
}

bool ThetaSupport::contains(const TauLabel& tau) const {
    if (tau.m < 0 || tau.n < 0) return false;
    return hom_dim_ktype(sigma, tau.m, tau.n) == 1;
}

std::vector<TauLabel> ThetaSupport::enumerate(std::int64_t m_max, std::int64_t n_max) const {
    std::vector<TauLabel> out;
    for (std::int64_t m = 0; m <= m_max; ++m)
        for (std::int64_t n = 0; n <= n_max; ++n)
            if (contains({m, n})) out.push_back({m, n});
    return out;
}

ThetaSupport theta_support(const So2Support& sigma) {
    ThetaSupport out{sigma, true, std::nullopt, std::nullopt, ""};
    using Kind = So2Support::Kind;
    // m is admissible iff 2m+4 lies in supp(sigma) and m >= 0.
    switch (sigma.kind()) {
        case Kind::Lowest:
            out.minimal_m = std::max<std::int64_t>(0, (sigma.bound() - 4) / 2);
            break;
        case Kind::Highest:
            if (sigma.bound() >= 4) {
                out.minimal_m = 0;
                out.maximal_m = (sigma.bound() - 4) / 2;
            }
            break;
        case Kind::FullEven:
            out.minimal_m = 0;
            break;
        case Kind::Finite:
            for (auto w : sigma.weights())
                if (w >= 4) {
                    const std::int64_t m = (w - 4) / 2;
                    if (!out.minimal_m) out.minimal_m = m;
                    out.maximal_m = m;
                }
            break;
    }
    out.vanishes = !out.minimal_m.has_value();
    if (out.vanishes) {
        out.rule = "empty: no SO(2)-type 2m+4 with m >= 0 in " + to_string(sigma);
    } else {
        out.rule = "{tau(m,n) : 2m+4 in " + to_string(sigma) + ", m >= 0, n >= 0}, multiplicity 1";
    }
    return out;
}

std::vector<int> PairingReport::hom_chain_dims() const {
    std::vector<int> dims;
    for (const auto& step : hom_chain) dims.push_back(step.dimension);
    return dims;
}

PairingReport match_lowest_types(const So2Support& sigma) {
    PairingReport report;
    report.sigma = sigma;
    const ThetaSupport support = theta_support(sigma);
    if (support.vanishes) {
        report.theta_vanishes = true;
        report.pass = true;
        report.reasons.push_back("Theta(sigma) = 0: sigma has no SO(2)-type 2m+4 with m >= 0");
        return report;
    }

    const std::int64_t m = *support.minimal_m;
    report.minimal_m = m;
    report.lowest_ktype = TauLabel{m, 0};

    for (std::int64_t j = 0; j < m; ++j) report.below_dims.push_back(hom_dim_ktype(sigma, j, 0));

    // Chain from sigma to pi: Hom_K(pi, tau(m,0)) in Hom_K(Theta(sigma), tau(m,0))
    //   = Hom_sl2(Theta(tau(m,0)), sigma) = Hom_SO(2)((2m+4), sigma).
    const int so2_mult = sigma.contains(2 * m + 4) ? 1 : 0;
    const int ktype_of_lift = support.contains({m, 0}) ? 1 : 0;
    const KTypeLift lift = lift_ktype(m, 0);
    const int frobenius = sigma.contains(lift.generator_so2_weight) ? 1 : 0;
    report.hom_chain.push_back({"Hom_K(Theta(sigma), tau(m,0))", ktype_of_lift});
    report.hom_chain.push_back({"Hom_sl2(Theta(tau(m,0)), sigma)", frobenius});
    report.hom_chain.push_back({"Hom_SO(2)((2m+4), sigma)", so2_mult});

    // Chain from pi back to sigma: Hom_SO(2)(sigma, (2m+4)) in Hom_SO(2)(Theta(pi), (2m+4))
    //   = Hom_g(Theta(2m+4), pi) in Hom_K(F_m, pi), where pi has no tau(n',0), n' < m.
    const So2TypeLift so2_lift = lift_so2type(2 * m + 4);
    const auto surviving = std::count_if(
        so2_lift.ktype_bound.begin(), so2_lift.ktype_bound.end(), [&](const TauLabel& t) {
            return !(t.n == 0 && t.m < m) && support.contains(t);
        });
    report.hom_chain.push_back({"Hom_SO(2)(sigma, (2m+4))", so2_mult});
    report.hom_chain.push_back({"Hom_K(F_m, pi) with no tau(n',0), n' < m", static_cast<int>(surviving)});

    // A quotient pi = pi1 + pi2 with both parts containing tau(m,0) would
    // need dim Hom_K(pi, tau(m,0)) = 2.
    report.split_count = 1 + 1;
    report.split_contradiction = report.split_count != ktype_of_lift;

    bool ok = true;
    for (std::size_t j = 0; j < report.below_dims.size(); ++j)
        if (report.below_dims[j] != 0) {
            ok = false;
            report.reasons.push_back("sigma contains the smaller type " + std::to_string(2 * j + 4));
        }
    for (const auto& step : report.hom_chain)
        if (step.dimension != 1) {
            ok = false;
            report.reasons.push_back(step.space + " has dimension " + std::to_string(step.dimension));
        }
    for (std::int64_t j = 0; j < m; ++j)
        if (support.contains({j, 0})) {
            ok = false;
            report.reasons.push_back("Theta(sigma) support contains " + to_string(TauLabel{j, 0}));
        }
    if (!report.split_contradiction) {
        ok = false;
        report.reasons.push_back("two-part quotient is not excluded");
    }
    if (ok)
        report.reasons.push_back("unique irreducible quotient; lowest K-type " +
                                 to_string(*report.lowest_ktype) + " with multiplicity one");
    report.pass = ok;
    return report;
}

So2Support dual_support(const So2Support& s) {
    using Kind = So2Support::Kind;
    switch (s.kind()) {
        case Kind::Lowest: return So2Support::highest(-s.bound());
        case Kind::Highest: return So2Support::lowest(-s.bound());
        case Kind::FullEven: return s;
        case Kind::Finite: {
            std::set<std::int64_t> negated;
            for (auto w : s.weights()) negated.insert(-w);
            return So2Support::finite(std::move(negated));
        }
    }
    return s;
}

namespace {

PiTableRow compute_row(std::int64_t n) {
    PiTableRow row;
    row.n = n;
    row.sl2_lowest_weight = 2 * n + 12;
    row.hc_parameter = sl2::hc_parameter(sl2::build_lowest_weight_module(row.sl2_lowest_weight, 1));
    const IrrepLabel en = e_n(n);
    row.dimension = weyl_dim(en);
    row.infinitesimal_character = infinitesimal_character(en);
    const DecompositionList dec = branch(en, make_embedding("B4_in_F4"));
    row.dimension_conserved = total_dimension(dec) == row.dimension;
    auto classified = classify_tau(dec);
    row.taus = std::move(classified.taus);
    row.non_tau = std::move(classified.failures);
    row.tau_closed = row.non_tau.empty();
    return row;
}

}  // namespace

std::vector<PiTableRow> pi_compact_table(std::int64_t n_max, std::int64_t dimension_cap) {
    if (n_max < 0) throw InputError("pi_compact_table requires n_max >= 0");
    for (std::int64_t n = 0; n <= n_max; ++n)
        if (weyl_dim(e_n(n)) > dimension_cap)
            throw InputError("cap exceeded: dim E_" + std::to_string(n) + " = " +
                             std::to_string(weyl_dim(e_n(n))) + " > " + std::to_string(dimension_cap));

    std::vector<std::future<PiTableRow>> jobs;
    for (std::int64_t n = 0; n <= n_max; ++n) jobs.push_back(std::async(std::launch::async, compute_row, n));
    std::vector<PiTableRow> rows;
    for (auto& job : jobs) rows.push_back(job.get());
    return rows;
}

}  // namespace thetalift::theta
