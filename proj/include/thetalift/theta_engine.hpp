#pragma once

#include "thetalift/branching.hpp"
#include "thetalift/characters.hpp"
#include "thetalift/sl2_lab.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace thetalift::theta {

using sl2::So2Support;

/// Lift of the K-type tau(m, n): the sl2 x sl2-module
/// delta(2m+n+8) (x) conj-delta(n+4), generated in SO(2)-weight 2m+4.
struct KTypeLift {
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::int64_t lowest_factor = 0;   // 2m+n+8
    std::int64_t highest_factor = 0;  // n+4, i.e. highest weight -(n+4)
    std::int64_t generator_so2_weight = 0;
};

KTypeLift lift_ktype(std::int64_t m, std::int64_t n);

struct KTypeLiftCheck {
    std::int64_t model_generator_weight = 0;
    std::vector<std::size_t> filtration_ranks;  // index N = 0..max_degree
    bool ok = false;
};

/// Builds the truncated tensor model of the lift and checks the generator
/// weight and the free-module rank pattern (N+1)(N+2)/2.
KTypeLiftCheck cross_validate(const KTypeLift& lift, std::size_t max_degree);

/// Lift of the SO(2)-type k = 2m+4: a quotient of U(g) (x)_{U(k)} F_m.
struct So2TypeLift {
    std::int64_t k = 0;
    std::int64_t m = 0;
    std::vector<TauLabel> ktype_bound;   // K-types of F_m
    std::optional<Weight> d5_label;      // (m,0,0,0,0) when m > 0
    bool out_of_theorem_scope = false;   // m < 0
};

/// For m > 0 the bound is recomputed by branching D5 (m,0,0,0,0) to B4 and
/// must agree with tau(0,0), ..., tau(m,0); disagreement throws
/// ConsistencyError.
So2TypeLift lift_so2type(std::int64_t k);

/// dim Hom_K(Theta(sigma), tau(m,n)) = dim Hom_SO(2)((2m+4), sigma).
int hom_dim_ktype(const So2Support& sigma, std::int64_t m, std::int64_t n);

/// K-types of Theta(sigma): all tau(m, n) with 2m+4 in supp(sigma), n >= 0,
/// each with multiplicity one.
struct ThetaSupport {
    So2Support sigma;
    bool vanishes = true;
    std::optional<std::int64_t> minimal_m;
    std::optional<std::int64_t> maximal_m;  // nullopt: unbounded (or vanishing)
    std::string rule;

    bool contains(const TauLabel& tau) const;
    /// All members with m <= m_max, n <= n_max.
    std::vector<TauLabel> enumerate(std::int64_t m_max, std::int64_t n_max) const;
};

ThetaSupport theta_support(const So2Support& sigma);

struct HomChainStep {
    std::string space;
    int dimension = 0;
};

/// Lowest-type matching of the uniqueness theorem, at the level of Hom
/// dimensions.
struct PairingReport {
    So2Support sigma = So2Support::full_even();
    bool theta_vanishes = false;
    std::optional<std::int64_t> minimal_m;
    std::optional<TauLabel> lowest_ktype;
    std::vector<int> below_dims;           // dim Hom_SO(2)((2n'+4), sigma), n' < m
    std::vector<HomChainStep> hom_chain;   // every entry must be 1
    int split_count = 0;                   // 1 + 1 for a two-part quotient
    bool split_contradiction = false;      // split_count != dim Hom_K(pi, tau(m,0))
    bool pass = false;
    std::vector<std::string> reasons;

    std::vector<int> hom_chain_dims() const;
};

PairingReport match_lowest_types(const So2Support& sigma);

/// Contragredient on SO(2)-types: negate every weight.
So2Support dual_support(const So2Support& s);

/// One summand delta(2n+12) (x) E_n of the compact-case decomposition.
struct PiTableRow {
    std::int64_t n = 0;
    std::int64_t sl2_lowest_weight = 0;  // 2n+12
    Rational hc_parameter;               // from the sl2 model
    std::int64_t dimension = 0;          // dim E_n
    Weight infinitesimal_character;
    std::vector<std::pair<TauLabel, std::int64_t>> taus;
    DecompositionList non_tau;           // constituents failing the tau shape
    bool dimension_conserved = false;
    bool tau_closed = false;
};

constexpr std::int64_t kDefaultDimensionCap = 20000;

/// Rows for n = 0..n_max, computed concurrently and ordered by n. Throws
/// InputError("cap exceeded") when some dim E_n exceeds the cap.
std::vector<PiTableRow> pi_compact_table(std::int64_t n_max,
                                         std::int64_t dimension_cap = kDefaultDimensionCap);

}  // namespace thetalift::theta
