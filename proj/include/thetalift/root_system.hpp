#pragma once

#include "thetalift/weight.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace thetalift {

enum class SystemLabel { F4, B4, D5, A1 };

SystemLabel parse_system_label(std::string_view text);
std::string to_string(SystemLabel label);

/// Root datum of one of the supported simple systems, in its standard
/// coordinate realization:
///
///   F4: e2-e3, e3-e4, e4, (e1-e2-e3-e4)/2
///   B4: e1-e2, e2-e3, e3-e4, e4
///   D5: e1-e2, e2-e3, e3-e4, e4-e5, e4+e5
///   A1: (2)            (one coordinate; weights read as h-eigenvalues)
///
/// Immutable after construction.
class RootSystem {
public:
    explicit RootSystem(SystemLabel label);

    SystemLabel label() const { return label_; }
    std::size_t rank() const { return simple_roots_.size(); }
    const std::vector<Weight>& simple_roots() const { return simple_roots_; }
    /// Sorted lexicographically decreasing.
    const std::vector<Weight>& positive_roots() const { return positive_roots_; }
    const Weight& rho() const { return rho_; }
    const std::vector<Weight>& fundamental_weights() const { return fundamental_weights_; }
    std::int64_t weyl_order() const { return weyl_order_; }

    Rational form(const Weight& a, const Weight& b) const { return dot(a, b); }

    /// 2(w, alpha)/(alpha, alpha)
    Rational coroot_pairing(const Weight& w, const Weight& alpha) const;
    Weight reflect(const Weight& w, const Weight& alpha) const;

    /// Coefficients of w in the basis of simple roots.
    std::vector<Rational> simple_root_coordinates(const Weight& w) const;

    /// Coordinates of w in the basis of fundamental weights (Dynkin labels).
    std::vector<Rational> dynkin_labels(const Weight& w) const;
    Weight from_dynkin_labels(const std::vector<Rational>& labels) const;

    bool is_dominant(const Weight& w) const;
    /// Dominant and integral: every Dynkin label is a nonnegative integer.
    bool is_dominant_integral(const Weight& w) const;
    /// True iff some positive root is orthogonal to w.
    bool is_singular(const Weight& w) const;

    Weight dominant_representative(const Weight& w) const;

    struct SignedDominant {
        Weight weight;
        int sign;  // (-1)^(number of simple reflections used)
    };
    /// Dominant representative plus the sign of the Weyl element reaching it.
    SignedDominant dominant_with_sign(const Weight& w) const;

    std::set<Weight> weyl_orbit(const Weight& w) const;

    /// True iff hi - lo is a nonnegative integer combination of simple roots.
    bool dominates(const Weight& hi, const Weight& lo) const;

    /// Height of hi - lo in simple-root coordinates.
    Rational depth_below(const Weight& hi, const Weight& lo) const;

    void check_weight(const Weight& w) const;

private:
    SystemLabel label_;
    std::vector<Weight> simple_roots_;
    std::vector<Rational> simple_norms_;
    std::vector<Weight> positive_roots_;
    Weight rho_;
    std::vector<Weight> fundamental_weights_;
    // Inverse of the matrix whose columns are the simple roots.
    std::vector<std::vector<Rational>> simple_inverse_;
    // Inverse of the matrix whose rows are the simple coroots.
    std::vector<std::vector<Rational>> coroot_inverse_;
    std::int64_t weyl_order_ = 0;
};

/// Shared immutable instance for a label.
const RootSystem& root_system(SystemLabel label);

/// Convenience wrappers matching the operation names used in docs.
inline const RootSystem& build_root_system(SystemLabel label) { return root_system(label); }

}  // namespace thetalift
