#pragma once

#include "thetalift/linalg.hpp"
#include "thetalift/weight.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace thetalift::sl2 {

struct LowestKind {
    std::int64_t n;  // lowest weight
};
struct HighestKind {
    std::int64_t m;  // highest weight is -m
};
struct TensorKind {
    std::int64_t n;
    std::int64_t m;
};
using ModuleKind = std::variant<LowestKind, HighestKind, TensorKind>;

/// Finite truncation of an sl2-module with exact matrices for e, h, f.
///
/// The truncated operators agree with the true ones on "interior" basis
/// vectors: those whose e- and f-images stay inside the truncation.
struct TruncatedModule {
    ModuleKind kind;
    std::size_t depth = 0;
    std::size_t depth_b = 0;  // second factor of a tensor module
    std::vector<std::string> basis_labels;
    SparseMatrix e, h, f;
    std::vector<bool> interior;

    std::size_t dimension() const { return basis_labels.size(); }
    /// Index of v_a (lowest/highest) in the basis.
    std::size_t index(std::size_t a) const;
    /// Index of v_a (x) w_b in a tensor module.
    std::size_t index(std::size_t a, std::size_t b) const;
};

/// delta(n): h v_a = (n+2a) v_a, e v_a = v_{a+1}, f v_a = -a(n+a-1) v_{a-1}.
TruncatedModule build_lowest_weight_module(std::int64_t n, std::size_t depth);

/// conj-delta(m): h w_b = (-m-2b) w_b, f w_b = w_{b+1}, e w_b = -b(m+b-1) w_{b-1}.
TruncatedModule build_highest_weight_module(std::int64_t m, std::size_t depth);

/// Basis v_a (x) w_b with the coproduct action x -> x(x)1 + 1(x)x.
TruncatedModule tensor_modules(const TruncatedModule& a, const TruncatedModule& b);

struct BracketDefects {
    std::size_t checked = 0;
    std::size_t he = 0;  // vectors where [h,e] != 2e
    std::size_t hf = 0;  // vectors where [h,f] != -2f
    std::size_t ef = 0;  // vectors where [e,f] != h
    bool ok() const { return he == 0 && hf == 0 && ef == 0; }
};

/// Checks the sl2 relations on every interior basis vector.
BracketDefects check_brackets(const TruncatedModule& module);

/// dim span { e^a f^b h^c . gen : a+b+c <= max_degree }.
/// Throws InputError("truncation too shallow") unless
/// max_degree <= depth/2 - 1.
std::size_t filtration_rank(const TruncatedModule& module, std::size_t generator,
                            std::size_t max_degree);

/// Casimir 1/2 h^2 + ef + fe acts on the generator by (p^2 - 1)/2; returns p >= 0.
Rational hc_parameter(const TruncatedModule& module);

/// Diagonal of h.
std::vector<std::int64_t> h_weights(const TruncatedModule& module);

/// SO(2)-type support of an (sl2, SO(2))-module. All weights are even.
class So2Support {
public:
    enum class Kind { Lowest, Highest, FullEven, Finite };

    static So2Support lowest(std::int64_t k);
    static So2Support highest(std::int64_t k);
    static So2Support full_even();
    static So2Support finite(std::set<std::int64_t> weights);

    Kind kind() const { return kind_; }
    std::int64_t bound() const { return bound_; }
    const std::set<std::int64_t>& weights() const { return weights_; }

    /// Throws InputError("odd SO(2) weight excluded") for odd w.
    bool contains(std::int64_t w) const;

    friend bool operator==(const So2Support&, const So2Support&) = default;

private:
    So2Support(Kind kind, std::int64_t bound, std::set<std::int64_t> weights);
    Kind kind_;
    std::int64_t bound_ = 0;
    std::set<std::int64_t> weights_;
};

inline bool support_membership(const So2Support& s, std::int64_t w) { return s.contains(w); }

/// "lowest(4)", "highest(-2)", "full_parity(even)", "finite{2,6}".
So2Support parse_support(std::string_view text);
std::string to_string(const So2Support& s);

}  // namespace thetalift::sl2
