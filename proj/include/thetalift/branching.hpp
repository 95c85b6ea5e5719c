#pragma once

#include "thetalift/characters.hpp"
#include "thetalift/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace thetalift {

/// Linear restriction of weights from a source system to a subsystem.
struct EmbeddingMap {
    std::string name;
    SystemLabel source_system;
    SystemLabel target_system;
    DenseMatrix matrix;  // target_rank x source_rank

    Weight apply(const Weight& w) const;
};

/// "B4_in_F4" (identity on coordinates) or "B4_in_D5" (drop the fifth).
EmbeddingMap make_embedding(std::string_view name);

/// Restricts rep along emb and peels the restricted character into target
/// irreducibles, always taking the lexicographically greatest residual
/// weight. Throws ConsistencyError("inconsistent embedding") on a negative
/// residual or a dimension mismatch.
DecompositionList branch(const IrrepLabel& rep, const EmbeddingMap& emb);

/// Decomposes an arbitrary W-invariant weight multiset into irreducibles
/// of `system` by repeated peeling. Shared by branch and the tensor oracle.
DecompositionList peel(SystemLabel system, WeightMultiplicities residual);

/// K-type tau(m, n) of highest weight m*lambda + n*mu = (2m+n, n, n, n)/2.
struct TauLabel {
    std::int64_t m = 0;
    std::int64_t n = 0;

    Weight highest_weight() const;
    IrrepLabel irrep() const { return {SystemLabel::B4, highest_weight()}; }
    friend auto operator<=>(const TauLabel&, const TauLabel&) = default;
};

std::string to_string(const TauLabel& tau);

struct TauClassification {
    std::vector<std::pair<TauLabel, std::int64_t>> taus;
    DecompositionList failures;  // constituents not of the form tau(m, n)

    bool closed() const { return failures.empty(); }
};

/// Rewrites B4 constituents as tau(m, n) where possible.
TauClassification classify_tau(const DecompositionList& dec);

/// Inverse of TauLabel::highest_weight; nullopt if w is not of tau shape.
std::optional<TauLabel> as_tau(const Weight& w);

}  // namespace thetalift
