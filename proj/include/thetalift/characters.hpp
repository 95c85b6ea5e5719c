#pragma once

#include "thetalift/root_system.hpp"
#include "thetalift/weight.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace thetalift {

/// Irreducible finite-dimensional representation, named by its highest weight.
struct IrrepLabel {
    SystemLabel system;
    Weight highest_weight;

    friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
};

/// Throws InputError("invalid highest weight") unless the weight is dominant
/// integral of the right length.
void validate(const IrrepLabel& rep);
std::string to_string(const IrrepLabel& rep);

using WeightMultiplicities = std::map<Weight, std::int64_t>;

/// Character of a finite-dimensional representation. Multiplicities are
/// stored on dominant weights only; everything else is recovered through
/// the Weyl group.
class FormalCharacter {
public:
    FormalCharacter(SystemLabel system, WeightMultiplicities dominant);

    SystemLabel system() const { return system_; }
    const WeightMultiplicities& dominant() const { return dominant_; }

    std::int64_t multiplicity(const Weight& w) const;
    /// Full sparse map over all weights.
    WeightMultiplicities expanded() const;
    std::int64_t dimension() const;

private:
    SystemLabel system_;
    WeightMultiplicities dominant_;
};

struct DecompositionEntry {
    IrrepLabel irrep;
    std::int64_t multiplicity;

    friend bool operator==(const DecompositionEntry&, const DecompositionEntry&) = default;
};

/// Sorted by highest weight, lexicographically decreasing; labels distinct.
using DecompositionList = std::vector<DecompositionEntry>;

std::int64_t total_dimension(const DecompositionList& dec);

/// Weyl dimension formula, prod over positive roots of (L+rho, a)/(rho, a).
std::int64_t weyl_dim(const IrrepLabel& rep);

/// Freudenthal recursion on dominant weights, processed in order of
/// increasing depth below the highest weight. Results are memoized; the
/// cache is safe for concurrent use.
std::shared_ptr<const FormalCharacter> freudenthal_character(const IrrepLabel& rep);

/// Brauer-Klimyk: sum over weights mu of b of m(mu) * sign(w) [w(La+mu+rho)-rho].
DecompositionList tensor_decompose(const IrrepLabel& a, const IrrepLabel& b);

/// Dominant representative of La + rho.
Weight infinitesimal_character(const IrrepLabel& rep);

struct InfcharTransfer {
    Weight value;            // (x, 5, 3, 1)/2 as written
    Weight dominant;         // its dominant F4 representative
    bool singular = false;   // lies on a wall of the F4 Weyl chamber
    bool nonpositive = false;  // x <= 0: reported unnormalized
};

/// SL2 infinitesimal character x to the F4 parameter (x, 5, 3, 1)/2.
InfcharTransfer theta_infchar_transfer(const Rational& x);

/// Highest weight n * varpi_4 of F4.
IrrepLabel e_n(std::int64_t n);

}  // namespace thetalift
