#include "thetalift/characters.hpp"

#include "thetalift/error.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>

namespace thetalift {

namespace {

std::int64_t to_int64(const Rational& q, const char* what) {
    if (!is_integer(q)) throw ConsistencyError(std::string(what) + " is not an integer: " + q.get_str());
    const Integer& z = q.get_num();
    if (!z.fits_slong_p()) throw InputError(std::string(what) + " exceeds 64-bit range");
    return z.get_si();
}

// Dominant weights of V(top): closed under subtracting positive roots while
// staying dominant, and under taking dominant representatives of points on
// root strings below a dominant weight.
std::vector<Weight> dominant_weights(const RootSystem& sys, const Weight& top) {
    std::set<Weight> found{top};
    std::vector<Weight> frontier{top};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& mu : frontier) {
            for (const auto& alpha : sys.positive_roots()) {
                const Rational reach = sys.coroot_pairing(mu, alpha);
                Weight down = mu - alpha;
                if (sys.is_dominant(down) && found.insert(down).second) next.push_back(down);
                for (long k = 1; k <= reach; ++k) {
                    Weight d = sys.dominant_representative(mu - Rational(k) * alpha);
                    if (found.insert(d).second) next.push_back(std::move(d));
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<Weight> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
        return sys.depth_below(top, a) < sys.depth_below(top, b);
    });
    return out;
}

FormalCharacter compute_freudenthal(const IrrepLabel& rep) {
    const RootSystem& sys = root_system(rep.system);
    const Weight& top = rep.highest_weight;
    const Weight top_rho = top + sys.rho();
    const Rational top_norm = dot(top_rho, top_rho);

    WeightMultiplicities mult;
    for (const auto& mu : dominant_weights(sys, top)) {
        if (mu == top) {
            mult.emplace(mu, 1);
            continue;
        }
        Rational sum = 0;
        for (const auto& alpha : sys.positive_roots()) {
            for (long k = 1;; ++k) {
                Weight up = mu + Rational(k) * alpha;
                auto it = mult.find(sys.dominant_representative(up));
                if (it == mult.end()) break;  // root strings are unbroken
                sum += Rational(it->second) * dot(up, alpha);
            }
        }
        const Weight mu_rho = mu + sys.rho();
        const Rational m = 2 * sum / (top_norm - dot(mu_rho, mu_rho));
        const std::int64_t value = to_int64(m, "Freudenthal multiplicity");
        if (value < 0) throw ConsistencyError("negative Freudenthal multiplicity");
        if (value > 0) mult.emplace(mu, value);
    }
    return FormalCharacter(rep.system, std::move(mult));
}

struct CharacterCache {
    std::shared_mutex mutex;
    std::map<std::pair<SystemLabel, Weight>, std::shared_ptr<const FormalCharacter>> entries;
};

CharacterCache& character_cache() {
    static CharacterCache cache;
    return cache;
}

}  // namespace

void validate(const IrrepLabel& rep) {
    const RootSystem& sys = root_system(rep.system);
    if (!sys.is_dominant_integral(rep.highest_weight))
        throw InputError("invalid highest weight " + to_string(rep.highest_weight) + " for " +
                         to_string(rep.system));
}

std::string to_string(const IrrepLabel& rep) {
    return to_string(rep.system) + "(" + to_string(rep.highest_weight) + ")";
}

FormalCharacter::FormalCharacter(SystemLabel system, WeightMultiplicities dominant)
    : system_(system), dominant_(std::move(dominant)) {}

std::int64_t FormalCharacter::multiplicity(const Weight& w) const {
    auto it = dominant_.find(root_system(system_).dominant_representative(w));
    return it == dominant_.end() ? 0 : it->second;
}

WeightMultiplicities FormalCharacter::expanded() const {
    const RootSystem& sys = root_system(system_);
    WeightMultiplicities full;
    for (const auto& [mu, m] : dominant_)
        for (const auto& w : sys.weyl_orbit(mu)) full.emplace(w, m);
    return full;
}

std::int64_t FormalCharacter::dimension() const {
    const RootSystem& sys = root_system(system_);
    std::int64_t dim = 0;
    for (const auto& [mu, m] : dominant_) dim += m * static_cast<std::int64_t>(sys.weyl_orbit(mu).size());
    return dim;
}

std::int64_t total_dimension(const DecompositionList& dec) {
    std::int64_t total = 0;
    for (const auto& entry : dec) total += entry.multiplicity * weyl_dim(entry.irrep);
    return total;
}

std::int64_t weyl_dim(const IrrepLabel& rep) {
    validate(rep);
    const RootSystem& sys = root_system(rep.system);
    const Weight shifted = rep.highest_weight + sys.rho();
    Rational dim = 1;
    for (const auto& alpha : sys.positive_roots()) dim *= dot(shifted, alpha) / dot(sys.rho(), alpha);
    return to_int64(dim, "Weyl dimension");
}

std::shared_ptr<const FormalCharacter> freudenthal_character(const IrrepLabel& rep) {
    validate(rep);
    auto& cache = character_cache();
    auto key = std::make_pair(rep.system, rep.highest_weight);
    {
        std::shared_lock lock(cache.mutex);
        auto it = cache.entries.find(key);
        if (it != cache.entries.end()) return it->second;
    }
    auto computed = std::make_shared<const FormalCharacter>(compute_freudenthal(rep));
    std::unique_lock lock(cache.mutex);
    auto [it, inserted] = cache.entries.emplace(std::move(key), std::move(computed));
    return it->second;
}

DecompositionList tensor_decompose(const IrrepLabel& a, const IrrepLabel& b) {
    validate(a);
    validate(b);
    if (a.system != b.system)
        throw InputError("tensor of " + to_string(a.system) + " and " + to_string(b.system) +
                         " representations");
    const RootSystem& sys = root_system(a.system);
    const Weight base = a.highest_weight + sys.rho();

    std::map<Weight, std::int64_t> acc;
    for (const auto& [mu, m] : freudenthal_character(b)->expanded()) {
        Weight x = base + mu;
        if (sys.is_singular(x)) continue;
        auto [dom, sign] = sys.dominant_with_sign(x);
        acc[dom - sys.rho()] += sign * m;
    }

    DecompositionList out;
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
        if (it->second < 0)
            throw ConsistencyError("Brauer-Klimyk produced negative multiplicity at " +
                                   to_string(it->first));
        if (it->second > 0) out.push_back({{a.system, it->first}, it->second});
    }
    if (total_dimension(out) != weyl_dim(a) * weyl_dim(b))
        throw ConsistencyError("tensor decomposition violates the dimension identity");
    return out;
}

Weight infinitesimal_character(const IrrepLabel& rep) {
    validate(rep);
    const RootSystem& sys = root_system(rep.system);
    return sys.dominant_representative(rep.highest_weight + sys.rho());
}

InfcharTransfer theta_infchar_transfer(const Rational& x) {
    const RootSystem& f4 = root_system(SystemLabel::F4);
    InfcharTransfer out;
    out.value = Weight{Rational(x / 2), Rational(5, 2), Rational(3, 2), Rational(1, 2)};
    out.dominant = f4.dominant_representative(out.value);
    out.singular = f4.is_singular(out.value);
    out.nonpositive = x <= 0;
    return out;
}

IrrepLabel e_n(std::int64_t n) {
    if (n < 0) throw InputError("E_n requires n >= 0");
    return {SystemLabel::F4, Weight{Rational(n), 0, 0, 0}};
}

}  // namespace thetalift
