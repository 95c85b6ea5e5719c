#include "thetalift/branching.hpp"

#include "thetalift/error.hpp"

namespace thetalift {

Weight EmbeddingMap::apply(const Weight& w) const {
    Weight out(matrix.size());
    for (std::size_t i = 0; i < matrix.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) out[i] += matrix[i][j] * w[j];
    return out;
}

EmbeddingMap make_embedding(std::string_view name) {
    auto projection = [](std::size_t rows, std::size_t cols) {
        DenseMatrix m(rows, std::vector<Rational>(cols));
        for (std::size_t i = 0; i < rows; ++i) m[i][i] = 1;
        return m;
    };
    if (name == "B4_in_F4") return {"B4_in_F4", SystemLabel::F4, SystemLabel::B4, projection(4, 4)};
    if (name == "B4_in_D5") return {"B4_in_D5", SystemLabel::D5, SystemLabel::B4, projection(4, 5)};
    throw InputError("unknown embedding '" + std::string(name) + "'");
}

DecompositionList peel(SystemLabel system, WeightMultiplicities residual) {
    const RootSystem& sys = root_system(system);
    DecompositionList out;
    while (true) {
        while (!residual.empty() && residual.rbegin()->second == 0) residual.erase(std::prev(residual.end()));
        if (residual.empty()) break;

        auto top = std::prev(residual.end());
        const Weight highest = top->first;
        const std::int64_t count = top->second;
        if (count < 0)
            throw ConsistencyError("inconsistent embedding: negative residual at " + to_string(highest));
        if (!sys.is_dominant_integral(highest))
            throw ConsistencyError("inconsistent embedding: leading residual weight " +
                                   to_string(highest) + " is not dominant integral");

        IrrepLabel irrep{system, highest};
        for (const auto& [w, m] : freudenthal_character(irrep)->expanded()) {
            auto& slot = residual[w];
            slot -= count * m;
            if (slot < 0)
                throw ConsistencyError("inconsistent embedding: negative residual at " + to_string(w));
        }
        out.push_back({std::move(irrep), count});
    }
    return out;
}

DecompositionList branch(const IrrepLabel& rep, const EmbeddingMap& emb) {
    validate(rep);
    if (rep.system != emb.source_system)
        throw InputError("embedding " + emb.name + " expects a " + to_string(emb.source_system) +
                         " representation, got " + to_string(rep.system));

    WeightMultiplicities restricted;
    for (const auto& [w, m] : freudenthal_character(rep)->expanded()) restricted[emb.apply(w)] += m;

    DecompositionList out = peel(emb.target_system, std::move(restricted));
    if (total_dimension(out) != weyl_dim(rep))
        throw ConsistencyError("inconsistent embedding: dimension mismatch after branching");
    return out;
}

Weight TauLabel::highest_weight() const {
    const Rational half_n(n, 2);
    Rational first = Rational(m) + half_n;
    Weight w{first, half_n, half_n, half_n};
    for (std::size_t i = 0; i < 4; ++i) w[i].canonicalize();
    return w;
}

std::string to_string(const TauLabel& tau) {
    return "tau(" + std::to_string(tau.m) + "," + std::to_string(tau.n) + ")";
}

std::optional<TauLabel> as_tau(const Weight& w) {
    if (w.size() != 4 || w[1] != w[2] || w[2] != w[3]) return std::nullopt;
    const Rational n = 2 * w[1];
    const Rational m = w[0] - w[1];
    if (!is_integer(n) || !is_integer(m) || n < 0 || m < 0) return std::nullopt;
    return TauLabel{m.get_num().get_si(), n.get_num().get_si()};
}

TauClassification classify_tau(const DecompositionList& dec) {
    TauClassification out;
    for (const auto& entry : dec) {
        auto tau = entry.irrep.system == SystemLabel::B4 ? as_tau(entry.irrep.highest_weight)
                                                         : std::nullopt;
        if (tau)
            out.taus.emplace_back(*tau, entry.multiplicity);
        else
            out.failures.push_back(entry);
    }
    return out;
}

}  // namespace thetalift
