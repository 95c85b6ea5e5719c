#include "thetalift/oracles.hpp"

#include "thetalift/error.hpp"
#include "thetalift/linalg.hpp"

#include <deque>
#include <set>

namespace thetalift::oracle {

std::int64_t weyl_group_order_by_matrices(SystemLabel label) {
    const RootSystem& sys = root_system(label);
    const std::size_t n = sys.rank();

    std::vector<DenseMatrix> generators;
    for (const auto& alpha : sys.simple_roots()) {
        const Rational norm = dot(alpha, alpha);
        DenseMatrix s(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                s[i][j] = (i == j ? Rational(1) : Rational(0)) - 2 * alpha[i] * alpha[j] / norm;
        generators.push_back(std::move(s));
    }

    auto multiply = [n](const DenseMatrix& a, const DenseMatrix& b) {
        DenseMatrix c(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (a[i][k] == 0) continue;
                for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
            }
        return c;
    };

    DenseMatrix identity(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) identity[i][i] = 1;
    std::set<DenseMatrix> group{identity};
    std::deque<DenseMatrix> queue{identity};
    while (!queue.empty()) {
        DenseMatrix g = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : generators) {
            DenseMatrix h = multiply(s, g);
            if (group.insert(h).second) queue.push_back(std::move(h));
        }
    }
    return static_cast<std::int64_t>(group.size());
}

DecompositionList tensor_by_character_product(const IrrepLabel& a, const IrrepLabel& b) {
    if (a.system != b.system) throw InputError("tensor of different systems");
    const auto ca = freudenthal_character(a)->expanded();
    const auto cb = freudenthal_character(b)->expanded();

    std::map<Weight, std::int64_t> product;
    for (const auto& [wa, ma] : ca)
        for (const auto& [wb, mb] : cb) product[wa + wb] += ma * mb;

    DecompositionList out;
    while (!product.empty()) {
        auto top = std::prev(product.end());
        if (top->second == 0) {
            product.erase(top);
            continue;
        }
        if (top->second < 0) throw ConsistencyError("character product peeling went negative");
        const IrrepLabel irrep{a.system, top->first};
        const std::int64_t count = top->second;
        for (const auto& [w, m] : freudenthal_character(irrep)->expanded()) product[w] -= count * m;
        out.push_back({irrep, count});
    }
    return out;
}

DecompositionList d5_to_b4_interlacing(const Weight& l) {
    if (l.size() != 5) throw InputError("D5 highest weight needs five coordinates");
    const Rational offset = is_integer(l[0]) ? Rational(0) : Rational(1, 2);
    const Rational floor_last = abs(l[4]);

    // Candidate values for mu_i: offset + integers in [lower, upper].
    auto range = [&](const Rational& upper, const Rational& lower) {
        std::vector<Rational> vals;
        for (Rational v = upper; v >= lower; v -= 1) vals.push_back(v);
        return vals;
    };

    DecompositionList out;
    for (const auto& m1 : range(l[0], l[1]))
        for (const auto& m2 : range(l[1], l[2]))
            for (const auto& m3 : range(l[2], l[3]))
                for (const auto& m4 : range(l[3], floor_last)) {
                    Weight mu{m1, m2, m3, m4};
                    bool congruent = true;
                    for (std::size_t i = 0; i < 4; ++i) congruent = congruent && is_integer(mu[i] - offset);
                    if (congruent) out.push_back({{SystemLabel::B4, mu}, 1});
                }
    return out;
}

std::size_t free_module_count(std::size_t max_degree) {
    std::size_t count = 0;
    for (std::size_t a = 0; a <= max_degree; ++a)
        for (std::size_t b = 0; a + b <= max_degree; ++b) ++count;
    return count;
}

}  // namespace thetalift::oracle
