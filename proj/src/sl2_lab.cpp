#include "thetalift/sl2_lab.hpp"

#include "thetalift/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace thetalift::sl2 {

namespace {

SparseVector unit_vector(std::size_t i) { return SparseVector{{i, Rational(1)}}; }

void require_depth(std::size_t depth) {
    if (depth < 1) throw InputError("truncation depth must be at least 1");
}

std::size_t usable_depth(const TruncatedModule& module) {
    if (std::holds_alternative<TensorKind>(module.kind)) return std::min(module.depth, module.depth_b);
    return module.depth;
}

}  // namespace

std::size_t TruncatedModule::index(std::size_t a) const {
    if (a > depth) throw InputError("basis index outside the truncation");
    return a;
}

std::size_t TruncatedModule::index(std::size_t a, std::size_t b) const {
    if (!std::holds_alternative<TensorKind>(kind)) throw InputError("not a tensor module");
    if (a > depth || b > depth_b) throw InputError("basis index outside the truncation");
    return a * (depth_b + 1) + b;
}

TruncatedModule build_lowest_weight_module(std::int64_t n, std::size_t depth) {
    require_depth(depth);
    const std::size_t dim = depth + 1;
    TruncatedModule mod{LowestKind{n}, depth, 0, {}, SparseMatrix(dim), SparseMatrix(dim),
                        SparseMatrix(dim), {}};
    for (std::size_t a = 0; a < dim; ++a) {
        const auto ai = static_cast<std::int64_t>(a);
        mod.basis_labels.push_back("v" + std::to_string(a));
        mod.h.set(a, a, Rational(n + 2 * ai));
        if (a + 1 < dim) mod.e.set(a + 1, a, 1);
        if (a > 0) mod.f.set(a - 1, a, Rational(-ai * (n + ai - 1)));
        mod.interior.push_back(a < depth);
    }
    return mod;
}

TruncatedModule build_highest_weight_module(std::int64_t m, std::size_t depth) {
    require_depth(depth);
    const std::size_t dim = depth + 1;
    TruncatedModule mod{HighestKind{m}, depth, 0, {}, SparseMatrix(dim), SparseMatrix(dim),
                        SparseMatrix(dim), {}};
    for (std::size_t b = 0; b < dim; ++b) {
        const auto bi = static_cast<std::int64_t>(b);
        mod.basis_labels.push_back("w" + std::to_string(b));
        mod.h.set(b, b, Rational(-m - 2 * bi));
        if (b + 1 < dim) mod.f.set(b + 1, b, 1);
        if (b > 0) mod.e.set(b - 1, b, Rational(-bi * (m + bi - 1)));
        mod.interior.push_back(b < depth);
    }
    return mod;
}

TruncatedModule tensor_modules(const TruncatedModule& a, const TruncatedModule& b) {
    const auto* low = std::get_if<LowestKind>(&a.kind);
    const auto* high = std::get_if<HighestKind>(&b.kind);
    if (!low || !high) throw InputError("tensor_modules expects a lowest (x) highest weight pair");

    const std::size_t da = a.dimension();
    const std::size_t db = b.dimension();
    TruncatedModule mod{TensorKind{low->n, high->m}, a.depth, b.depth, {},
                        SparseMatrix(da * db), SparseMatrix(da * db), SparseMatrix(da * db), {}};
    auto idx = [db](std::size_t i, std::size_t j) { return i * db + j; };

    auto kron = [&](SparseMatrix& out, const SparseMatrix& x, const SparseMatrix& y) {
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < db; ++j) {
                for (const auto& [r, v] : x.column(i)) out.add(idx(r, j), idx(i, j), v);
                for (const auto& [r, v] : y.column(j)) out.add(idx(i, r), idx(i, j), v);
            }
    };
    kron(mod.e, a.e, b.e);
    kron(mod.h, a.h, b.h);
    kron(mod.f, a.f, b.f);

    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            mod.basis_labels.push_back(a.basis_labels[i] + "⊗" + b.basis_labels[j]);
            mod.interior.push_back(a.interior[i] && b.interior[j]);
        }
    return mod;
}

BracketDefects check_brackets(const TruncatedModule& module) {
    BracketDefects out;
    auto differs = [](const SparseVector& lhs, const SparseVector& rhs) { return lhs != rhs; };
    auto scaled = [](SparseVector v, const Rational& s) {
        for (auto& [i, x] : v) x *= s;
        return v;
    };
    auto minus = [](SparseVector x, const SparseVector& y) {
        axpy(x, -1, y);
        return x;
    };

    for (std::size_t i = 0; i < module.dimension(); ++i) {
        if (!module.interior[i]) continue;
        ++out.checked;
        const SparseVector x = unit_vector(i);
        const SparseVector ex = module.e.apply(x);
        const SparseVector fx = module.f.apply(x);
        const SparseVector hx = module.h.apply(x);

        if (differs(minus(module.h.apply(ex), module.e.apply(hx)), scaled(ex, 2))) ++out.he;
        if (differs(minus(module.h.apply(fx), module.f.apply(hx)), scaled(fx, -2))) ++out.hf;
        if (differs(minus(module.e.apply(fx), module.f.apply(ex)), hx)) ++out.ef;
    }
    return out;
}

std::size_t filtration_rank(const TruncatedModule& module, std::size_t generator,
                            std::size_t max_degree) {
    if (generator >= module.dimension()) throw InputError("generator outside the truncation");
    if (2 * (max_degree + 1) > usable_depth(module)) throw InputError("truncation too shallow");

    EchelonBasis span;
    SparseVector h_power = unit_vector(generator);
    for (std::size_t c = 0; c <= max_degree; ++c) {
        SparseVector f_power = h_power;
        for (std::size_t b = 0; b + c <= max_degree; ++b) {
            SparseVector e_power = f_power;
            for (std::size_t a = 0; a + b + c <= max_degree; ++a) {
                span.insert(e_power);
                e_power = module.e.apply(e_power);
            }
            f_power = module.f.apply(f_power);
        }
        h_power = module.h.apply(h_power);
    }
    return span.rank();
}

Rational hc_parameter(const TruncatedModule& module) {
    if (std::holds_alternative<TensorKind>(module.kind))
        throw InputError("hc_parameter needs a lowest or highest weight module");

    const SparseVector gen = unit_vector(0);
    SparseVector omega = module.h.apply(module.h.apply(gen));
    for (auto& [i, x] : omega) x /= 2;
    axpy(omega, 1, module.e.apply(module.f.apply(gen)));
    axpy(omega, 1, module.f.apply(module.e.apply(gen)));

    Rational eigenvalue = 0;
    if (!omega.empty()) {
        if (omega.size() != 1 || omega.begin()->first != 0)
            throw ConsistencyError("Casimir does not act by a scalar on the generator");
        eigenvalue = omega.begin()->second;
    }

    Rational square = 2 * eigenvalue + 1;
    if (square < 0 || !mpz_perfect_square_p(square.get_num_mpz_t()) ||
        !mpz_perfect_square_p(square.get_den_mpz_t()))
        throw ConsistencyError("Casimir eigenvalue has no rational parameter");
    Rational p(sqrt(square.get_num()), sqrt(square.get_den()));
    p.canonicalize();
    return p;
}

std::vector<std::int64_t> h_weights(const TruncatedModule& module) {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < module.dimension(); ++i)
        out.push_back(module.h.get(i, i).get_num().get_si());
    return out;
}

namespace {

void require_even(std::int64_t w) {
    if (w % 2 != 0) throw InputError("odd SO(2) weight excluded: " + std::to_string(w));
}

}  // namespace

So2Support::So2Support(Kind kind, std::int64_t bound, std::set<std::int64_t> weights)
    : kind_(kind), bound_(bound), weights_(std::move(weights)) {}

So2Support So2Support::lowest(std::int64_t k) {
    require_even(k);
    return {Kind::Lowest, k, {}};
}

So2Support So2Support::highest(std::int64_t k) {
    require_even(k);
    return {Kind::Highest, k, {}};
}

So2Support So2Support::full_even() { return {Kind::FullEven, 0, {}}; }

So2Support So2Support::finite(std::set<std::int64_t> weights) {
    for (auto w : weights) require_even(w);
    return {Kind::Finite, 0, std::move(weights)};
}

bool So2Support::contains(std::int64_t w) const {
    require_even(w);
    switch (kind_) {
        case Kind::Lowest: return w >= bound_;
        case Kind::Highest: return w <= bound_;
        case Kind::FullEven: return true;
        case Kind::Finite: return weights_.count(w) > 0;
    }
    return false;
}

namespace {

std::int64_t parse_int(std::string_view s) {
    std::string text(s);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw InputError("malformed integer '" + text + "'");
    return v;
}

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

}  // namespace

So2Support parse_support(std::string_view raw) {
    const std::string text = strip_spaces(raw);
    auto open = text.find_first_of("({");
    if (open == std::string::npos || (text.back() != ')' && text.back() != '}'))
        throw InputError("malformed SO(2) support '" + text + "'");
    const std::string kind = text.substr(0, open);
    const std::string body = text.substr(open + 1, text.size() - open - 2);

    if (kind == "lowest") return So2Support::lowest(parse_int(body));
    if (kind == "highest") return So2Support::highest(parse_int(body));
    if (kind == "full_parity" || kind == "full") {
        if (body == "even" || body == "0") return So2Support::full_even();
        throw InputError("only even full-parity supports occur; got '" + body + "'");
    }
    if (kind == "finite") {
        std::set<std::int64_t> weights;
        std::size_t start = 0;
        while (start < body.size()) {
            auto comma = body.find(',', start);
            if (comma == std::string::npos) comma = body.size();
            weights.insert(parse_int(std::string_view(body).substr(start, comma - start)));
            start = comma + 1;
        }
        return So2Support::finite(std::move(weights));
    }
    throw InputError("unknown SO(2) support kind '" + kind + "'");
}

std::string to_string(const So2Support& s) {
    switch (s.kind()) {
        case So2Support::Kind::Lowest: return "lowest(" + std::to_string(s.bound()) + ")";
        case So2Support::Kind::Highest: return "highest(" + std::to_string(s.bound()) + ")";
        case So2Support::Kind::FullEven: return "full_parity(even)";
        case So2Support::Kind::Finite: {
            std::ostringstream out;
            out << "finite{";
            bool first = true;
            for (auto w : s.weights()) {
                if (!first) out << ',';
                out << w;
                first = false;
            }
            out << '}';
            return out.str();
        }
    }
    return {};
}

}  // namespace thetalift::sl2
