#include "thetalift/root_system.hpp"

#include "thetalift/error.hpp"
#include "thetalift/linalg.hpp"

#include <algorithm>
#include <deque>

namespace thetalift {

SystemLabel parse_system_label(std::string_view text) {
    if (text == "F4") return SystemLabel::F4;
    if (text == "B4") return SystemLabel::B4;
    if (text == "D5") return SystemLabel::D5;
    if (text == "A1") return SystemLabel::A1;
    throw InputError("unknown system '" + std::string(text) + "'");
}

std::string to_string(SystemLabel label) {
    switch (label) {
        case SystemLabel::F4: return "F4";
        case SystemLabel::B4: return "B4";
        case SystemLabel::D5: return "D5";
        case SystemLabel::A1: return "A1";
    }
    throw InputError("unknown system");
}

namespace {

Weight unit(std::size_t dim, std::size_t i, long sign = 1) {
    Weight w(dim);
    w[i] = sign;
    return w;
}

std::vector<Weight> standard_simple_roots(SystemLabel label) {
    switch (label) {
        case SystemLabel::F4:
            return {unit(4, 1) - unit(4, 2), unit(4, 2) - unit(4, 3), unit(4, 3),
                    Weight::halves({1, -1, -1, -1})};
        case SystemLabel::B4:
            return {unit(4, 0) - unit(4, 1), unit(4, 1) - unit(4, 2), unit(4, 2) - unit(4, 3),
                    unit(4, 3)};
        case SystemLabel::D5:
            return {unit(5, 0) - unit(5, 1), unit(5, 1) - unit(5, 2), unit(5, 2) - unit(5, 3),
                    unit(5, 3) - unit(5, 4), unit(5, 3) + unit(5, 4)};
        case SystemLabel::A1:
            return {Weight{Rational(2)}};
    }
    throw InputError("unknown system");
}

}  // namespace

RootSystem::RootSystem(SystemLabel label)
    : label_(label), simple_roots_(standard_simple_roots(label)) {
    const std::size_t n = simple_roots_.size();
    for (const auto& a : simple_roots_) simple_norms_.push_back(dot(a, a));

    DenseMatrix columns(n, std::vector<Rational>(n));
    DenseMatrix coroots(n, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            columns[i][j] = simple_roots_[j][i];
            coroots[j][i] = 2 * simple_roots_[j][i] / simple_norms_[j];
        }
    simple_inverse_ = *invert(columns);
    coroot_inverse_ = *invert(coroots);

    for (std::size_t i = 0; i < n; ++i) {
        Weight w(n);
        for (std::size_t k = 0; k < n; ++k) w[k] = coroot_inverse_[k][i];
        fundamental_weights_.push_back(std::move(w));
    }

    // Every root is W-conjugate to a simple root.
    std::set<Weight> roots;
    for (const auto& a : simple_roots_) {
        auto orbit = weyl_orbit(a);
        roots.insert(orbit.begin(), orbit.end());
    }
    for (const auto& r : roots) {
        auto c = simple_root_coordinates(r);
        if (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x >= 0; }))
            positive_roots_.push_back(r);
    }
    std::sort(positive_roots_.begin(), positive_roots_.end(), std::greater<>());

    rho_ = Weight(n);
    for (const auto& a : positive_roots_) rho_ += a;
    rho_ *= Rational(1, 2);

    // rho is regular, so its orbit is in bijection with W.
    weyl_order_ = static_cast<std::int64_t>(weyl_orbit(rho_).size());
}

Rational RootSystem::coroot_pairing(const Weight& w, const Weight& alpha) const {
    return 2 * dot(w, alpha) / dot(alpha, alpha);
}

Weight RootSystem::reflect(const Weight& w, const Weight& alpha) const {
    return w - coroot_pairing(w, alpha) * alpha;
}

std::vector<Rational> RootSystem::simple_root_coordinates(const Weight& w) const {
    const std::size_t n = rank();
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) c[i] += simple_inverse_[i][k] * w[k];
    return c;
}

std::vector<Rational> RootSystem::dynkin_labels(const Weight& w) const {
    std::vector<Rational> labels;
    for (std::size_t j = 0; j < rank(); ++j)
        labels.push_back(2 * dot(w, simple_roots_[j]) / simple_norms_[j]);
    return labels;
}

Weight RootSystem::from_dynkin_labels(const std::vector<Rational>& labels) const {
    if (labels.size() != rank()) throw InputError("wrong number of Dynkin labels");
    Weight w(rank());
    for (std::size_t i = 0; i < rank(); ++i) w += labels[i] * fundamental_weights_[i];
    return w;
}

bool RootSystem::is_dominant(const Weight& w) const {
    check_weight(w);
    return std::all_of(simple_roots_.begin(), simple_roots_.end(),
                       [&](const Weight& a) { return dot(w, a) >= 0; });
}

bool RootSystem::is_dominant_integral(const Weight& w) const {
    if (w.size() != rank()) return false;
    auto labels = dynkin_labels(w);
    return std::all_of(labels.begin(), labels.end(),
                       [](const Rational& x) { return x >= 0 && is_integer(x); });
}

bool RootSystem::is_singular(const Weight& w) const {
    return std::any_of(positive_roots_.begin(), positive_roots_.end(),
                       [&](const Weight& a) { return dot(w, a) == 0; });
}

RootSystem::SignedDominant RootSystem::dominant_with_sign(const Weight& w) const {
    check_weight(w);
    Weight x = w;
    int sign = 1;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t j = 0; j < rank(); ++j) {
            Rational p = dot(x, simple_roots_[j]);
            if (p < 0) {
                x -= (2 * p / simple_norms_[j]) * simple_roots_[j];
                sign = -sign;
                moved = true;
            }
        }
    }
    return {std::move(x), sign};
}

Weight RootSystem::dominant_representative(const Weight& w) const {
    return dominant_with_sign(w).weight;
}

std::set<Weight> RootSystem::weyl_orbit(const Weight& w) const {
    check_weight(w);
    std::set<Weight> seen{w};
    std::deque<Weight> queue{w};
    while (!queue.empty()) {
        Weight x = std::move(queue.front());
        queue.pop_front();
        for (std::size_t j = 0; j < rank(); ++j) {
            Rational p = dot(x, simple_roots_[j]);
            if (p == 0) continue;
            Weight y = x - (2 * p / simple_norms_[j]) * simple_roots_[j];
            if (seen.insert(y).second) queue.push_back(std::move(y));
        }
    }
    return seen;
}

bool RootSystem::dominates(const Weight& hi, const Weight& lo) const {
    auto c = simple_root_coordinates(hi - lo);
    return std::all_of(c.begin(), c.end(),
                       [](const Rational& x) { return x >= 0 && is_integer(x); });
}

Rational RootSystem::depth_below(const Weight& hi, const Weight& lo) const {
    Rational h = 0;
    for (const auto& c : simple_root_coordinates(hi - lo)) h += c;
    return h;
}

void RootSystem::check_weight(const Weight& w) const {
    if (w.size() != rank())
        throw InputError("weight " + to_string(w) + " has length " + std::to_string(w.size()) +
                         ", expected " + std::to_string(rank()) + " for " + to_string(label_));
}

const RootSystem& root_system(SystemLabel label) {
    static const RootSystem f4(SystemLabel::F4);
    static const RootSystem b4(SystemLabel::B4);
    static const RootSystem d5(SystemLabel::D5);
    static const RootSystem a1(SystemLabel::A1);
    switch (label) {
        case SystemLabel::F4: return f4;
        case SystemLabel::B4: return b4;
        case SystemLabel::D5: return d5;
        case SystemLabel::A1: return a1;
    }
    throw InputError("unknown system");
}

}  // namespace thetalift
