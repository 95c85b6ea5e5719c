#include "thetalift/weight.hpp"

#include "thetalift/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace thetalift {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool valid_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den))
        throw InputError("malformed rational '" + std::string(text) + "'");
    if (num.front() == '+') num.remove_prefix(1);
    if (den.front() == '+') den.remove_prefix(1);
    Integer d(std::string(den), 10);
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational q(Integer(std::string(num), 10), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Weight::Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}

Weight::Weight(std::initializer_list<Rational> coords) : coords_(coords) {}

Weight Weight::halves(std::initializer_list<long> numerators) {
    Weight w(numerators.size());
    std::size_t i = 0;
    for (long v : numerators) w[i++] = Rational(v, 2);
    for (auto& c : w.coords_) c.canonicalize();
    return w;
}

bool Weight::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& other) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& other) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

Weight& Weight::operator*=(const Rational& scalar) {
    for (auto& c : coords_) c *= scalar;
    return *this;
}

Weight Weight::operator-() const {
    Weight w(*this);
    for (auto& c : w.coords_) c = -c;
    return w;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = cmp(a.coords_[i], b.coords_[i]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return a.size() <=> b.size();
}

Rational dot(const Weight& a, const Weight& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Weight parse_weight(std::string_view text) {
    std::vector<Rational> coords;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        coords.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Weight(std::move(coords));
}

std::string to_string(const Weight& w) {
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out << ',';
        out << w[i].get_str();
    }
    return out.str();
}

}  // namespace thetalift
