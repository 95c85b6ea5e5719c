#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace thetalift {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "7", "-3/2" or "11/2" into a canonical rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// True when q has denominator 1.
bool is_integer(const Rational& q);

/// Exact coordinate vector in the ambient space of a root system.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::size_t dim) : coords_(dim) {}
    explicit Weight(std::vector<Rational> coords);
    Weight(std::initializer_list<Rational> coords);

    /// Convenience: every coordinate given as numerator over a shared
    /// denominator, e.g. halves({11, 5, 3, 1}) = (11/2, 5/2, 3/2, 1/2).
    static Weight halves(std::initializer_list<long> numerators);
    static Weight zero(std::size_t dim) { return Weight(dim); }

    std::size_t size() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;

    Weight& operator+=(const Weight& other);
    Weight& operator-=(const Weight& other);
    Weight& operator*=(const Rational& scalar);

    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(const Rational& s, Weight w) { return w *= s; }
    friend Weight operator*(Weight w, const Rational& s) { return w *= s; }
    Weight operator-() const;

    friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
    /// Lexicographic on coordinates. In every realization used here the
    /// positive roots are lexicographically positive, so this order refines
    /// the dominance order.
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

private:
    std::vector<Rational> coords_;
};

/// Standard Euclidean form on coordinates.
Rational dot(const Weight& a, const Weight& b);

/// "11/2,5/2,3/2,1/2"
Weight parse_weight(std::string_view text);
std::string to_string(const Weight& w);

}  // namespace thetalift
