#pragma once

// Exact rational numbers for boundary-exact containment tests.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace edisc {

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
    /// Throws std::domain_error on a zero denominator.
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    /// Accepts integers, decimals ("-1.25") and fractions ("3/8").
    /// Throws std::invalid_argument on anything else.
    static Rational parse(std::string_view text);

    /// Exact decimal when the denominator has only factors 2 and 5,
    /// otherwise "p/q".
    std::string to_string() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;  // always positive, gcd(num, den) == 1
};

}  // namespace edisc
