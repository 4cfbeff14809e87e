#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace dechop {

// Exact rational with 64-bit parts, always normalized (den > 0, gcd 1).
// den == 0 encodes +infinity. Intermediates go through __int128 and an
// overflow of the normalized result throws std::overflow_error.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    static Rational infinity();
    static Rational parse(std::string_view text);

    bool is_infinite() const { return den_ == 0; }
    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const;
    std::string str() const;

    // Smallest integer >= value. Value must be finite.
    std::int64_t ceil() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace dechop
