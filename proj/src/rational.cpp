#include "rhnn/rational.hpp"

#include <charconv>
#include <ostream>

namespace rhnn {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
    return r;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = checked_mul(num, -1);
        den = checked_mul(den, -1);
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos)
        return {parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text)};
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const bool negative = !text.empty() && text.front() == '-';
        auto int_part = text.substr(0, dot);
        auto frac_part = text.substr(dot + 1);
        if (frac_part.empty() || frac_part.front() == '-' || frac_part.front() == '+')
            throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
        std::int64_t whole = (int_part.empty() || int_part == "-" || int_part == "+")
                                 ? 0
                                 : parse_int(int_part, text);
        std::int64_t frac = parse_int(frac_part, text);
        std::int64_t scale = 1;
        for (std::size_t k = 0; k < frac_part.size(); ++k) scale = checked_mul(scale, 10);
        std::int64_t mag = checked_add(checked_mul(whole < 0 ? -whole : whole, scale), frac);
        return {negative ? -mag : mag, scale};
    }
    return {parse_int(text, text)};
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return {checked_mul(num_, -1), den_}; }

Rational& Rational::operator+=(const Rational& o) {
    const std::int64_t g = std::gcd(den_, o.den_);
    const std::int64_t lhs = checked_mul(num_, o.den_ / g);
    const std::int64_t rhs = checked_mul(o.num_, den_ / g);
    *this = Rational(checked_add(lhs, rhs), checked_mul(den_ / g, o.den_));
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    const std::int64_t g1 = std::gcd(num_, o.den_);
    const std::int64_t g2 = std::gcd(o.num_, den_);
    // Denominators are positive, so both gcds are at least 1.
    const std::int64_t n = checked_mul(num_ / g1, o.num_ / g2);
    const std::int64_t d = checked_mul(den_ / g2, o.den_ / g1);
    *this = Rational(n, d);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return *this *= Rational(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Cross-multiplication in 128-bit avoids overflow for any int64 pair.
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace rhnn
