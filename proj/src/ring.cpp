#include "mixcat/ring.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>

namespace mixcat {

RingTag RingTag::localized(const Integer& m) {
    if (m < 1) {
        throw InputError("Zloc(m) requires m >= 1, got " + m.str());
    }
    return RingTag(Kind::Localized, m);
}

bool divides_power_of(Integer d, const Integer& m) {
    if (d < 0) d = -d;
    while (d != 1) {
        Integer g = boost::multiprecision::gcd(d, m);
        if (g == 1) return false;
        while (d % g == 0) d /= g;
    }
    return true;
}

bool RingTag::contains(const Rational& x) const {
    switch (kind_) {
        case Kind::Integers:
            return denominator(x) == 1;
        case Kind::Rationals:
            return true;
        case Kind::Localized:
            return divides_power_of(Integer(denominator(x)), localizer_);
    }
    return false;
}

bool RingTag::is_unit(const Rational& x) const {
    if (x == 0) return false;
    return contains(x) && contains(Rational(1) / x);
}

std::string RingTag::to_string() const {
    switch (kind_) {
        case Kind::Integers:
            return "Z";
        case Kind::Rationals:
            return "Q";
        case Kind::Localized:
            return "Z[1/" + localizer_.str() + "]";
    }
    return "?";
}

Scalar::Scalar(RingTag ring, Rational value) : ring_(std::move(ring)), value_(std::move(value)) {
    if (!ring_.contains(value_)) {
        throw InputError("scalar " + format_rational(value_) + " is not an element of " +
                         ring_.to_string());
    }
}

std::string Scalar::to_string() const { return format_rational(value_); }

namespace {

void require_same_ring(const Scalar& a, const Scalar& b) {
    if (a.ring() != b.ring()) {
        throw InputError("ring mismatch: " + a.ring().to_string() + " vs " + b.ring().to_string());
    }
}

}  // namespace

Scalar scalar_add(const Scalar& a, const Scalar& b) {
    require_same_ring(a, b);
    return Scalar(a.ring(), a.value() + b.value());
}

Scalar scalar_neg(const Scalar& a) { return Scalar(a.ring(), -a.value()); }

Scalar scalar_mul(const Scalar& a, const Scalar& b) {
    require_same_ring(a, b);
    return Scalar(a.ring(), a.value() * b.value());
}

std::optional<Scalar> scalar_exact_div(const Scalar& a, const Scalar& b) {
    require_same_ring(a, b);
    if (b.is_zero()) throw DivisionByZero();
    Rational q = a.value() / b.value();
    if (!a.ring().contains(q)) return std::nullopt;
    return Scalar(a.ring(), std::move(q));
}

std::optional<Scalar> ring_embed(const Scalar& a, const RingTag& target) {
    if (!target.contains(a.value())) return std::nullopt;
    return Scalar(target, a.value());
}

Rational parse_rational(std::string_view text) {
    auto fail = [&](const char* why) -> Rational {
        throw InputError("malformed scalar \"" + std::string(text) + "\": " + why);
    };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    auto read_digits = [&](std::string_view& out) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        out = text.substr(start, pos - start);
        return !out.empty();
    };
    std::string_view num_digits;
    if (!read_digits(num_digits)) return fail("expected digits");
    Integer num{std::string(num_digits)};
    Integer den(1);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::string_view den_digits;
        if (!read_digits(den_digits)) return fail("expected denominator digits");
        den = Integer{std::string(den_digits)};
        if (den == 0) return fail("zero denominator");
    }
    if (pos != text.size()) return fail("trailing characters");
    if (negative) num = -num;
    return Rational(num, den);
}

std::string format_rational(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

Scalar parse_scalar(std::string_view text, const RingTag& ring) {
    return Scalar(ring, parse_rational(text));
}

}  // namespace mixcat
