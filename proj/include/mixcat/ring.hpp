#pragma once

// Exact commutative-ring arithmetic: Z, Q and the localization Z[1/m].
//
// Every value is a reduced GMP rational; the RingTag decides which rationals
// are legal. Equality is structural because GMP keeps rationals canonical.

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mixcat {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Malformed or inconsistent input (shape, ring or model mismatch).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

/// Raised when a construction needs Mix to become invertible but m = 0.
struct ModelNotCompactifiable : std::domain_error {
    ModelNotCompactifiable()
        : std::domain_error("model is not compactifiable: mix scalar is 0") {}
};

/// A search or enumeration would exceed its configured bound.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class RingTag {
public:
    enum class Kind { Integers, Rationals, Localized };

    static RingTag integers() { return RingTag(Kind::Integers, Integer(1)); }
    static RingTag rationals() { return RingTag(Kind::Rationals, Integer(1)); }
    /// Z[1/m]; requires m >= 1. Z[1/1] is Z itself but keeps its own tag.
    static RingTag localized(const Integer& m);

    Kind kind() const { return kind_; }
    /// The inverted element m of Z[1/m]; 1 for the other kinds.
    const Integer& localizer() const { return localizer_; }

    bool contains(const Rational& x) const;
    /// True iff x has a multiplicative inverse inside this ring.
    bool is_unit(const Rational& x) const;

    std::string to_string() const;

    friend bool operator==(const RingTag&, const RingTag&) = default;

private:
    RingTag(Kind kind, Integer localizer) : kind_(kind), localizer_(std::move(localizer)) {}

    Kind kind_;
    Integer localizer_;
};

/// True iff every prime factor of d divides m (d, m > 0).
bool divides_power_of(Integer d, const Integer& m);

class Scalar {
public:
    /// Throws InputError if value is not an element of ring.
    Scalar(RingTag ring, Rational value);

    static Scalar zero(const RingTag& ring) { return Scalar(ring, Rational(0)); }
    static Scalar one(const RingTag& ring) { return Scalar(ring, Rational(1)); }

    const RingTag& ring() const { return ring_; }
    const Rational& value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    std::string to_string() const;

    friend bool operator==(const Scalar&, const Scalar&) = default;

private:
    RingTag ring_;
    Rational value_;
};

Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_neg(const Scalar& a);
Scalar scalar_mul(const Scalar& a, const Scalar& b);

/// c with c*b = a inside a's ring, or nullopt (NotDivisible).
/// Throws DivisionByZero when b = 0.
std::optional<Scalar> scalar_exact_div(const Scalar& a, const Scalar& b);

/// Re-tags a into target if its value lies there; nullopt is NotRepresentable.
std::optional<Scalar> ring_embed(const Scalar& a, const RingTag& target);

inline Scalar operator+(const Scalar& a, const Scalar& b) { return scalar_add(a, b); }
inline Scalar operator-(const Scalar& a) { return scalar_neg(a); }
inline Scalar operator-(const Scalar& a, const Scalar& b) { return scalar_add(a, scalar_neg(b)); }
inline Scalar operator*(const Scalar& a, const Scalar& b) { return scalar_mul(a, b); }

/// Parses "[+-]digits[/digits]". Throws InputError on malformed text or a zero
/// denominator.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& x);

Scalar parse_scalar(std::string_view text, const RingTag& ring);

}  // namespace mixcat
