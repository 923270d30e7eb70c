#ifndef HLBIP_SCALAR_HPP
#define HLBIP_SCALAR_HPP

#include <hlbip/errors.hpp>

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace hlbip {

// Exact field arithmetic. Two fields are supported: arbitrary-precision
// rationals (the default everywhere) and GF(p) for prime p (a cheap field for
// randomized property tests). Mixing scalars from different fields, or from
// GF(p) with different p, is rejected. No floating point anywhere.

enum class FieldKind { rational, prime };

class Scalar;

// Identifies which field values live in; matrices and l2-structures carry one
// so that a zero/one of the right field can always be manufactured.
class FieldSpec {
public:
    FieldSpec() : kind_(FieldKind::rational), p_(0) {}

    static FieldSpec rationals() { return FieldSpec(); }
    static FieldSpec prime(std::uint64_t p); // validates primality

    FieldKind kind() const { return kind_; }
    std::uint64_t modulus() const { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long v) const;
    // Accepts "12", "-3" or "p/q" forms; in GF(p) the fraction is reduced via
    // a modular inverse (q divisible by p is rejected).
    Scalar parse(std::string_view text) const;

    bool operator==(const FieldSpec&) const = default;

private:
    FieldKind kind_;
    std::uint64_t p_;
};

class Scalar {
public:
    Scalar() : rep_(mpq_class(0)) {} // rational zero

    // Canonical reduced rational with positive denominator. den == 0 throws.
    static Scalar rational(const mpz_class& num, const mpz_class& den);
    static Scalar rational(long num, long den = 1);
    // Residue class of value mod p; p must be prime.
    static Scalar prime_field(long value, std::uint64_t p);
    static Scalar prime_field(const mpz_class& value, std::uint64_t p);

    // Textual form of a rational: "12", "-3" or "p/q", parsed bit-exactly.
    static Scalar parse_rational(std::string_view text);

    FieldKind kind() const;
    bool same_field(const Scalar& other) const;

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // o nonzero
    Scalar operator-() const;
    Scalar inverse() const; // *this nonzero

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    // Rational-only. The dominance construction in the normalization pipeline
    // needs an absolute value and an order; GF(p) has neither.
    Scalar abs() const;
    int sign() const;
    bool operator<(const Scalar& o) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

    // Rational accessors (throw on GF(p) values).
    const mpq_class& rational_value() const;
    // GF(p) accessors (throw on rationals).
    std::uint64_t residue() const;
    std::uint64_t modulus() const;

private:
    struct PrimeValue {
        std::uint64_t r; // in [0, p)
        std::uint64_t p; // prime
        bool operator==(const PrimeValue&) const = default;
    };

    explicit Scalar(mpq_class q) : rep_(std::move(q)) {}
    explicit Scalar(PrimeValue v) : rep_(v) {}

    const mpq_class& q() const { return std::get<mpq_class>(rep_); }
    const PrimeValue& pv() const { return std::get<PrimeValue>(rep_); }
    void require_same_field(const Scalar& o) const;

    std::variant<mpq_class, PrimeValue> rep_;
};

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

} // namespace hlbip

#endif
