#include <hlbip/scalar.hpp>

#include <cctype>

namespace hlbip {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128(a) * b) % p); }

u64 powmod(u64 base, u64 exp, u64 p) {
    u64 acc = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

// Fermat inverse; p prime, r nonzero.
u64 invmod(u64 r, u64 p) { return powmod(r, p - 2, p); }

u64 reduce_mod(const mpz_class& value, u64 p) {
    mpz_class m(static_cast<unsigned long>(p));
    mpz_class r = value % m;
    if (r < 0) r += m;
    return r.get_ui();
}

bool valid_integer_literal(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == small) return true;
        if (n % small == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set decides primality exactly below 3.3 * 10^24.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(u64 p) {
    if (!is_prime_u64(p)) throw input_error("GF(p) modulus " + std::to_string(p) + " is not prime");
    FieldSpec f;
    f.kind_ = FieldKind::prime;
    f.p_ = p;
    return f;
}

Scalar FieldSpec::zero() const { return from_int(0); }
Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(long v) const {
    if (kind_ == FieldKind::rational) return Scalar::rational(v);
    return Scalar::prime_field(v, p_);
}

Scalar FieldSpec::parse(std::string_view text) const {
    Scalar q = Scalar::parse_rational(text);
    if (kind_ == FieldKind::rational) return q;
    const mpq_class& v = q.rational_value();
    Scalar num = Scalar::prime_field(v.get_num(), p_);
    Scalar den = Scalar::prime_field(v.get_den(), p_);
    if (den.is_zero())
        throw input_error("denominator of '" + std::string(text) + "' vanishes mod " + std::to_string(p_));
    return num / den;
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw input_error("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::rational(long num, long den) { return rational(mpz_class(num), mpz_class(den)); }

Scalar Scalar::prime_field(const mpz_class& value, u64 p) {
    if (!is_prime_u64(p)) throw input_error("GF(p) modulus " + std::to_string(p) + " is not prime");
    return Scalar(PrimeValue{reduce_mod(value, p), p});
}

Scalar Scalar::prime_field(long value, u64 p) { return prime_field(mpz_class(value), p); }

Scalar Scalar::parse_rational(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer_literal(s)) throw input_error("malformed scalar '" + s + "'");
        return Scalar(mpq_class(mpz_class(s, 10)));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!valid_integer_literal(num) || !valid_integer_literal(den))
        throw input_error("malformed scalar '" + s + "'");
    return rational(mpz_class(num, 10), mpz_class(den, 10));
}

FieldKind Scalar::kind() const {
    return std::holds_alternative<mpq_class>(rep_) ? FieldKind::rational : FieldKind::prime;
}

bool Scalar::same_field(const Scalar& other) const {
    if (kind() != other.kind()) return false;
    if (kind() == FieldKind::prime && pv().p != other.pv().p) return false;
    return true;
}

void Scalar::require_same_field(const Scalar& o) const {
    if (!same_field(o)) throw input_error("arithmetic between scalars of different fields");
}

bool Scalar::is_zero() const {
    if (kind() == FieldKind::rational) return q() == 0;
    return pv().r == 0;
}

bool Scalar::is_one() const {
    if (kind() == FieldKind::rational) return q() == 1;
    return pv().r == 1 % pv().p;
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    if (kind() == FieldKind::rational) return Scalar(mpq_class(q() + o.q()));
    u64 p = pv().p;
    u64 s = static_cast<u64>((u128(pv().r) + o.pv().r) % p);
    return Scalar(PrimeValue{s, p});
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    if (kind() == FieldKind::rational) return Scalar(mpq_class(q() * o.q()));
    return Scalar(PrimeValue{mulmod(pv().r, o.pv().r, pv().p), pv().p});
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same_field(o);
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    if (kind() == FieldKind::rational) return Scalar(mpq_class(-q()));
    u64 p = pv().p;
    return Scalar(PrimeValue{pv().r == 0 ? 0 : p - pv().r, p});
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw input_error("inverse of zero");
    if (kind() == FieldKind::rational) return Scalar(mpq_class(1 / q()));
    return Scalar(PrimeValue{invmod(pv().r, pv().p), pv().p});
}

Scalar Scalar::abs() const {
    if (kind() != FieldKind::rational) throw input_error("absolute value is only defined over the rationals");
    return Scalar(mpq_class(::abs(q())));
}

int Scalar::sign() const {
    if (kind() != FieldKind::rational) throw input_error("sign is only defined over the rationals");
    return sgn(q());
}

bool Scalar::operator<(const Scalar& o) const {
    require_same_field(o);
    if (kind() != FieldKind::rational) throw input_error("GF(p) values are unordered");
    return q() < o.q();
}

bool Scalar::operator==(const Scalar& o) const {
    if (!same_field(o)) return false;
    if (kind() == FieldKind::rational) return q() == o.q();
    return pv().r == o.pv().r;
}

std::string Scalar::str() const {
    if (kind() == FieldKind::rational) return q().get_str();
    return std::to_string(pv().r);
}

const mpq_class& Scalar::rational_value() const {
    if (kind() != FieldKind::rational) throw input_error("not a rational scalar");
    return q();
}

std::uint64_t Scalar::residue() const {
    if (kind() != FieldKind::prime) throw input_error("not a GF(p) scalar");
    return pv().r;
}

std::uint64_t Scalar::modulus() const {
    if (kind() != FieldKind::prime) throw input_error("not a GF(p) scalar");
    return pv().p;
}

} // namespace hlbip
