#include "fox/field.hpp"

#include <cctype>

namespace fox {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// Canonical residue of an arbitrary-precision integer.
std::int64_t residue_of(const BigInt& n, std::int64_t p) {
    BigInt r = n % p;
    if (r < 0) r += p;
    return static_cast<std::int64_t>(r);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    // extended Euclid; a in [0, p)
    std::int64_t old_r = a, r = p;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r; old_r = r; r = t;
        t = old_s - q * s; old_s = s; s = t;
    }
    if (old_r != 1) throw DivisionByZero("inverse of a non-unit residue");
    std::int64_t inv = old_s % p;
    if (inv < 0) inv += p;
    return inv;
}

} // namespace

FieldSpec FieldSpec::prime_field(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p))
        throw ParseError("field modulus must be a prime below 2^31, got " + std::to_string(p));
    FieldSpec f;
    f.p_ = p;
    return f;
}

std::string FieldSpec::to_string() const {
    return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

FieldSpec FieldSpec::from_string(const std::string& s) {
    if (s == "Q" || s == "q") return rationals();
    std::string digits;
    if (s.rfind("GF(", 0) == 0 && s.size() > 4 && s.back() == ')')
        digits = s.substr(3, s.size() - 4);
    else if (s.rfind("gf:", 0) == 0)
        digits = s.substr(3);
    else
        throw ParseError("unrecognized field spec '" + s + "' (want Q, GF(p), or gf:p)");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("bad field modulus '" + digits + "'");
    if (digits.empty() || digits.size() > 10) throw ParseError("bad field modulus '" + digits + "'");
    return prime_field(std::stoll(digits));
}

FieldElem FieldElem::from_integer(FieldSpec f, std::int64_t n) {
    FieldElem e(f);
    if (f.is_rational()) e.q_ = n;
    else e.r_ = residue_of(BigInt(n), f.characteristic());
    return e;
}

FieldElem FieldElem::from_big(FieldSpec f, const BigInt& num, const BigInt& den) {
    FieldElem e(f);
    if (den == 0) throw NonInvertibleDenominator("zero denominator");
    if (f.is_rational()) {
        e.q_ = BigRational(num, den);
    } else {
        std::int64_t p = f.characteristic();
        std::int64_t d = residue_of(den, p);
        if (d == 0)
            throw NonInvertibleDenominator("denominator divisible by the field characteristic");
        e.r_ = residue_of(num, p) * mod_inverse(d, p) % p;
    }
    return e;
}

bool FieldElem::is_zero() const { return spec_.is_rational() ? q_ == 0 : r_ == 0; }
bool FieldElem::is_one() const { return spec_.is_rational() ? q_ == 1 : r_ == 1; }

FieldElem FieldElem::operator-() const {
    FieldElem e(spec_);
    if (spec_.is_rational()) e.q_ = -q_;
    else if (r_ != 0) e.r_ = spec_.characteristic() - r_;
    return e;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    check_same_field(o);
    if (spec_.is_rational()) q_ += o.q_;
    else r_ = (r_ + o.r_) % spec_.characteristic();
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
    check_same_field(o);
    if (spec_.is_rational()) q_ -= o.q_;
    else {
        r_ -= o.r_;
        if (r_ < 0) r_ += spec_.characteristic();
    }
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
    check_same_field(o);
    if (spec_.is_rational()) q_ *= o.q_;
    else r_ = r_ * o.r_ % spec_.characteristic();
    return *this;
}

FieldElem FieldElem::invert() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    FieldElem e(spec_);
    if (spec_.is_rational()) e.q_ = 1 / q_;
    else e.r_ = mod_inverse(r_, spec_.characteristic());
    return e;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    a.check_same_field(b);
    return a.spec_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string FieldElem::to_string() const {
    if (!spec_.is_rational()) return std::to_string(r_);
    const BigInt num = boost::multiprecision::numerator(q_);
    const BigInt den = boost::multiprecision::denominator(q_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

FieldElem FieldElem::parse(FieldSpec f, const std::string& s) {
    auto parse_int = [](const std::string& t) -> BigInt {
        std::size_t i = 0;
        bool neg = false;
        if (i < t.size() && (t[i] == '+' || t[i] == '-')) neg = t[i++] == '-';
        if (i >= t.size()) throw ParseError("empty integer in scalar '" + t + "'");
        BigInt v = 0;
        for (; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                throw ParseError("bad character in scalar '" + t + "'");
            v = v * 10 + (t[i] - '0');
        }
        return neg ? BigInt(-v) : v;
    };
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos) return from_big(f, parse_int(s), 1);
    return from_big(f, parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

} // namespace fox
