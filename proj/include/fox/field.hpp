#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "fox/error.hpp"

namespace fox {

using BigRational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Description of the coefficient field: the rationals, or a prime field
// GF(p) with p < 2^31.
class FieldSpec {
public:
    // Default-constructed spec is the rationals.
    constexpr FieldSpec() = default;

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec prime_field(std::int64_t p);

    bool is_rational() const { return p_ == 0; }
    // 0 for the rationals, p for GF(p).
    std::int64_t characteristic() const { return p_; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) = default;

    // "Q" or "GF(p)".  from_string also accepts the CLI spelling "gf:p".
    std::string to_string() const;
    static FieldSpec from_string(const std::string& s);

private:
    std::int64_t p_ = 0;
};

// An exact scalar in a fixed field.  Rational values use arbitrary-precision
// fractions; prime-field values are canonical residues in [0, p).
class FieldElem {
public:
    // Zero over the rationals; containers need this, but real values should
    // be built with the named constructors below.
    FieldElem() = default;

    explicit FieldElem(FieldSpec f) : spec_(f) {}

    static FieldElem zero(FieldSpec f) { return FieldElem(f); }
    static FieldElem one(FieldSpec f) { return from_integer(f, 1); }
    static FieldElem from_integer(FieldSpec f, std::int64_t n);
    static FieldElem from_big(FieldSpec f, const BigInt& num, const BigInt& den);

    const FieldSpec& field() const { return spec_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }

    // Multiplicative inverse; DivisionByZero on zero.
    FieldElem invert() const;
    FieldElem operator/(const FieldElem& o) const { return *this * o.invert(); }

    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    // "num" or "num/den"; prime-field values print their canonical residue.
    std::string to_string() const;

    // Accepts an optionally signed integer or fraction.  Over GF(p) a
    // fraction whose denominator is divisible by p raises
    // NonInvertibleDenominator.
    static FieldElem parse(FieldSpec f, const std::string& s);

    // Only meaningful over the rationals.
    const BigRational& rational() const { return q_; }
    // Only meaningful over GF(p).
    std::int64_t residue() const { return r_; }

private:
    void check_same_field(const FieldElem& o) const {
        if (!(spec_ == o.spec_)) throw FieldMismatch("scalars from different fields");
    }

    FieldSpec spec_;
    BigRational q_;
    std::int64_t r_ = 0;
};

} // namespace fox
