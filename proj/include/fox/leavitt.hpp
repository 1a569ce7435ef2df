#pragma once

#include <map>

#include "fox/fox_deriv.hpp"

namespace fox {

// ---------------------------------------------------------------------------
// Quasi-normal forms in the localization of the group algebra at the
// augmentation-zero letters x_i = t_i - 1: finite sums  sum_w  c_w * w^*
// with c_w a group-algebra polynomial and w a monomial in x_1..x_n.  The
// adjoined symbols satisfy
//     x_i^* x_j = delta_ij,      sum_i x_i x_i^* = 1,
// and pushing a star past a polynomial uses
//     x_i^* c = d_i(c) + aug(c) x_i^*
// with d_i the unbarred partial derivative.  Every product of quasi-normal
// forms is again one, and at a fixed star depth the representation is unique.
// ---------------------------------------------------------------------------

class LeavittElement {
public:
    using TermMap = std::map<XMonomial, FreePolynomial, XShortlexLess>;

    LeavittElement(int rank, FieldSpec field);
    static LeavittElement from_poly(const FreePolynomial& p);
    // c * w^*
    static LeavittElement star_term(const FreePolynomial& c, const XMonomial& w);
    static LeavittElement one(int rank, FieldSpec field);

    int rank() const { return rank_; }
    FieldSpec field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Maximum star-word degree (0 when zero or purely polynomial).
    int depth() const;

    void add_term(const XMonomial& w, const FreePolynomial& c);

    LeavittElement scaled(const FieldElem& c) const;

    friend LeavittElement operator+(const LeavittElement& a, const LeavittElement& b);
    friend LeavittElement operator-(const LeavittElement& a, const LeavittElement& b);
    LeavittElement operator-() const;
    friend LeavittElement operator*(const LeavittElement& a, const LeavittElement& b);

    // Rewrites every term to star depth exactly `depth` using the depth-raise
    // identity c w^* = sum_i (c x_i) (w x_i)^*.  DepthTooSmall when some term
    // already has a longer star word.
    LeavittElement canonical_form(int depth) const;

    // Mathematical equality: canonical forms at the larger of the two depths
    // coincide.
    friend bool operator==(const LeavittElement& a, const LeavittElement& b);

private:
    int rank_;
    FieldSpec field_;
    TermMap terms_;

    void check_compatible(const LeavittElement& o) const;
};

// v^* * c in quasi-normal form (the star of monomial v pushed through the
// polynomial c).
LeavittElement star_times(const XMonomial& v, const FreePolynomial& c);

// The idempotent x_i x_i^* = (t_i - 1) x_i^*.
LeavittElement zeta(int rank, FieldSpec field, int index);

} // namespace fox
