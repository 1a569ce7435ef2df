#pragma once

#include <vector>

#include "fox/poly.hpp"

namespace fox {

// A formal noncommutative power series on x_1..x_rank truncated at total
// degree `cutoff`: monomials of higher degree are dropped on entry, so every
// value represents the class of a series modulo degree > cutoff.
class TruncatedSeries {
public:
    using TermMap = std::map<XMonomial, FieldElem, XShortlexLess>;

    TruncatedSeries() = default;
    TruncatedSeries(int rank, FieldSpec field, int cutoff)
        : rank_(rank), field_(field), cutoff_(cutoff) {
        ReducedWord::check_rank(rank);
        if (cutoff < 0) throw IndexOutOfRange("cutoff must be nonnegative");
    }

    static TruncatedSeries constant(int rank, FieldSpec field, int cutoff, const FieldElem& c);
    static TruncatedSeries one(int rank, FieldSpec field, int cutoff) {
        return constant(rank, field, cutoff, FieldElem::one(field));
    }
    // The series x_index.
    static TruncatedSeries variable(int rank, FieldSpec field, int cutoff, int index);

    int rank() const { return rank_; }
    const FieldSpec& field() const { return field_; }
    int cutoff() const { return cutoff_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FieldElem coeff(const XMonomial& m) const;
    FieldElem constant_term() const { return coeff(XMonomial(rank_)); }
    // Least total degree of a nonzero term, or -1 when zero up to the cutoff.
    int min_degree() const;

    void add_term(const XMonomial& m, const FieldElem& c);

    // Copy truncated to a smaller cutoff.
    TruncatedSeries truncated(int cutoff) const;

    TruncatedSeries operator-() const;
    // Mixed-cutoff arithmetic truncates to the smaller cutoff.
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries scaled(const FieldElem& c) const;

    // Equality compares at the common (smaller) cutoff.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    void check_compatible(const TruncatedSeries& o) const {
        if (rank_ != o.rank_) throw RankMismatch("series of different ranks");
        if (!(field_ == o.field_)) throw FieldMismatch("series over different fields");
    }

private:
    int rank_ = 2;
    FieldSpec field_;
    int cutoff_ = 0;
    TermMap terms_;
};

// The truncated expansion under t_i -> 1 + x_i,
// t_i^{-1} -> 1 - x_i + x_i^2 - ... (the inverse series, truncated).
TruncatedSeries magnus_embed(const FreePolynomial& g, int cutoff);

// The unique u with u = r + r*u = r + u*r for a series r with zero constant
// term; computed degree by degree.  NonzeroConstantTerm otherwise.
TruncatedSeries quasi_inverse(const TruncatedSeries& r);

// Solves Z = P + Q Z for a column Z of series, where every entry of Q has
// zero constant term: eliminate the last unknown with one quasi-inverse,
// substitute into the remaining rows, recurse.  The solution is unique.
std::vector<TruncatedSeries> solve_affine_system(
    const std::vector<TruncatedSeries>& P,
    const std::vector<std::vector<TruncatedSeries>>& Q);

// Inverse of 1 + Q (Q with zero-constant entries), column by column via
// solve_affine_system.
std::vector<std::vector<TruncatedSeries>> invert_one_plus(
    const std::vector<std::vector<TruncatedSeries>>& Q);

// ---------------------------------------------------------------------------
// Linear representations of rational series: a system Z = P + Q Z with
// polynomial entries, every entry of Q of augmentation zero, together with a
// designated entry of the solution.  The represented series is that entry of
// the unique solution over the completed algebra; rat_eval computes it to any
// cutoff.  Sums, products and quasi-inverses are realized by block systems,
// keeping everything exact.
// ---------------------------------------------------------------------------
struct RationalRep {
    int size = 0;
    int entry = 0; // designated row, 0-based
    std::vector<FreePolynomial> P;
    std::vector<std::vector<FreePolynomial>> Q;

    int rank() const { return P.at(0).rank(); }
    FieldSpec field() const { return P.at(0).field(); }
    // Structural checks: shapes, ranks, fields, augmentation-zero Q.
    void validate() const;
};

// Representation of the series of a single polynomial (size-1 system).
RationalRep rat_atom(const FreePolynomial& p);

RationalRep rat_sum(const RationalRep& a, const RationalRep& b);
RationalRep rat_product(const RationalRep& a, const RationalRep& b);
// Quasi-inverse of a represented series with zero constant term (detected
// exactly: the designated row of P must have augmentation zero after the
// solution's constant term is forced to zero).  NonzeroConstantTerm if not.
RationalRep rat_quasi_inverse(const RationalRep& a);

// Designated entry of the solution, truncated at `cutoff`.
TruncatedSeries rat_eval(const RationalRep& a, int cutoff);

} // namespace fox
