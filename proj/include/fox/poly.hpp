#pragma once

#include <map>
#include <string>
#include <vector>

#include "fox/field.hpp"
#include "fox/words.hpp"

namespace fox {

// An element of the group algebra of the free group F_rank over the chosen
// field: a finitely supported coefficient map on reduced words.  Zero
// coefficients are never stored, and term iteration is in shortlex order, so
// equal polynomials have identical representations.
class FreePolynomial {
public:
    using TermMap = std::map<ReducedWord, FieldElem, ShortlexLess>;

    FreePolynomial() = default;
    FreePolynomial(int rank, FieldSpec field) : rank_(rank), field_(field) {
        ReducedWord::check_rank(rank);
    }

    static FreePolynomial zero(int rank, FieldSpec field) { return {rank, field}; }
    static FreePolynomial constant(int rank, FieldSpec field, const FieldElem& c);
    static FreePolynomial from_int(int rank, FieldSpec field, std::int64_t n) {
        return constant(rank, field, FieldElem::from_integer(field, n));
    }
    static FreePolynomial monomial(const ReducedWord& w, const FieldElem& c);
    // The generator t_index (or its inverse for sign = -1) as a polynomial.
    static FreePolynomial generator(int rank, FieldSpec field, int index, int sign = +1);

    int rank() const { return rank_; }
    const FieldSpec& field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int support_size() const { return static_cast<int>(terms_.size()); }

    // Coefficient of w (zero if absent).
    FieldElem coeff(const ReducedWord& w) const;
    // Adds c*w, erasing the term if the sum vanishes.
    void add_term(const ReducedWord& w, const FieldElem& c);

    FreePolynomial operator-() const;
    FreePolynomial& operator+=(const FreePolynomial& o);
    FreePolynomial& operator-=(const FreePolynomial& o);
    friend FreePolynomial operator+(FreePolynomial a, const FreePolynomial& b) { return a += b; }
    friend FreePolynomial operator-(FreePolynomial a, const FreePolynomial& b) { return a -= b; }
    friend FreePolynomial operator*(const FreePolynomial& a, const FreePolynomial& b);
    FreePolynomial scaled(const FieldElem& c) const;

    friend bool operator==(const FreePolynomial& a, const FreePolynomial& b) {
        return a.rank_ == b.rank_ && a.field_ == b.field_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const FreePolynomial& a, const FreePolynomial& b) { return !(a == b); }

    // Deterministic canonical key (used for hashing/visited sets).
    std::string key_string() const;

    void check_compatible(const FreePolynomial& o) const {
        if (rank_ != o.rank_) throw RankMismatch("polynomials of different ranks");
        if (!(field_ == o.field_)) throw FieldMismatch("polynomials over different fields");
    }

private:
    int rank_ = 2;
    FieldSpec field_;
    TermMap terms_;
};

// Ring homomorphism to the field sending every generator to 1: the
// coefficient sum.
FieldElem augmentation(const FreePolynomial& g);

// Maximum word length over the support; the zero polynomial has no length.
int length_of(const FreePolynomial& g); // ZeroPolynomial on 0

// Support words of maximal length |g|, in shortlex order.
std::vector<ReducedWord> strictly_maximal_words(const FreePolynomial& g);

// Nonzero, and all strictly maximal words share the same first letter.
// Nonzero constants are special (no maximal letter to disagree on).
bool is_special(const FreePolynomial& g);

// augmentation = 1.
bool is_comonic(const FreePolynomial& g);

// Exactly one term c*w (a unit of the group algebra).
bool is_unit(const FreePolynomial& g);

// Zero or a scalar multiple of the identity word.
inline bool is_constant(const FreePolynomial& g) {
    return g.is_zero() || (g.support_size() == 1 && g.terms().begin()->first.is_identity());
}

// Valuation of g in the completed algebra of formal series: the lowest total
// degree of the image under t_i -> 1 + x_i.  Computed by truncated expansion
// with an increasing cutoff (start 4, doubling), which terminates because the
// expansion of a nonzero polynomial is nonzero.  ZeroPolynomial on 0.
int order_of(const FreePolynomial& g);

// ---------------------------------------------------------------------------
// Mixed basis: the free associative algebra on x_1..x_n, y_1..y_n modulo the
// rewriting x_i y_i -> -x_i - y_i and y_i x_i -> -x_i - y_i, which realizes
// x_i = t_i - 1, y_i = t_i^{-1} - 1.  Monomials avoiding those adjacent
// pairs form a basis of the group algebra.
// ---------------------------------------------------------------------------

struct MixedLetter {
    int index = 1;
    bool bar = false; // false: x_index, true: y_index

    friend bool operator==(const MixedLetter&, const MixedLetter&) = default;
    friend auto operator<=>(const MixedLetter& a, const MixedLetter& b) {
        if (auto c = a.index <=> b.index; c != 0) return c;
        return a.bar <=> b.bar;
    }
};

class MixedMonomial {
public:
    MixedMonomial() = default;
    explicit MixedMonomial(std::vector<MixedLetter> ls) : letters_(std::move(ls)) {}

    int degree() const { return static_cast<int>(letters_.size()); }
    const std::vector<MixedLetter>& letters() const { return letters_; }

    // Position of the leftmost adjacent x_i y_i / y_i x_i pair, or -1.
    int first_forbidden_pair() const;
    int last_forbidden_pair() const;

    MixedMonomial replaced(int pos, const MixedLetter& l) const;
    MixedMonomial erased(int pos) const;

    friend bool operator==(const MixedMonomial&, const MixedMonomial&) = default;
    friend auto operator<=>(const MixedMonomial& a, const MixedMonomial& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        return a.letters_ <=> b.letters_;
    }

    std::string to_string() const; // "x1*y2", "1" when empty

private:
    std::vector<MixedLetter> letters_;
};

class MixedPolynomial {
public:
    using TermMap = std::map<MixedMonomial, FieldElem>;

    MixedPolynomial() = default;
    MixedPolynomial(int rank, FieldSpec field) : rank_(rank), field_(field) {}

    int rank() const { return rank_; }
    const FieldSpec& field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool in_normal_form() const;

    void add_term(const MixedMonomial& m, const FieldElem& c);

    friend bool operator==(const MixedPolynomial&, const MixedPolynomial&) = default;

private:
    int rank_ = 2;
    FieldSpec field_;
    TermMap terms_;
};

// Rewrite strategy selector, used to check confluence in tests.
enum class RewriteOrder { Leftmost, Rightmost };

// Expansion of g over the mixed letters followed by rewriting to normal form.
MixedPolynomial to_mixed_basis(const FreePolynomial& g,
                               RewriteOrder order = RewriteOrder::Leftmost);

// Substitutes x_i = t_i - 1, y_i = t_i^{-1} - 1 back into the group algebra.
FreePolynomial from_mixed_basis(const MixedPolynomial& m);

} // namespace fox
