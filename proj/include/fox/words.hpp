#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fox/error.hpp"

namespace fox {

// One generator or inverse-generator occurrence: t_index^sign with
// 1 <= index <= rank and sign in {+1, -1}.  Powers are stored as repeated
// unit-exponent letters so reduction and splitting stay uniform.
struct Letter {
    int index = 1;
    int sign = +1;

    friend bool operator==(const Letter&, const Letter&) = default;
    // Letter order used by shortlex: t_1 < t_1^{-1} < t_2 < t_2^{-1} < ...
    friend auto operator<=>(const Letter& a, const Letter& b) {
        if (auto c = a.index <=> b.index; c != 0) return c;
        return (a.sign < 0) <=> (b.sign < 0);
    }
    Letter inverse() const { return Letter{index, -sign}; }
};

// A reduced word of the free group F_rank: no adjacent t_i t_i^{-1} or
// t_i^{-1} t_i pair.  The empty word is the group identity.
class ReducedWord {
public:
    ReducedWord() = default;
    explicit ReducedWord(int rank) : rank_(rank) { check_rank(rank); }

    // Free reduction of an arbitrary letter string.
    static ReducedWord reduce(int rank, const std::vector<Letter>& letters);

    int rank() const { return rank_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool is_identity() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }
    const Letter& letter(int k) const { return letters_.at(static_cast<std::size_t>(k)); }

    // Concatenation followed by free reduction (lengths can only drop in
    // steps of two, so |uv| = |u| + |v| mod 2).
    friend ReducedWord concat_reduce(const ReducedWord& u, const ReducedWord& v);

    // Head eta_w(l) = w_1...w_l and tail theta_w(l) = w_{l+1}...w_m for
    // 0 <= l <= m; eta_w(0) and theta_w(m) are the identity.  Subwords of a
    // reduced word are reduced, so no re-reduction happens here.
    ReducedWord head(int l) const;
    ReducedWord tail(int l) const;

    ReducedWord inverse() const;

    friend bool operator==(const ReducedWord& a, const ReducedWord& b) {
        return a.rank_ == b.rank_ && a.letters_ == b.letters_;
    }

    // "t1*t2^-1", with runs of one letter collapsed into powers; "1" for the
    // identity.
    std::string to_string() const;

    static void check_rank(int rank) {
        if (rank < 2) throw RankMismatch("rank must be at least 2, got " + std::to_string(rank));
    }
    void check_letter(const Letter& l) const {
        if (l.index < 1 || l.index > rank_)
            throw IndexOutOfRange("letter index " + std::to_string(l.index) +
                                  " outside rank " + std::to_string(rank_));
        if (l.sign != 1 && l.sign != -1) throw ParseError("letter sign must be +1 or -1");
    }

private:
    int rank_ = 2;
    std::vector<Letter> letters_;
};

// Shortlex: compare by length first, then letterwise by the Letter order.
// Total order; the identity is least.
std::strong_ordering shortlex_compare(const ReducedWord& a, const ReducedWord& b);

struct ShortlexLess {
    bool operator()(const ReducedWord& a, const ReducedWord& b) const {
        return shortlex_compare(a, b) == std::strong_ordering::less;
    }
};

// All reduced words of length <= max_len in shortlex order.  Their number is
// 1 + 2n * sum_{k<max_len} (2n-1)^k for rank n.
std::vector<ReducedWord> enumerate_words(int rank, int max_len);

// A word of the free monoid on x_1..x_rank (no inverses, no reduction),
// stored as the sequence of 1-based indices.  Used for series monomials,
// higher-derivative directions and Leavitt star words.
class XMonomial {
public:
    XMonomial() = default;
    explicit XMonomial(int rank) : rank_(rank) { ReducedWord::check_rank(rank); }
    XMonomial(int rank, std::vector<int> indices);

    int rank() const { return rank_; }
    int degree() const { return static_cast<int>(indices_.size()); }
    bool is_empty() const { return indices_.empty(); }
    const std::vector<int>& indices() const { return indices_; }

    XMonomial concat(const XMonomial& o) const;
    XMonomial append(int index) const;
    // Drops the first index; the monomial must be nonempty.
    XMonomial behead() const;
    XMonomial head(int l) const;
    XMonomial tail(int l) const;

    friend bool operator==(const XMonomial& a, const XMonomial& b) {
        return a.rank_ == b.rank_ && a.indices_ == b.indices_;
    }

    std::string to_string() const; // "x1*x2", "1" when empty

private:
    int rank_ = 2;
    std::vector<int> indices_;
};

std::strong_ordering shortlex_compare(const XMonomial& a, const XMonomial& b);

struct XShortlexLess {
    bool operator()(const XMonomial& a, const XMonomial& b) const {
        return shortlex_compare(a, b) == std::strong_ordering::less;
    }
};

// All monomials of degree exactly `degree` (rank^degree of them), shortlex.
std::vector<XMonomial> enumerate_xmonomials(int rank, int degree);

} // namespace fox
