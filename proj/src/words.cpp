#include "fox/words.hpp"

namespace fox {

ReducedWord ReducedWord::reduce(int rank, const std::vector<Letter>& letters) {
    ReducedWord w(rank);
    for (const Letter& l : letters) {
        w.check_letter(l);
        if (!w.letters_.empty() && w.letters_.back() == l.inverse())
            w.letters_.pop_back();
        else
            w.letters_.push_back(l);
    }
    return w;
}

ReducedWord concat_reduce(const ReducedWord& u, const ReducedWord& v) {
    if (u.rank_ != v.rank_) throw RankMismatch("concatenating words of different ranks");
    ReducedWord w = u;
    for (const Letter& l : v.letters_) {
        if (!w.letters_.empty() && w.letters_.back() == l.inverse())
            w.letters_.pop_back();
        else
            w.letters_.push_back(l);
    }
    return w;
}

ReducedWord ReducedWord::head(int l) const {
    if (l < 0 || l > length()) throw IndexOutOfRange("head index out of range");
    ReducedWord h(rank_);
    h.letters_.assign(letters_.begin(), letters_.begin() + l);
    return h;
}

ReducedWord ReducedWord::tail(int l) const {
    if (l < 0 || l > length()) throw IndexOutOfRange("tail index out of range");
    ReducedWord t(rank_);
    t.letters_.assign(letters_.begin() + l, letters_.end());
    return t;
}

ReducedWord ReducedWord::inverse() const {
    ReducedWord w(rank_);
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back(it->inverse());
    return w;
}

std::string ReducedWord::to_string() const {
    if (letters_.empty()) return "1";
    std::string s;
    std::size_t i = 0;
    while (i < letters_.size()) {
        std::size_t j = i;
        while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
        if (!s.empty()) s += "*";
        s += "t" + std::to_string(letters_[i].index);
        const long long e = static_cast<long long>(j - i) * letters_[i].sign;
        if (e != 1) s += "^" + std::to_string(e);
        i = j;
    }
    return s;
}

std::strong_ordering shortlex_compare(const ReducedWord& a, const ReducedWord& b) {
    if (a.rank() != b.rank()) throw RankMismatch("comparing words of different ranks");
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    for (int k = 0; k < a.length(); ++k)
        if (auto c = a.letter(k) <=> b.letter(k); c != 0) return c;
    return std::strong_ordering::equal;
}

std::vector<ReducedWord> enumerate_words(int rank, int max_len) {
    ReducedWord::check_rank(rank);
    std::vector<ReducedWord> all{ReducedWord(rank)};
    std::vector<ReducedWord> frontier = all;
    std::vector<Letter> alphabet;
    for (int i = 1; i <= rank; ++i) {
        alphabet.push_back(Letter{i, +1});
        alphabet.push_back(Letter{i, -1});
    }
    for (int len = 1; len <= max_len; ++len) {
        std::vector<ReducedWord> next;
        for (const ReducedWord& w : frontier)
            for (const Letter& l : alphabet) {
                if (w.length() > 0 && w.letter(w.length() - 1) == l.inverse()) continue;
                ReducedWord e = w;
                e = concat_reduce(e, ReducedWord::reduce(rank, {l}));
                next.push_back(e);
            }
        all.insert(all.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return all;
}

XMonomial::XMonomial(int rank, std::vector<int> indices) : rank_(rank), indices_(std::move(indices)) {
    ReducedWord::check_rank(rank);
    for (int i : indices_)
        if (i < 1 || i > rank_)
            throw IndexOutOfRange("monomial index " + std::to_string(i) +
                                  " outside rank " + std::to_string(rank_));
}

XMonomial XMonomial::concat(const XMonomial& o) const {
    if (rank_ != o.rank_) throw RankMismatch("concatenating monomials of different ranks");
    XMonomial m = *this;
    m.indices_.insert(m.indices_.end(), o.indices_.begin(), o.indices_.end());
    return m;
}

XMonomial XMonomial::append(int index) const {
    XMonomial m = *this;
    if (index < 1 || index > rank_) throw IndexOutOfRange("monomial index out of range");
    m.indices_.push_back(index);
    return m;
}

XMonomial XMonomial::behead() const {
    if (indices_.empty()) throw IndexOutOfRange("behead of the empty monomial");
    XMonomial m(rank_);
    m.indices_.assign(indices_.begin() + 1, indices_.end());
    return m;
}

XMonomial XMonomial::head(int l) const {
    if (l < 0 || l > degree()) throw IndexOutOfRange("head index out of range");
    XMonomial m(rank_);
    m.indices_.assign(indices_.begin(), indices_.begin() + l);
    return m;
}

XMonomial XMonomial::tail(int l) const {
    if (l < 0 || l > degree()) throw IndexOutOfRange("tail index out of range");
    XMonomial m(rank_);
    m.indices_.assign(indices_.begin() + l, indices_.end());
    return m;
}

std::string XMonomial::to_string() const {
    if (indices_.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < indices_.size(); ++k) {
        if (k) s += "*";
        s += "x" + std::to_string(indices_[k]);
    }
    return s;
}

std::strong_ordering shortlex_compare(const XMonomial& a, const XMonomial& b) {
    if (a.rank() != b.rank()) throw RankMismatch("comparing monomials of different ranks");
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (int k = 0; k < a.degree(); ++k)
        if (auto c = a.indices()[static_cast<std::size_t>(k)] <=> b.indices()[static_cast<std::size_t>(k)]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

std::vector<XMonomial> enumerate_xmonomials(int rank, int degree) {
    std::vector<XMonomial> cur{XMonomial(rank)};
    for (int d = 0; d < degree; ++d) {
        std::vector<XMonomial> next;
        next.reserve(cur.size() * static_cast<std::size_t>(rank));
        for (const XMonomial& m : cur)
            for (int i = 1; i <= rank; ++i) next.push_back(m.append(i));
        cur = std::move(next);
    }
    return cur;
}

} // namespace fox
