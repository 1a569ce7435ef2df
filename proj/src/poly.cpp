#include "fox/poly.hpp"

namespace fox {

FreePolynomial FreePolynomial::constant(int rank, FieldSpec field, const FieldElem& c) {
    FreePolynomial g(rank, field);
    g.add_term(ReducedWord(rank), c);
    return g;
}

FreePolynomial FreePolynomial::monomial(const ReducedWord& w, const FieldElem& c) {
    FreePolynomial g(w.rank(), c.field());
    g.add_term(w, c);
    return g;
}

FreePolynomial FreePolynomial::generator(int rank, FieldSpec field, int index, int sign) {
    return monomial(ReducedWord::reduce(rank, {Letter{index, sign}}),
                    FieldElem::one(field));
}

FieldElem FreePolynomial::coeff(const ReducedWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? FieldElem::zero(field_) : it->second;
}

void FreePolynomial::add_term(const ReducedWord& w, const FieldElem& c) {
    if (w.rank() != rank_) throw RankMismatch("term word rank differs from polynomial rank");
    if (!(c.field() == field_)) throw FieldMismatch("term coefficient from a different field");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FreePolynomial FreePolynomial::operator-() const {
    FreePolynomial g(rank_, field_);
    for (const auto& [w, c] : terms_) g.terms_.emplace(w, -c);
    return g;
}

FreePolynomial& FreePolynomial::operator+=(const FreePolynomial& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

FreePolynomial& FreePolynomial::operator-=(const FreePolynomial& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

FreePolynomial operator*(const FreePolynomial& a, const FreePolynomial& b) {
    a.check_compatible(b);
    FreePolynomial g(a.rank_, a.field_);
    for (const auto& [u, cu] : a.terms_)
        for (const auto& [v, cv] : b.terms_)
            g.add_term(concat_reduce(u, v), cu * cv);
    return g;
}

FreePolynomial FreePolynomial::scaled(const FieldElem& c) const {
    if (!(c.field() == field_)) throw FieldMismatch("scaling by a scalar from a different field");
    FreePolynomial g(rank_, field_);
    if (c.is_zero()) return g;
    for (const auto& [w, cw] : terms_) g.terms_.emplace(w, cw * c);
    return g;
}

std::string FreePolynomial::key_string() const {
    std::string s = field_.to_string() + "#" + std::to_string(rank_);
    for (const auto& [w, c] : terms_) s += "|" + c.to_string() + "*" + w.to_string();
    return s;
}

FieldElem augmentation(const FreePolynomial& g) {
    FieldElem e = FieldElem::zero(g.field());
    for (const auto& [w, c] : g.terms()) e += c;
    return e;
}

int length_of(const FreePolynomial& g) {
    if (g.is_zero()) throw ZeroPolynomial("the zero polynomial has no length");
    int m = 0;
    for (const auto& [w, c] : g.terms()) m = std::max(m, w.length());
    return m;
}

std::vector<ReducedWord> strictly_maximal_words(const FreePolynomial& g) {
    const int m = length_of(g);
    std::vector<ReducedWord> out;
    for (const auto& [w, c] : g.terms())
        if (w.length() == m) out.push_back(w);
    return out;
}

bool is_special(const FreePolynomial& g) {
    if (g.is_zero()) return false;
    const auto maxw = strictly_maximal_words(g);
    if (maxw.front().length() == 0) return true; // nonzero constant
    const Letter head = maxw.front().letter(0);
    for (const ReducedWord& w : maxw)
        if (!(w.letter(0) == head)) return false;
    return true;
}

bool is_comonic(const FreePolynomial& g) { return augmentation(g).is_one(); }

bool is_unit(const FreePolynomial& g) { return g.support_size() == 1; }

// --- mixed basis -----------------------------------------------------------

int MixedMonomial::first_forbidden_pair() const {
    for (int k = 0; k + 1 < degree(); ++k) {
        const auto& a = letters_[static_cast<std::size_t>(k)];
        const auto& b = letters_[static_cast<std::size_t>(k) + 1];
        if (a.index == b.index && a.bar != b.bar) return k;
    }
    return -1;
}

int MixedMonomial::last_forbidden_pair() const {
    for (int k = degree() - 2; k >= 0; --k) {
        const auto& a = letters_[static_cast<std::size_t>(k)];
        const auto& b = letters_[static_cast<std::size_t>(k) + 1];
        if (a.index == b.index && a.bar != b.bar) return k;
    }
    return -1;
}

MixedMonomial MixedMonomial::replaced(int pos, const MixedLetter& l) const {
    MixedMonomial m = *this;
    m.letters_.at(static_cast<std::size_t>(pos)) = l;
    return m;
}

MixedMonomial MixedMonomial::erased(int pos) const {
    MixedMonomial m = *this;
    m.letters_.erase(m.letters_.begin() + pos);
    return m;
}

std::string MixedMonomial::to_string() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
        if (k) s += "*";
        s += (letters_[k].bar ? "y" : "x") + std::to_string(letters_[k].index);
    }
    return s;
}

bool MixedPolynomial::in_normal_form() const {
    for (const auto& [m, c] : terms_)
        if (m.first_forbidden_pair() >= 0) return false;
    return true;
}

void MixedPolynomial::add_term(const MixedMonomial& m, const FieldElem& c) {
    if (!(c.field() == field_)) throw FieldMismatch("term coefficient from a different field");
    for (const MixedLetter& l : m.letters())
        if (l.index < 1 || l.index > rank_) throw IndexOutOfRange("mixed letter outside rank");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MixedPolynomial to_mixed_basis(const FreePolynomial& g, RewriteOrder order) {
    MixedPolynomial out(g.rank(), g.field());
    // Expand each word as the product of (1 + x_i) / (1 + y_i) factors.
    MixedPolynomial raw(g.rank(), g.field());
    for (const auto& [w, c] : g.terms()) {
        std::vector<std::pair<MixedMonomial, FieldElem>> partial{{MixedMonomial{}, c}};
        for (const Letter& l : w.letters()) {
            const MixedLetter ml{l.index, l.sign < 0};
            std::vector<std::pair<MixedMonomial, FieldElem>> next;
            next.reserve(partial.size() * 2);
            for (const auto& [m, cm] : partial) {
                next.emplace_back(m, cm); // choose the 1
                std::vector<MixedLetter> ext = m.letters();
                ext.push_back(ml);
                next.emplace_back(MixedMonomial(std::move(ext)), cm);
            }
            partial = std::move(next);
        }
        for (const auto& [m, cm] : partial) raw.add_term(m, cm);
    }
    // Rewrite forbidden pairs; each step shortens a monomial, so this
    // terminates.  The normal form is independent of the strategy.
    std::vector<std::pair<MixedMonomial, FieldElem>> work(raw.terms().begin(), raw.terms().end());
    while (!work.empty()) {
        auto [m, c] = work.back();
        work.pop_back();
        if (c.is_zero()) continue;
        const int pos = order == RewriteOrder::Leftmost ? m.first_forbidden_pair()
                                                        : m.last_forbidden_pair();
        if (pos < 0) {
            out.add_term(m, c);
            continue;
        }
        // A (xi yi) B -> -A xi B - A yi B (same with the roles swapped).
        const MixedLetter a = m.letters()[static_cast<std::size_t>(pos)];
        const MixedLetter b = m.letters()[static_cast<std::size_t>(pos) + 1];
        MixedMonomial keep_first = m.erased(pos + 1);
        MixedMonomial keep_second = m.erased(pos);
        (void)a; (void)b;
        work.emplace_back(keep_first, -c);
        work.emplace_back(keep_second, -c);
    }
    return out;
}

FreePolynomial from_mixed_basis(const MixedPolynomial& m) {
    const int rank = m.rank();
    FreePolynomial out(rank, m.field());
    const FieldElem one = FieldElem::one(m.field());
    for (const auto& [mono, c] : m.terms()) {
        FreePolynomial term = FreePolynomial::constant(rank, m.field(), c);
        for (const MixedLetter& l : mono.letters()) {
            FreePolynomial factor = FreePolynomial::generator(rank, m.field(), l.index, l.bar ? -1 : +1);
            factor.add_term(ReducedWord(rank), -one);
            term = term * factor;
        }
        out += term;
    }
    return out;
}

} // namespace fox
