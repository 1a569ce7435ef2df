#include "fox/leavitt.hpp"

#include <algorithm>

namespace fox {

LeavittElement::LeavittElement(int rank, FieldSpec field) : rank_(rank), field_(field) {
    ReducedWord::check_rank(rank);
}

LeavittElement LeavittElement::from_poly(const FreePolynomial& p) {
    LeavittElement out(p.rank(), p.field());
    out.add_term(XMonomial(p.rank()), p);
    return out;
}

LeavittElement LeavittElement::star_term(const FreePolynomial& c, const XMonomial& w) {
    if (c.rank() != w.rank()) throw RankMismatch("star term rank mismatch");
    LeavittElement out(c.rank(), c.field());
    out.add_term(w, c);
    return out;
}

LeavittElement LeavittElement::one(int rank, FieldSpec field) {
    return from_poly(FreePolynomial::from_int(rank, field, 1));
}

int LeavittElement::depth() const {
    int d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.degree());
    return d;
}

void LeavittElement::add_term(const XMonomial& w, const FreePolynomial& c) {
    if (w.rank() != rank_) throw RankMismatch("star word rank mismatch");
    if (c.rank() != rank_) throw RankMismatch("coefficient rank mismatch");
    if (!(c.field() == field_)) throw FieldMismatch("coefficient field mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

LeavittElement LeavittElement::scaled(const FieldElem& c) const {
    LeavittElement out(rank_, field_);
    for (const auto& [w, p] : terms_) out.add_term(w, p.scaled(c));
    return out;
}

void LeavittElement::check_compatible(const LeavittElement& o) const {
    if (rank_ != o.rank_) throw RankMismatch("mixed ranks");
    if (!(field_ == o.field_)) throw FieldMismatch("mixed fields");
}

LeavittElement operator+(const LeavittElement& a, const LeavittElement& b) {
    a.check_compatible(b);
    LeavittElement out = a;
    for (const auto& [w, c] : b.terms_) out.add_term(w, c);
    return out;
}

LeavittElement operator-(const LeavittElement& a, const LeavittElement& b) {
    a.check_compatible(b);
    LeavittElement out = a;
    for (const auto& [w, c] : b.terms_) out.add_term(w, -c);
    return out;
}

LeavittElement LeavittElement::operator-() const {
    LeavittElement out(rank_, field_);
    for (const auto& [w, c] : terms_) out.add_term(w, -c);
    return out;
}

LeavittElement star_times(const XMonomial& v, const FreePolynomial& c) {
    if (v.rank() != c.rank()) throw RankMismatch("star word rank mismatch");
    if (v.is_empty()) return LeavittElement::from_poly(c);
    // v = x_j v'  gives  v^* c = v'^* d_j(c) + aug(c) v^*.
    const int j = v.indices().front();
    LeavittElement out = star_times(v.behead(), partial_derivative(c, j, false));
    const FieldElem e = augmentation(c);
    if (!e.is_zero()) out.add_term(v, FreePolynomial::constant(c.rank(), c.field(), e));
    return out;
}

LeavittElement operator*(const LeavittElement& a, const LeavittElement& b) {
    a.check_compatible(b);
    LeavittElement out(a.rank(), a.field());
    for (const auto& [v, cv] : a.terms_) {
        for (const auto& [w, cw] : b.terms_) {
            // (cv v^*)(cw w^*) = cv (v^* cw) w^*  with  u^* w^* = (w u)^*.
            const LeavittElement pushed = star_times(v, cw);
            for (const auto& [u, cu] : pushed.terms())
                out.add_term(w.concat(u), cv * cu);
        }
    }
    return out;
}

LeavittElement LeavittElement::canonical_form(int depth) const {
    if (depth < this->depth())
        throw DepthTooSmall("canonical form depth below the element's star depth");
    LeavittElement out(rank_, field_);
    for (const auto& [w, c] : terms_) {
        // raise c w^* to sum over all monomials u of the missing degree:
        // c w^* = sum_u (c u) (w u)^*   (u as a polynomial in the x letters)
        const int missing = depth - w.degree();
        for (const XMonomial& u : enumerate_xmonomials(rank_, missing)) {
            FreePolynomial cu = c;
            for (int i : u.indices())
                cu = cu * (FreePolynomial::generator(rank_, field_, i) -
                           FreePolynomial::from_int(rank_, field_, 1));
            out.add_term(w.concat(u), cu);
        }
    }
    return out;
}

bool operator==(const LeavittElement& a, const LeavittElement& b) {
    a.check_compatible(b);
    const int d = std::max(a.depth(), b.depth());
    const LeavittElement ca = a.canonical_form(d);
    const LeavittElement cb = b.canonical_form(d);
    return ca.terms() == cb.terms();
}

LeavittElement zeta(int rank, FieldSpec field, int index) {
    const FreePolynomial x = FreePolynomial::generator(rank, field, index) -
                             FreePolynomial::from_int(rank, field, 1);
    return LeavittElement::star_term(x, XMonomial(rank, {index}));
}

} // namespace fox
