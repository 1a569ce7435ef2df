#include "fox/series.hpp"

namespace fox {

TruncatedSeries TruncatedSeries::constant(int rank, FieldSpec field, int cutoff, const FieldElem& c) {
    TruncatedSeries s(rank, field, cutoff);
    s.add_term(XMonomial(rank), c);
    return s;
}

TruncatedSeries TruncatedSeries::variable(int rank, FieldSpec field, int cutoff, int index) {
    TruncatedSeries s(rank, field, cutoff);
    s.add_term(XMonomial(rank).append(index), FieldElem::one(field));
    return s;
}

FieldElem TruncatedSeries::coeff(const XMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElem::zero(field_) : it->second;
}

int TruncatedSeries::min_degree() const {
    // Shortlex iterates degrees in increasing order.
    return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

void TruncatedSeries::add_term(const XMonomial& m, const FieldElem& c) {
    if (m.rank() != rank_) throw RankMismatch("monomial rank differs from series rank");
    if (!(c.field() == field_)) throw FieldMismatch("coefficient from a different field");
    if (c.is_zero() || m.degree() > cutoff_) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TruncatedSeries TruncatedSeries::truncated(int cutoff) const {
    TruncatedSeries s(rank_, field_, cutoff);
    for (const auto& [m, c] : terms_) s.add_term(m, c);
    return s;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries s(rank_, field_, cutoff_);
    for (const auto& [m, c] : terms_) s.terms_.emplace(m, -c);
    return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_compatible(b);
    TruncatedSeries s = a.truncated(std::min(a.cutoff_, b.cutoff_));
    for (const auto& [m, c] : b.terms_) s.add_term(m, c);
    return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_compatible(b);
    TruncatedSeries s = a.truncated(std::min(a.cutoff_, b.cutoff_));
    for (const auto& [m, c] : b.terms_) s.add_term(m, -c);
    return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_compatible(b);
    TruncatedSeries s(a.rank_, a.field_, std::min(a.cutoff_, b.cutoff_));
    for (const auto& [u, cu] : a.terms_) {
        if (u.degree() > s.cutoff()) break;
        for (const auto& [v, cv] : b.terms_) {
            if (u.degree() + v.degree() > s.cutoff()) continue;
            s.add_term(u.concat(v), cu * cv);
        }
    }
    return s;
}

TruncatedSeries TruncatedSeries::scaled(const FieldElem& c) const {
    if (!(c.field() == field_)) throw FieldMismatch("scaling by a scalar from a different field");
    TruncatedSeries s(rank_, field_, cutoff_);
    if (c.is_zero()) return s;
    for (const auto& [m, cm] : terms_) s.terms_.emplace(m, cm * c);
    return s;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_compatible(b);
    const int k = std::min(a.cutoff_, b.cutoff_);
    return a.truncated(k).terms_ == b.truncated(k).terms_;
}

TruncatedSeries magnus_embed(const FreePolynomial& g, int cutoff) {
    TruncatedSeries out(g.rank(), g.field(), cutoff);
    const FieldElem one = FieldElem::one(g.field());
    for (const auto& [w, c] : g.terms()) {
        TruncatedSeries term = TruncatedSeries::constant(g.rank(), g.field(), cutoff, c);
        for (const Letter& l : w.letters()) {
            TruncatedSeries factor = TruncatedSeries::one(g.rank(), g.field(), cutoff);
            if (l.sign > 0) {
                factor.add_term(XMonomial(g.rank()).append(l.index), one);
            } else {
                // (1 + x_i)^{-1} = sum_k (-x_i)^k, truncated.
                FieldElem coeff = one;
                XMonomial m(g.rank());
                for (int k = 1; k <= cutoff; ++k) {
                    coeff = -coeff;
                    m = m.append(l.index);
                    factor.add_term(m, coeff);
                }
            }
            term = term * factor;
        }
        out = out + term;
    }
    return out;
}

TruncatedSeries quasi_inverse(const TruncatedSeries& r) {
    if (!r.constant_term().is_zero())
        throw NonzeroConstantTerm("quasi-inverse requires a zero constant term");
    // u = r + r*u stabilizes one degree per pass.
    TruncatedSeries u = r;
    for (int pass = 0; pass < r.cutoff(); ++pass) u = r + r * u;
    return u;
}

namespace {

void check_affine_inputs(const std::vector<TruncatedSeries>& P,
                         const std::vector<std::vector<TruncatedSeries>>& Q) {
    const std::size_t l = P.size();
    if (l == 0) throw DimensionMismatch("empty affine system");
    if (Q.size() != l) throw DimensionMismatch("Q must be square of the size of P");
    for (const auto& row : Q) {
        if (row.size() != l) throw DimensionMismatch("Q must be square of the size of P");
        for (const auto& e : row) {
            P[0].check_compatible(e);
            if (!e.constant_term().is_zero())
                throw NonzeroConstantTerm("affine system matrix entries need zero constant term");
        }
    }
    for (const auto& p : P) P[0].check_compatible(p);
}

int common_cutoff(const std::vector<TruncatedSeries>& P,
                  const std::vector<std::vector<TruncatedSeries>>& Q) {
    int k = P[0].cutoff();
    for (const auto& p : P) k = std::min(k, p.cutoff());
    for (const auto& row : Q)
        for (const auto& e : row) k = std::min(k, e.cutoff());
    return k;
}

} // namespace

std::vector<TruncatedSeries> solve_affine_system(
    const std::vector<TruncatedSeries>& P,
    const std::vector<std::vector<TruncatedSeries>>& Q) {
    check_affine_inputs(P, Q);
    const std::size_t l = P.size();
    const int k = common_cutoff(P, Q);

    if (l == 1) {
        // z = (1 + q^+) p
        const TruncatedSeries qp = quasi_inverse(Q[0][0].truncated(k));
        const TruncatedSeries p = P[0].truncated(k);
        return {p + qp * p};
    }

    // Solve the last unknown in terms of the others:
    //   z_l = (1 + q_ll^+)(p_l + sum_{j<l} q_lj z_j),
    // substitute into the first l-1 rows, recurse, back-substitute.
    const std::size_t last = l - 1;
    const TruncatedSeries qp = quasi_inverse(Q[last][last].truncated(k));
    auto amplify = [&](const TruncatedSeries& s) { // (1 + q_ll^+) s
        const TruncatedSeries t = s.truncated(k);
        return t + qp * t;
    };

    std::vector<TruncatedSeries> subP;
    std::vector<std::vector<TruncatedSeries>> subQ;
    for (std::size_t i = 0; i < last; ++i) {
        subP.push_back(P[i].truncated(k) + Q[i][last].truncated(k) * amplify(P[last]));
        std::vector<TruncatedSeries> row;
        for (std::size_t j = 0; j < last; ++j)
            row.push_back(Q[i][j].truncated(k) + Q[i][last].truncated(k) * amplify(Q[last][j]));
        subQ.push_back(std::move(row));
    }
    std::vector<TruncatedSeries> z = solve_affine_system(subP, subQ);

    TruncatedSeries acc = P[last].truncated(k);
    for (std::size_t j = 0; j < last; ++j) acc = acc + Q[last][j].truncated(k) * z[j];
    z.push_back(amplify(acc));
    return z;
}

std::vector<std::vector<TruncatedSeries>> invert_one_plus(
    const std::vector<std::vector<TruncatedSeries>>& Q) {
    if (Q.empty()) throw DimensionMismatch("empty matrix");
    const std::size_t l = Q.size();
    const int rank = Q[0][0].rank();
    const FieldSpec field = Q[0][0].field();
    int k = Q[0][0].cutoff();
    for (const auto& row : Q)
        for (const auto& e : row) k = std::min(k, e.cutoff());

    std::vector<std::vector<TruncatedSeries>> M(
        l, std::vector<TruncatedSeries>(l, TruncatedSeries(rank, field, k)));
    for (std::size_t col = 0; col < l; ++col) {
        std::vector<TruncatedSeries> P(l, TruncatedSeries(rank, field, k));
        P[col] = TruncatedSeries::one(rank, field, k);
        std::vector<std::vector<TruncatedSeries>> negQ;
        for (const auto& row : Q) {
            std::vector<TruncatedSeries> r;
            for (const auto& e : row) r.push_back(-e.truncated(k));
            negQ.push_back(std::move(r));
        }
        std::vector<TruncatedSeries> z = solve_affine_system(P, negQ);
        for (std::size_t i = 0; i < l; ++i) M[i][col] = z[i];
    }
    return M;
}

// --- rational representations ----------------------------------------------

void RationalRep::validate() const {
    if (size <= 0 || static_cast<std::size_t>(size) != P.size() ||
        static_cast<std::size_t>(size) != Q.size())
        throw DimensionMismatch("inconsistent representation size");
    if (entry < 0 || entry >= size) throw IndexOutOfRange("designated entry out of range");
    for (const auto& row : Q) {
        if (row.size() != static_cast<std::size_t>(size))
            throw DimensionMismatch("matrix of a representation must be square");
        for (const auto& e : row) {
            P[0].check_compatible(e);
            if (!augmentation(e).is_zero())
                throw NonzeroConstantTerm("representation matrix entries need augmentation zero");
        }
    }
    for (const auto& p : P) P[0].check_compatible(p);
}

RationalRep rat_atom(const FreePolynomial& p) {
    RationalRep a;
    a.size = 1;
    a.entry = 0;
    a.P = {p};
    a.Q = {{FreePolynomial::zero(p.rank(), p.field())}};
    return a;
}

RationalRep rat_sum(const RationalRep& a, const RationalRep& b) {
    a.validate();
    b.validate();
    a.P[0].check_compatible(b.P[0]);
    const int rank = a.rank();
    const FieldSpec field = a.field();
    const FreePolynomial z = FreePolynomial::zero(rank, field);

    RationalRep s;
    s.size = 1 + a.size + b.size;
    s.entry = 0;
    s.P.assign(static_cast<std::size_t>(s.size), z);
    s.Q.assign(static_cast<std::size_t>(s.size),
               std::vector<FreePolynomial>(static_cast<std::size_t>(s.size), z));
    // Row 0 recomputes the sum of the two designated rows; the designated
    // rows' systems ride along unchanged in the diagonal blocks.
    s.P[0] = a.P[static_cast<std::size_t>(a.entry)] + b.P[static_cast<std::size_t>(b.entry)];
    for (int j = 0; j < a.size; ++j) {
        s.Q[0][static_cast<std::size_t>(1 + j)] =
            a.Q[static_cast<std::size_t>(a.entry)][static_cast<std::size_t>(j)];
    }
    for (int j = 0; j < b.size; ++j) {
        s.Q[0][static_cast<std::size_t>(1 + a.size + j)] =
            b.Q[static_cast<std::size_t>(b.entry)][static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < a.size; ++i) {
        s.P[static_cast<std::size_t>(1 + i)] = a.P[static_cast<std::size_t>(i)];
        for (int j = 0; j < a.size; ++j)
            s.Q[static_cast<std::size_t>(1 + i)][static_cast<std::size_t>(1 + j)] =
                a.Q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < b.size; ++i) {
        s.P[static_cast<std::size_t>(1 + a.size + i)] = b.P[static_cast<std::size_t>(i)];
        for (int j = 0; j < b.size; ++j)
            s.Q[static_cast<std::size_t>(1 + a.size + i)][static_cast<std::size_t>(1 + a.size + j)] =
                b.Q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return s;
}

RationalRep rat_product(const RationalRep& a, const RationalRep& b) {
    a.validate();
    b.validate();
    a.P[0].check_compatible(b.P[0]);
    const int rank = a.rank();
    const FieldSpec field = a.field();
    const FreePolynomial z = FreePolynomial::zero(rank, field);
    const auto& pb = b.P[static_cast<std::size_t>(b.entry)];
    const auto& qb = b.Q[static_cast<std::size_t>(b.entry)];

    // Block system: the first block solves U_1 * (entry of U_2) — note the
    // multipliers P_1 and P_1 Qbar_2 sit on the left, preserving order.
    RationalRep s;
    s.size = a.size + b.size;
    s.entry = a.entry;
    s.P.assign(static_cast<std::size_t>(s.size), z);
    s.Q.assign(static_cast<std::size_t>(s.size),
               std::vector<FreePolynomial>(static_cast<std::size_t>(s.size), z));
    for (int i = 0; i < a.size; ++i) {
        s.P[static_cast<std::size_t>(i)] = a.P[static_cast<std::size_t>(i)] * pb;
        for (int j = 0; j < a.size; ++j)
            s.Q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                a.Q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        for (int j = 0; j < b.size; ++j)
            s.Q[static_cast<std::size_t>(i)][static_cast<std::size_t>(a.size + j)] =
                a.P[static_cast<std::size_t>(i)] * qb[static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < b.size; ++i) {
        s.P[static_cast<std::size_t>(a.size + i)] = b.P[static_cast<std::size_t>(i)];
        for (int j = 0; j < b.size; ++j)
            s.Q[static_cast<std::size_t>(a.size + i)][static_cast<std::size_t>(a.size + j)] =
                b.Q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return s;
}

RationalRep rat_quasi_inverse(const RationalRep& a) {
    a.validate();
    // The solution's constant term equals the augmentation of the designated
    // row of P (matrix entries contribute nothing at degree zero).
    if (!augmentation(a.P[static_cast<std::size_t>(a.entry)]).is_zero())
        throw NonzeroConstantTerm("quasi-inverse of a series with nonzero constant term");
    const int rank = a.rank();
    const FieldSpec field = a.field();
    const FreePolynomial z = FreePolynomial::zero(rank, field);

    // Normalize to a system whose designated P entry is the zero polynomial
    // by bordering with one extra unknown pinned to 1.
    RationalRep n = a;
    const FreePolynomial pbar = a.P[static_cast<std::size_t>(a.entry)];
    if (!pbar.is_zero()) {
        n.size = a.size + 1;
        n.P.push_back(FreePolynomial::from_int(rank, field, 1));
        n.P[static_cast<std::size_t>(n.entry)] = z;
        for (int i = 0; i < a.size; ++i)
            n.Q[static_cast<std::size_t>(i)].push_back(i == a.entry ? pbar : z);
        n.Q.push_back(std::vector<FreePolynomial>(static_cast<std::size_t>(n.size), z));
    }
    // With Pbar = 0 the quasi-inverse is represented by Q + P Qbar.
    const auto qbar = n.Q[static_cast<std::size_t>(n.entry)];
    RationalRep r = n;
    for (int i = 0; i < n.size; ++i)
        for (int j = 0; j < n.size; ++j)
            r.Q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                n.Q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                n.P[static_cast<std::size_t>(i)] * qbar[static_cast<std::size_t>(j)];
    return r;
}

TruncatedSeries rat_eval(const RationalRep& a, int cutoff) {
    a.validate();
    std::vector<TruncatedSeries> P;
    std::vector<std::vector<TruncatedSeries>> Q;
    for (const auto& p : a.P) P.push_back(magnus_embed(p, cutoff));
    for (const auto& row : a.Q) {
        std::vector<TruncatedSeries> r;
        for (const auto& e : row) r.push_back(magnus_embed(e, cutoff));
        Q.push_back(std::move(r));
    }
    return solve_affine_system(P, Q)[static_cast<std::size_t>(a.entry)];
}

int order_of(const FreePolynomial& g) {
    if (g.is_zero()) throw ZeroPolynomial("the zero polynomial has no order");
    for (int cutoff = 4; cutoff <= (1 << 12); cutoff *= 2) {
        const TruncatedSeries s = magnus_embed(g, cutoff);
        if (!s.is_zero()) return s.min_degree();
    }
    // Unreachable: the series expansion of a nonzero polynomial is nonzero.
    throw Error("order_of: expansion vanished to an implausible depth");
}

} // namespace fox
