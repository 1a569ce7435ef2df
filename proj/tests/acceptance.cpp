// Acceptance suite.  Each criterion prints exactly one PASS/FAIL line; the
// process exits nonzero if any criterion fails.  All comparisons are exact —
// field elements, polynomials and truncated series are compared by equality,
// never by tolerance.
#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fox/io.hpp"

using namespace fox;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime_field(5);

FreePolynomial gen(int rank, FieldSpec f, int i, int s = +1) {
    return FreePolynomial::generator(rank, f, i, s);
}

FreePolynomial cst(int rank, FieldSpec f, std::int64_t n) {
    return FreePolynomial::from_int(rank, f, n);
}

FreePolynomial random_poly(int rank, FieldSpec f, int max_len, int terms,
                           std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> idx(1, rank);
    std::uniform_int_distribution<int> sgn(0, 1);
    std::uniform_int_distribution<std::int64_t> q_coeff(-4, 4);
    FreePolynomial g(rank, f);
    for (int t = 0; t < terms; ++t) {
        std::vector<Letter> ls;
        const int l = len(rng);
        for (int k = 0; k < l; ++k) ls.push_back(Letter{idx(rng), sgn(rng) ? 1 : -1});
        const FieldElem c = f.is_rational()
            ? FieldElem::from_integer(f, q_coeff(rng))
            : FieldElem::from_integer(f, std::uniform_int_distribution<std::int64_t>(
                  0, f.characteristic() - 1)(rng));
        g.add_term(ReducedWord::reduce(rank, ls), c);
    }
    return g;
}

FreePolynomial random_comonic(int rank, FieldSpec f, int max_len, int terms,
                              std::mt19937_64& rng) {
    for (;;) {
        const FreePolynomial g = random_poly(rank, f, max_len, terms, rng);
        if (g.is_zero()) continue;
        const FieldElem e = augmentation(g);
        if (e.is_zero()) continue;
        return g.scaled(e.invert());
    }
}

// c + (1-c) t with c != 0, 1: special of support length 1, hence irreducible.
FreePolynomial atom(int letter_index, int letter_sign, std::int64_t c, FieldSpec f) {
    const FieldElem ce = FieldElem::from_integer(f, c);
    return FreePolynomial::constant(2, f, ce) +
           gen(2, f, letter_index, letter_sign).scaled(FieldElem::one(f) - ce);
}

TruncatedSeries random_series(int rank, FieldSpec f, int cutoff, int terms,
                              bool zero_constant, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(zero_constant ? 1 : 0, cutoff);
    std::uniform_int_distribution<int> idx(1, rank);
    std::uniform_int_distribution<std::int64_t> q_coeff(-3, 3);
    TruncatedSeries s(rank, f, cutoff);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> mono;
        const int l = len(rng);
        for (int k = 0; k < l; ++k) mono.push_back(idx(rng));
        s.add_term(XMonomial(rank, mono), FieldElem::from_integer(f, q_coeff(rng)));
    }
    return s;
}

LeavittElement random_leavitt(int rank, FieldSpec f, int max_depth,
                              std::mt19937_64& rng) {
    LeavittElement out(rank, f);
    std::uniform_int_distribution<int> deg(0, max_depth);
    std::uniform_int_distribution<int> idx(1, rank);
    for (int t = 0; t < 3; ++t) {
        std::vector<int> ind;
        const int d = deg(rng);
        for (int k = 0; k < d; ++k) ind.push_back(idx(rng));
        out.add_term(XMonomial(rank, ind), random_poly(rank, f, 2, 2, rng));
    }
    return out;
}

// ---------------------------------------------------------------------------
// 1. Derivative axioms: product rule, reconstruction in both letter bases,
//    and the barred/unbarred relation, on 200 random pairs over Q and GF(5).
// ---------------------------------------------------------------------------
bool derivative_axioms(std::ostream& log) {
    std::mt19937_64 rng(920101);
    bool ok = true;
    for (FieldSpec f : {Q, F5}) {
        for (int trial = 0; trial < 100 && ok; ++trial) {
            const FreePolynomial a = random_poly(2, f, 3, 3, rng);
            const FreePolynomial b = random_poly(2, f, 3, 3, rng);
            for (int i = 1; i <= 2 && ok; ++i) {
                for (bool barred : {false, true}) {
                    const FreePolynomial lhs = partial_derivative(a * b, i, barred);
                    const FreePolynomial rhs =
                        partial_derivative(b, i, barred).scaled(augmentation(a)) +
                        partial_derivative(a, i, barred) * b;
                    if (!(lhs == rhs)) {
                        log << "  product rule failed (index " << i << ")\n";
                        ok = false;
                        break;
                    }
                }
                if (!(partial_derivative(a, i, true) ==
                      -(gen(2, f, i) * partial_derivative(a, i, false)))) {
                    log << "  barred != -t_i * unbarred (index " << i << ")\n";
                    ok = false;
                }
            }
            if (!ok) break;
            FreePolynomial acc = FreePolynomial::constant(2, f, augmentation(a));
            FreePolynomial accbar = acc;
            for (int i = 1; i <= 2; ++i) {
                acc = acc + (gen(2, f, i) - cst(2, f, 1)) * partial_derivative(a, i, false);
                accbar = accbar +
                         (gen(2, f, i, -1) - cst(2, f, 1)) * partial_derivative(a, i, true);
            }
            if (!(acc == a) || !(accbar == a)) {
                log << "  reconstruction identity failed\n";
                ok = false;
            }
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 2. Worked point values, all over Q.
// ---------------------------------------------------------------------------
bool worked_point_values(std::ostream& log) {
    bool ok = true;
    auto expect = [&](bool cond, const char* what) {
        if (!cond) {
            log << "  " << what << " failed\n";
            ok = false;
        }
    };
    expect(partial_derivative(gen(2, Q, 1, -1), 1, false) == -gen(2, Q, 1, -1),
           "d1(t1^-1) = -t1^-1");
    expect(partial_derivative(gen(2, Q, 1, -1), 1, true) == cst(2, Q, 1),
           "d1-bar(t1^-1) = 1");
    expect((gen(2, Q, 1) - cst(2, Q, 1)) * (gen(2, Q, 1, -1) - cst(2, Q, 1)) ==
               cst(2, Q, 2) - gen(2, Q, 1) - gen(2, Q, 1, -1),
           "(t1-1)(t1^-1-1) = 2 - t1 - t1^-1");
    {
        const FreePolynomial p =
            gen(3, Q, 1) * gen(3, Q, 2) * gen(3, Q, 3) +
            gen(3, Q, 2) * gen(3, Q, 1) + gen(3, Q, 1) * gen(3, Q, 3);
        const std::vector<ReducedWord> words = strictly_maximal_words(p);
        const ReducedWord w =
            ReducedWord::reduce(3, {Letter{1, 1}, Letter{2, 1}, Letter{3, 1}});
        expect(words.size() == 1 && words.front() == w,
               "strictly maximal word of t1t2t3 + t2t1 + t1t3 is t1t2t3 alone");
    }
    expect(augmentation(gen(2, Q, 1) -
                        gen(2, Q, 1, -1).scaled(FieldElem::from_integer(Q, 4))) ==
               FieldElem::from_integer(Q, -3),
           "aug(t1 - 4 t1^-1) = -3");
    return ok;
}

// ---------------------------------------------------------------------------
// 3. The six star-action values for the base t1^2 + t2^2 - 1 on the lifts
//    1, t1 - 1, t2 - 1.
// ---------------------------------------------------------------------------
bool star_action_values(std::ostream& log) {
    const FreePolynomial r =
        gen(2, Q, 1) * gen(2, Q, 1) + gen(2, Q, 2) * gen(2, Q, 2) - cst(2, Q, 1);
    const StarContext ctx(r);
    const FreePolynomial v1 = cst(2, Q, 1);
    const FreePolynomial v2 = gen(2, Q, 1) - cst(2, Q, 1);
    const FreePolynomial v3 = gen(2, Q, 2) - cst(2, Q, 1);
    const FreePolynomial zero = FreePolynomial::zero(2, Q);
    struct Rel {
        int j;
        const FreePolynomial& arg;
        FreePolynomial want;
        const char* name;
    };
    const Rel rels[] = {
        {1, v1, -v2 - v1 - v1, "x1*[1] = -[t1-1] - 2[1]"},
        {2, v1, -v3 - v1 - v1, "x2*[1] = -[t2-1] - 2[1]"},
        {1, v2, v1, "x1*[t1-1] = [1]"},
        {2, v3, v1, "x2*[t2-1] = [1]"},
        {2, v2, zero, "x2*[t1-1] = 0"},
        {1, v3, zero, "x1*[t2-1] = 0"},
    };
    bool ok = true;
    for (const Rel& rel : rels) {
        const FreePolynomial got = ctx.star(rel.j, rel.arg);
        // The stated values hold on the nose for these lifts; equality in the
        // quotient would additionally allow multiples of r.
        if (!(got == rel.want) &&
            !divide_right(got - rel.want, r).divisible) {
            log << "  relation " << rel.name << " failed\n";
            ok = false;
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 4. Irreducibility of 2 - t1 (lattice a line) and the exact two-factor
//    split of t1 - 4 t1^-1 over Q.
// ---------------------------------------------------------------------------
bool irreducibility_and_split(std::ostream& log) {
    bool ok = true;
    const FreePolynomial aff = cst(2, Q, 2) - gen(2, Q, 1);
    if (!is_irreducible(aff)) {
        log << "  2 - t1 not recognized as irreducible\n";
        ok = false;
    }
    if (lattice_of(aff).module.dim != 1) {
        log << "  lattice of 2 - t1 is not a line\n";
        ok = false;
    }
    const FreePolynomial g =
        gen(2, Q, 1) - gen(2, Q, 1, -1).scaled(FieldElem::from_integer(Q, 4));
    if (is_irreducible(g)) {
        log << "  t1 - 4 t1^-1 wrongly called irreducible\n";
        ok = false;
    }
    const Factorization f = factorize(g);
    if (f.factors.size() != 2 || !f.verified) {
        log << "  t1 - 4 t1^-1 did not split into two verified factors\n";
        return false;
    }
    for (const FreePolynomial& p : f.factors)
        if (!is_irreducible(p)) {
            log << "  a reported factor is not irreducible\n";
            ok = false;
        }
    FreePolynomial prod = FreePolynomial::monomial(f.unit_word, f.unit);
    for (const FreePolynomial& p : f.factors) prod = prod * p;
    if (!(prod == g)) {
        log << "  unit * factors != input\n";
        ok = false;
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 5. gcd contract on 100 random triples pi, alpha, beta over GF(5).
// ---------------------------------------------------------------------------
bool gcd_contract(std::ostream& log) {
    std::mt19937_64 rng(920105);
    for (int trial = 0; trial < 100; ++trial) {
        const FreePolynomial pi = random_comonic(2, F5, 2, 3, rng);
        const FreePolynomial alpha = random_comonic(2, F5, 2, 3, rng);
        const FreePolynomial beta = random_comonic(2, F5, 2, 3, rng);
        const FreePolynomial ga = alpha * pi;
        const FreePolynomial gb = beta * pi;
        FreePolynomial d(2, F5), d2(2, F5);
        try {
            d = gcd(ga, gb, 500000);
            d2 = gcd(gb, ga, 500000);
        } catch (const Error& e) {
            log << "  trial " << trial << ": gcd raised: " << e.what() << "\n";
            return false;
        }
        if (!is_comonic(d)) {
            log << "  trial " << trial << ": gcd not comonic\n";
            return false;
        }
        if (!(d == d2)) {
            log << "  trial " << trial << ": gcd depends on argument order\n";
            return false;
        }
        const DivisionResult qa = divide_right(ga, d);
        const DivisionResult qb = divide_right(gb, d);
        if (!qa.divisible || !(qa.quotient * d == ga) ||
            !qb.divisible || !(qb.quotient * d == gb)) {
            log << "  trial " << trial << ": gcd does not right-divide an input\n";
            return false;
        }
        if (!divide_right(d, pi).divisible) {
            log << "  trial " << trial << ": common right factor lost\n";
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// 6. Factorization round-trip on 50 random products of special length-1
//    comonic irreducibles over GF(5).
// ---------------------------------------------------------------------------
bool factorization_round_trip(std::ostream& log) {
    std::mt19937_64 rng(920106);
    std::uniform_int_distribution<int> count(2, 3);
    std::uniform_int_distribution<int> letter(1, 2);
    std::uniform_int_distribution<int> sign(0, 1);
    std::uniform_int_distribution<std::int64_t> scalar(2, 4);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = count(rng);
        FreePolynomial prod = cst(2, F5, 1);
        for (int k = 0; k < m; ++k)
            prod = prod * atom(letter(rng), sign(rng) ? 1 : -1, scalar(rng), F5);
        Factorization f;
        try {
            f = factorize(prod);
        } catch (const Error& e) {
            log << "  trial " << trial << ": factorize raised: " << e.what() << "\n";
            return false;
        }
        if (f.factors.size() != static_cast<std::size_t>(m) || !f.verified) {
            log << "  trial " << trial << ": expected " << m << " factors, got "
                << f.factors.size() << "\n";
            return false;
        }
        const std::size_t series_len =
            composition_series(lattice_of(prod).module).size();
        if (series_len != static_cast<std::size_t>(m)) {
            log << "  trial " << trial << ": composition series length "
                << series_len << " != " << m << "\n";
            return false;
        }
        FreePolynomial back = FreePolynomial::monomial(f.unit_word, f.unit);
        for (const FreePolynomial& p : f.factors) back = back * p;
        if (!(back == prod)) {
            log << "  trial " << trial << ": reconstructed product differs\n";
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// 7. Irreducibility agrees with the independent brute-force factor search on
//    200 sampled comonic polynomials over GF(5).
// ---------------------------------------------------------------------------
bool oracle_agreement(std::ostream& log) {
    std::mt19937_64 rng(920107);
    int tested = 0;
    while (tested < 200) {
        const FreePolynomial g = random_comonic(2, F5, 2, 3, rng);
        if (is_unit(g)) continue;
        // The search space cap allows candidate factors of support length 1
        // over GF(5); every reducible element of this sampled class splits
        // with such a factor, so emptiness decides reducibility.
        const bool oracle_reducible = !run_oracle_factor_search(g, 1).empty();
        const bool claimed = is_irreducible(g);
        if (claimed == oracle_reducible) {
            log << "  disagreement on sample " << tested << " (irreducible="
                << (claimed ? "true" : "false") << ")\n";
            return false;
        }
        ++tested;
    }
    return true;
}

// ---------------------------------------------------------------------------
// 8. Quasi-normal form relations at ranks 2 and 3, and depth-canonical-form
//    uniqueness on 100 random elements.
// ---------------------------------------------------------------------------
bool leavitt_relations(std::ostream& log) {
    bool ok = true;
    auto star_of = [](int rank, FieldSpec f, std::vector<int> idx) {
        return LeavittElement::star_term(FreePolynomial::from_int(rank, f, 1),
                                         XMonomial(rank, std::move(idx)));
    };
    auto xg = [](int rank, FieldSpec f, int i) {
        return gen(rank, f, i) - cst(rank, f, 1);
    };
    for (int n : {2, 3}) {
        for (int i = 1; i <= n && ok; ++i)
            for (int j = 1; j <= n; ++j) {
                const LeavittElement prod =
                    star_of(n, Q, {i}) * LeavittElement::from_poly(xg(n, Q, j));
                const bool want_one = i == j;
                if (want_one ? !(prod == LeavittElement::one(n, Q))
                             : !prod.is_zero()) {
                    log << "  x" << i << "* x" << j << " wrong at rank " << n << "\n";
                    ok = false;
                    break;
                }
            }
        LeavittElement acc(n, Q);
        for (int i = 1; i <= n; ++i)
            acc = acc + LeavittElement::from_poly(xg(n, Q, i)) * star_of(n, Q, {i});
        if (!(acc == LeavittElement::one(n, Q))) {
            log << "  sum of x_i x_i* != 1 at rank " << n << "\n";
            ok = false;
        }
        LeavittElement zsum(n, Q);
        for (int i = 1; i <= n; ++i) {
            const LeavittElement zi = zeta(n, Q, i);
            if (!(zi * zi == zi)) {
                log << "  zeta_" << i << " not idempotent at rank " << n << "\n";
                ok = false;
            }
            for (int j = 1; j <= n; ++j) {
                if (j == i) continue;
                if (!(zi * zeta(n, Q, j)).is_zero()) {
                    log << "  zeta_" << i << " zeta_" << j
                        << " != 0 at rank " << n << "\n";
                    ok = false;
                }
            }
            zsum = zsum + zi;
        }
        if (!(zsum == LeavittElement::one(n, Q))) {
            log << "  zeta partition of unity failed at rank " << n << "\n";
            ok = false;
        }
    }
    // Uniqueness: an element rewritten through the relations stays equal, and
    // a mathematically zero element has identically zero coefficients at any
    // common depth.
    std::mt19937_64 rng(920108);
    for (int trial = 0; trial < 100 && ok; ++trial) {
        const FieldSpec f = trial % 2 ? F5 : Q;
        const LeavittElement a = random_leavitt(2, f, 2, rng);
        LeavittElement ck(2, f);
        for (int i = 1; i <= 2; ++i)
            ck = ck + LeavittElement::from_poly(xg(2, f, i)) * star_of(2, f, {i});
        const LeavittElement z = ck * a - a;
        const int d = std::max(z.depth(), a.depth() + 1);
        if (!z.canonical_form(d).is_zero()) {
            log << "  rewritten-minus-original not identically zero (trial "
                << trial << ")\n";
            ok = false;
        }
        const LeavittElement raised = a.canonical_form(a.depth() + 1);
        if (!(raised.canonical_form(a.depth() + 2).terms() ==
              a.canonical_form(a.depth() + 2).terms())) {
            log << "  depth-canonical coefficients differ (trial " << trial << ")\n";
            ok = false;
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 9. Series solvers: affine systems, one-plus inversion, rational
//    presentations versus direct truncated arithmetic, and Magnus
//    multiplicativity.
// ---------------------------------------------------------------------------
bool series_solvers(std::ostream& log) {
    std::mt19937_64 rng(920109);
    const int K = 6;
    bool ok = true;
    for (int n : {2, 3}) {
        for (int trial = 0; trial < 10 && ok; ++trial) {
            std::vector<TruncatedSeries> P;
            std::vector<std::vector<TruncatedSeries>> Qm(n);
            for (int i = 0; i < n; ++i) {
                P.push_back(random_series(2, Q, K, 3, false, rng));
                for (int j = 0; j < n; ++j)
                    Qm[i].push_back(random_series(2, Q, K, 3, true, rng));
            }
            const std::vector<TruncatedSeries> Z = solve_affine_system(P, Qm);
            for (int i = 0; i < n; ++i) {
                TruncatedSeries rhs = P[i];
                for (int j = 0; j < n; ++j) rhs = rhs + Qm[i][j] * Z[j];
                if (!(Z[i] == rhs)) {
                    log << "  affine residual nonzero (" << n << "x" << n << ")\n";
                    ok = false;
                    break;
                }
            }
        }
    }
    {
        const int n = 3;
        std::vector<std::vector<TruncatedSeries>> Qm(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                Qm[i].push_back(random_series(2, Q, K, 3, true, rng));
        const std::vector<std::vector<TruncatedSeries>> Z = invert_one_plus(Qm);
        for (int i = 0; i < n && ok; ++i)
            for (int col = 0; col < n; ++col) {
                TruncatedSeries left = Z[i][col];
                TruncatedSeries right = Z[i][col];
                for (int j = 0; j < n; ++j) {
                    left = left + Qm[i][j] * Z[j][col];
                    right = right + Z[i][j] * Qm[j][col];
                }
                const TruncatedSeries want = i == col
                    ? TruncatedSeries::one(2, Q, K)
                    : TruncatedSeries(2, Q, K);
                if (!(left == want) || !(right == want)) {
                    log << "  one-plus inverse not two-sided\n";
                    ok = false;
                    break;
                }
            }
    }
    for (int trial = 0; trial < 20 && ok; ++trial) {
        const FreePolynomial a = random_poly(2, Q, 2, 3, rng);
        const FreePolynomial b = random_poly(2, Q, 2, 3, rng);
        FreePolynomial z0 = random_poly(2, Q, 2, 3, rng);
        z0 = z0 - FreePolynomial::constant(2, Q, augmentation(z0));
        const RationalRep ra = rat_atom(a), rb = rat_atom(b), rz = rat_atom(z0);
        const TruncatedSeries A = magnus_embed(a, K), B = magnus_embed(b, K),
                              Zs = magnus_embed(z0, K);
        // composites of operation depth 1, 2 and 3
        if (!(rat_eval(rat_sum(ra, rb), K) == A + B) ||
            !(rat_eval(rat_product(ra, rb), K) == A * B) ||
            !(rat_eval(rat_quasi_inverse(rz), K) == quasi_inverse(Zs)) ||
            !(rat_eval(rat_product(rat_sum(ra, rb), ra), K) == (A + B) * A) ||
            !(rat_eval(rat_sum(rat_quasi_inverse(rz), rat_product(ra, rb)), K) ==
              quasi_inverse(Zs) + A * B)) {
            log << "  rational presentation disagrees with direct arithmetic\n";
            ok = false;
        }
    }
    for (int trial = 0; trial < 40 && ok; ++trial) {
        const FreePolynomial a = random_poly(2, Q, 3, 3, rng);
        const FreePolynomial b = random_poly(2, Q, 3, 3, rng);
        if (!(magnus_embed(a * b, 5) == magnus_embed(a, 5) * magnus_embed(b, 5))) {
            log << "  embedding not multiplicative at cutoff 5\n";
            ok = false;
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 10. Constant-witness search: every nonzero polynomial admits a derivative
//     word of bounded length reaching a nonzero constant.
// ---------------------------------------------------------------------------
bool constant_witness_search(std::ostream& log) {
    std::mt19937_64 rng(920110);
    int tested = 0;
    while (tested < 100) {
        const FreePolynomial g = random_poly(2, F5, 3, 3, rng);
        if (g.is_zero()) continue;
        const int bound = 2 * length_of(g);
        const std::optional<std::vector<DerivOp>> w = constant_witness(g, bound);
        if (!w) {
            log << "  no witness within depth " << bound << " (sample "
                << tested << ")\n";
            return false;
        }
        if (static_cast<int>(w->size()) > bound) {
            log << "  witness exceeds the depth bound (sample " << tested << ")\n";
            return false;
        }
        const FreePolynomial reached = higher_derivative(g, *w);
        if (reached.is_zero() || !is_constant(reached)) {
            log << "  witness does not reach a nonzero constant (sample "
                << tested << ")\n";
            return false;
        }
        ++tested;
    }
    return true;
}

// ---------------------------------------------------------------------------
// 11. Assertions that cannot be established by bounded computation, recorded
//     as explicit out-of-scope markers rather than silently skipped.
// ---------------------------------------------------------------------------
bool out_of_scope_markers(std::ostream& log) {
    log << "  OUT OF SCOPE: the module type (1, n) of the localized algebra "
           "asserts an isomorphism of infinite-dimensional modules over the "
           "full localization; no truncation window can certify it.\n";
    log << "  OUT OF SCOPE: simplicity of the localized algebra quantifies "
           "over all of its two-sided ideals; bounded searches can refute "
           "but never confirm it.\n";
    log << "  OUT OF SCOPE: the universal property of the localization "
           "quantifies over all homomorphisms inverting the distinguished "
           "maps; only finite truncation windows are checked here.\n";
    return true;
}

struct Criterion {
    const char* name;
    std::function<bool(std::ostream&)> run;
};

} // namespace

int main(int argc, char** argv) {
    // Optional argument: run only the criteria whose name contains it.
    const std::string filter = argc > 1 ? argv[1] : "";
    const std::vector<Criterion> criteria = {
        {"derivative-axioms", derivative_axioms},
        {"worked-point-values", worked_point_values},
        {"star-action-values", star_action_values},
        {"irreducibility-and-split", irreducibility_and_split},
        {"gcd-contract", gcd_contract},
        {"factorization-round-trip", factorization_round_trip},
        {"oracle-agreement", oracle_agreement},
        {"leavitt-relations", leavitt_relations},
        {"series-solvers", series_solvers},
        {"constant-witness-search", constant_witness_search},
        {"out-of-scope-markers", out_of_scope_markers},
    };
    int failures = 0;
    int index = 0;
    for (const Criterion& c : criteria) {
        ++index;
        std::ostringstream detail;
        bool ok = false;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail << "  exception: " << e.what() << "\n";
            ok = false;
        }
        const auto t1 = std::chrono::steady_clock::now();
        const double secs =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() /
            1000.0;
        std::cout << (ok ? "PASS" : "FAIL") << " " << index << "/11 " << c.name
                  << " (" << secs << "s)\n";
        if (!detail.str().empty()) std::cout << detail.str();
        if (!ok) ++failures;
    }
    if (failures == 0) {
        std::cout << "acceptance: all 11 criteria passed\n";
    } else {
        std::cout << "acceptance: " << failures << " criterion(s) FAILED\n";
    }
    return failures == 0 ? 0 : 1;
}
