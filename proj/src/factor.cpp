#include "fox/factor.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fox/error.hpp"

namespace fox {

namespace {

FreePolynomial one_poly(int rank, FieldSpec f) {
    return FreePolynomial::from_int(rank, f, 1);
}

// All reduced words one letter longer than the given ones (appending every
// non-cancelling letter, so no reduction can occur).
std::vector<ReducedWord> next_word_level(int rank, const std::vector<ReducedWord>& level) {
    std::vector<ReducedWord> out;
    out.reserve(level.size() * 2 * static_cast<std::size_t>(rank));
    for (const ReducedWord& w : level) {
        for (int i = 1; i <= rank; ++i) {
            for (int s : {+1, -1}) {
                if (w.length() > 0) {
                    const Letter& last = w.letter(w.length() - 1);
                    if (last.index == i && last.sign == -s) continue;
                }
                std::vector<Letter> ls = w.letters();
                ls.push_back(Letter{i, s});
                out.push_back(ReducedWord::reduce(rank, ls));
            }
        }
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Right division by iterative deepening on the cofactor's support length.
// ---------------------------------------------------------------------------

DivisionResult divide_right(const FreePolynomial& lambda,
                            const FreePolynomial& gamma, int max_len) {
    lambda.check_compatible(gamma);
    if (gamma.is_zero()) throw ZeroDivisor("right division by the zero polynomial");

    const int rank = lambda.rank();
    const FieldSpec f = lambda.field();
    DivisionResult out;
    out.quotient = FreePolynomial::zero(rank, f);
    if (lambda.is_zero()) {
        out.divisible = true;
        return out;
    }

    const int llen = length_of(lambda);
    const int glen = length_of(gamma);
    if (max_len < 0) max_len = llen + glen + 4;
    out.searched_up_to = max_len;

    // A one-term divisor is invertible: the cofactor is immediate.
    if (is_unit(gamma)) {
        const auto& term = *gamma.terms().begin();
        out.quotient =
            lambda * FreePolynomial::monomial(term.first.inverse(), term.second.invert());
        out.divisible = true;
        if (!(out.quotient * gamma == lambda))
            throw Error("internal: unit division failed verification");
        return out;
    }

    // The lowest Magnus degree is additive in products, so a cofactor can
    // never lower it.
    if (order_of(gamma) > order_of(lambda)) return out;

    PolyEchelon ech(rank, f);
    std::vector<ReducedWord> level{ReducedWord(rank)};
    int inserted_up_to = -1;
    for (int target = std::min(llen, max_len); target <= max_len; ++target) {
        while (inserted_up_to < target) {
            if (inserted_up_to >= 0) level = next_word_level(rank, level);
            for (const ReducedWord& w : level) {
                const FreePolynomial tag =
                    FreePolynomial::monomial(w, FieldElem::one(f));
                ech.insert_tagged(tag * gamma, tag);
            }
            ++inserted_up_to;
        }
        if (std::optional<FreePolynomial> q = ech.combination(lambda)) {
            out.quotient = std::move(*q);
            out.divisible = true;
            out.searched_up_to = target;
            if (!(out.quotient * gamma == lambda))
                throw Error("internal: division result failed verification");
            return out;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// The lattice module.
// ---------------------------------------------------------------------------

namespace {

// Largest subspace of `t` carried into itself by every operator of m.
// Shrinks t one kernel computation at a time; each pass of the loop either
// stabilizes (done) or strictly reduces the dimension.
Subspace largest_invariant_inside(const OperatorModule& m, Subspace t) {
    const FieldSpec f = m.field;
    for (;;) {
        const int td = t.dim();
        if (td == 0) return t;
        const Matrix& r = t.rows();
        const int nops = static_cast<int>(m.ops.size());
        // Constraint matrix C with C[(op_index * dim + c), k] equal to the
        // c-th coordinate of the residue of (row k of r) * op after reducing
        // against t; its right kernel parametrizes the rows staying inside.
        Matrix cm(nops * m.dim, td, f);
        int op_index = 0;
        for (const Matrix& a : m.ops) {
            const Matrix ra = r * a;
            for (int k = 0; k < td; ++k) {
                Vec row(static_cast<std::size_t>(m.dim), FieldElem::zero(f));
                for (int c = 0; c < m.dim; ++c) row[static_cast<std::size_t>(c)] = ra.at(k, c);
                const Vec res = t.reduce_vec(row);
                for (int c = 0; c < m.dim; ++c)
                    cm.at(op_index * m.dim + c, k) = res[static_cast<std::size_t>(c)];
            }
            ++op_index;
        }
        const std::vector<Vec> kernel = right_nullspace(cm);
        if (static_cast<int>(kernel.size()) == td) return t;
        if (kernel.empty()) return Subspace::zero(m.dim, f);
        Matrix nr(static_cast<int>(kernel.size()), m.dim, f);
        for (int i = 0; i < static_cast<int>(kernel.size()); ++i) {
            Vec img(static_cast<std::size_t>(m.dim), FieldElem::zero(f));
            for (int k = 0; k < td; ++k)
                for (int c = 0; c < m.dim; ++c)
                    img[static_cast<std::size_t>(c)] +=
                        kernel[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * r.at(k, c);
            for (int c = 0; c < m.dim; ++c) nr.at(i, c) = img[static_cast<std::size_t>(c)];
        }
        t = Subspace::from_rows(nr);
    }
}

// Vectors v of the module whose label combination lies in the span of
// { w * gamma : |w| <= cap }.  Positive membership at any cap is exact.
Subspace bounded_ideal_members(const OperatorModule& m, const FreePolynomial& gamma,
                               int cap) {
    const int rank = gamma.rank();
    const FieldSpec f = gamma.field();
    PolyEchelon ideal(rank, f);
    std::vector<ReducedWord> level{ReducedWord(rank)};
    for (int l = 0; l <= cap; ++l) {
        if (l > 0) level = next_word_level(rank, level);
        for (const ReducedWord& w : level)
            ideal.insert(FreePolynomial::monomial(w, FieldElem::one(f)) * gamma);
    }

    // Joint kernel: v and c with  sum_i v_i label_i - sum_j c_j basis_j = 0.
    std::map<ReducedWord, int, ShortlexLess> word_row;
    auto index_words = [&](const FreePolynomial& p) {
        for (const auto& [w, c] : p.terms()) {
            (void)c;
            word_row.emplace(w, 0);
        }
    };
    for (const FreePolynomial& lab : m.labels) index_words(lab);
    for (int j = 0; j < ideal.dimension(); ++j) index_words(ideal.basis_poly(j));
    int next = 0;
    for (auto& [w, idx] : word_row) idx = next++;

    Matrix a(next, m.dim + ideal.dimension(), f);
    for (int i = 0; i < m.dim; ++i)
        for (const auto& [w, c] : m.labels[static_cast<std::size_t>(i)].terms())
            a.at(word_row.at(w), i) = c;
    for (int j = 0; j < ideal.dimension(); ++j)
        for (const auto& [w, c] : ideal.basis_poly(j).terms())
            a.at(word_row.at(w), m.dim + j) = -c;

    const std::vector<Vec> kernel = right_nullspace(a);
    if (kernel.empty()) return Subspace::zero(m.dim, f);
    Matrix rows(static_cast<int>(kernel.size()), m.dim, f);
    for (int i = 0; i < static_cast<int>(kernel.size()); ++i)
        for (int c = 0; c < m.dim; ++c)
            rows.at(i, c) = kernel[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
    return Subspace::from_rows(rows);
}

// Vertices of the Cayley tree minimizing the maximum distance to `points`:
// the midpoint of a diameter geodesic (one vertex for even diameter, both
// middle vertices for odd).  Correct because eccentricity in a tree is
// always attained on a diametral pair.
std::vector<ReducedWord> tree_centers(int rank, const std::vector<ReducedWord>& points) {
    auto dist = [](const ReducedWord& u, const ReducedWord& v) {
        return concat_reduce(u.inverse(), v).length();
    };
    int diam = 0;
    std::size_t ia = 0, ib = 0;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i; j < points.size(); ++j)
            if (dist(points[i], points[j]) > diam) {
                diam = dist(points[i], points[j]);
                ia = i;
                ib = j;
            }
    const ReducedWord geodesic = concat_reduce(points[ia].inverse(), points[ib]);
    auto center = [&](int k) {
        std::vector<Letter> prefix(geodesic.letters().begin(),
                                   geodesic.letters().begin() + k);
        return concat_reduce(points[ia], ReducedWord::reduce(rank, prefix));
    };
    std::vector<ReducedWord> centers{center(diam / 2)};
    if (diam % 2 != 0) centers.push_back(center(diam / 2 + 1));
    return centers;
}

// Orders equal-length polynomials by their support word lists under shortlex
// (so a support containing t1 beats one containing t1^{-1}), with the
// canonical key as the final tie-break.
bool support_shortlex_less(const FreePolynomial& x, const FreePolynomial& y) {
    auto xi = x.terms().begin();
    auto yi = y.terms().begin();
    for (; xi != x.terms().end() && yi != y.terms().end(); ++xi, ++yi) {
        const auto c = shortlex_compare(xi->first, yi->first);
        if (c != 0) return c == std::strong_ordering::less;
    }
    if (x.terms().size() != y.terms().size())
        return x.terms().size() < y.terms().size();
    return x.key_string() < y.key_string();
}

// Right word-unit multiples gamma·w generate pairwise distinct left ideals,
// but right multiplication by w is an automorphism of the regular module
// carrying [L(gamma·w), L] onto [L(gamma), L], so irreducibility, factor
// counts and similarity depend on gamma only up to right word units.  The
// derivative-span module built below is canonical only for the shortest
// right associate: longer associates pick up extra composition factors whose
// labels do not lie in the left ideal, so the ideal-membership filter cannot
// remove them.  The length of gamma·w is the largest distance from w to the
// inverted support of gamma, so the shortest associate again corresponds to
// a 1-center, this time of the inverted support.
struct RightWordSplit {
    FreePolynomial reduced; // the shortest right associate s
    ReducedWord tail;       // the stripped word w, with the input equal to s·w
};

RightWordSplit right_word_unit_split(const FreePolynomial& p) {
    if (p.is_zero()) return {p, ReducedWord(p.rank())};
    const FieldSpec f = p.field();
    std::vector<ReducedWord> inverted;
    inverted.reserve(p.terms().size());
    for (const auto& term : p.terms()) inverted.push_back(term.first.inverse());

    std::optional<RightWordSplit> best;
    for (const ReducedWord& v : tree_centers(p.rank(), inverted)) {
        RightWordSplit cand{p * FreePolynomial::monomial(v, FieldElem::one(f)),
                            v.inverse()};
        if (!best) {
            best = std::move(cand);
            continue;
        }
        const int lc = length_of(cand.reduced), lb = length_of(best->reduced);
        if (lc < lb || (lc == lb && support_shortlex_less(cand.reduced, best->reduced)))
            best = std::move(cand);
    }
    return *std::move(best);
}

} // namespace

Lattice lattice_of(const FreePolynomial& gamma_in) {
    if (gamma_in.is_zero() || !is_comonic(gamma_in))
        throw NotComonic("lattice_of requires a comonic polynomial");
    if (is_unit(gamma_in)) throw IsUnit("units have a trivial lattice");

    // Analyze the shortest right word-unit associate; see right_word_unit_split.
    // Right multiplication by a word preserves comonicity and support size, so
    // the associate is again comonic and again a non-unit.
    const FreePolynomial gamma = right_word_unit_split(gamma_in).reduced;

    const int rank = gamma.rank();
    const FieldSpec f = gamma.field();

    DerivativeSpan sp = derivative_span(gamma);
    const int d = sp.basis.dimension();

    StarContext ctx(gamma);
    OperatorModule m0;
    m0.field = f;
    m0.dim = d;
    for (int j = 1; j <= 2 * rank; ++j) {
        Matrix a(d, d, f);
        for (int k = 0; k < d; ++k) {
            const FreePolynomial s = ctx.star(j, sp.basis.basis_poly(k));
            const std::optional<Vec> coords = sp.basis.coordinates(s);
            if (!coords) throw Error("internal: star image escaped the derivative span");
            for (int c = 0; c < d; ++c) a.at(k, c) = (*coords)[static_cast<std::size_t>(c)];
        }
        m0.ops.push_back(std::move(a));
    }
    for (int k = 0; k < d; ++k) m0.labels.push_back(sp.basis.basis_poly(k));

    const std::optional<Vec> c1 = sp.basis.coordinates(one_poly(rank, f));
    if (!c1) throw Error("internal: the constant 1 is outside the derivative span");
    Vec one_coords = *c1;

    const std::optional<Vec> cg = sp.basis.coordinates(gamma);
    if (!cg) throw Error("internal: the base polynomial is outside its derivative span");
    Matrix gl(1, d, f);
    for (int c = 0; c < d; ++c) gl.at(0, c) = (*cg)[static_cast<std::size_t>(c)];
    const Subspace line = Subspace::from_rows(gl);

    QuotientModule q = quotient_by(m0, line);
    one_coords = project_to_quotient(line, one_coords);
    OperatorModule cur = std::move(q.module);

    // Remove vectors whose labels already lie in the left ideal of gamma:
    // they are artifacts of the finite presentation, not of the quotient
    // module.  Each round either finds nothing (done) or strictly shrinks
    // the dimension.
    for (;;) {
        if (cur.dim == 0) throw Error("internal: lattice module collapsed to zero");
        int cap = 2;
        for (const FreePolynomial& lab : cur.labels)
            if (!lab.is_zero()) cap = std::max(cap, length_of(lab) + 2);
        const Subspace members = bounded_ideal_members(cur, gamma, cap);
        if (members.dim() == 0) break;
        const Subspace core = largest_invariant_inside(cur, members);
        if (core.dim() == 0)
            throw UnresolvedMembership(
                "a basis combination lies in the base's left ideal but spans no "
                "invariant subspace that could be quotiented away");
        QuotientModule q2 = quotient_by(cur, core);
        one_coords = project_to_quotient(core, one_coords);
        cur = std::move(q2.module);
    }
    if (is_zero_vec(one_coords))
        throw Error("internal: the class of the constant 1 vanished");

    return Lattice{std::move(cur), gamma, std::move(one_coords)};
}

// ---------------------------------------------------------------------------
// Greatest common right divisors.
// ---------------------------------------------------------------------------

namespace {

void spend(std::uint64_t& budget, const char* what) {
    if (budget == 0) throw BudgetExhausted(what);
    --budget;
}

// Comonic generators of a left ideal are unique only up to left
// multiplication by a word: w·δ is comonic whenever δ is, and generates the
// same left ideal.  The length of w·δ is the largest distance from the
// vertex w^{-1} to the support of δ in the Cayley tree of the free group, so
// the shortest representative corresponds to a 1-center of the support: the
// midpoint of a diameter geodesic (one vertex for even diameter, either of
// two adjacent vertices for odd).  Ties between equally short candidates are
// broken by support_shortlex_less, giving a deterministic normal form.
FreePolynomial word_unit_normalize(const FreePolynomial& p) {
    if (p.is_zero()) return p;
    const FieldSpec f = p.field();
    std::vector<ReducedWord> support;
    support.reserve(p.terms().size());
    for (const auto& term : p.terms()) support.push_back(term.first);

    FreePolynomial best;
    for (const ReducedWord& v : tree_centers(p.rank(), support)) {
        FreePolynomial cand =
            FreePolynomial::monomial(v.inverse(), FieldElem::one(f)) * p;
        if (best.is_zero()) {
            best = std::move(cand);
            continue;
        }
        const int lc = length_of(cand), lb = length_of(best);
        if (lc < lb || (lc == lb && support_shortlex_less(cand, best)))
            best = std::move(cand);
    }
    return best;
}

FreePolynomial gcd_pair(FreePolynomial g, FreePolynomial l, std::uint64_t& budget);

// Folds a list of comonic generators of a left ideal into the single comonic
// generator of their sum, two smallest-first at a time.
FreePolynomial gcd_of_set(std::vector<FreePolynomial> gens, std::uint64_t& budget) {
    if (gens.empty()) throw ZeroPolynomial("no ideal generators");
    const int rank = gens.front().rank();
    const FieldSpec f = gens.front().field();
    auto order = [](const FreePolynomial& a, const FreePolynomial& b) {
        const int la = length_of(a), lb = length_of(b);
        if (la != lb) return la < lb;
        return a.key_string() < b.key_string();
    };
    for (;;) {
        std::sort(gens.begin(), gens.end(), order);
        gens.erase(std::unique(gens.begin(), gens.end(),
                               [](const FreePolynomial& a, const FreePolynomial& b) {
                                   return a == b;
                               }),
                   gens.end());
        for (const FreePolynomial& g : gens)
            if (is_unit(g)) return one_poly(rank, f);
        if (gens.size() == 1) return gens.front();
        FreePolynomial a = gens[0];
        FreePolynomial b = gens[1];
        gens.erase(gens.begin(), gens.begin() + 2);
        gens.push_back(gcd_pair(std::move(a), std::move(b), budget));
    }
}

// The two inputs are comonic and non-unit.  States of the search are comonic
// elements of the left ideal generated by the inputs; the moves (star action
// against either input, passing to comonic generators, stripping the common
// head of a special element) all stay inside that ideal.  A state that
// right-divides both inputs generates the whole ideal and is returned as the
// certified answer; a state strictly shorter than both inputs restarts the
// computation with a smaller minimum length.
FreePolynomial gcd_pair(FreePolynomial g, FreePolynomial l, std::uint64_t& budget) {
    const int rank = g.rank();
    const FieldSpec f = g.field();
    if (is_unit(g) || is_unit(l)) return one_poly(rank, f);
    g = word_unit_normalize(std::move(g));
    l = word_unit_normalize(std::move(l));
    if (g == l) return g;
    {
        const int lg = length_of(g), ll = length_of(l);
        if (ll < lg || (ll == lg && l.key_string() < g.key_string())) std::swap(g, l);
    }
    const int m = length_of(g);
    if (divide_right(l, g).divisible) return g;
    if (length_of(l) == m && divide_right(g, l).divisible) return l;

    const std::string gkey = g.key_string();
    const std::string lkey = l.key_string();
    const StarContext star_g(g);
    const StarContext star_l(l);

    using Key = std::tuple<int, int, std::string>;
    std::map<Key, FreePolynomial> frontier;
    std::set<std::string> visited;
    auto enqueue = [&](const FreePolynomial& raw) {
        if (raw.is_zero()) return;
        for (FreePolynomial c : comonic_generators(raw)) {
            c = word_unit_normalize(std::move(c));
            const std::string key = c.key_string();
            if (visited.count(key)) continue;
            frontier.emplace(Key{length_of(c), c.support_size(), key},
                             std::move(c));
        }
    };
    enqueue(g);
    enqueue(l);

    while (!frontier.empty()) {
        auto it = frontier.begin();
        FreePolynomial s = it->second;
        frontier.erase(it);
        const std::string skey = s.key_string();
        if (!visited.insert(skey).second) continue;
        spend(budget, "gcd reduction search exceeded its state budget");

        if (is_unit(s)) return one_poly(rank, f);
        const int slen = length_of(s);

        if (slen < m) {
            if (!divide_right(s, g).divisible) {
                FreePolynomial d1 = gcd_pair(g, s, budget);
                if (!(d1 == g)) return gcd_pair(std::move(d1), l, budget);
            } else if (!divide_right(s, l).divisible) {
                FreePolynomial d1 = gcd_pair(l, s, budget);
                if (!(d1 == l)) return gcd_pair(g, std::move(d1), budget);
            }
        } else if (slen == m && skey != gkey && skey != lkey) {
            const int extra = 8;
            if (divide_right(g, s, m + length_of(g) + extra).divisible &&
                divide_right(l, s, m + length_of(l) + extra).divisible)
                return s;
            if (m == 1 && is_special(s)) {
                // A special comonic element of length 1 generates a maximal
                // left ideal; since it does not generate the whole ideal of
                // the pair, that ideal must be everything.
                return one_poly(rank, f);
            }
        }

        for (int j = 1; j <= 2 * rank; ++j) {
            enqueue(star_g.star(j, s));
            enqueue(star_l.star(j, s));
        }
        if (slen >= 1 && is_special(s)) {
            const Letter h = strictly_maximal_words(s).front().letter(0);
            const ReducedWord shift =
                ReducedWord::reduce(rank, {Letter{h.index, -h.sign}});
            enqueue(FreePolynomial::monomial(shift, FieldElem::one(f)) * s);
        }
    }
    throw UnresolvedMembership(
        "gcd search exhausted every reachable state without certifying a generator");
}

} // namespace

FreePolynomial gcd(const FreePolynomial& a, const FreePolynomial& b,
                   std::uint64_t budget) {
    a.check_compatible(b);
    if (a.is_zero() || b.is_zero())
        throw ZeroPolynomial("gcd requires nonzero polynomials");
    std::vector<FreePolynomial> gens = comonic_generators(a);
    for (FreePolynomial& g : comonic_generators(b)) gens.push_back(std::move(g));
    for (FreePolynomial& g : gens) g = word_unit_normalize(std::move(g));
    FreePolynomial d = gcd_of_set(std::move(gens), budget);
    if (!divide_right(a, d).divisible || !divide_right(b, d).divisible)
        throw UnresolvedMembership(
            "computed gcd could not be re-verified as a common right divisor "
            "within the division bound");
    return d;
}

// ---------------------------------------------------------------------------
// Irreducibility, factorization, similarity, endomorphisms.
// ---------------------------------------------------------------------------

namespace {

FreePolynomial comonic_normalization(const FreePolynomial& g) {
    if (g.is_zero())
        throw ZeroAugmentation("the zero polynomial has augmentation zero");
    const FieldElem e = augmentation(g);
    if (e.is_zero())
        throw ZeroAugmentation("polynomial with augmentation zero");
    return g.scaled(e.invert());
}

// Label combination of the rows of n, smallest length first (ties broken by
// the canonical term-list key).
FreePolynomial smallest_lift(const Subspace& n, const OperatorModule& m) {
    std::optional<FreePolynomial> best;
    int best_len = 0;
    std::string best_key;
    for (int r = 0; r < n.dim(); ++r) {
        FreePolynomial p = FreePolynomial::zero(m.labels.front().rank(), m.field);
        for (int c = 0; c < m.dim; ++c)
            p += m.labels[static_cast<std::size_t>(c)].scaled(n.rows().at(r, c));
        if (p.is_zero()) continue;
        const int len = length_of(p);
        const std::string key = p.key_string();
        if (!best || len < best_len || (len == best_len && key < best_key)) {
            best = std::move(p);
            best_len = len;
            best_key = key;
        }
    }
    if (!best) throw Error("internal: a nonzero submodule lifted to zero");
    return *best;
}

} // namespace

bool is_irreducible(const FreePolynomial& gamma, std::uint64_t seed) {
    const FreePolynomial g = comonic_normalization(gamma);
    if (is_unit(g)) throw IsUnit("units are neither reducible nor irreducible");
    const Lattice lat = lattice_of(g);
    return is_simple_module(lat.module, seed);
}

Factorization factorize(const FreePolynomial& gamma, std::uint64_t seed,
                        std::uint64_t budget) {
    Factorization out;
    out.unit = augmentation(gamma);
    out.unit_word = ReducedWord(gamma.rank());
    FreePolynomial cur = comonic_normalization(gamma);
    const FreePolynomial one = one_poly(gamma.rank(), gamma.field());

    int guard = 0;
    while (!is_unit(cur)) {
        if (++guard > 256)
            throw Error("internal: factorization did not terminate");
        // Split cur = s·w with s the shortest right word-unit associate and
        // run the divisor chain on s: divisors of s transfer to cur by
        // re-appending w, keeping every intermediate product exact.
        const RightWordSplit split = right_word_unit_split(cur);
        const FreePolynomial& s = split.reduced;
        Lattice lat = lattice_of(s);
        OperatorModule mod = std::move(lat.module);
        std::optional<FreePolynomial> next;
        bool simple = false;
        for (;;) {
            const Subspace n = minimal_submodule(mod, seed);
            if (n.dim() == mod.dim) {
                simple = true;
                break;
            }
            const FreePolynomial mu = smallest_lift(n, mod);
            const FreePolynomial d = gcd(mu, s, budget);
            bool progress = !(d == s) && !is_unit(d);
            if (progress) {
                const DivisionResult dv = divide_right(s, d);
                if (!dv.divisible)
                    throw UnresolvedMembership(
                        "certified right divisor has no cofactor within the "
                        "division bound");
                if (is_unit(dv.quotient)) {
                    progress = false; // same ideal, different representative
                } else {
                    // cur = dv.quotient · (d·w); continue on the right part.
                    out.factors.push_back(dv.quotient);
                    next = d * FreePolynomial::monomial(split.tail,
                                                        FieldElem::one(cur.field()));
                    break;
                }
            }
            if (!progress) {
                // The minimal submodule was an artifact: its label ideal is
                // no finer than the current polynomial's.  Quotient it away
                // and look again one level up.
                QuotientModule q = quotient_by(mod, n);
                mod = std::move(q.module);
                if (mod.dim == 0)
                    throw UnresolvedMembership(
                        "every candidate submodule was an artifact of the "
                        "presentation");
            }
        }
        if (simple) {
            // s is irreducible, and cur = s·w is its right associate: cur is
            // itself irreducible and comonic, so absorbing w into this final
            // factor keeps the factor list exact.
            out.factors.push_back(cur);
            cur = one;
        } else {
            cur = std::move(*next);
        }
    }
    if (!is_constant(cur)) out.unit_word = cur.terms().begin()->first;

    FreePolynomial product = FreePolynomial::monomial(out.unit_word, out.unit);
    for (const FreePolynomial& p : out.factors) product = product * p;
    out.verified = product == gamma;
    if (!out.verified)
        throw Error("internal: factorization failed its product check");
    return out;
}

bool similar(const FreePolynomial& a, const FreePolynomial& b, std::uint64_t seed) {
    a.check_compatible(b);
    const FreePolynomial ga = comonic_normalization(a);
    const FreePolynomial gb = comonic_normalization(b);
    if (is_unit(ga) || is_unit(gb))
        throw IsUnit("similarity is defined for non-unit polynomials");
    return is_isomorphic(lattice_of(ga).module, lattice_of(gb).module, seed);
}

int endo_dim(const FreePolynomial& gamma) {
    const FreePolynomial g = comonic_normalization(gamma);
    if (is_unit(g)) throw IsUnit("units have a trivial lattice");
    const OperatorModule m = lattice_of(g).module;
    return static_cast<int>(intertwiner_space(m, m).size());
}

} // namespace fox
