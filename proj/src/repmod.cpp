#include "fox/repmod.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>
#include <string>

namespace fox {

namespace {

Vec row_of(const Matrix& m, int r) {
    Vec v;
    v.reserve(static_cast<std::size_t>(m.cols()));
    for (int c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
    return v;
}

Matrix stack_rows(const std::vector<Vec>& rows, int cols, FieldSpec field) {
    Matrix m(static_cast<int>(rows.size()), cols, field);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    return m;
}

std::string vec_key(const Vec& v) {
    std::ostringstream os;
    for (const FieldElem& x : v) os << x.to_string() << '|';
    return os.str();
}

// All vectors of the prime field space whose first nonzero entry is 1 (one
// representative per line).  Only called when p^dim is small.
std::vector<Vec> projective_vectors(int dim, FieldSpec field) {
    const std::int64_t p = field.characteristic();
    std::vector<Vec> out;
    std::vector<std::int64_t> digits(static_cast<std::size_t>(dim), 0);
    while (true) {
        // advance odometer
        int pos = 0;
        while (pos < dim && ++digits[static_cast<std::size_t>(pos)] == p) {
            digits[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == dim) break;
        Vec v;
        v.reserve(static_cast<std::size_t>(dim));
        bool leading_one = false, decided = false;
        for (int i = dim - 1; i >= 0; --i) {
            const std::int64_t d = digits[static_cast<std::size_t>(i)];
            if (!decided && d != 0) {
                decided = true;
                leading_one = d == 1;
            }
        }
        if (!decided || !leading_one) continue;
        for (int i = 0; i < dim; ++i)
            v.push_back(FieldElem::from_integer(field, digits[static_cast<std::size_t>(i)]));
        out.push_back(std::move(v));
    }
    return out;
}

bool exhaustible(FieldSpec field, int dim) {
    if (field.is_rational()) return false;
    const std::int64_t p = field.characteristic();
    std::int64_t count = 1;
    for (int i = 0; i < dim; ++i) {
        count *= p;
        if (count > 625) return false;
    }
    return true;
}

FieldElem trace_of(const Matrix& m) {
    FieldElem t = FieldElem::zero(m.field());
    for (int i = 0; i < std::min(m.rows(), m.cols()); ++i) t = t + m.at(i, i);
    return t;
}

FieldElem random_scalar(FieldSpec field, std::mt19937_64& rng) {
    if (field.is_rational())
        return FieldElem::from_integer(field,
                                       std::uniform_int_distribution<std::int64_t>(-3, 3)(rng));
    return FieldElem::from_integer(
        field, std::uniform_int_distribution<std::int64_t>(0, field.characteristic() - 1)(rng));
}

} // namespace

void OperatorModule::validate() const {
    if (dim < 0) throw DimensionMismatch("negative module dimension");
    for (const Matrix& a : ops) {
        if (a.rows() != dim || a.cols() != dim)
            throw DimensionMismatch("operator shape does not match module dimension");
        if (!(a.field() == field)) throw FieldMismatch("operator field mismatch");
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != dim)
        throw DimensionMismatch("label count does not match module dimension");
}

// ---------------------------------------------------------------------------
// Subspace
// ---------------------------------------------------------------------------

Subspace Subspace::from_rows(const Matrix& rows) {
    const RowReduction red = row_reduce(rows);
    Matrix basis(red.rank, rows.cols(), rows.field());
    for (int r = 0; r < red.rank; ++r)
        for (int c = 0; c < rows.cols(); ++c) basis.at(r, c) = red.rref.at(r, c);
    Subspace s(std::move(basis));
    s.pivots_ = red.pivot_cols;
    return s;
}

Subspace Subspace::zero(int ambient, FieldSpec field) {
    return Subspace(Matrix(0, ambient, field));
}

Subspace Subspace::full(int ambient, FieldSpec field) {
    Subspace s(Matrix::identity(ambient, field));
    s.pivots_.resize(static_cast<std::size_t>(ambient));
    for (int i = 0; i < ambient; ++i) s.pivots_[static_cast<std::size_t>(i)] = i;
    return s;
}

Vec Subspace::reduce_vec(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient())
        throw DimensionMismatch("vector length does not match ambient dimension");
    Vec out = v;
    for (int r = 0; r < dim(); ++r) {
        const FieldElem c = out[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(r)])];
        if (c.is_zero()) continue;
        for (int cc = 0; cc < ambient(); ++cc)
            out[static_cast<std::size_t>(cc)] = out[static_cast<std::size_t>(cc)] - c * rows_.at(r, cc);
    }
    return out;
}

bool Subspace::contains_vec(const Vec& v) const { return is_zero_vec(reduce_vec(v)); }

bool Subspace::contains(const Subspace& other) const {
    for (int r = 0; r < other.dim(); ++r)
        if (!contains_vec(row_of(other.rows_, r))) return false;
    return true;
}

std::optional<Vec> Subspace::coords_of(const Vec& v) const {
    if (!contains_vec(v)) return std::nullopt;
    Vec coords;
    coords.reserve(static_cast<std::size_t>(dim()));
    for (int r = 0; r < dim(); ++r)
        coords.push_back(v[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(r)])]);
    return coords;
}

bool Subspace::insert(const Vec& v) {
    if (contains_vec(v)) return false;
    std::vector<Vec> all;
    for (int r = 0; r < dim(); ++r) all.push_back(row_of(rows_, r));
    all.push_back(v);
    *this = from_rows(stack_rows(all, ambient(), rows_.field()));
    return true;
}

// ---------------------------------------------------------------------------
// Spin, restriction, quotient
// ---------------------------------------------------------------------------

Subspace spin(const OperatorModule& m, const std::vector<Vec>& seeds) {
    m.validate();
    Subspace s = Subspace::zero(m.dim, m.field);
    std::deque<Vec> work(seeds.begin(), seeds.end());
    while (!work.empty()) {
        Vec v = std::move(work.front());
        work.pop_front();
        if (!s.insert(v)) continue;
        for (const Matrix& a : m.ops) work.push_back(v * a);
    }
    return s;
}

Subspace spin_vector(const OperatorModule& m, const Vec& v) {
    return spin(m, std::vector<Vec>{v});
}

OperatorModule restrict_to(const OperatorModule& m, const Subspace& w) {
    m.validate();
    if (w.ambient() != m.dim) throw DimensionMismatch("subspace ambient dimension mismatch");
    OperatorModule out;
    out.field = m.field;
    out.dim = w.dim();
    for (const Matrix& a : m.ops) {
        Matrix b(w.dim(), w.dim(), m.field);
        for (int k = 0; k < w.dim(); ++k) {
            const auto coords = w.coords_of(row_of(w.rows(), k) * a);
            if (!coords) throw Error("restriction to a non-invariant subspace");
            for (int c = 0; c < w.dim(); ++c) b.at(k, c) = (*coords)[static_cast<std::size_t>(c)];
        }
        out.ops.push_back(std::move(b));
    }
    if (m.has_labels()) {
        const int lrank = m.labels.front().rank();
        const FieldSpec lfield = m.labels.front().field();
        for (int k = 0; k < w.dim(); ++k) {
            FreePolynomial lab = FreePolynomial::zero(lrank, lfield);
            for (int i = 0; i < m.dim; ++i)
                lab = lab + m.labels[static_cast<std::size_t>(i)].scaled(w.rows().at(k, i));
            out.labels.push_back(std::move(lab));
        }
    }
    return out;
}

QuotientModule quotient_by(const OperatorModule& m, const Subspace& w) {
    m.validate();
    if (w.ambient() != m.dim) throw DimensionMismatch("subspace ambient dimension mismatch");
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.dim), false);
    for (int p : w.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.dim; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
    const int s = static_cast<int>(free_cols.size());

    QuotientModule out{OperatorModule{}, Matrix(s, m.dim, m.field)};
    out.module.field = m.field;
    out.module.dim = s;
    for (int k = 0; k < s; ++k)
        out.lift.at(k, free_cols[static_cast<std::size_t>(k)]) = FieldElem::one(m.field);
    for (const Matrix& a : m.ops) {
        Matrix b(s, s, m.field);
        for (int k = 0; k < s; ++k) {
            const Vec img = project_to_quotient(w, row_of(out.lift, k) * a);
            for (int c = 0; c < s; ++c) b.at(k, c) = img[static_cast<std::size_t>(c)];
        }
        out.module.ops.push_back(std::move(b));
    }
    if (m.has_labels())
        for (int k = 0; k < s; ++k)
            out.module.labels.push_back(
                m.labels[static_cast<std::size_t>(free_cols[static_cast<std::size_t>(k)])]);
    return out;
}

Vec project_to_quotient(const Subspace& w, const Vec& v) {
    const Vec reduced = w.reduce_vec(v);
    std::vector<bool> is_pivot(static_cast<std::size_t>(w.ambient()), false);
    for (int p : w.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
    Vec out;
    for (int c = 0; c < w.ambient(); ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) out.push_back(reduced[static_cast<std::size_t>(c)]);
    return out;
}

// ---------------------------------------------------------------------------
// Simple submodules
// ---------------------------------------------------------------------------

namespace {

OperatorModule transposed_module(const OperatorModule& m) {
    OperatorModule out;
    out.field = m.field;
    out.dim = m.dim;
    for (const Matrix& a : m.ops) out.ops.push_back(a.transpose());
    return out;
}

Vec random_vector(int dim, FieldSpec field, std::mt19937_64& rng) {
    Vec v;
    v.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) v.push_back(random_scalar(field, rng));
    return v;
}

Matrix random_algebra_element(const OperatorModule& m, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n_words(2, 3);
    std::uniform_int_distribution<int> word_len(0, 2);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(m.ops.size()) - 1);
    Matrix theta(m.dim, m.dim, m.field);
    const int words = n_words(rng);
    for (int s = 0; s < words; ++s) {
        Matrix w = Matrix::identity(m.dim, m.field);
        const int l = word_len(rng);
        for (int k = 0; k < l; ++k) w = w * m.ops[static_cast<std::size_t>(pick(rng))];
        theta = theta + w.scaled(random_scalar(m.field, rng));
    }
    return theta;
}

// All lines of the span of the given kernel basis, when that is enumerable
// (prime field with few lines, or a one-dimensional space).
std::optional<std::vector<Vec>> enumerate_lines(const std::vector<Vec>& basis, int ambient,
                                                FieldSpec field) {
    const int k = static_cast<int>(basis.size());
    if (k == 0) return std::vector<Vec>{};
    if (k == 1) return std::vector<Vec>{basis.front()};
    if (field.is_rational()) return std::nullopt;
    std::int64_t lines = 1;
    for (int i = 0; i < k; ++i) {
        lines *= field.characteristic();
        if (lines > 2000) return std::nullopt;
    }
    std::vector<Vec> out;
    for (const Vec& coeffs : projective_vectors(k, field)) {
        Vec v = zero_vec(ambient, field);
        for (int i = 0; i < k; ++i)
            v = v + scaled_vec(basis[static_cast<std::size_t>(i)], coeffs[static_cast<std::size_t>(i)]);
        out.push_back(std::move(v));
    }
    return out;
}

// Row kernel { v : v * theta = 0 } as vectors.
std::vector<Vec> row_kernel(const Matrix& theta) {
    return right_nullspace(theta.transpose());
}

// Column kernel { w : theta * w^T = 0 } as vectors.
std::vector<Vec> column_kernel(const Matrix& theta) { return right_nullspace(theta); }

// ---------------------------------------------------------------------------
// Rational certification helpers.  Over the rationals random sampling never
// hits the singular locus, so simplicity is decided deterministically: first
// descend into the socle until the module is semisimple, then analyze the
// endomorphism ring.  A semisimple module is simple exactly when its
// endomorphism ring is a division ring; scalars-only certifies immediately, a
// singular nonzero endomorphism hands back a proper submodule, and a
// commutative endomorphism ring is a field exactly when the minimal
// polynomial of a primitive element is irreducible -- certified by finding a
// prime modulo which it stays irreducible.
// ---------------------------------------------------------------------------

// Dense univariate arithmetic over GF(p), little-endian coefficients.
using PModPoly = std::vector<std::int64_t>;

void pnormalize(PModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PModPoly pmul(const PModPoly& a, const PModPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    PModPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    pnormalize(c);
    return c;
}

PModPoly pmod(PModPoly a, const PModPoly& m, std::int64_t p) {
    pnormalize(a);
    const std::int64_t lead_inv = [&] {
        // m is monic by construction here, but stay general
        std::int64_t x = 1, base = m.back(), e = p - 2;
        while (e) {
            if (e & 1) x = x * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return x;
    }();
    while (a.size() >= m.size()) {
        const std::int64_t f = a.back() * lead_inv % p;
        const std::size_t off = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            a[off + i] = ((a[off + i] - f * m[i]) % p + p) % p;
        pnormalize(a);
        if (a.empty()) break;
    }
    return a;
}

PModPoly pgcd(PModPoly a, PModPoly b, std::int64_t p) {
    pnormalize(a);
    pnormalize(b);
    while (!b.empty()) {
        PModPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^e) mod m.
PModPoly frobenius_power(const PModPoly& m, std::int64_t p, int e) {
    PModPoly x{0, 1};
    PModPoly result = pmod(x, m, p);
    BigInt exp = 1;
    for (int i = 0; i < e; ++i) exp *= p;
    // result = x^exp mod m by square and multiply
    PModPoly acc{1};
    PModPoly base = result;
    while (exp > 0) {
        if ((exp & 1) != 0) acc = pmod(pmul(acc, base, p), m, p);
        base = pmod(pmul(base, base, p), m, p);
        exp >>= 1;
    }
    return acc;
}

// Rabin irreducibility test over GF(p).
bool irreducible_mod_p(const PModPoly& m, std::int64_t p) {
    const int n = static_cast<int>(m.size()) - 1;
    if (n <= 0) return false;
    // x^(p^n) == x mod m
    PModPoly h = frobenius_power(m, p, n);
    PModPoly x{0, 1};
    if (pmod(std::move(h) , m, p) != pmod(x, m, p)) return false;
    // gcd(x^(p^(n/q)) - x, m) == 1 for every prime divisor q of n
    int nn = n;
    std::vector<int> qs;
    for (int q = 2; q * q <= nn; ++q)
        if (nn % q == 0) {
            qs.push_back(q);
            while (nn % q == 0) nn /= q;
        }
    if (nn > 1) qs.push_back(nn);
    for (int q : qs) {
        PModPoly g = frobenius_power(m, p, n / q);
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = ((g[1] - 1) % p + p) % p;
        pnormalize(g);
        PModPoly d = pgcd(m, g, p);
        if (static_cast<int>(d.size()) - 1 > 0) return false;
    }
    return true;
}

// Minimal polynomial of a rational matrix, monic, little-endian rational
// coefficients.
std::vector<FieldElem> minimal_polynomial(const Matrix& z) {
    const FieldSpec f = z.field();
    const int d = z.rows();
    auto flatten = [&](const Matrix& a) {
        Vec v;
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) v.push_back(a.at(r, c));
        return v;
    };
    std::vector<Matrix> powers{Matrix::identity(d, f)};
    while (true) {
        // is the newest power dependent on the earlier ones?
        const int k = static_cast<int>(powers.size());
        Matrix sys(d * d, k, f);
        for (int i = 0; i < k; ++i) {
            const Vec col = flatten(powers[static_cast<std::size_t>(i)]);
            for (int r = 0; r < d * d; ++r) sys.at(r, i) = col[static_cast<std::size_t>(r)];
        }
        const Matrix next = powers.back() * z;
        const Vec target = flatten(next);
        const auto sol = solve_right(sys, target);
        if (sol) {
            // z^k = sum a_i z^i: min poly x^k - sum a_i x^i
            std::vector<FieldElem> mu;
            for (int i = 0; i < k; ++i) mu.push_back(-(*sol)[static_cast<std::size_t>(i)]);
            mu.push_back(FieldElem::one(f));
            return mu;
        }
        powers.push_back(next);
    }
}

// Primitive integer coefficients of a rational polynomial.
std::vector<BigInt> integer_form(const std::vector<FieldElem>& mu) {
    BigInt lcm_den = 1;
    for (const FieldElem& c : mu) {
        const BigInt den = boost::multiprecision::denominator(c.rational());
        lcm_den = boost::multiprecision::lcm(lcm_den, den);
    }
    std::vector<BigInt> out;
    BigInt content = 0;
    for (const FieldElem& c : mu) {
        const BigRational scaled = c.rational() * BigRational(lcm_den);
        out.push_back(boost::multiprecision::numerator(scaled));
        content = boost::multiprecision::gcd(content, out.back());
    }
    if (content != 0)
        for (BigInt& c : out) c /= content;
    return out;
}

// Sound one-sided certificate: irreducible modulo some prime not dividing the
// leading coefficient implies irreducible over the rationals.
bool certify_irreducible_over_q(const std::vector<FieldElem>& mu) {
    const std::vector<BigInt> zc = integer_form(mu);
    for (std::int64_t p : {3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL}) {
        if (zc.back() % p == 0) continue;
        PModPoly m;
        for (const BigInt& c : zc) {
            BigInt r = c % p;
            if (r < 0) r += p;
            m.push_back(r.convert_to<std::int64_t>());
        }
        if (irreducible_mod_p(m, p)) return true;
    }
    return false;
}

Subspace socle_char_zero(const OperatorModule& m); // defined below

// Deterministic search for a proper submodule of a SEMISIMPLE rational
// module, via its endomorphism ring: any singular nonzero endomorphism has a
// proper nonzero kernel, and that kernel is a submodule.  Returns the kernel
// if one is found, `certified` if simplicity was proved, or neither.
struct SemisimpleAnalysis {
    std::optional<Subspace> proper;
    bool certified = false;
};

SemisimpleAnalysis analyze_semisimple_rational(const OperatorModule& r) {
    SemisimpleAnalysis out;
    const std::vector<Matrix> endos = intertwiner_space(r, r);
    const std::size_t m = endos.size();
    if (m == 1) {
        // only scalar endomorphisms: a semisimple module with scalar
        // endomorphism ring is simple
        out.certified = true;
        return out;
    }

    auto try_endo = [&](const Matrix& z) {
        if (out.proper || z.is_zero() || is_invertible(z)) return;
        out.proper = Subspace::from_rows(stack_rows(row_kernel(z), r.dim, r.field));
    };
    for (const Matrix& z : endos) try_endo(z);
    for (std::size_t i = 0; i < m && !out.proper; ++i)
        for (std::size_t j = i + 1; j < m && !out.proper; ++j) {
            try_endo(endos[i] + endos[j]);
            try_endo(endos[i] - endos[j]);
            try_endo(endos[i] * endos[j]);
        }
    if (!out.proper && m <= 4) {
        // small integer grid over the endomorphism basis
        std::vector<int> c(m, -2);
        while (!out.proper) {
            Matrix z(r.dim, r.dim, r.field);
            for (std::size_t i = 0; i < m; ++i)
                z = z + endos[i].scaled(FieldElem::from_integer(r.field, c[i]));
            try_endo(z);
            std::size_t pos = 0;
            while (pos < m && c[pos] == 2) { c[pos] = -2; ++pos; }
            if (pos == m) break;
            ++c[pos];
        }
    }
    if (out.proper) return out;

    // A commutative endomorphism ring of a semisimple module is a product of
    // number fields; if the minimal polynomial of a primitive element is
    // irreducible the ring is a single field, so the module is simple.
    bool commutative = true;
    for (std::size_t i = 0; i < m && commutative; ++i)
        for (std::size_t j = i + 1; j < m && commutative; ++j)
            commutative = endos[i] * endos[j] == endos[j] * endos[i];
    if (!commutative) return out;

    const int want = static_cast<int>(m);
    auto primitive_min_poly = [&](const Matrix& z) -> std::optional<std::vector<FieldElem>> {
        std::vector<FieldElem> mu = minimal_polynomial(z);
        if (static_cast<int>(mu.size()) - 1 != want) return std::nullopt;
        return mu;
    };
    std::optional<std::vector<FieldElem>> mu;
    for (const Matrix& z : endos) {
        mu = primitive_min_poly(z);
        if (mu) break;
    }
    for (std::size_t i = 0; i < m && !mu; ++i)
        for (std::size_t j = i + 1; j < m && !mu; ++j)
            mu = primitive_min_poly(endos[i] + endos[j]);
    if (mu && certify_irreducible_over_q(*mu)) out.certified = true;
    return out;
}

} // namespace

Subspace minimal_submodule(const OperatorModule& m, std::uint64_t seed) {
    m.validate();
    if (m.dim == 0) throw ZeroModule("minimal submodule of the zero module");
    std::mt19937_64 rng(seed ^ 0x6a09e667f3bcc908ULL);

    Subspace cur = Subspace::full(m.dim, m.field);
    OperatorModule r = m;

    while (true) {
        if (r.dim == 1) return cur;
        std::optional<Subspace> proper; // in r's coordinates

        auto consider = [&](const Vec& v) {
            if (proper || is_zero_vec(v)) return;
            Subspace s = spin_vector(r, v);
            if (s.dim() > 0 && s.dim() < r.dim) proper = std::move(s);
        };

        for (int k = 0; k < r.dim && !proper; ++k) consider(unit_vec(r.dim, k, m.field));

        bool certified = false;
        if (!proper) {
            if (exhaustible(m.field, r.dim)) {
                for (const Vec& v : projective_vectors(r.dim, m.field)) {
                    consider(v);
                    if (proper) break;
                }
                certified = !proper; // every line spins to the full module
            } else {
                for (int t = 0; t < 40 && !proper; ++t) consider(random_vector(r.dim, m.field, rng));
            }
        }

        if (!proper && !certified && m.field.is_rational()) {
            // Over the rationals random sampling never certifies, so decide
            // deterministically: a proper socle is a proper submodule (and
            // contains every simple one); once the module is semisimple its
            // endomorphism ring settles the question.
            Subspace s = socle_char_zero(r);
            if (s.dim() < r.dim) {
                proper = std::move(s);
            } else {
                SemisimpleAnalysis a = analyze_semisimple_rational(r);
                proper = std::move(a.proper);
                certified = a.certified;
            }
        }

        if (!proper && !certified && !m.field.is_rational()) {
            // Norton certificate: a singular algebra element whose row kernel
            // spins full everywhere and whose column kernel spins full in the
            // transposed module proves simplicity; any proper spin found on
            // the way is a genuine submodule.
            const OperatorModule dual = transposed_module(r);
            for (int t = 0; t < 80 && !proper && !certified; ++t) {
                const Matrix theta = random_algebra_element(r, rng);
                const auto lines = enumerate_lines(row_kernel(theta), r.dim, m.field);
                if (!lines || lines->empty()) continue;
                bool all_full = true;
                for (const Vec& v : *lines) {
                    Subspace s = spin_vector(r, v);
                    if (s.dim() < r.dim) {
                        proper = std::move(s);
                        all_full = false;
                        break;
                    }
                }
                if (!all_full || proper) break;
                const auto dual_lines = enumerate_lines(column_kernel(theta), r.dim, m.field);
                if (!dual_lines) continue;
                bool dual_full = true;
                for (const Vec& w : *dual_lines) {
                    Subspace s = spin_vector(dual, w);
                    if (s.dim() < r.dim) {
                        // the annihilator of a proper dual submodule is a
                        // proper submodule
                        const auto perp = right_nullspace(s.rows());
                        proper = Subspace::from_rows(stack_rows(perp, r.dim, m.field));
                        dual_full = false;
                        break;
                    }
                }
                if (dual_full && !proper) certified = true;
            }
        }

        if (!proper && !certified)
            throw UnresolvedSimplicity("could not certify simplicity within the search budget");

        if (!proper) return cur; // certified simple

        cur = Subspace::from_rows(proper->rows() * cur.rows());
        r = restrict_to(m, cur);
    }
}

bool is_simple_module(const OperatorModule& m, std::uint64_t seed) {
    if (m.dim == 0) return false;
    return minimal_submodule(m, seed).dim() == m.dim;
}

std::vector<OperatorModule> composition_series(const OperatorModule& m, std::uint64_t seed) {
    m.validate();
    std::vector<OperatorModule> out;
    OperatorModule cur = m;
    while (cur.dim > 0) {
        const Subspace w = minimal_submodule(cur, seed);
        out.push_back(restrict_to(cur, w));
        cur = quotient_by(cur, w).module;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Socle
// ---------------------------------------------------------------------------

namespace {

// Basis of the enveloping algebra (with identity) inside End(k^dim).
std::vector<Matrix> algebra_basis(const OperatorModule& m) {
    const int d = m.dim;
    // flattened echelon over d*d coordinates
    std::vector<Vec> rows;          // reduced rows
    std::vector<int> pivots;        // leading indices
    std::vector<Matrix> basis;      // matrices matching insertion order
    auto flatten = [&](const Matrix& a) {
        Vec v;
        v.reserve(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) v.push_back(a.at(r, c));
        return v;
    };
    auto insert = [&](const Matrix& a) {
        Vec v = flatten(a);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const FieldElem c = v[static_cast<std::size_t>(pivots[k])];
            if (c.is_zero()) continue;
            v = v - scaled_vec(rows[k], c);
        }
        int lead = -1;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) {
                lead = static_cast<int>(i);
                break;
            }
        if (lead < 0) return false;
        const FieldElem inv = v[static_cast<std::size_t>(lead)].invert();
        rows.push_back(scaled_vec(v, inv));
        pivots.push_back(lead);
        basis.push_back(a);
        return true;
    };
    std::deque<Matrix> work{Matrix::identity(d, m.field)};
    while (!work.empty()) {
        Matrix a = std::move(work.front());
        work.pop_front();
        if (!insert(a)) continue;
        for (const Matrix& op : m.ops) work.push_back(a * op);
    }
    return basis;
}

Subspace socle_char_zero(const OperatorModule& m) {
    const std::vector<Matrix> basis = algebra_basis(m);
    const int n = static_cast<int>(basis.size());
    Matrix gram(n, n, m.field);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            gram.at(i, j) = trace_of(basis[static_cast<std::size_t>(i)] *
                                     basis[static_cast<std::size_t>(j)]);
            gram.at(j, i) = gram.at(i, j);
        }
    const std::vector<Vec> rad_coords = right_nullspace(gram);
    if (rad_coords.empty()) return Subspace::full(m.dim, m.field);
    std::vector<Matrix> radical;
    for (const Vec& coords : rad_coords) {
        Matrix r(m.dim, m.dim, m.field);
        for (int i = 0; i < n; ++i)
            r = r + basis[static_cast<std::size_t>(i)].scaled(coords[static_cast<std::size_t>(i)]);
        radical.push_back(std::move(r));
    }
    // { v : v * r = 0 for all radical r }: right nullspace of the transposed
    // horizontal stack
    Matrix stacked(m.dim, m.dim * static_cast<int>(radical.size()), m.field);
    for (std::size_t k = 0; k < radical.size(); ++k)
        for (int r = 0; r < m.dim; ++r)
            for (int c = 0; c < m.dim; ++c)
                stacked.at(r, static_cast<int>(k) * m.dim + c) = radical[k].at(r, c);
    const std::vector<Vec> ann = right_nullspace(stacked.transpose());
    return Subspace::from_rows(stack_rows(ann, m.dim, m.field));
}

Subspace socle_exhaustive(const OperatorModule& m, std::uint64_t seed) {
    Subspace acc = Subspace::zero(m.dim, m.field);
    std::set<std::string> seen;
    for (const Vec& v : projective_vectors(m.dim, m.field)) {
        const Subspace s = spin_vector(m, v);
        if (s.dim() == 0) continue;
        std::ostringstream key;
        for (int r = 0; r < s.dim(); ++r) key << vec_key(row_of(s.rows(), r)) << ';';
        if (!seen.insert(key.str()).second) continue;
        if (is_simple_module(restrict_to(m, s), seed)) {
            std::vector<Vec> rows;
            for (int r = 0; r < acc.dim(); ++r) rows.push_back(row_of(acc.rows(), r));
            for (int r = 0; r < s.dim(); ++r) rows.push_back(row_of(s.rows(), r));
            acc = Subspace::from_rows(stack_rows(rows, m.dim, m.field));
            if (acc.dim() == m.dim) break;
        }
    }
    return acc;
}

} // namespace

Subspace socle(const OperatorModule& m, std::uint64_t seed) {
    m.validate();
    if (m.dim == 0) return Subspace::zero(0, m.field);
    if (m.field.is_rational()) return socle_char_zero(m);
    if (exhaustible(m.field, m.dim)) return socle_exhaustive(m, seed);
    throw UnresolvedSimplicity("socle is only certified for small prime-field modules");
}

std::vector<Subspace> socle_series(const OperatorModule& m, std::uint64_t seed) {
    m.validate();
    std::vector<Subspace> out{Subspace::zero(m.dim, m.field)};
    OperatorModule cur = m;
    Matrix lift = Matrix::identity(m.dim, m.field); // cur coords -> m coords
    while (cur.dim > 0) {
        const Subspace s = socle(cur, seed);
        if (s.dim() == 0) throw Error("socle of a nonzero module vanished"); // unreachable
        std::vector<Vec> rows;
        const Subspace& prev = out.back();
        for (int r = 0; r < prev.dim(); ++r) rows.push_back(row_of(prev.rows(), r));
        const Matrix lifted = s.rows() * lift;
        for (int r = 0; r < lifted.rows(); ++r) rows.push_back(row_of(lifted, r));
        out.push_back(Subspace::from_rows(stack_rows(rows, m.dim, m.field)));
        const QuotientModule q = quotient_by(cur, s);
        lift = q.lift * lift;
        cur = q.module;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Intertwiners and isomorphism
// ---------------------------------------------------------------------------

std::vector<Matrix> intertwiner_space(const OperatorModule& a, const OperatorModule& b) {
    a.validate();
    b.validate();
    if (!(a.field == b.field)) throw FieldMismatch("modules over different fields");
    if (a.ops.size() != b.ops.size())
        throw DimensionMismatch("modules over different alphabets");
    const int da = a.dim, db = b.dim;
    const int unknowns = da * db;
    const int n_ops = static_cast<int>(a.ops.size());
    Matrix sys(n_ops * da * db, unknowns, a.field);
    int row = 0;
    for (int j = 0; j < n_ops; ++j) {
        const Matrix& aj = a.ops[static_cast<std::size_t>(j)];
        const Matrix& bj = b.ops[static_cast<std::size_t>(j)];
        for (int r = 0; r < da; ++r) {
            for (int c = 0; c < db; ++c) {
                // (A_j Z - Z B_j)[r][c] = 0
                for (int k = 0; k < da; ++k)
                    sys.at(row, k * db + c) = sys.at(row, k * db + c) + aj.at(r, k);
                for (int k = 0; k < db; ++k)
                    sys.at(row, r * db + k) = sys.at(row, r * db + k) - bj.at(k, c);
                ++row;
            }
        }
    }
    std::vector<Matrix> out;
    for (const Vec& z : right_nullspace(sys)) {
        Matrix zm(da, db, a.field);
        for (int r = 0; r < da; ++r)
            for (int c = 0; c < db; ++c) zm.at(r, c) = z[static_cast<std::size_t>(r * db + c)];
        out.push_back(std::move(zm));
    }
    return out;
}

bool is_isomorphic(const OperatorModule& a, const OperatorModule& b, std::uint64_t seed) {
    if (a.dim != b.dim) return false;
    if (a.dim == 0) return true;
    const std::vector<Matrix> basis = intertwiner_space(a, b);
    const int m = static_cast<int>(basis.size());
    if (m == 0) return false;
    const int d = a.dim;

    auto combo = [&](const std::vector<FieldElem>& coeffs) {
        Matrix z(d, d, a.field);
        for (int i = 0; i < m; ++i)
            z = z + basis[static_cast<std::size_t>(i)].scaled(coeffs[static_cast<std::size_t>(i)]);
        return z;
    };

    if (a.field.is_rational()) {
        // determinant of a coefficient combination has degree at most d in
        // each coefficient, so the grid {0..d}^m decides whether it vanishes
        // identically
        double grid_size = 1;
        for (int i = 0; i < m; ++i) grid_size *= d + 1;
        if (grid_size > 200000.0)
            throw BudgetExhausted("isomorphism grid too large to certify");
        std::vector<std::int64_t> digits(static_cast<std::size_t>(m), 0);
        while (true) {
            std::vector<FieldElem> coeffs;
            for (int i = 0; i < m; ++i)
                coeffs.push_back(FieldElem::from_integer(a.field, digits[static_cast<std::size_t>(i)]));
            if (is_invertible(combo(coeffs))) return true;
            int pos = 0;
            while (pos < m && ++digits[static_cast<std::size_t>(pos)] == d + 1) {
                digits[static_cast<std::size_t>(pos)] = 0;
                ++pos;
            }
            if (pos == m) break;
        }
        return false;
    }

    // prime field: exhaustive when feasible, sampled otherwise
    const std::int64_t p = a.field.characteristic();
    double count = 1;
    for (int i = 0; i < m; ++i) count *= static_cast<double>(p);
    if (count <= 200000.0) {
        std::vector<std::int64_t> digits(static_cast<std::size_t>(m), 0);
        while (true) {
            std::vector<FieldElem> coeffs;
            for (int i = 0; i < m; ++i)
                coeffs.push_back(FieldElem::from_integer(a.field, digits[static_cast<std::size_t>(i)]));
            if (is_invertible(combo(coeffs))) return true;
            int pos = 0;
            while (pos < m && ++digits[static_cast<std::size_t>(pos)] == p) {
                digits[static_cast<std::size_t>(pos)] = 0;
                ++pos;
            }
            if (pos == m) break;
        }
        return false;
    }
    std::mt19937_64 rng(seed ^ 0xbb67ae8584caa73bULL);
    for (int t = 0; t < 200; ++t) {
        std::vector<FieldElem> coeffs;
        for (int i = 0; i < m; ++i) coeffs.push_back(random_scalar(a.field, rng));
        if (is_invertible(combo(coeffs))) return true;
    }
    throw BudgetExhausted("isomorphism sampling budget exhausted without a certificate");
}

} // namespace fox
