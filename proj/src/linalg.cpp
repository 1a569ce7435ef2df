#include "fox/linalg.hpp"

#include <algorithm>

namespace fox {

namespace {

void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrix shapes differ");
    if (!(a.field() == b.field())) throw FieldMismatch("matrix fields differ");
}

} // namespace

Matrix::Matrix(int rows, int cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field),
      a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
         FieldElem::zero(field)) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix shape");
}

Matrix Matrix::identity(int n, FieldSpec field) {
    Matrix m(n, n, field);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldElem::one(field);
    return m;
}

void Matrix::check_range(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw IndexOutOfRange("matrix index out of range");
}

FieldElem& Matrix::at(int r, int c) {
    check_range(r, c);
    return a_[static_cast<std::size_t>(r) * cols_ + c];
}

const FieldElem& Matrix::at(int r, int c) const {
    check_range(r, c);
    return a_[static_cast<std::size_t>(r) * cols_ + c];
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_, field_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

Matrix Matrix::scaled(const FieldElem& c) const {
    Matrix m = *this;
    for (auto& x : m.a_) x = x * c;
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = m.a_[i] + b.a_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = m.a_[i] - b.a_[i];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shapes");
    if (!(a.field() == b.field())) throw FieldMismatch("matrix fields differ");
    Matrix m(a.rows(), b.cols(), a.field());
    for (int r = 0; r < a.rows(); ++r)
        for (int k = 0; k < a.cols(); ++k) {
            const FieldElem& ark = a.at(r, k);
            if (ark.is_zero()) continue;
            for (int c = 0; c < b.cols(); ++c)
                m.at(r, c) = m.at(r, c) + ark * b.at(k, c);
        }
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ &&
           a.a_ == b.a_;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(),
                       [](const FieldElem& x) { return x.is_zero(); });
}

Vec operator*(const Vec& v, const Matrix& a) {
    if (static_cast<int>(v.size()) != a.rows())
        throw DimensionMismatch("row vector length does not match matrix rows");
    Vec out(static_cast<std::size_t>(a.cols()), FieldElem::zero(a.field()));
    for (int r = 0; r < a.rows(); ++r) {
        if (v[static_cast<std::size_t>(r)].is_zero()) continue;
        for (int c = 0; c < a.cols(); ++c)
            out[static_cast<std::size_t>(c)] =
                out[static_cast<std::size_t>(c)] + v[static_cast<std::size_t>(r)] * a.at(r, c);
    }
    return out;
}

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    Vec out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + b[i];
    return out;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    Vec out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] - b[i];
    return out;
}

Vec scaled_vec(const Vec& v, const FieldElem& c) {
    Vec out = v;
    for (auto& x : out) x = x * c;
    return out;
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(),
                       [](const FieldElem& x) { return x.is_zero(); });
}

Vec zero_vec(int n, FieldSpec field) {
    return Vec(static_cast<std::size_t>(n), FieldElem::zero(field));
}

Vec unit_vec(int n, int k, FieldSpec field) {
    Vec v = zero_vec(n, field);
    v.at(static_cast<std::size_t>(k)) = FieldElem::one(field);
    return v;
}

RowReduction row_reduce(const Matrix& a) {
    RowReduction out{a, {}, 0};
    Matrix& m = out.rref;
    int lead = 0;
    for (int c = 0; c < m.cols() && lead < m.rows(); ++c) {
        int pivot = -1;
        for (int r = lead; r < m.rows(); ++r)
            if (!m.at(r, c).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != lead)
            for (int cc = 0; cc < m.cols(); ++cc) std::swap(m.at(pivot, cc), m.at(lead, cc));
        const FieldElem inv = m.at(lead, c).invert();
        for (int cc = 0; cc < m.cols(); ++cc) m.at(lead, cc) = m.at(lead, cc) * inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == lead) continue;
            const FieldElem f = m.at(r, c);
            if (f.is_zero()) continue;
            for (int cc = 0; cc < m.cols(); ++cc)
                m.at(r, cc) = m.at(r, cc) - f * m.at(lead, cc);
        }
        out.pivot_cols.push_back(c);
        ++lead;
    }
    out.rank = static_cast<int>(out.pivot_cols.size());
    return out;
}

int rank_of(const Matrix& a) { return row_reduce(a).rank; }

FieldElem determinant(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("determinant of non-square matrix");
    Matrix m = a;
    const int n = m.rows();
    FieldElem det = FieldElem::one(a.field());
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (!m.at(r, c).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return FieldElem::zero(a.field());
        if (pivot != c) {
            for (int cc = 0; cc < n; ++cc) std::swap(m.at(pivot, cc), m.at(c, cc));
            det = -det;
        }
        det = det * m.at(c, c);
        const FieldElem inv = m.at(c, c).invert();
        for (int r = c + 1; r < n; ++r) {
            const FieldElem f = m.at(r, c) * inv;
            if (f.is_zero()) continue;
            for (int cc = c; cc < n; ++cc) m.at(r, cc) = m.at(r, cc) - f * m.at(c, cc);
        }
    }
    return det;
}

bool is_invertible(const Matrix& a) {
    return a.rows() == a.cols() && !determinant(a).is_zero();
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("inverse of non-square matrix");
    const int n = a.rows();
    Matrix aug(n, 2 * n, a.field());
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, n + r) = FieldElem::one(a.field());
    }
    const RowReduction red = row_reduce(aug);
    for (int r = 0; r < n; ++r)
        if (red.rref.at(r, r).is_zero()) return std::nullopt;
    Matrix inv(n, n, a.field());
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = red.rref.at(r, n + c);
    return inv;
}

std::vector<Vec> right_nullspace(const Matrix& a) {
    const RowReduction red = row_reduce(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (int c : red.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        Vec v = zero_vec(a.cols(), a.field());
        v[static_cast<std::size_t>(free)] = FieldElem::one(a.field());
        for (int r = 0; r < red.rank; ++r) {
            const int pc = red.pivot_cols[static_cast<std::size_t>(r)];
            v[static_cast<std::size_t>(pc)] = -red.rref.at(r, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve_right(const Matrix& a, const Vec& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw DimensionMismatch("right-hand side length does not match matrix rows");
    Matrix aug(a.rows(), a.cols() + 1, a.field());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[static_cast<std::size_t>(r)];
    }
    const RowReduction red = row_reduce(aug);
    Vec x = zero_vec(a.cols(), a.field());
    for (int r = 0; r < red.rank; ++r) {
        const int pc = red.pivot_cols[static_cast<std::size_t>(r)];
        if (pc == a.cols()) return std::nullopt; // inconsistent system
        x[static_cast<std::size_t>(pc)] = red.rref.at(r, a.cols());
    }
    return x;
}

// ---------------------------------------------------------------------------
// PolyEchelon
// ---------------------------------------------------------------------------

PolyEchelon::PolyEchelon(int rank, FieldSpec field) : rank_(rank), field_(field) {
    ReducedWord::check_rank(rank);
}

void PolyEchelon::reduce(FreePolynomial& p, FreePolynomial* tag, Vec* coords) const {
    // Rows are sorted by shortlex pivot; one forward pass is exact because a
    // row never contains the pivot word of an earlier row.
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const FieldElem c = p.coeff(rows_[k].pivot);
        if (coords) coords->push_back(c);
        if (c.is_zero()) continue;
        p = p - rows_[k].poly.scaled(c);
        if (tag) *tag = *tag - rows_[k].tag.scaled(c);
    }
}

bool PolyEchelon::insert(const FreePolynomial& p) {
    return insert_tagged(p, FreePolynomial::zero(rank_, field_));
}

bool PolyEchelon::insert_tagged(const FreePolynomial& p, const FreePolynomial& tag) {
    if (p.rank() != rank_) throw RankMismatch("echelon rank mismatch");
    if (!(p.field() == field_)) throw FieldMismatch("echelon field mismatch");
    FreePolynomial q = p;
    FreePolynomial t = tag;
    reduce(q, &t, nullptr);
    if (q.is_zero()) return false;
    const ReducedWord pivot = q.terms().begin()->first;
    const FieldElem inv = q.terms().begin()->second.invert();
    Row row{q.scaled(inv), t.scaled(inv), pivot};
    const auto pos = std::lower_bound(
        rows_.begin(), rows_.end(), pivot, [](const Row& r, const ReducedWord& w) {
            return shortlex_compare(r.pivot, w) < 0;
        });
    rows_.insert(pos, std::move(row));
    return true;
}

bool PolyEchelon::contains(const FreePolynomial& p) const {
    FreePolynomial q = p;
    reduce(q, nullptr, nullptr);
    return q.is_zero();
}

std::optional<Vec> PolyEchelon::coordinates(const FreePolynomial& p) const {
    FreePolynomial q = p;
    Vec coords;
    reduce(q, nullptr, &coords);
    if (!q.is_zero()) return std::nullopt;
    return coords;
}

std::optional<FreePolynomial> PolyEchelon::combination(const FreePolynomial& p) const {
    FreePolynomial q = p;
    FreePolynomial tag = FreePolynomial::zero(rank_, field_);
    reduce(q, &tag, nullptr);
    if (!q.is_zero()) return std::nullopt;
    return FreePolynomial::zero(rank_, field_) - tag;
}

FreePolynomial PolyEchelon::from_coordinates(const Vec& coords) const {
    if (coords.size() != rows_.size())
        throw DimensionMismatch("coordinate length does not match basis size");
    FreePolynomial out(rank_, field_);
    for (std::size_t k = 0; k < rows_.size(); ++k)
        out = out + rows_[k].poly.scaled(coords[k]);
    return out;
}

} // namespace fox
