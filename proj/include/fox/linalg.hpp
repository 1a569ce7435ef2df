#pragma once

#include <optional>
#include <vector>

#include "fox/poly.hpp"

namespace fox {

// ---------------------------------------------------------------------------
// Dense exact matrices over a coefficient field.  The library works with row
// vectors throughout: a vector v acts on a matrix as v * A, and linear maps
// compose left to right.
// ---------------------------------------------------------------------------

using Vec = std::vector<FieldElem>;

class Matrix {
public:
    Matrix(int rows, int cols, FieldSpec field);
    static Matrix identity(int n, FieldSpec field);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    FieldSpec field() const { return field_; }

    FieldElem& at(int r, int c);
    const FieldElem& at(int r, int c) const;

    Matrix transpose() const;
    Matrix scaled(const FieldElem& c) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

    bool is_zero() const;

private:
    int rows_;
    int cols_;
    FieldSpec field_;
    std::vector<FieldElem> a_; // row major

    void check_range(int r, int c) const;
};

Vec operator*(const Vec& v, const Matrix& a);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec scaled_vec(const Vec& v, const FieldElem& c);
bool is_zero_vec(const Vec& v);
Vec zero_vec(int n, FieldSpec field);
Vec unit_vec(int n, int k, FieldSpec field);

// Reduced row echelon form with pivot bookkeeping.
struct RowReduction {
    Matrix rref;
    std::vector<int> pivot_cols; // one entry per nonzero row of rref
    int rank = 0;
};

RowReduction row_reduce(const Matrix& a);
int rank_of(const Matrix& a);
FieldElem determinant(const Matrix& a);
bool is_invertible(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);

// Basis of { v : a * v = 0 } (column vectors, returned as Vec of length
// a.cols()).
std::vector<Vec> right_nullspace(const Matrix& a);

// One solution x of a * x = b, if any (x and b column vectors).
std::optional<Vec> solve_right(const Matrix& a, const Vec& b);

// ---------------------------------------------------------------------------
// Incremental echelon bases of subspaces of the group algebra, with words as
// coordinates.  Rows are kept sorted by their shortlex-smallest word (the
// pivot); each pivot is normalized to coefficient 1 and eliminated from the
// rows that come after it in the reduction walk.  Optionally every inserted
// polynomial carries a tag, and membership queries can return the tag
// combination that produces a target -- this is how right-division quotients
// are recovered.
// ---------------------------------------------------------------------------

class PolyEchelon {
public:
    PolyEchelon(int rank, FieldSpec field);

    // Returns true when p enlarges the span.  The tagged variant remembers
    // `tag` as the name of the inserted row.
    bool insert(const FreePolynomial& p);
    bool insert_tagged(const FreePolynomial& p, const FreePolynomial& tag);

    bool contains(const FreePolynomial& p) const;

    // Coefficients of p against the stored echelon rows (row order), if p
    // lies in the span.
    std::optional<Vec> coordinates(const FreePolynomial& p) const;

    // Tag combination: sum of c_k * tag_k over the reduction walk, if p lies
    // in the span.
    std::optional<FreePolynomial> combination(const FreePolynomial& p) const;

    int dimension() const { return static_cast<int>(rows_.size()); }
    const FreePolynomial& basis_poly(int k) const { return rows_.at(k).poly; }
    const ReducedWord& pivot_word(int k) const { return rows_.at(k).pivot; }

    // Linear combination of the basis rows with the given coefficients.
    FreePolynomial from_coordinates(const Vec& coords) const;

    int rank() const { return rank_; }
    FieldSpec field() const { return field_; }

private:
    struct Row {
        FreePolynomial poly;
        FreePolynomial tag;
        ReducedWord pivot;
    };

    int rank_;
    FieldSpec field_;
    std::vector<Row> rows_; // sorted by shortlex pivot

    // Reduces p in place against the rows, mirroring the operations on tag
    // and recording row coefficients when coords is non-null.
    void reduce(FreePolynomial& p, FreePolynomial* tag, Vec* coords) const;
};

} // namespace fox
