#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fox/linalg.hpp"

namespace fox {

// ---------------------------------------------------------------------------
// Finite-dimensional modules presented by matrices: row vectors acted on from
// the right by one square matrix per alphabet letter.  For modules arising
// from the derivative lattice the alphabet has 2n letters (n unbarred moves
// followed by n barred ones) and each basis vector can carry a polynomial
// label remembering the group-algebra element it came from.
// ---------------------------------------------------------------------------

struct OperatorModule {
    FieldSpec field = FieldSpec::rationals();
    int dim = 0;
    std::vector<Matrix> ops;
    std::vector<FreePolynomial> labels; // empty, or one per basis vector

    void validate() const;
    bool has_labels() const { return !labels.empty(); }
};

// ---------------------------------------------------------------------------
// Subspaces in reduced row echelon form.
// ---------------------------------------------------------------------------

class Subspace {
public:
    // Reduces arbitrary spanning rows; zero rows are dropped.
    static Subspace from_rows(const Matrix& rows);
    static Subspace zero(int ambient, FieldSpec field);
    static Subspace full(int ambient, FieldSpec field);

    int dim() const { return rows_.rows(); }
    int ambient() const { return rows_.cols(); }
    FieldSpec field() const { return rows_.field(); }
    const Matrix& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains_vec(const Vec& v) const;
    bool contains(const Subspace& other) const;
    // Coefficients against the echelon rows, when v lies in the subspace.
    std::optional<Vec> coords_of(const Vec& v) const;
    // v minus its projection: pivot coordinates eliminated.
    Vec reduce_vec(const Vec& v) const;
    // Insert one vector; true when the dimension grows.
    bool insert(const Vec& v);

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.rows_ == b.rows_;
    }

private:
    explicit Subspace(Matrix rows) : rows_(std::move(rows)) {}
    Matrix rows_{0, 0, FieldSpec::rationals()};
    std::vector<int> pivots_;
};

// Smallest submodule containing the seed vectors.
Subspace spin(const OperatorModule& m, const std::vector<Vec>& seeds);
Subspace spin_vector(const OperatorModule& m, const Vec& v);

// Module structure on an invariant subspace; Error if w is not invariant.
// Labels restrict along the inclusion.
OperatorModule restrict_to(const OperatorModule& m, const Subspace& w);

// Quotient by an invariant subspace.  The quotient basis consists of the
// classes of the unit vectors at w's non-pivot columns; `lift` maps quotient
// coordinates back to representatives in the parent.
struct QuotientModule {
    OperatorModule module;
    Matrix lift; // module.dim x parent.dim
};
QuotientModule quotient_by(const OperatorModule& m, const Subspace& w);
// Coordinates of v's class in that quotient basis.
Vec project_to_quotient(const Subspace& w, const Vec& v);

// ---------------------------------------------------------------------------
// Simple submodules.  The search spins standard, exhaustively enumerated
// (small prime fields) or randomly sampled vectors and restricts into any
// proper submodule it finds; simplicity of the end result is certified either
// by exhausting all vectors (possible when p^dim is small) or through a
// singular algebra element whose kernel and transposed kernel both spin to
// the full module.  When neither certificate is reachable the search throws
// UnresolvedSimplicity rather than guessing.
// ---------------------------------------------------------------------------

Subspace minimal_submodule(const OperatorModule& m, std::uint64_t seed = 0);
bool is_simple_module(const OperatorModule& m, std::uint64_t seed = 0);

// Simple factors of a composition chain, bottom layer first.  The sum of
// their dimensions is m.dim, and the number of factors is the composition
// length.
std::vector<OperatorModule> composition_series(const OperatorModule& m, std::uint64_t seed = 0);

// Largest semisimple submodule.  Exhaustive over small prime fields; over the
// rationals via the radical of the trace form of the enveloping algebra.
Subspace socle(const OperatorModule& m, std::uint64_t seed = 0);

// Ascending chain 0 = W_0 < W_1 < ... < W_k = M with W_{i+1}/W_i the socle of
// M/W_i; returned in the coordinates of m, endpoints included.
std::vector<Subspace> socle_series(const OperatorModule& m, std::uint64_t seed = 0);

// Basis of { Z : A_j Z = Z B_j for all j }; Z maps row vectors of a to row
// vectors of b (dim_a x dim_b matrices).
std::vector<Matrix> intertwiner_space(const OperatorModule& a, const OperatorModule& b);

// Module isomorphism: an invertible intertwiner exists.  Decided exactly by
// enumerating a determinant grid (rationals) or all coefficient tuples /
// sampled tuples (prime fields); BudgetExhausted when the search space is too
// large to certify a negative.
bool is_isomorphic(const OperatorModule& a, const OperatorModule& b, std::uint64_t seed = 0);

} // namespace fox
