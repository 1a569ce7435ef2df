#pragma once

#include <optional>
#include <vector>

#include "fox/linalg.hpp"

namespace fox {

// ---------------------------------------------------------------------------
// Partial derivatives on the group algebra of a free group.  The unbarred
// derivative with index i sends t_i to 1 and t_i^{-1} to -t_i^{-1}; the
// barred derivative sends t_i^{-1} to 1 and t_i to -t_i.  Both satisfy the
// product rule  d(ab) = aug(a) d(b) + d(a) b  and vanish on constants.
// ---------------------------------------------------------------------------

struct DerivOp {
    int index = 1;      // 1..rank
    bool barred = false;

    friend bool operator==(const DerivOp&, const DerivOp&) = default;
};

FreePolynomial partial_derivative(const FreePolynomial& g, int index, bool barred = false);

// Composite derivative: ops are applied first-to-last.
FreePolynomial higher_derivative(const FreePolynomial& g, const std::vector<DerivOp>& ops);

// Composite unbarred derivative indexed by a monomial in the letters
// x_1..x_n; the monomial's letters are applied first-to-last.
FreePolynomial higher_derivative(const FreePolynomial& g, const XMonomial& w);

// ---------------------------------------------------------------------------
// Star action attached to a comonic base polynomial gamma.  For j in 1..n the
// move with label j sends lambda to  -aug(lambda) d_j(gamma) + d_j(lambda),
// and label n+j does the same with the barred derivative.  The base itself is
// annihilated by every move, and the action descends to the quotient of the
// algebra by the left ideal generated by gamma.
// ---------------------------------------------------------------------------

class StarContext {
public:
    explicit StarContext(FreePolynomial gamma);

    const FreePolynomial& base() const { return gamma_; }
    int rank() const { return gamma_.rank(); }
    FieldSpec field() const { return gamma_.field(); }

    // j in 1..2*rank.
    FreePolynomial star(int j, const FreePolynomial& lambda) const;

private:
    FreePolynomial gamma_;
    std::vector<FreePolynomial> dgamma_; // 2n cached derivatives of the base
};

// ---------------------------------------------------------------------------
// Derivative span: the smallest subspace containing g and closed under all
// 2n partial derivatives, as an echelon basis together with the matrices of
// the derivative operators in that basis (row-vector convention: the k-th row
// of ops[j] holds the coordinates of the j-th derivative of basis vector k;
// j in 0..n-1 are the unbarred derivatives, j in n..2n-1 the barred ones).
// ---------------------------------------------------------------------------

struct DerivativeSpan {
    PolyEchelon basis;
    std::vector<Matrix> ops;
};

DerivativeSpan derivative_span(const FreePolynomial& g);

// ---------------------------------------------------------------------------
// Comonic generators of the left ideal attached to g:  repeatedly apply
// unbarred derivatives to augmentation-zero elements and collect, normalized
// to augmentation 1, every element of nonzero augmentation that appears.  If
// a unit turns up the whole algebra is generated and {1} is returned.
// Subspace memoization keeps the walk finite.
// ---------------------------------------------------------------------------

std::vector<FreePolynomial> comonic_generators(const FreePolynomial& g);

// ---------------------------------------------------------------------------
// Constant witness: a sequence of derivative moves taking g to a nonzero
// constant polynomial, found by breadth-first search up to max_depth (the
// empty sequence witnesses a g that is itself a nonzero constant).  States
// equal up to a scalar are merged.
// ---------------------------------------------------------------------------

std::optional<std::vector<DerivOp>> constant_witness(const FreePolynomial& g, int max_depth);

} // namespace fox
