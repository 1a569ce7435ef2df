#pragma once

#include <cstdint>
#include <vector>

#include "fox/fox_deriv.hpp"
#include "fox/repmod.hpp"

namespace fox {

// ---------------------------------------------------------------------------
// Right division, greatest common right divisors, and factorization into
// irreducibles for group-algebra elements.  All procedures are exact; any
// search that runs against its bound reports that outcome explicitly instead
// of guessing.
// ---------------------------------------------------------------------------

// Outcome of a bounded right-division search.  `divisible` means an exact
// cofactor was found and re-verified by multiplication; otherwise no cofactor
// with support length <= searched_up_to exists (which is a verdict about the
// bound, not a proof of indivisibility in general).
struct DivisionResult {
    bool divisible = false;
    FreePolynomial quotient;  // rho with rho * gamma == lambda when divisible
    int searched_up_to = 0;   // largest cofactor support length examined
};

// Searches for rho with rho * gamma == lambda, deepening the allowed support
// length of rho up to max_len (default: length(lambda) + length(gamma) + 4).
// Throws ZeroDivisor when gamma == 0.  lambda == 0 divides trivially.
DivisionResult divide_right(const FreePolynomial& lambda,
                            const FreePolynomial& gamma,
                            int max_len = -1);

// The canonical finite-dimensional module attached to a comonic non-unit
// polynomial: the span of its iterated derivatives carries the twisted star
// action, and the quotient by the line through gamma is the module whose
// submodule structure mirrors the left ideals above gamma.  Basis vectors
// keep polynomial labels (coset representatives), and one_class holds the
// coordinates of the class of the constant 1, which generates the module.
struct Lattice {
    OperatorModule module;
    FreePolynomial gamma;
    Vec one_class;
};

// Throws NotComonic unless augmentation(gamma) == 1, IsUnit for units.
// May throw UnresolvedMembership if a vector whose label lies in the left
// ideal of gamma is detected but cannot be quotiented away invariantly.
Lattice lattice_of(const FreePolynomial& gamma);

// Greatest common right divisor: the unique comonic generator of the left
// ideal generated by a and b (computed over the Leavitt-localized algebra and
// intersected back).  Both inputs must be nonzero (ZeroPolynomial).  The
// result right-divides both inputs, which is re-verified before returning.
// Throws BudgetExhausted when the reduction search exceeds `budget` states
// and UnresolvedMembership when a bounded membership test cannot settle a
// step it needs.
FreePolynomial gcd(const FreePolynomial& a, const FreePolynomial& b,
                   std::uint64_t budget = 10000);

// Whether the comonic normalization of gamma is irreducible, decided by
// simplicity of its lattice module.  Requires augmentation(gamma) != 0
// (ZeroAugmentation) and a non-unit normalization (IsUnit).
bool is_irreducible(const FreePolynomial& gamma, std::uint64_t seed = 0);

// Complete factorization gamma = unit * unit_word * factors[0] * ... *
// factors[m-1] with every factor comonic irreducible.  unit_word is the
// identity except when gamma itself is a unit c*w, in which case the factor
// list is empty and unit_word = w.  `verified` records that the product was
// recomputed and compared against the input.
struct Factorization {
    FieldElem unit;
    ReducedWord unit_word;
    std::vector<FreePolynomial> factors;
    bool verified = false;
};

Factorization factorize(const FreePolynomial& gamma, std::uint64_t seed = 0,
                        std::uint64_t budget = 10000);

// Whether the lattice modules of the comonic normalizations of a and b are
// isomorphic; for irreducibles this is the similarity relation governing
// uniqueness of factorizations.  Preconditions as for is_irreducible.
bool similar(const FreePolynomial& a, const FreePolynomial& b,
             std::uint64_t seed = 0);

// Dimension of the endomorphism algebra of the lattice module of the comonic
// normalization of gamma.  Preconditions as for is_irreducible.
int endo_dim(const FreePolynomial& gamma);

} // namespace fox
