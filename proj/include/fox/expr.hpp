#pragma once

#include <string>

#include "fox/leavitt.hpp"
#include "fox/series.hpp"

namespace fox {

// Parses the textual polynomial syntax
//
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := primary ('*' primary)*
//   primary := coeff | generator ['^' exponent] | '(' expr ')'
//   coeff   := integer ['/' integer]
//
// with generators written t1, t2, ..., signed integer exponents, and
// precedence ^ > * > +/-.  A zero exponent collapses to the identity word.
// ParseError carries the 1-based character position of the offending token;
// a generator index beyond the rank raises RankExceeded; a fraction whose
// denominator is zero or divisible by the field characteristic raises
// NonInvertibleDenominator.
FreePolynomial parse_expr(const std::string& text, int rank, FieldSpec field);

// Renders a polynomial in the same syntax: terms in shortlex order, runs of
// one letter collapsed to powers ("t1^2*t2^-1"), rational coefficients
// signed, prime-field coefficients as canonical residues 0..p-1.  The zero
// polynomial prints as "0".  parse_expr inverts format_poly exactly.
std::string format_poly(const FreePolynomial& p);

// One reduced word in the same syntax; the identity word prints as "1".
std::string format_word(const ReducedWord& w);

// One monomial in the letters x1..xn with runs collapsed ("x1^2*x2"); the
// empty monomial prints as "1".
std::string format_xmonomial(const XMonomial& m);

// Truncated series, terms in shortlex order; "0" when zero.
std::string format_series(const TruncatedSeries& s);

// Quasi-normal form as " + "-joined terms "(coefficient)*[x-word]^*"; a term
// with the empty star word prints as the parenthesized coefficient alone.
std::string format_leavitt(const LeavittElement& e);

} // namespace fox
