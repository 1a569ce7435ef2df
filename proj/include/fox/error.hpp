#pragma once

#include <stdexcept>
#include <string>

namespace fox {

// Base class for all library errors.  Each condition gets its own type so
// callers (and the CLI's exit-code mapping) can distinguish user-input
// problems from exhausted search budgets.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- input / validation errors -------------------------------------------
struct ParseError : Error { using Error::Error; };
struct RankExceeded : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct RankMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct ZeroDivisor : Error { using Error::Error; };
struct NonInvertibleDenominator : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };
struct NonzeroConstantTerm : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct DepthTooSmall : Error { using Error::Error; };
struct NotComonic : Error { using Error::Error; };
struct IsUnit : Error { using Error::Error; };
struct ZeroAugmentation : Error { using Error::Error; };
struct ZeroModule : Error { using Error::Error; };
struct CorpusFormatError : Error { using Error::Error; };
struct SearchSpaceTooLarge : Error { using Error::Error; };

// --- honest-failure errors: a search budget ran out before the question
// --- could be settled; never reported as a mathematical answer -----------
struct BudgetExhausted : Error { using Error::Error; };
struct UnresolvedSimplicity : Error { using Error::Error; };
struct UnresolvedMembership : Error { using Error::Error; };

} // namespace fox
