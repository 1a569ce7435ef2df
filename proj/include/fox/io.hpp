#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fox/factor.hpp"
#include "fox/leavitt.hpp"
#include "fox/series.hpp"

namespace fox {

// ---------------------------------------------------------------------------
// JSON serialization of the core value types.  Every saver/loader pair
// round-trips bit-exactly; loaders throw ParseError on malformed input.
// Schemas:
//   word          [[index, exponent], ...] with nonzero exponents
//   polynomial    {"field", "rank", "terms": [{"word", "coeff"}]}
//   series        {"field", "rank", "cutoff", "terms": [{"mono", "coeff"}]}
//   rational rep  {"size", "entry", "P", "Q"} with polynomial entries
//   quasi-normal  {"field", "rank", "terms": [{"star_word", "coeff"}]}
//   module        {"field", "dim", "operators", "labels"}
//   factorization {"field", "rank", "unit", "unit_word", "factors",
//                  "length", "verified"}
// ---------------------------------------------------------------------------

nlohmann::json word_to_json(const ReducedWord& w);
ReducedWord word_from_json(const nlohmann::json& j, int rank);

nlohmann::json poly_to_json(const FreePolynomial& p);
FreePolynomial poly_from_json(const nlohmann::json& j);

nlohmann::json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

nlohmann::json rational_to_json(const RationalRep& r);
RationalRep rational_from_json(const nlohmann::json& j);

nlohmann::json leavitt_to_json(const LeavittElement& e);
LeavittElement leavitt_from_json(const nlohmann::json& j);

nlohmann::json module_to_json(const OperatorModule& m);
OperatorModule module_from_json(const nlohmann::json& j);

nlohmann::json factorization_to_json(const Factorization& f, int rank,
                                     FieldSpec field);
Factorization factorization_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// Golden-example corpus: a JSON-lines file, one entry per line.  Each entry
// names an operation, its input, and the expected output, together with a
// provenance tag: "reference" for worked identities taken from the source
// material (the note describes the identity), "trivial" for definitional
// facts, "derived" for outputs produced by one of the registered oracles
// named in its "oracle" field ("direct-arithmetic", "division-check", or
// "factor-search").  The loader rejects entries with a missing or unknown
// tag, reference entries without a note, and derived entries without a
// registered oracle.
// ---------------------------------------------------------------------------

struct CorpusEntry {
    std::string id;
    std::string op;
    nlohmann::json input;    // polynomial JSON
    nlohmann::json args;     // operation-specific extras (may be null)
    nlohmann::json expected; // operation-specific result
    std::string provenance;  // "reference" | "trivial" | "derived"
    std::string note;        // description of the identity or oracle
    std::string oracle;      // registered oracle name for derived entries
};

struct CorpusReport {
    int total = 0;
    int passed = 0;
    std::vector<std::string> failures; // "id: expected ... got ..."
    bool ok() const { return failures.empty(); }
};

// CorpusFormatError on unreadable files, bad JSON, or invalid entries.
std::vector<CorpusEntry> load_corpus(const std::string& path);

// Re-executes every entry and diffs the result against the expectation.
// Supported ops: augmentation, length, order, maximal, derive, gcd, divide,
// factor, irreducible, similar, magnus.
CorpusReport corpus_verify(const std::string& path);

// ---------------------------------------------------------------------------
// Brute-force factorization oracle: the exhaustive list of pairs (alpha,
// beta) of non-unit comonic polynomials of length at most max_len with
// alpha * beta = gamma, found by enumerating every comonic right factor
// candidate over the words of length at most max_len and dividing.  Requires
// a prime field, rank 2, and 1 <= max_len <= 2; SearchSpaceTooLarge when the
// candidate count p^(#words - 1) exceeds 10^7.  Pairs are sorted by the
// right factor's canonical key, then the left's.
// ---------------------------------------------------------------------------

std::vector<std::pair<FreePolynomial, FreePolynomial>>
run_oracle_factor_search(const FreePolynomial& gamma, int max_len);

} // namespace fox
