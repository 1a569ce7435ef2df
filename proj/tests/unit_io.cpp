#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "fox/io.hpp"

using namespace fox;
using nlohmann::json;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime_field(5);

FreePolynomial gen(int rank, FieldSpec f, int i, int s = +1) {
    return FreePolynomial::generator(rank, f, i, s);
}

FreePolynomial cst(int rank, FieldSpec f, std::int64_t n) {
    return FreePolynomial::from_int(rank, f, n);
}

FreePolynomial two_minus(int i, FieldSpec f) {
    return cst(2, f, 2) - gen(2, f, i);
}

// Writes one JSON object per line and returns the path.
std::string write_corpus(const std::string& name,
                         const std::vector<json>& entries) {
    const std::string path = name;
    std::ofstream out(path);
    for (const json& e : entries) out << e.dump() << "\n";
    return path;
}

} // namespace

TEST_CASE("words round-trip through JSON with collected exponents") {
    const ReducedWord w = ReducedWord::reduce(
        2, {Letter{1, 1}, Letter{1, 1}, Letter{2, -1}, Letter{1, 1}});
    const json j = word_to_json(w);
    CHECK(j.dump() == "[[1,2],[2,-1],[1,1]]");
    CHECK(word_from_json(j, 2) == w);
    CHECK(word_to_json(word_from_json(j, 2)).dump() == j.dump());
    CHECK(word_to_json(ReducedWord(2)).dump() == "[]");
    CHECK_THROWS_AS(word_from_json(json::parse("[[1,0]]"), 2), ParseError);
    CHECK_THROWS_AS(word_from_json(json::parse("[[1]]"), 2), ParseError);
}

TEST_CASE("polynomials round-trip bit-exactly over both fields") {
    const FreePolynomial a =
        cst(2, Q, 2) - gen(2, Q, 1) +
        FreePolynomial::constant(
            2, Q, FieldElem::from_big(Q, BigInt(-7), BigInt(3))) *
            gen(2, Q, 1) * gen(2, Q, 2, -1);
    const FreePolynomial b = two_minus(1, F5) * two_minus(2, F5);
    for (const FreePolynomial& p : {a, b}) {
        const json j = poly_to_json(p);
        CHECK(poly_from_json(j) == p);
        CHECK(poly_to_json(poly_from_json(j)).dump() == j.dump());
    }
    CHECK(poly_to_json(cst(2, Q, 0))["terms"].empty());
}

TEST_CASE("series and rational representations round-trip bit-exactly") {
    const FreePolynomial p = gen(2, Q, 1) - cst(2, Q, 1);
    const TruncatedSeries s = magnus_embed(gen(2, Q, 1, -1) + p * p, 4);
    const json js = series_to_json(s);
    CHECK(series_to_json(series_from_json(js)).dump() == js.dump());
    CHECK(series_from_json(js).terms() == s.terms());

    const RationalRep rep = rat_quasi_inverse(rat_atom(p));
    const json jr = rational_to_json(rep);
    const RationalRep back = rational_from_json(jr);
    CHECK(rational_to_json(back).dump() == jr.dump());
    CHECK(rat_eval(back, 5).terms() == rat_eval(rep, 5).terms());
}

TEST_CASE("Leavitt elements round-trip bit-exactly") {
    const LeavittElement e =
        LeavittElement::from_poly(two_minus(1, Q)).canonical_form(2);
    const json j = leavitt_to_json(e);
    CHECK(leavitt_from_json(j) == e);
    CHECK(leavitt_to_json(leavitt_from_json(j)).dump() == j.dump());
}

TEST_CASE("modules and factorizations round-trip bit-exactly") {
    const Lattice l = lattice_of(two_minus(1, F5) * two_minus(2, F5));
    const json jm = module_to_json(l.module);
    const OperatorModule back = module_from_json(jm);
    CHECK(module_to_json(back).dump() == jm.dump());
    CHECK(back.dim == l.module.dim);

    const FreePolynomial p = gen(2, Q, 1) - cst(2, Q, 4) * gen(2, Q, 1, -1);
    const Factorization f = factorize(p);
    const json jf = factorization_to_json(f, 2, Q);
    const Factorization fb = factorization_from_json(jf);
    CHECK(factorization_to_json(fb, 2, Q).dump() == jf.dump());
    CHECK(fb.factors == f.factors);
    CHECK(fb.verified == f.verified);
}

TEST_CASE("a well-formed corpus verifies and a corrupted one reports ids") {
    const json aug_entry = {
        {"id", "aug-two-minus"},
        {"op", "augmentation"},
        {"input", poly_to_json(two_minus(1, Q))},
        {"expected", "1"},
        {"provenance", "trivial"}};
    const json derive_entry = {
        {"id", "derive-inverse"},
        {"op", "derive"},
        {"args", {{"index", 1}, {"barred", false}}},
        {"input", poly_to_json(gen(2, Q, 1, -1))},
        {"expected", poly_to_json(cst(2, Q, 0) - gen(2, Q, 1, -1))},
        {"provenance", "reference"},
        {"note", "derivative of an inverted generator"}};
    const json gcd_entry = {
        {"id", "gcd-shared-factor"},
        {"op", "gcd"},
        {"args", {{"other", poly_to_json(two_minus(1, F5))}}},
        {"input", poly_to_json(two_minus(2, F5) * two_minus(1, F5))},
        {"expected", poly_to_json(two_minus(1, F5))},
        {"provenance", "derived"},
        {"oracle", "division-check"}};

    const std::string good = write_corpus(
        "io_corpus_good.jsonl", {aug_entry, derive_entry, gcd_entry});
    const CorpusReport report = corpus_verify(good);
    CHECK(report.total == 3);
    CHECK(report.passed == 3);
    CHECK(report.ok());

    json bad_entry = aug_entry;
    bad_entry["expected"] = "2";
    const std::string bad =
        write_corpus("io_corpus_bad.jsonl", {bad_entry, derive_entry});
    const CorpusReport bad_report = corpus_verify(bad);
    CHECK(bad_report.total == 2);
    CHECK(bad_report.passed == 1);
    REQUIRE(bad_report.failures.size() == 1);
    CHECK(bad_report.failures[0].find("aug-two-minus") != std::string::npos);

    std::remove(good.c_str());
    std::remove(bad.c_str());
}

TEST_CASE("the shipped reference corpus verifies entirely") {
    const CorpusReport report = corpus_verify(FOX_REFERENCE_CORPUS);
    CHECK(report.total == 13);
    CHECK(report.passed == report.total);
    CHECK(report.ok());
    for (const std::string& f : report.failures) FAIL_CHECK(f);
}

TEST_CASE("an empty corpus passes vacuously") {
    const std::string path = write_corpus("io_corpus_empty.jsonl", {});
    const CorpusReport report = corpus_verify(path);
    CHECK(report.total == 0);
    CHECK(report.ok());
    std::remove(path.c_str());
}

TEST_CASE("malformed corpus lines raise CorpusFormatError") {
    const json untagged = {{"id", "x"},
                           {"op", "augmentation"},
                           {"input", poly_to_json(two_minus(1, Q))},
                           {"expected", "1"}};
    CHECK_THROWS_AS(
        load_corpus(write_corpus("io_corpus_untagged.jsonl", {untagged})),
        CorpusFormatError);

    json bad_prov = untagged;
    bad_prov["provenance"] = "guessed";
    CHECK_THROWS_AS(
        load_corpus(write_corpus("io_corpus_prov.jsonl", {bad_prov})),
        CorpusFormatError);

    json derived_no_oracle = untagged;
    derived_no_oracle["provenance"] = "derived";
    CHECK_THROWS_AS(load_corpus(write_corpus("io_corpus_orac.jsonl",
                                             {derived_no_oracle})),
                    CorpusFormatError);

    {
        std::ofstream out("io_corpus_syntax.jsonl");
        out << "{not json\n";
    }
    CHECK_THROWS_AS(load_corpus("io_corpus_syntax.jsonl"), CorpusFormatError);
    CHECK_THROWS_AS(load_corpus("io_corpus_missing_file.jsonl"),
                    CorpusFormatError);
    for (const char* p : {"io_corpus_untagged.jsonl", "io_corpus_prov.jsonl",
                          "io_corpus_orac.jsonl", "io_corpus_syntax.jsonl"})
        std::remove(p);
}

TEST_CASE("the factor-search oracle finds exactly the expected pairs") {
    CHECK(run_oracle_factor_search(two_minus(1, F5), 1).empty());

    const FreePolynomial prod = two_minus(1, F5) * two_minus(2, F5);
    const auto pairs = run_oracle_factor_search(prod, 1);
    REQUIRE(!pairs.empty());
    bool found = false;
    for (const auto& [alpha, beta] : pairs) {
        CHECK(alpha * beta == prod);
        if (alpha == two_minus(1, F5) && beta == two_minus(2, F5)) found = true;
    }
    CHECK(found);
}

TEST_CASE("the factor-search oracle rejects out-of-contract inputs") {
    CHECK_THROWS_AS(run_oracle_factor_search(two_minus(1, Q), 1),
                    FieldMismatch);
    CHECK_THROWS_AS(
        run_oracle_factor_search(FreePolynomial::from_int(3, F5, 2) -
                                     FreePolynomial::generator(3, F5, 1),
                                 1),
        RankMismatch);
    CHECK_THROWS_AS(run_oracle_factor_search(FreePolynomial(2, F5), 1),
                    ZeroPolynomial);
    CHECK_THROWS_AS(run_oracle_factor_search(cst(2, F5, 3), 1), IsUnit);
    CHECK_THROWS_AS(run_oracle_factor_search(two_minus(1, F5), 3),
                    IndexOutOfRange);
    CHECK_THROWS_AS(run_oracle_factor_search(two_minus(1, F5), 2),
                    SearchSpaceTooLarge);
}

TEST_CASE("oracle agrees with the certified test over GF(2) at length 2") {
    const FieldSpec F2 = FieldSpec::prime_field(2);
    // 1 + t1 + t1*t2 is comonic over GF(2); check both verdicts coincide.
    const FreePolynomial probe =
        cst(2, F2, 1) + gen(2, F2, 1) + gen(2, F2, 1) * gen(2, F2, 2);
    const bool oracle_reducible = !run_oracle_factor_search(probe, 2).empty();
    CHECK(oracle_reducible == !is_irreducible(probe));

    const FreePolynomial split =
        (cst(2, F2, 1) + gen(2, F2, 1) + gen(2, F2, 2)) *
        (cst(2, F2, 1) + gen(2, F2, 1) + gen(2, F2, 2, -1));
    const auto pairs = run_oracle_factor_search(split, 2);
    REQUIRE(!pairs.empty());
    CHECK(!is_irreducible(split));
}
