#include "fox/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <utility>
#include <set>

namespace fox {

using nlohmann::json;

namespace {

// Narrow JSON accessors that fail with a message naming the offending key.

const json& field_at(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

int int_at(const json& j, const char* key) {
    const json& v = field_at(j, key);
    if (!v.is_number_integer())
        throw ParseError(std::string("key \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::string string_at(const json& j, const char* key) {
    const json& v = field_at(j, key);
    if (!v.is_string())
        throw ParseError(std::string("key \"") + key + "\" must be a string");
    return v.get<std::string>();
}

bool bool_at(const json& j, const char* key) {
    const json& v = field_at(j, key);
    if (!v.is_boolean())
        throw ParseError(std::string("key \"") + key + "\" must be a boolean");
    return v.get<bool>();
}

FieldSpec field_spec_at(const json& j) {
    return FieldSpec::from_string(string_at(j, "field"));
}

std::vector<int> int_list(const json& v, const char* what) {
    if (!v.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const json& e : v) {
        if (!e.is_number_integer())
            throw ParseError(std::string(what) + " entries must be integers");
        out.push_back(e.get<int>());
    }
    return out;
}

} // namespace

json word_to_json(const ReducedWord& w) {
    json out = json::array();
    int i = 0;
    while (i < w.length()) {
        const Letter l = w.letter(i);
        int j = i;
        while (j < w.length() && w.letter(j) == l) ++j;
        out.push_back({l.index, (j - i) * l.sign});
        i = j;
    }
    return out;
}

ReducedWord word_from_json(const json& j, int rank) {
    if (!j.is_array()) throw ParseError("word must be an array of pairs");
    std::vector<Letter> letters;
    for (const json& pair : j) {
        if (!pair.is_array() || pair.size() != 2 ||
            !pair[0].is_number_integer() || !pair[1].is_number_integer())
            throw ParseError("each word entry must be [index, exponent]");
        const int index = pair[0].get<int>();
        const int e = pair[1].get<int>();
        if (e == 0) throw ParseError("word exponents must be nonzero");
        for (int k = 0; k < (e < 0 ? -e : e); ++k)
            letters.push_back(Letter{index, e < 0 ? -1 : +1});
    }
    return ReducedWord::reduce(rank, letters);
}

json poly_to_json(const FreePolynomial& p) {
    json terms = json::array();
    for (const auto& [w, c] : p.terms())
        terms.push_back({{"word", word_to_json(w)}, {"coeff", c.to_string()}});
    return {{"field", p.field().to_string()},
            {"rank", p.rank()},
            {"terms", std::move(terms)}};
}

FreePolynomial poly_from_json(const json& j) {
    const FieldSpec f = field_spec_at(j);
    const int rank = int_at(j, "rank");
    FreePolynomial p(rank, f);
    for (const json& t : field_at(j, "terms")) {
        p.add_term(word_from_json(field_at(t, "word"), rank),
                   FieldElem::parse(f, string_at(t, "coeff")));
    }
    return p;
}

json series_to_json(const TruncatedSeries& s) {
    json terms = json::array();
    for (const auto& [m, c] : s.terms())
        terms.push_back({{"mono", m.indices()}, {"coeff", c.to_string()}});
    return {{"field", s.field().to_string()},
            {"rank", s.rank()},
            {"cutoff", s.cutoff()},
            {"terms", std::move(terms)}};
}

TruncatedSeries series_from_json(const json& j) {
    const FieldSpec f = field_spec_at(j);
    const int rank = int_at(j, "rank");
    TruncatedSeries s(rank, f, int_at(j, "cutoff"));
    for (const json& t : field_at(j, "terms")) {
        s.add_term(XMonomial(rank, int_list(field_at(t, "mono"), "mono")),
                   FieldElem::parse(f, string_at(t, "coeff")));
    }
    return s;
}

json rational_to_json(const RationalRep& r) {
    json p = json::array();
    for (const FreePolynomial& e : r.P) p.push_back(poly_to_json(e));
    json q = json::array();
    for (const auto& row : r.Q) {
        json jr = json::array();
        for (const FreePolynomial& e : row) jr.push_back(poly_to_json(e));
        q.push_back(std::move(jr));
    }
    return {{"size", r.size},
            {"entry", r.entry},
            {"P", std::move(p)},
            {"Q", std::move(q)}};
}

RationalRep rational_from_json(const json& j) {
    RationalRep r;
    r.size = int_at(j, "size");
    r.entry = int_at(j, "entry");
    for (const json& e : field_at(j, "P")) r.P.push_back(poly_from_json(e));
    for (const json& row : field_at(j, "Q")) {
        std::vector<FreePolynomial> qr;
        for (const json& e : row) qr.push_back(poly_from_json(e));
        r.Q.push_back(std::move(qr));
    }
    r.validate();
    return r;
}

json leavitt_to_json(const LeavittElement& e) {
    json terms = json::array();
    for (const auto& [w, c] : e.terms())
        terms.push_back({{"star_word", w.indices()}, {"coeff", poly_to_json(c)}});
    return {{"field", e.field().to_string()},
            {"rank", e.rank()},
            {"terms", std::move(terms)}};
}

LeavittElement leavitt_from_json(const json& j) {
    const FieldSpec f = field_spec_at(j);
    const int rank = int_at(j, "rank");
    LeavittElement e(rank, f);
    for (const json& t : field_at(j, "terms")) {
        e.add_term(
            XMonomial(rank, int_list(field_at(t, "star_word"), "star_word")),
            poly_from_json(field_at(t, "coeff")));
    }
    return e;
}

namespace {

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j, int dim, FieldSpec f) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw ParseError("operator matrix must have one row per dimension");
    Matrix m(dim, dim, f);
    for (int r = 0; r < dim; ++r) {
        const json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw ParseError("operator matrix rows must have `dim` entries");
        for (int c = 0; c < dim; ++c)
            m.at(r, c) = FieldElem::parse(
                f, row[static_cast<std::size_t>(c)].get<std::string>());
    }
    return m;
}

} // namespace

json module_to_json(const OperatorModule& m) {
    json ops = json::array();
    for (const Matrix& op : m.ops) ops.push_back(matrix_to_json(op));
    json labels = json::array();
    for (const FreePolynomial& l : m.labels) labels.push_back(poly_to_json(l));
    return {{"field", m.field.to_string()},
            {"dim", m.dim},
            {"operators", std::move(ops)},
            {"labels", std::move(labels)}};
}

OperatorModule module_from_json(const json& j) {
    OperatorModule m;
    m.field = field_spec_at(j);
    m.dim = int_at(j, "dim");
    for (const json& op : field_at(j, "operators"))
        m.ops.push_back(matrix_from_json(op, m.dim, m.field));
    for (const json& l : field_at(j, "labels"))
        m.labels.push_back(poly_from_json(l));
    m.validate();
    return m;
}

json factorization_to_json(const Factorization& f, int rank, FieldSpec field) {
    json factors = json::array();
    for (const FreePolynomial& p : f.factors) factors.push_back(poly_to_json(p));
    return {{"field", field.to_string()},
            {"rank", rank},
            {"unit", f.unit.to_string()},
            {"unit_word", word_to_json(f.unit_word)},
            {"factors", std::move(factors)},
            {"length", f.factors.size()},
            {"verified", f.verified}};
}

Factorization factorization_from_json(const json& j) {
    const FieldSpec f = field_spec_at(j);
    const int rank = int_at(j, "rank");
    Factorization out;
    out.unit = FieldElem::parse(f, string_at(j, "unit"));
    out.unit_word = word_from_json(field_at(j, "unit_word"), rank);
    for (const json& p : field_at(j, "factors"))
        out.factors.push_back(poly_from_json(p));
    out.verified = bool_at(j, "verified");
    if (int_at(j, "length") != static_cast<int>(out.factors.size()))
        throw ParseError("factorization length disagrees with the factor list");
    return out;
}

// ---------------------------------------------------------------------------
// Corpus.
// ---------------------------------------------------------------------------

namespace {

const std::set<std::string>& supported_ops() {
    static const std::set<std::string> ops{
        "augmentation", "length", "order",  "maximal", "derive", "gcd",
        "divide",       "factor", "irreducible", "similar", "magnus"};
    return ops;
}

const std::set<std::string>& registered_oracles() {
    static const std::set<std::string> oracles{"direct-arithmetic",
                                               "division-check", "factor-search"};
    return oracles;
}

[[noreturn]] void corpus_fail(const std::string& where, const std::string& why) {
    throw CorpusFormatError(where + ": " + why);
}

CorpusEntry entry_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) corpus_fail(where, "entry must be a JSON object");
    CorpusEntry e;
    try {
        e.id = string_at(j, "id");
        e.op = string_at(j, "op");
        e.input = field_at(j, "input");
        e.expected = field_at(j, "expected");
        e.provenance = string_at(j, "provenance");
        e.args = j.contains("args") ? j.at("args") : json();
        e.note = j.contains("note") ? string_at(j, "note") : "";
        e.oracle = j.contains("oracle") ? string_at(j, "oracle") : "";
    } catch (const ParseError& err) {
        corpus_fail(where, err.what());
    }
    if (!supported_ops().count(e.op))
        corpus_fail(where + " (" + e.id + ")", "unsupported op \"" + e.op + "\"");
    if (e.provenance != "reference" && e.provenance != "trivial" &&
        e.provenance != "derived")
        corpus_fail(where + " (" + e.id + ")",
                    "provenance must be reference, trivial, or derived");
    if (e.provenance == "reference" && e.note.empty())
        corpus_fail(where + " (" + e.id + ")",
                    "reference entries must describe their identity in \"note\"");
    if (e.provenance == "derived" && !registered_oracles().count(e.oracle))
        corpus_fail(where + " (" + e.id + ")",
                    "derived entries must name a registered oracle");
    return e;
}

// Computes the canonical result JSON for one entry.
json run_entry(const CorpusEntry& e) {
    const FreePolynomial p = poly_from_json(e.input);
    if (e.op == "augmentation") return augmentation(p).to_string();
    if (e.op == "length") return length_of(p);
    if (e.op == "order") return order_of(p);
    if (e.op == "maximal") {
        json words = json::array();
        for (const ReducedWord& w : strictly_maximal_words(p))
            words.push_back(word_to_json(w));
        return {{"words", std::move(words)}, {"special", is_special(p)}};
    }
    if (e.op == "derive") {
        const bool barred =
            e.args.contains("barred") && e.args.at("barred").get<bool>();
        return poly_to_json(partial_derivative(p, int_at(e.args, "index"), barred));
    }
    if (e.op == "gcd")
        return poly_to_json(gcd(p, poly_from_json(field_at(e.args, "other"))));
    if (e.op == "divide") {
        const DivisionResult d =
            divide_right(p, poly_from_json(field_at(e.args, "by")));
        json out = {{"divisible", d.divisible}};
        if (d.divisible) out["quotient"] = poly_to_json(d.quotient);
        return out;
    }
    if (e.op == "factor")
        return factorization_to_json(factorize(p), p.rank(), p.field());
    if (e.op == "irreducible") return is_irreducible(p);
    if (e.op == "similar")
        return similar(p, poly_from_json(field_at(e.args, "other")));
    if (e.op == "magnus")
        return series_to_json(magnus_embed(p, int_at(e.args, "cutoff")));
    corpus_fail(e.id, "unsupported op \"" + e.op + "\"");
}

// "factor" expectations may list only the fields they pin down; every other
// op compares the full canonical value.
bool matches(const CorpusEntry& e, const json& got) {
    if (e.op == "factor") {
        if (!e.expected.is_object()) return false;
        for (const auto& [k, v] : e.expected.items()) {
            if (!got.contains(k) || got.at(k) != v) return false;
        }
        return true;
    }
    return got == e.expected;
}

} // namespace

std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CorpusFormatError("cannot open corpus file " + path);
    std::vector<CorpusEntry> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        const std::string where = path + ":" + std::to_string(lineno);
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& err) {
            corpus_fail(where, err.what());
        }
        entries.push_back(entry_from_json(j, where));
    }
    return entries;
}

CorpusReport corpus_verify(const std::string& path) {
    CorpusReport report;
    for (const CorpusEntry& e : load_corpus(path)) {
        ++report.total;
        json got;
        try {
            got = run_entry(e);
        } catch (const Error& err) {
            report.failures.push_back(e.id + ": error: " + err.what());
            continue;
        }
        if (matches(e, got)) {
            ++report.passed;
        } else {
            report.failures.push_back(e.id + ": expected " + e.expected.dump() +
                                      " got " + got.dump());
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Brute-force factor search.  Deliberately independent of the lattice and
// division machinery: for each candidate right factor beta it solves the
// linear system alpha * beta = gamma by dense elimination mod p over the
// finite word basis {u*v}, and re-verifies every hit by exact ring
// multiplication.  The rows {u*beta} are linearly independent (the algebra
// is a domain), so the cofactor is unique whenever it exists.
// ---------------------------------------------------------------------------

namespace {

std::int64_t residue_of(const FieldElem& c) { return std::stoll(c.to_string()); }

std::int64_t invert_mod(std::int64_t a, std::int64_t p) {
    // Extended Euclid; a is nonzero mod p, p prime.
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return ((t % p) + p) % p;
}

} // namespace

std::vector<std::pair<FreePolynomial, FreePolynomial>>
run_oracle_factor_search(const FreePolynomial& gamma, int max_len) {
    const FieldSpec f = gamma.field();
    if (f.is_rational())
        throw FieldMismatch("the factor-search oracle requires a prime field");
    if (gamma.rank() != 2)
        throw RankMismatch("the factor-search oracle requires rank 2");
    if (max_len < 1 || max_len > 2)
        throw IndexOutOfRange("the factor-search oracle supports max_len 1 or 2");
    if (gamma.is_zero())
        throw ZeroPolynomial("the factor-search oracle needs a nonzero input");
    if (is_unit(gamma))
        throw IsUnit("the factor-search oracle needs a non-unit input");

    const std::vector<ReducedWord> words = enumerate_words(2, max_len);
    const int n = static_cast<int>(words.size());
    const std::size_t free_coords = words.size() - 1;
    const std::int64_t p = f.characteristic();
    if (static_cast<double>(free_coords) * std::log10(static_cast<double>(p)) >
        7.0)
        throw SearchSpaceTooLarge(
            "candidate count exceeds 10^7 for this field and length bound");

    // Columns: the distinct reduced products u*v; any factorization's support
    // lies inside them, so a support word of gamma outside rules everything
    // out.
    std::map<ReducedWord, int, ShortlexLess> column_of;
    std::vector<std::vector<int>> prod_col(n, std::vector<int>(n));
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            const ReducedWord w = concat_reduce(words[u], words[v]);
            auto [it, fresh] =
                column_of.emplace(w, static_cast<int>(column_of.size()));
            (void)fresh;
            prod_col[u][v] = it->second;
        }
    }
    const int cols = static_cast<int>(column_of.size());
    std::vector<std::int64_t> target(cols, 0);
    for (const auto& [w, c] : gamma.terms()) {
        const auto it = column_of.find(w);
        if (it == column_of.end()) return {};
        target[it->second] = residue_of(c) % p;
    }

    std::vector<std::pair<FreePolynomial, FreePolynomial>> pairs;
    const int width = cols + n; // row = product coordinates | cofactor tag
    std::vector<std::vector<std::int64_t>> echelon;
    std::vector<int> pivots;

    const auto try_candidate = [&](const std::vector<std::int64_t>& beta_digits) {
        echelon.clear();
        pivots.clear();
        for (int u = 0; u < n; ++u) {
            std::vector<std::int64_t> row(width, 0);
            for (int v = 0; v < n; ++v)
                if (beta_digits[v] != 0)
                    row[prod_col[u][v]] =
                        (row[prod_col[u][v]] + beta_digits[v]) % p;
            row[cols + u] = 1;
            for (std::size_t e = 0; e < echelon.size(); ++e) {
                const std::int64_t fct = row[pivots[e]];
                if (fct == 0) continue;
                const auto& er = echelon[e];
                for (int c = 0; c < width; ++c)
                    row[c] = ((row[c] - fct * er[c]) % p + p) % p;
            }
            int pc = -1;
            for (int c = 0; c < cols; ++c)
                if (row[c] != 0) { pc = c; break; }
            if (pc < 0)
                throw Error("internal: translates of a nonzero element "
                            "became dependent");
            const std::int64_t inv = invert_mod(row[pc], p);
            for (int c = 0; c < width; ++c) row[c] = (row[c] * inv) % p;
            pivots.push_back(pc);
            echelon.push_back(std::move(row));
        }

        std::vector<std::int64_t> rem = target;
        std::vector<std::int64_t> alpha_digits(n, 0);
        for (std::size_t e = 0; e < echelon.size(); ++e) {
            const std::int64_t fct = rem[pivots[e]];
            if (fct == 0) continue;
            const auto& er = echelon[e];
            for (int c = 0; c < cols; ++c)
                rem[c] = ((rem[c] - fct * er[c]) % p + p) % p;
            for (int u = 0; u < n; ++u)
                alpha_digits[u] = (alpha_digits[u] + fct * er[cols + u]) % p;
        }
        for (int c = 0; c < cols; ++c)
            if (rem[c] != 0) return; // gamma is not in the row space

        std::int64_t alpha_aug = 0;
        int alpha_support = 0;
        for (int u = 0; u < n; ++u) {
            alpha_aug += alpha_digits[u];
            alpha_support += alpha_digits[u] != 0;
        }
        // The cofactor must itself be comonic and not a unit.
        if (alpha_support < 2 || alpha_aug % p != 1) return;

        FreePolynomial alpha(2, f), beta(2, f);
        for (int u = 0; u < n; ++u) {
            if (alpha_digits[u] != 0)
                alpha.add_term(words[u],
                               FieldElem::from_integer(f, alpha_digits[u]));
            if (beta_digits[u] != 0)
                beta.add_term(words[u],
                              FieldElem::from_integer(f, beta_digits[u]));
        }
        if (!(alpha * beta == gamma))
            throw Error(
                "internal: dense solve disagrees with exact multiplication");
        pairs.emplace_back(std::move(alpha), std::move(beta));
    };

    std::vector<std::int64_t> beta_digits(words.size(), 0);
    std::vector<std::int64_t> digits(free_coords, 0);
    for (;;) {
        std::int64_t sum = 0;
        int support = 0;
        for (std::size_t k = 0; k < free_coords; ++k) {
            beta_digits[k + 1] = digits[k];
            sum += digits[k];
            support += digits[k] != 0;
        }
        beta_digits[0] = ((1 - sum) % p + p) % p;
        support += beta_digits[0] != 0;
        if (support >= 2) try_candidate(beta_digits); // single words are units

        std::size_t k = 0;
        while (k < free_coords && ++digits[k] == p) {
            digits[k] = 0;
            ++k;
        }
        if (k == free_coords) break;
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) {
                  const std::string bk = a.second.key_string();
                  const std::string ck = b.second.key_string();
                  if (bk != ck) return bk < ck;
                  return a.first.key_string() < b.first.key_string();
              });
    return pairs;
}

} // namespace fox
