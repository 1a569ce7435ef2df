#include "fox/expr.hpp"

#include <cctype>
#include <cstdint>
#include <vector>

namespace fox {

namespace {

constexpr std::int64_t kMaxExponent = 10000;

struct Parser {
    const std::string& text;
    int rank;
    FieldSpec field;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw ParseError(msg + " at position " + std::to_string(at + 1));
    }

    void skip_ws() {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool at(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool consume(char c) {
        if (!at(c)) return false;
        ++pos;
        return true;
    }

    bool at_digit() {
        skip_ws();
        return pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]));
    }

    std::string read_digits(const char* what) {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) fail(std::string("expected ") + what, start);
        return text.substr(start, pos - start);
    }

    FreePolynomial parse_coeff() {
        const BigInt num{read_digits("an integer")};
        BigInt den = 1;
        if (consume('/')) den = BigInt{read_digits("a denominator")};
        return FreePolynomial::constant(rank, field,
                                        FieldElem::from_big(field, num, den));
    }

    std::int64_t parse_exponent() {
        skip_ws();
        const std::size_t start = pos;
        const bool neg = consume('-');
        std::int64_t e = 0;
        for (char c : read_digits("an exponent")) {
            e = e * 10 + (c - '0');
            if (e > kMaxExponent)
                fail("exponent beyond " + std::to_string(kMaxExponent), start);
        }
        return neg ? -e : e;
    }

    FreePolynomial parse_generator() {
        const std::size_t start = pos;
        ++pos; // the 't'
        if (!at_digit()) fail("expected a generator index after 't'", pos);
        std::int64_t index = 0;
        for (char c : read_digits("a generator index")) {
            index = index * 10 + (c - '0');
            if (index > 1000000) fail("generator index out of range", start);
        }
        if (index < 1) fail("generator indices start at 1", start);
        if (index > rank)
            throw RankExceeded("generator t" + std::to_string(index) +
                               " exceeds rank " + std::to_string(rank));
        std::int64_t e = 1;
        if (consume('^')) e = parse_exponent();
        std::vector<Letter> letters(
            static_cast<std::size_t>(e < 0 ? -e : e),
            Letter{static_cast<int>(index), e < 0 ? -1 : +1});
        return FreePolynomial::monomial(ReducedWord::reduce(rank, letters),
                                        FieldElem::one(field));
    }

    FreePolynomial parse_primary() {
        skip_ws();
        if (pos >= text.size())
            fail("expected a coefficient, generator, or '('", pos);
        if (at_digit()) return parse_coeff();
        if (text[pos] == 't') return parse_generator();
        if (consume('(')) {
            FreePolynomial inner = parse_expression();
            if (!consume(')')) fail("expected ')'", pos);
            return inner;
        }
        fail("expected a coefficient, generator, or '('", pos);
    }

    FreePolynomial parse_term() {
        FreePolynomial acc = parse_primary();
        while (consume('*')) acc = acc * parse_primary();
        return acc;
    }

    FreePolynomial parse_expression() {
        const bool lead_neg = consume('-');
        FreePolynomial acc = parse_term();
        if (lead_neg) acc = -acc;
        for (;;) {
            if (consume('+'))
                acc += parse_term();
            else if (consume('-'))
                acc -= parse_term();
            else
                return acc;
        }
    }
};

} // namespace

FreePolynomial parse_expr(const std::string& text, int rank, FieldSpec field) {
    ReducedWord::check_rank(rank);
    Parser p{text, rank, field};
    FreePolynomial out = p.parse_expression();
    p.skip_ws();
    if (p.pos != text.size())
        p.fail("unexpected input '" + std::string(1, text[p.pos]) + "'", p.pos);
    return out;
}

std::string format_word(const ReducedWord& w) {
    if (w.length() == 0) return "1";
    std::string out;
    int i = 0;
    while (i < w.length()) {
        const Letter l = w.letter(i);
        int j = i;
        while (j < w.length() && w.letter(j) == l) ++j;
        const std::int64_t e = static_cast<std::int64_t>(j - i) * l.sign;
        if (!out.empty()) out += "*";
        out += "t" + std::to_string(l.index);
        if (e != 1) out += "^" + std::to_string(e);
        i = j;
    }
    return out;
}

namespace {

// Shared sign-aware joiner: renders one term from a coefficient and an
// already-formatted monomial ("" for the identity) and appends it.
void append_term(std::string& out, const FieldElem& c, const std::string& mono) {
    std::string cs = c.to_string();
    const bool neg = !cs.empty() && cs[0] == '-';
    const std::string mag = neg ? cs.substr(1) : cs;
    std::string piece;
    if (mono.empty())
        piece = mag;
    else if (mag == "1")
        piece = mono;
    else
        piece = mag + "*" + mono;
    if (out.empty())
        out = (neg ? "-" : "") + piece;
    else
        out += (neg ? " - " : " + ") + piece;
}

} // namespace

std::string format_poly(const FreePolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : p.terms())
        append_term(out, c, w.length() == 0 ? "" : format_word(w));
    return out;
}

std::string format_xmonomial(const XMonomial& m) {
    if (m.is_empty()) return "1";
    const std::vector<int>& ix = m.indices();
    std::string out;
    std::size_t i = 0;
    while (i < ix.size()) {
        std::size_t j = i;
        while (j < ix.size() && ix[j] == ix[i]) ++j;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(ix[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string format_series(const TruncatedSeries& s) {
    if (s.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : s.terms())
        append_term(out, c, m.is_empty() ? "" : format_xmonomial(m));
    return out;
}

std::string format_leavitt(const LeavittElement& e) {
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : e.terms()) {
        std::string piece = "(" + format_poly(c) + ")";
        if (!w.is_empty()) piece += "*[" + format_xmonomial(w) + "]^*";
        if (!out.empty()) out += " + ";
        out += piece;
    }
    return out;
}

} // namespace fox
