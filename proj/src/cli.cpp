#include "fox/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <sstream>

#include "fox/expr.hpp"
#include "fox/io.hpp"

namespace fox {

namespace {

using nlohmann::json;

struct Options {
    int rank = 2;
    std::string field_text = "Q";
    bool json_out = false;
    std::uint64_t seed = 0;
    int max_len = -1;
    int cutoff = 6;
    std::string wrt;
    std::vector<std::string> exprs;
};

// One computed answer: the machine form, the human form, and the exit code
// (nonzero only for negative-but-well-formed verdicts).
struct Outcome {
    json payload;
    std::string text;
    int code = 0;
};

std::pair<int, std::string> classify(const Error& e) {
    if (dynamic_cast<const BudgetExhausted*>(&e)) return {3, "budget-exhausted"};
    if (dynamic_cast<const UnresolvedSimplicity*>(&e))
        return {3, "unresolved-simplicity"};
    if (dynamic_cast<const UnresolvedMembership*>(&e))
        return {3, "unresolved-membership"};
    if (dynamic_cast<const ParseError*>(&e)) return {2, "parse-error"};
    if (dynamic_cast<const RankExceeded*>(&e)) return {2, "rank-exceeded"};
    if (dynamic_cast<const NonInvertibleDenominator*>(&e))
        return {2, "non-invertible-denominator"};
    return {2, "invalid-input"};
}

// The differentiation variable: "tN" picks the plain derivative in t_N,
// "tN^-1" the barred one.
std::pair<int, bool> parse_wrt(const std::string& s, int rank) {
    const char* usage = "--wrt must name a generator: tN or tN^-1";
    if (s.size() < 2 || s[0] != 't') throw ParseError(usage);
    std::size_t i = 1;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == 1) throw ParseError(usage);
    int index = 0;
    try {
        index = std::stoi(s.substr(1, i - 1));
    } catch (const std::exception&) {
        throw ParseError(usage);
    }
    bool barred = false;
    if (i < s.size()) {
        if (s.substr(i) != "^-1") throw ParseError(usage);
        barred = true;
    }
    if (index < 1) throw ParseError("generator indices start at 1");
    if (index > rank)
        throw RankExceeded("generator t" + std::to_string(index) +
                           " exceeds rank " + std::to_string(rank));
    return {index, barred};
}

json vec_to_json(const Vec& v) {
    json out = json::array();
    for (const FieldElem& c : v) out.push_back(c.to_string());
    return out;
}

struct Runner {
    const Options& opt;
    std::istream& in;
    FieldSpec field;

    Runner(const Options& o, std::istream& i)
        : opt(o), in(i), field(FieldSpec::from_string(o.field_text)) {}

    std::string resolve(const std::string& arg) const {
        if (arg != "-") return arg;
        return std::string(std::istreambuf_iterator<char>(in), {});
    }

    FreePolynomial poly(std::size_t i) const {
        return parse_expr(resolve(opt.exprs.at(i)), opt.rank, field);
    }

    Outcome eval() const {
        const FreePolynomial p = poly(0);
        return {{{"status", "ok"}, {"result", poly_to_json(p)}},
                format_poly(p) + "\n"};
    }

    Outcome derive() const {
        const auto [index, barred] = parse_wrt(opt.wrt, opt.rank);
        const FreePolynomial d = partial_derivative(poly(0), index, barred);
        return {{{"status", "ok"}, {"result", poly_to_json(d)}},
                format_poly(d) + "\n"};
    }

    Outcome order() const {
        const int n = order_of(poly(0));
        return {{{"status", "ok"}, {"order", n}}, std::to_string(n) + "\n"};
    }

    Outcome length() const {
        const int n = length_of(poly(0));
        return {{{"status", "ok"}, {"length", n}}, std::to_string(n) + "\n"};
    }

    Outcome maximal() const {
        const FreePolynomial p = poly(0);
        const std::vector<ReducedWord> words = strictly_maximal_words(p);
        const bool special = is_special(p);
        json jwords = json::array();
        std::ostringstream text;
        for (const ReducedWord& w : words) {
            jwords.push_back(word_to_json(w));
            text << format_word(w) << "\n";
        }
        text << "special: " << (special ? "true" : "false") << "\n";
        return {{{"status", "ok"}, {"words", std::move(jwords)},
                 {"special", special}},
                text.str()};
    }

    Outcome gcd_cmd() const {
        const FreePolynomial g = gcd(poly(0), poly(1));
        return {{{"status", "ok"}, {"result", poly_to_json(g)}},
                format_poly(g) + "\n"};
    }

    Outcome divide() const {
        const DivisionResult d = divide_right(poly(0), poly(1), opt.max_len);
        if (!d.divisible) {
            std::ostringstream text;
            text << "not divisible by any factor of length <= "
                 << d.searched_up_to << "\n";
            return {{{"status", "not-divisible-within-bound"},
                     {"divisible", false},
                     {"searched_up_to", d.searched_up_to}},
                    text.str(), 3};
        }
        return {{{"status", "ok"},
                 {"divisible", true},
                 {"quotient", poly_to_json(d.quotient)},
                 {"searched_up_to", d.searched_up_to}},
                format_poly(d.quotient) + "\n"};
    }

    Outcome factor_cmd() const {
        const FreePolynomial p = poly(0);
        const Factorization f = factorize(p, opt.seed);
        json payload = factorization_to_json(f, p.rank(), p.field());
        payload["status"] = "ok";
        std::ostringstream text;
        text << "unit: " << f.unit.to_string() << "\n";
        text << "unit_word: " << format_word(f.unit_word) << "\n";
        for (const FreePolynomial& g : f.factors)
            text << "factor: " << format_poly(g) << "\n";
        text << "length: " << f.factors.size() << "\n";
        text << "verified: " << (f.verified ? "true" : "false") << "\n";
        return {std::move(payload), text.str()};
    }

    Outcome irreducible() const {
        const bool b = is_irreducible(poly(0), opt.seed);
        return {{{"status", "ok"}, {"irreducible", b}},
                std::string(b ? "true" : "false") + "\n"};
    }

    Outcome similar_cmd() const {
        const bool b = similar(poly(0), poly(1), opt.seed);
        return {{{"status", "ok"}, {"similar", b}},
                std::string(b ? "true" : "false") + "\n"};
    }

    Outcome lattice() const {
        const Lattice l = lattice_of(poly(0));
        std::ostringstream text;
        text << "dim: " << l.module.dim << "\n";
        for (const FreePolynomial& label : l.module.labels)
            text << "label: " << format_poly(label) << "\n";
        return {{{"status", "ok"},
                 {"module", module_to_json(l.module)},
                 {"one_class", vec_to_json(l.one_class)}},
                text.str()};
    }

    Outcome series_magnus() const {
        const TruncatedSeries s = magnus_embed(poly(0), opt.cutoff);
        return {{{"status", "ok"}, {"series", series_to_json(s)}},
                format_series(s) + "\n"};
    }

    Outcome series_solve() const {
        const TruncatedSeries s = quasi_inverse(magnus_embed(poly(0), opt.cutoff));
        return {{{"status", "ok"}, {"series", series_to_json(s)}},
                format_series(s) + "\n"};
    }

    Outcome series_rational() const {
        const RationalRep rep = rat_quasi_inverse(rat_atom(poly(0)));
        const TruncatedSeries s = rat_eval(rep, opt.cutoff);
        std::ostringstream text;
        text << "size: " << rep.size << "\n";
        text << "entry: " << rep.entry << "\n";
        text << "series: " << format_series(s) << "\n";
        return {{{"status", "ok"},
                 {"rational", rational_to_json(rep)},
                 {"series", series_to_json(s)}},
                text.str()};
    }

    Outcome leavitt_normalize() const {
        const LeavittElement e =
            LeavittElement::from_poly(poly(0)).canonical_form(opt.cutoff);
        return {{{"status", "ok"}, {"leavitt", leavitt_to_json(e)}},
                format_leavitt(e) + "\n"};
    }

    Outcome leavitt_mul() const {
        const LeavittElement a =
            LeavittElement::from_poly(poly(0)).canonical_form(opt.cutoff);
        const LeavittElement b =
            LeavittElement::from_poly(poly(1)).canonical_form(opt.cutoff);
        LeavittElement prod = a * b;
        prod = prod.canonical_form(prod.depth());
        return {{{"status", "ok"}, {"leavitt", leavitt_to_json(prod)}},
                format_leavitt(prod) + "\n"};
    }
};

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err, std::istream& in) {
    CLI::App app{"exact computation with free-group group-algebra elements"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("FOX_DEFAULT_FIELD")) opt.field_text = env;

    struct SubSpec {
        const char* name;
        const char* desc;
        int n_args;
        bool seed, max_len, cutoff, wrt;
    };
    const std::vector<SubSpec> specs = {
        {"eval", "evaluate an expression to its canonical polynomial form", 1,
         false, false, false, false},
        {"derive", "partial derivative with respect to --wrt", 1, false, false,
         false, true},
        {"order", "vanishing order of the Magnus expansion at the identity", 1,
         false, false, false, false},
        {"length", "maximum word length over the support", 1, false, false,
         false, false},
        {"maximal", "strictly maximal support words and speciality", 1, false,
         false, false, false},
        {"gcd", "greatest common right divisor of two elements", 2, false,
         false, false, false},
        {"divide", "test right divisibility and report the quotient", 2, false,
         true, false, false},
        {"factor", "factor into irreducible comonic elements", 1, true, false,
         false, false},
        {"irreducible", "test irreducibility", 1, true, false, false, false},
        {"similar", "test similarity of two elements", 2, true, false, false,
         false},
        {"lattice", "finite-dimensional module carrying the divisor lattice", 1,
         false, false, false, false},
        {"series-magnus", "truncated power-series expansion", 1, false, false,
         true, false},
        {"series-solve", "quasi-inverse of the expansion (augmentation zero)",
         1, false, false, true, false},
        {"series-rational", "linear representation of the quasi-inverse", 1,
         false, false, true, false},
        {"leavitt-normalize", "canonical form at depth --cutoff", 1, false,
         false, true, false},
        {"leavitt-mul", "product of canonical forms, renormalized", 2, false,
         false, true, false},
    };

    for (const SubSpec& s : specs) {
        CLI::App* sub = app.add_subcommand(s.name, s.desc);
        sub->add_option("--rank", opt.rank, "number of generators (>= 2)")
            ->capture_default_str();
        sub->add_option("--field", opt.field_text, "Q, GF(p), or gf:p")
            ->capture_default_str();
        sub->add_flag("--json", opt.json_out, "emit a JSON object");
        if (s.seed)
            sub->add_option("--seed", opt.seed, "seed for randomized search");
        if (s.max_len)
            sub->add_option("--max-len", opt.max_len,
                            "length bound for quotient search (-1 = derived)");
        if (s.cutoff)
            sub->add_option("--cutoff", opt.cutoff,
                            "truncation cutoff / rewriting depth")
                ->capture_default_str();
        if (s.wrt)
            sub->add_option("--wrt", opt.wrt, "generator: tN or tN^-1")
                ->required();
        sub->add_option("expr", opt.exprs, "expression (\"-\" reads stdin)")
            ->required()
            ->expected(s.n_args);
    }

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    const std::string name = app.get_subcommands().at(0)->get_name();
    try {
        Runner r(opt, in);
        Outcome o;
        if (name == "eval") o = r.eval();
        else if (name == "derive") o = r.derive();
        else if (name == "order") o = r.order();
        else if (name == "length") o = r.length();
        else if (name == "maximal") o = r.maximal();
        else if (name == "gcd") o = r.gcd_cmd();
        else if (name == "divide") o = r.divide();
        else if (name == "factor") o = r.factor_cmd();
        else if (name == "irreducible") o = r.irreducible();
        else if (name == "similar") o = r.similar_cmd();
        else if (name == "lattice") o = r.lattice();
        else if (name == "series-magnus") o = r.series_magnus();
        else if (name == "series-solve") o = r.series_solve();
        else if (name == "series-rational") o = r.series_rational();
        else if (name == "leavitt-normalize") o = r.leavitt_normalize();
        else o = r.leavitt_mul();
        if (opt.json_out)
            out << o.payload.dump() << "\n";
        else
            out << o.text;
        return o.code;
    } catch (const Error& e) {
        const auto [code, status] = classify(e);
        if (opt.json_out)
            out << json{{"status", status}, {"error", e.what()}}.dump() << "\n";
        else
            err << "error (" << status << "): " << e.what() << "\n";
        return code;
    }
}

} // namespace fox
