#include "fox/fox_deriv.hpp"

#include <deque>
#include <set>
#include <string>

namespace fox {

FreePolynomial partial_derivative(const FreePolynomial& g, int index, bool barred) {
    if (index < 1 || index > g.rank())
        throw IndexOutOfRange("derivative index out of range");
    FreePolynomial out(g.rank(), g.field());
    for (const auto& [w, c] : g.terms()) {
        const int l = w.length();
        for (int k = 1; k <= l; ++k) {
            const Letter& wk = w.letter(k - 1);
            if (wk.index != index) continue;
            const bool positive = wk.sign > 0;
            if (positive != barred) {
                // matching letter: contributes the tail after position k
                out.add_term(w.tail(k), c);
            } else {
                // inverse letter: contributes minus the tail from position k
                out.add_term(w.tail(k - 1), -c);
            }
        }
    }
    return out;
}

FreePolynomial higher_derivative(const FreePolynomial& g, const std::vector<DerivOp>& ops) {
    FreePolynomial out = g;
    for (const DerivOp& op : ops) out = partial_derivative(out, op.index, op.barred);
    return out;
}

FreePolynomial higher_derivative(const FreePolynomial& g, const XMonomial& w) {
    if (w.rank() != g.rank()) throw RankMismatch("monomial rank mismatch");
    FreePolynomial out = g;
    for (int i : w.indices()) out = partial_derivative(out, i, false);
    return out;
}

StarContext::StarContext(FreePolynomial gamma) : gamma_(std::move(gamma)) {
    if (!is_comonic(gamma_)) throw NotComonic("star action requires a comonic base");
    const int n = gamma_.rank();
    dgamma_.reserve(2 * static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) dgamma_.push_back(partial_derivative(gamma_, i, false));
    for (int i = 1; i <= n; ++i) dgamma_.push_back(partial_derivative(gamma_, i, true));
}

FreePolynomial StarContext::star(int j, const FreePolynomial& lambda) const {
    const int n = rank();
    if (j < 1 || j > 2 * n) throw IndexOutOfRange("star move label out of range");
    if (lambda.rank() != gamma_.rank()) throw RankMismatch("star operand rank mismatch");
    if (!(lambda.field() == gamma_.field())) throw FieldMismatch("star operand field mismatch");
    const bool barred = j > n;
    const int index = barred ? j - n : j;
    const FreePolynomial dl = partial_derivative(lambda, index, barred);
    const FieldElem e = augmentation(lambda);
    if (e.is_zero()) return dl;
    return dl - dgamma_[static_cast<std::size_t>(j - 1)].scaled(e);
}

DerivativeSpan derivative_span(const FreePolynomial& g) {
    if (g.is_zero()) throw ZeroPolynomial("derivative span of the zero polynomial");
    const int n = g.rank();
    PolyEchelon basis(g.rank(), g.field());
    std::deque<FreePolynomial> work{g};
    while (!work.empty()) {
        FreePolynomial p = std::move(work.front());
        work.pop_front();
        if (!basis.insert(p)) continue;
        for (int i = 1; i <= n; ++i) {
            for (bool barred : {false, true}) {
                FreePolynomial d = partial_derivative(p, i, barred);
                if (!d.is_zero()) work.push_back(std::move(d));
            }
        }
    }
    const int dim = basis.dimension();
    std::vector<Matrix> ops;
    ops.reserve(2 * static_cast<std::size_t>(n));
    for (int j = 0; j < 2 * n; ++j) {
        const bool barred = j >= n;
        const int index = barred ? j - n + 1 : j + 1;
        Matrix m(dim, dim, g.field());
        for (int k = 0; k < dim; ++k) {
            const FreePolynomial d = partial_derivative(basis.basis_poly(k), index, barred);
            const auto coords = basis.coordinates(d);
            if (!coords) throw Error("derivative span is not closed"); // unreachable
            for (int c = 0; c < dim; ++c) m.at(k, c) = (*coords)[static_cast<std::size_t>(c)];
        }
        ops.push_back(std::move(m));
    }
    return DerivativeSpan{std::move(basis), std::move(ops)};
}

std::vector<FreePolynomial> comonic_generators(const FreePolynomial& g) {
    if (g.is_zero()) throw ZeroPolynomial("comonic generators of the zero polynomial");
    const int n = g.rank();
    PolyEchelon processed(g.rank(), g.field());
    std::vector<FreePolynomial> out;
    std::deque<FreePolynomial> work{g};
    while (!work.empty()) {
        FreePolynomial p = std::move(work.front());
        work.pop_front();
        if (!processed.insert(p)) continue; // already in the span of earlier states
        const FieldElem e = augmentation(p);
        if (!e.is_zero()) {
            FreePolynomial normalized = p.scaled(e.invert());
            if (is_unit(normalized)) {
                return {FreePolynomial::from_int(g.rank(), g.field(), 1)};
            }
            out.push_back(std::move(normalized));
            continue;
        }
        for (int i = 1; i <= n; ++i) {
            FreePolynomial d = partial_derivative(p, i, false);
            if (!d.is_zero()) work.push_back(std::move(d));
        }
    }
    return out;
}

namespace {

// Scalar-free canonical key: normalize the shortlex-leading coefficient to 1.
std::string scaled_key(const FreePolynomial& p) {
    const FieldElem lead = p.terms().begin()->second;
    return p.scaled(lead.invert()).key_string();
}

bool is_nonzero_constant(const FreePolynomial& p) {
    if (p.is_zero()) return false;
    return p.terms().size() == 1 && p.terms().begin()->first.is_identity();
}

} // namespace

std::optional<std::vector<DerivOp>> constant_witness(const FreePolynomial& g, int max_depth) {
    if (g.is_zero()) return std::nullopt;
    const int n = g.rank();
    struct State {
        FreePolynomial poly;
        std::vector<DerivOp> path;
    };
    std::deque<State> queue{{g, {}}};
    std::set<std::string> seen{scaled_key(g)};
    while (!queue.empty()) {
        State s = std::move(queue.front());
        queue.pop_front();
        if (is_nonzero_constant(s.poly)) return s.path;
        if (static_cast<int>(s.path.size()) >= max_depth) continue;
        for (int i = 1; i <= n; ++i) {
            for (bool barred : {false, true}) {
                FreePolynomial d = partial_derivative(s.poly, i, barred);
                if (d.is_zero()) continue;
                std::string key = scaled_key(d);
                if (!seen.insert(std::move(key)).second) continue;
                std::vector<DerivOp> path = s.path;
                path.push_back(DerivOp{i, barred});
                queue.push_back(State{std::move(d), std::move(path)});
            }
        }
    }
    return std::nullopt;
}

} // namespace fox
