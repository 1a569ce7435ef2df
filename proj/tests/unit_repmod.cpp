#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fox/repmod.hpp"

using namespace fox;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime_field(5);

Matrix from_rows_list(std::initializer_list<std::initializer_list<int>> rows, FieldSpec f) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    Matrix m(r, c, f);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (int x : row) m.at(i, j++) = FieldElem::from_integer(f, x);
        ++i;
    }
    return m;
}

OperatorModule module_of(std::vector<Matrix> ops, FieldSpec f) {
    OperatorModule m;
    m.field = f;
    m.dim = ops.empty() ? 0 : ops.front().rows();
    m.ops = std::move(ops);
    m.validate();
    return m;
}

// The two-dimensional module where the single operator sends e2 to e1 and e1
// to zero.
OperatorModule nilpotent_pair(FieldSpec f) {
    return module_of({from_rows_list({{0, 0}, {1, 0}}, f)}, f);
}

OperatorModule random_module(int dim, int n_ops, FieldSpec f, std::mt19937_64& rng) {
    std::vector<Matrix> ops;
    for (int j = 0; j < n_ops; ++j) {
        Matrix a(dim, dim, f);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c)
                a.at(r, c) = f.is_rational()
                    ? FieldElem::from_integer(f, std::uniform_int_distribution<int>(-2, 2)(rng))
                    : FieldElem::from_integer(f, std::uniform_int_distribution<std::int64_t>(
                          0, f.characteristic() - 1)(rng));
        ops.push_back(std::move(a));
    }
    return module_of(std::move(ops), f);
}

} // namespace

TEST_CASE("subspace echelon basics") {
    const Matrix rows = from_rows_list({{1, 2, 0}, {2, 4, 0}, {0, 0, 3}}, Q);
    const Subspace s = Subspace::from_rows(rows);
    CHECK(s.dim() == 2);
    CHECK(s.contains_vec({FieldElem::from_integer(Q, 3), FieldElem::from_integer(Q, 6),
                          FieldElem::from_integer(Q, -5)}));
    CHECK_FALSE(s.contains_vec({FieldElem::from_integer(Q, 1), FieldElem::from_integer(Q, 0),
                                FieldElem::from_integer(Q, 0)}));
    Subspace z = Subspace::zero(3, Q);
    CHECK(z.insert(unit_vec(3, 1, Q)));
    CHECK_FALSE(z.insert(scaled_vec(unit_vec(3, 1, Q), FieldElem::from_integer(Q, 4))));
    CHECK(z.dim() == 1);
    CHECK(Subspace::full(3, Q).contains(s));
}

TEST_CASE("spin of the nilpotent pair") {
    const OperatorModule m = nilpotent_pair(Q);
    const Subspace s1 = spin_vector(m, unit_vec(2, 0, Q)); // e1 is invariant
    CHECK(s1.dim() == 1);
    const Subspace s2 = spin_vector(m, unit_vec(2, 1, Q)); // e2 spins everything
    CHECK(s2.dim() == 2);
}

TEST_CASE("restriction and quotient act consistently") {
    std::mt19937_64 rng(51);
    for (FieldSpec f : {Q, F5}) {
        for (int trial = 0; trial < 20; ++trial) {
            const OperatorModule m = random_module(4, 2, f, rng);
            // spin a random vector into an invariant subspace
            Vec v;
            for (int i = 0; i < 4; ++i)
                v.push_back(f.is_rational()
                    ? FieldElem::from_integer(f, std::uniform_int_distribution<int>(-2, 2)(rng))
                    : FieldElem::from_integer(f, std::uniform_int_distribution<std::int64_t>(
                          0, f.characteristic() - 1)(rng)));
            const Subspace w = spin_vector(m, v);
            if (w.dim() == 0 || w.dim() == 4) continue;
            const OperatorModule r = restrict_to(m, w);
            // the restriction reproduces the ambient action on w's rows
            for (std::size_t j = 0; j < m.ops.size(); ++j) {
                for (int k = 0; k < w.dim(); ++k) {
                    Vec row;
                    for (int c = 0; c < 4; ++c) row.push_back(w.rows().at(k, c));
                    const Vec ambient = row * m.ops[j];
                    const Vec restricted = unit_vec(w.dim(), k, f) * r.ops[j];
                    // lift restricted coords back
                    Vec lifted = zero_vec(4, f);
                    for (int i = 0; i < w.dim(); ++i) {
                        Vec wrow;
                        for (int c = 0; c < 4; ++c) wrow.push_back(w.rows().at(i, c));
                        lifted = lifted + scaled_vec(wrow, restricted[static_cast<std::size_t>(i)]);
                    }
                    CHECK(lifted == ambient);
                }
            }
            // quotient operators commute with the projection
            const QuotientModule q = quotient_by(m, w);
            CHECK(q.module.dim == 4 - w.dim());
            for (std::size_t j = 0; j < m.ops.size(); ++j) {
                for (int k = 0; k < 4; ++k) {
                    const Vec ek = unit_vec(4, k, f);
                    const Vec a = project_to_quotient(w, ek * m.ops[j]);
                    const Vec b = project_to_quotient(w, ek) * q.module.ops[j];
                    CHECK(a == b);
                }
            }
        }
    }
}

TEST_CASE("minimal submodule of the nilpotent pair is the invariant line") {
    for (FieldSpec f : {Q, F5}) {
        const OperatorModule m = nilpotent_pair(f);
        const Subspace w = minimal_submodule(m);
        REQUIRE(w.dim() == 1);
        CHECK(w.contains_vec(unit_vec(2, 0, f)));
        CHECK_FALSE(is_simple_module(m));
    }
}

TEST_CASE("a scalar-irrational rotation is simple over the rationals") {
    // rotation by 90 degrees has no rational eigenvector
    const OperatorModule m = module_of({from_rows_list({{0, 1}, {-1, 0}}, Q)}, Q);
    CHECK(is_simple_module(m));
    CHECK(minimal_submodule(m).dim() == 2);
}

TEST_CASE("an irreducible two-dimensional module over GF(5)") {
    // companion matrix of x^2 - 2, and 2 is not a square mod 5
    const OperatorModule m = module_of({from_rows_list({{0, 1}, {2, 0}}, F5)}, F5);
    CHECK(is_simple_module(m));
    // adding the identity op changes nothing
    const OperatorModule m2 =
        module_of({from_rows_list({{0, 1}, {2, 0}}, F5), Matrix::identity(2, F5)}, F5);
    CHECK(is_simple_module(m2));
}

TEST_CASE("composition series dimensions always sum to the total") {
    std::mt19937_64 rng(52);
    for (FieldSpec f : {Q, F5}) {
        for (int trial = 0; trial < 12; ++trial) {
            const OperatorModule m = random_module(3, 2, f, rng);
            const auto series = composition_series(m);
            int total = 0;
            for (const OperatorModule& layer : series) {
                CHECK(layer.dim > 0);
                CHECK(is_simple_module(layer));
                total += layer.dim;
            }
            CHECK(total == 3);
        }
    }
}

TEST_CASE("composition series of an upper-triangular action") {
    // strictly upper-triangular single operator: all factors trivial lines
    const OperatorModule m =
        module_of({from_rows_list({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, Q)}, Q);
    const auto series = composition_series(m);
    REQUIRE(series.size() == 3);
    for (const OperatorModule& layer : series) CHECK(layer.dim == 1);
}

TEST_CASE("socle of the nilpotent pair") {
    for (FieldSpec f : {Q, F5}) {
        const OperatorModule m = nilpotent_pair(f);
        const Subspace s = socle(m);
        REQUIRE(s.dim() == 1);
        CHECK(s.contains_vec(unit_vec(2, 0, f)));
        const auto series = socle_series(m);
        REQUIRE(series.size() == 3);
        CHECK(series[0].dim() == 0);
        CHECK(series[1].dim() == 1);
        CHECK(series[2].dim() == 2);
    }
}

TEST_CASE("socle of a semisimple action is everything") {
    for (FieldSpec f : {Q, F5}) {
        // diagonal, distinct entries: direct sum of two lines
        const OperatorModule m = module_of({from_rows_list({{1, 0}, {0, 2}}, f)}, f);
        CHECK(socle(m).dim() == 2);
        const auto series = socle_series(m);
        REQUIRE(series.size() == 2);
        CHECK(series[0].dim() == 0);
        CHECK(series[1].dim() == 2);
        // the simple rotation module is its own socle
        const OperatorModule rot = module_of({from_rows_list({{0, 1}, {-1, 0}}, f)}, f);
        CHECK(socle(rot).dim() == 2);
    }
}

TEST_CASE("socle series of a three-step nilpotent action") {
    for (FieldSpec f : {Q, F5}) {
        const OperatorModule m =
            module_of({from_rows_list({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, f)}, f);
        const auto series = socle_series(m);
        REQUIRE(series.size() == 4);
        for (int i = 0; i < 4; ++i) CHECK(series[static_cast<std::size_t>(i)].dim() == i);
    }
}

TEST_CASE("intertwiners solve the defining equations") {
    std::mt19937_64 rng(53);
    for (FieldSpec f : {Q, F5}) {
        for (int trial = 0; trial < 15; ++trial) {
            const OperatorModule a = random_module(3, 2, f, rng);
            const OperatorModule b = random_module(2, 2, f, rng);
            for (const Matrix& z : intertwiner_space(a, b)) {
                CHECK_FALSE(z.is_zero());
                for (std::size_t j = 0; j < a.ops.size(); ++j)
                    CHECK(a.ops[j] * z == z * b.ops[j]);
            }
        }
    }
}

TEST_CASE("self-intertwiners of a simple rational module form a division ring") {
    const OperatorModule rot = module_of({from_rows_list({{0, 1}, {-1, 0}}, Q)}, Q);
    const auto endos = intertwiner_space(rot, rot);
    CHECK(endos.size() == 2); // a + b*rotation: a quadratic field
    const OperatorModule diag = module_of({from_rows_list({{1, 0}, {0, 2}}, Q)}, Q);
    CHECK(intertwiner_space(diag, diag).size() == 2);
    CHECK(intertwiner_space(rot, diag).empty());
}

TEST_CASE("isomorphism detection on conjugated modules") {
    std::mt19937_64 rng(54);
    for (FieldSpec f : {Q, F5}) {
        for (int trial = 0; trial < 10; ++trial) {
            const OperatorModule a = random_module(3, 2, f, rng);
            // conjugate by a random invertible matrix
            Matrix g(3, 3, f);
            do {
                for (int r = 0; r < 3; ++r)
                    for (int c = 0; c < 3; ++c)
                        g.at(r, c) = f.is_rational()
                            ? FieldElem::from_integer(f, std::uniform_int_distribution<int>(-2, 2)(rng))
                            : FieldElem::from_integer(f, std::uniform_int_distribution<std::int64_t>(
                                  0, f.characteristic() - 1)(rng));
            } while (!is_invertible(g));
            const Matrix ginv = *inverse(g);
            OperatorModule b;
            b.field = f;
            b.dim = 3;
            for (const Matrix& op : a.ops) b.ops.push_back(ginv * op * g);
            CHECK(is_isomorphic(a, b));
        }
    }
}

TEST_CASE("non-isomorphic modules are rejected") {
    for (FieldSpec f : {Q, F5}) {
        const OperatorModule zero_op = module_of({Matrix(1, 1, f)}, f);
        Matrix one_op(1, 1, f);
        one_op.at(0, 0) = FieldElem::one(f);
        const OperatorModule id_op = module_of({one_op}, f);
        CHECK_FALSE(is_isomorphic(zero_op, id_op));
        CHECK(is_isomorphic(zero_op, zero_op));
        // different dimensions
        CHECK_FALSE(is_isomorphic(zero_op, nilpotent_pair(f)));
        // nilpotent vs semisimple in dimension 2
        const OperatorModule diag = module_of({from_rows_list({{0, 0}, {0, 1}}, f)}, f);
        CHECK_FALSE(is_isomorphic(nilpotent_pair(f), diag));
    }
}
