// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "entpair/errors.hpp"
#include "entpair/linalg.hpp"
#include "support.hpp"

using namespace entpair;
using namespace entpair::testing;

namespace {

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

}  // namespace

TEST_CASE("mat_mul: identity leaves a matrix unchanged") {
    auto gen = rng(101);
    const ComplexMatrix x = random_matrix(2, 2, gen);
    const ComplexMatrix product = mat_mul(ComplexMatrix::identity(2), x);
    CHECK(max_abs_difference(product, x) == 0.0);
}

TEST_CASE("mat_mul: Pauli X squares to the identity") {
    const ComplexMatrix product = mat_mul(pauli_x(), pauli_x());
    CHECK(max_abs_difference(product, ComplexMatrix::identity(2)) == 0.0);
}

TEST_CASE("mat_mul matches the naive triple-loop product on seeded 3x3 pairs") {
    auto gen = rng(102);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix a = random_matrix(3, 3, gen);
        const ComplexMatrix b = random_matrix(3, 3, gen);
        CHECK(max_abs_difference(mat_mul(a, b), naive_triple_loop_product(a, b)) < 1e-14);
    }
}

TEST_CASE("mat_mul rejects mismatched inner dimensions") {
    CHECK_THROWS_AS(mat_mul(ComplexMatrix(2, 3), ComplexMatrix(2, 2)), ContractViolation);
}

TEST_CASE("mat_mul is associative on seeded triples") {
    auto gen = rng(103);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix a = random_matrix(4, 4, gen);
        const ComplexMatrix b = random_matrix(4, 4, gen);
        const ComplexMatrix c = random_matrix(4, 4, gen);
        const ComplexMatrix left = mat_mul(mat_mul(a, b), c);
        const ComplexMatrix right = mat_mul(a, mat_mul(b, c));
        CHECK(frobenius_norm(left - right) < 1e-12 * frobenius_norm(left));
    }
}

TEST_CASE("adjoint: 1x1 conjugation, symmetry case, involution") {
    ComplexMatrix m(1, 1);
    m(0, 0) = Complex(0.0, 1.0);
    CHECK(adjoint(m)(0, 0) == Complex(0.0, -1.0));

    ComplexMatrix real_sym(2, 2);
    real_sym(0, 0) = 1.0;
    real_sym(0, 1) = 2.0;
    real_sym(1, 0) = 2.0;
    real_sym(1, 1) = -3.0;
    CHECK(max_abs_difference(adjoint(real_sym), real_sym) == 0.0);

    auto gen = rng(104);
    const ComplexMatrix a = random_matrix(3, 5, gen);
    CHECK(max_abs_difference(adjoint(adjoint(a)), a) == 0.0);
}

TEST_CASE("hermitian_eig: identity spectrum") {
    const HermitianEig eig = hermitian_eig(ComplexMatrix::identity(3));
    REQUIRE(eig.eigenvalues.size() == 3);
    for (double lambda : eig.eigenvalues) CHECK(lambda == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hermitian_eig: Pauli X spectrum is (1, -1)") {
    const HermitianEig eig = hermitian_eig(pauli_x());
    REQUIRE(eig.eigenvalues.size() == 2);
    CHECK(eig.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eig.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("hermitian_eig: random 8x8 reconstruction, unitarity and trace") {
    auto gen = rng(105);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix h = random_hermitian(8, gen);
        const HermitianEig eig = hermitian_eig(h);

        // residual oracle ‖HV − V diag(λ)‖_F
        const ComplexMatrix hv = mat_mul(h, eig.eigenvectors);
        ComplexMatrix vl = eig.eigenvectors;
        for (std::size_t c = 0; c < 8; ++c)
            for (std::size_t r = 0; r < 8; ++r) vl(r, c) *= eig.eigenvalues[c];
        CHECK(frobenius_norm(hv - vl) <= 1e-12 * frobenius_norm(h));

        const ComplexMatrix gram = mat_mul(adjoint(eig.eigenvectors), eig.eigenvectors);
        CHECK(frobenius_norm(gram - ComplexMatrix::identity(8)) <= 1e-12 * 8);

        double eig_sum = 0.0;
        for (double lambda : eig.eigenvalues) eig_sum += lambda;
        CHECK(std::abs(eig_sum - trace(h).real()) <= 1e-10 * frobenius_norm(h));

        for (std::size_t i = 0; i + 1 < eig.eigenvalues.size(); ++i)
            CHECK(eig.eigenvalues[i] >= eig.eigenvalues[i + 1]);
    }
}

TEST_CASE("hermitian_eig rejects clearly non-Hermitian input") {
    auto gen = rng(106);
    const ComplexMatrix a = random_matrix(4, 4, gen);
    CHECK_THROWS_AS(hermitian_eig(a), ValidationError);
}

TEST_CASE("hermitian_eig rejects non-finite input") {
    ComplexMatrix m = ComplexMatrix::identity(2);
    m(0, 0) = Complex(std::nan(""), 0.0);
    CHECK_THROWS_AS(hermitian_eig(m), ValidationError);
}

TEST_CASE("hermitian_eig handles an already diagonal matrix and 1x1 input") {
    ComplexMatrix d(3, 3);
    d(0, 0) = 0.25;
    d(1, 1) = 2.0;
    d(2, 2) = -1.0;
    const HermitianEig eig = hermitian_eig(d);
    CHECK(eig.eigenvalues[0] == 2.0);
    CHECK(eig.eigenvalues[1] == 0.25);
    CHECK(eig.eigenvalues[2] == -1.0);

    ComplexMatrix one(1, 1);
    one(0, 0) = 5.0;
    CHECK(hermitian_eig(one).eigenvalues[0] == 5.0);
}
