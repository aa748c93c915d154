// SPDX-License-Identifier: Apache-2.0
// Shared helpers for the test suites: seeded generators and independent
// reference computations.
#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "entpair/linalg.hpp"
#include "entpair/states.hpp"

namespace entpair::testing {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Complex random_complex(std::mt19937_64& gen) {
    std::normal_distribution<double> normal(0.0, 1.0);
    return Complex(normal(gen), normal(gen));
}

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& gen) {
    ComplexMatrix m(rows, cols);
    for (auto& e : m.entries()) e = random_complex(gen);
    return m;
}

inline ComplexMatrix random_symmetric(std::size_t n, std::mt19937_64& gen, bool normalized = true) {
    ComplexMatrix g = random_matrix(n, n, gen);
    ComplexMatrix m = Complex(0.5) * (g + transpose(g));
    if (normalized) {
        const double norm = frobenius_norm(m);
        for (auto& e : m.entries()) e /= norm;
    }
    return m;
}

inline ComplexMatrix random_antisymmetric(std::size_t n, std::mt19937_64& gen,
                                          bool normalized = true) {
    ComplexMatrix g = random_matrix(n, n, gen);
    ComplexMatrix m = Complex(0.5) * (g - transpose(g));
    if (normalized) {
        const double norm = frobenius_norm(m);
        for (auto& e : m.entries()) e /= norm;
    }
    return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& gen) {
    ComplexMatrix g = random_matrix(n, n, gen);
    return Complex(0.5) * (g + adjoint(g));
}

inline ComplexVector random_unit_vector(std::size_t n, std::mt19937_64& gen) {
    ComplexVector v(n);
    for (auto& e : v) e = random_complex(gen);
    const double norm = vector_norm(v);
    for (auto& e : v) e /= norm;
    return v;
}

inline std::pair<ComplexVector, ComplexVector> random_orthonormal_pair(std::size_t n,
                                                                       std::mt19937_64& gen) {
    ComplexVector phi = random_unit_vector(n, gen);
    ComplexVector chi = random_unit_vector(n, gen);
    const Complex overlap = inner(phi, chi);
    for (std::size_t i = 0; i < n; ++i) chi[i] -= overlap * phi[i];
    const double norm = vector_norm(chi);
    for (auto& e : chi) e /= norm;
    return {phi, chi};
}

// Modified Gram-Schmidt on a random Gaussian matrix.
inline ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& gen) {
    ComplexMatrix u = random_matrix(n, n, gen);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            Complex overlap = 0.0;
            for (std::size_t r = 0; r < n; ++r) overlap += std::conj(u(r, prev)) * u(r, c);
            for (std::size_t r = 0; r < n; ++r) u(r, c) -= overlap * u(r, prev);
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < n; ++r) norm += std::norm(u(r, c));
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < n; ++r) u(r, c) /= norm;
    }
    return u;
}

inline TwoParticleState random_state(std::size_t n, Statistics statistics, std::mt19937_64& gen) {
    ComplexMatrix m = statistics == Statistics::Fermion ? random_antisymmetric(n, gen)
                                                        : random_symmetric(n, gen);
    return TwoParticleState::from_coefficients(std::move(m), statistics);
}

// Independent reference product for checking mat_mul.
inline ComplexMatrix naive_triple_loop_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

inline double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    return worst;
}

}  // namespace entpair::testing
