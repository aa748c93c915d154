// SPDX-License-Identifier: Apache-2.0
#include "entpair/bell.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "entpair/errors.hpp"

namespace entpair {

Direction Direction::unit(double x, double y, double z) {
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
        throw ValidationError("direction: non-finite component");
    const double norm2 = x * x + y * y + z * z;
    if (std::abs(norm2 - 1.0) > 2e-9)
        throw ValidationError("direction: vector is not unit length");
    return Direction{x, y, z};
}

Direction direction_from_xz_angle(double degrees) {
    const double rad = degrees * std::numbers::pi / 180.0;
    return Direction{std::sin(rad), 0.0, std::cos(rad)};
}

TwoParticleState build_example_state(ExampleKind kind) {
    const double half = 0.5;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    ComplexMatrix c(4, 4);
    switch (kind) {
        case ExampleKind::ProductLike:
            // (|↑R⟩|↓L⟩ − |↓L⟩|↑R⟩)/√2
            c(0, 3) = inv_sqrt2;
            c(3, 0) = -inv_sqrt2;
            break;
        case ExampleKind::EprBohm:
            // ½ (|↑⟩|↓⟩ − |↓⟩|↑⟩) ⊗ (|R⟩|L⟩ + |L⟩|R⟩)
            c(0, 3) = half;   // ↑R, ↓L
            c(2, 1) = half;   // ↑L, ↓R
            c(1, 2) = -half;  // ↓R, ↑L
            c(3, 0) = -half;  // ↓L, ↑R
            break;
    }
    return TwoParticleState::from_coefficients(std::move(c), Statistics::Fermion);
}

namespace {

void check_direction(const Direction& d) {
    (void)Direction::unit(d.x, d.y, d.z);
}

// σ·d acting on the spin factor of one location block; the projector onto
// the other location zeroes everything else.
ComplexMatrix spin_at_location(const Direction& d, std::size_t location) {
    ComplexMatrix op(4, 4);
    const std::size_t o = 2 * location;
    op(o + 0, o + 0) = Complex(d.z, 0.0);
    op(o + 0, o + 1) = Complex(d.x, -d.y);
    op(o + 1, o + 0) = Complex(d.x, d.y);
    op(o + 1, o + 1) = Complex(-d.z, 0.0);
    return op;
}

ComplexMatrix kron4(const ComplexMatrix& x, const ComplexMatrix& y) {
    ComplexMatrix k(16, 16);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t ip = 0; ip < 4; ++ip) {
            const Complex xii = x(i, ip);
            if (xii == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < 4; ++j)
                for (std::size_t jp = 0; jp < 4; ++jp)
                    k(4 * i + j, 4 * ip + jp) = xii * y(j, jp);
        }
    return k;
}

}  // namespace

double correlation(const TwoParticleState& state, const Direction& a, const Direction& b) {
    if (state.dim() != 4)
        throw ValidationError("correlation: state must live in the dim-4 spin⊗position space");
    check_direction(a);
    check_direction(b);

    const ComplexMatrix right = spin_at_location(a, 0);
    const ComplexMatrix left = spin_at_location(b, 1);
    const ComplexMatrix op = kron4(right, left) + kron4(left, right);

    ComplexVector psi(16);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) psi[4 * i + j] = state.coeffs()(i, j);

    const Complex value = inner(psi, mat_vec(op, psi));
    if (std::abs(value.imag()) > 1e-10)
        throw CertificationError("correlation: expectation has imaginary residue " +
                                 std::to_string(value.imag()));
    return value.real();
}

double chsh(const TwoParticleState& state, const BellSetting& s) {
    const double e_ab = correlation(state, s.a, s.b);
    const double e_ac = correlation(state, s.a, s.c);
    const double e_bd = correlation(state, s.b, s.d);
    const double e_cd = correlation(state, s.c, s.d);
    return std::abs(e_ab - e_ac) + std::abs(e_bd + e_cd);
}

namespace {

ChshScanResult scan_directions(const TwoParticleState& state,
                               const std::vector<Direction>& dirs) {
    const std::size_t n = dirs.size();
    std::vector<double> e(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e[i * n + j] = correlation(state, dirs[i], dirs[j]);

    ChshScanResult best;
    best.max_value = -1.0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const double first = std::abs(e[a * n + b] - e[a * n + c]);
                for (std::size_t d = 0; d < n; ++d) {
                    const double value = first + std::abs(e[b * n + d] + e[c * n + d]);
                    if (value > best.max_value) {
                        best.max_value = value;
                        best.argmax = BellSetting{dirs[a], dirs[b], dirs[c], dirs[d]};
                    }
                }
            }
    return best;
}

}  // namespace

ChshScanResult chsh_scan(const TwoParticleState& state, std::size_t grid_steps) {
    if (grid_steps < 4) throw ValidationError("chsh_scan: grid_steps must be at least 4");
    std::vector<Direction> dirs;
    dirs.reserve(grid_steps);
    for (std::size_t k = 0; k < grid_steps; ++k)
        dirs.push_back(direction_from_xz_angle(360.0 * static_cast<double>(k) /
                                               static_cast<double>(grid_steps)));
    return scan_directions(state, dirs);
}

ChshScanResult chsh_scan_sphere(const TwoParticleState& state, std::size_t grid_steps) {
    if (grid_steps < 4) throw ValidationError("chsh_scan_sphere: grid_steps must be at least 4");
    std::vector<Direction> dirs;
    dirs.reserve(grid_steps * grid_steps);
    for (std::size_t i = 0; i < grid_steps; ++i) {
        const double theta =
            std::numbers::pi * static_cast<double>(i) / static_cast<double>(grid_steps - 1);
        for (std::size_t j = 0; j < grid_steps; ++j) {
            const double phi =
                2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid_steps);
            dirs.push_back(Direction{std::sin(theta) * std::cos(phi),
                                     std::sin(theta) * std::sin(phi), std::cos(theta)});
        }
    }
    return scan_directions(state, dirs);
}

}  // namespace entpair
