// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "entpair/states.hpp"

namespace entpair {

/// Unit vector on the Bloch sphere; a spin measurement axis.
struct Direction {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;

    static Direction unit(double x, double y, double z);
};

/// Direction at `degrees` from the z axis inside the x–z plane.
Direction direction_from_xz_angle(double degrees);

/// The four CHSH measurement axes.
struct BellSetting {
    Direction a, b, c, d;
};

/// The two spin-1/2 ⊗ position example states. The single-particle space is
/// dim 4 with basis order (↑R, ↓R, ↑L, ↓L), i.e. index = 2·location + spin
/// with location R = 0, L = 1 and spin ↑ = 0, ↓ = 1.
enum class ExampleKind {
    ProductLike,  // antisymmetrized (↑R)⊗(↓L): spin-up on the right, spin-down on the left
    EprBohm,      // spin singlet times symmetrized R/L: the Bohm-EPR state
};

TwoParticleState build_example_state(ExampleKind kind);

/// Mean value E(a,b) of the product of spin outcomes measured along a in the
/// Right region and along b in the Left region, assembled as the explicit
/// 16×16 operator σ·a P_R ⊗ σ·b P_L + σ·b P_L ⊗ σ·a P_R.
double correlation(const TwoParticleState& state, const Direction& a, const Direction& b);

/// |E(a,b) − E(a,c)| + |E(b,d) + E(c,d)|; local theories keep this ≤ 2.
double chsh(const TwoParticleState& state, const BellSetting& setting);

struct ChshScanResult {
    double max_value = 0.0;
    BellSetting argmax;
};

/// Exhaustive CHSH maximization over x–z-plane angles discretized into
/// `grid_steps` per direction; deterministic lexicographic tie-break.
ChshScanResult chsh_scan(const TwoParticleState& state, std::size_t grid_steps);

/// Full 2-sphere variant: grid_steps² directions per axis, (grid_steps²)⁴
/// settings overall — keep grid_steps modest.
ChshScanResult chsh_scan_sphere(const TwoParticleState& state, std::size_t grid_steps);

}  // namespace entpair
