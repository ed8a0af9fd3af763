// spherical_root.hpp — classification of spherical roots by diagram shape
//
// Part of luna, a toolkit for Luna spherical systems.
// Licensed under the Apache License, Version 2.0 (see LICENSE file).

#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "luna/root_system.hpp"

namespace luna {

// The thirteen recognized shapes, in table order. Patterns are matched on
// the sub-diagram induced by the support, up to diagram automorphism.
enum class SphericalRootKind {
    A1,      // alpha
    TwoA1,   // 2 alpha
    A1xA1,   // alpha + alpha', orthogonal pair
    Am,      // alpha_1 + ... + alpha_r on a simply-laced chain, r >= 2
    D3,      // alpha_1 + 2 alpha_2 + alpha_3 on a simply-laced chain
    Bm,      // alpha_1 + ... + alpha_r, chain ending at a short root, r >= 2
    TwoBm,   // 2 alpha_1 + ... + 2 alpha_r on the same shape
    B3third, // alpha_1 + 2 alpha_2 + 3 alpha_3 on a B3 chain
    Cm,      // alpha_1 + 2 alpha_2 + ... + 2 alpha_{r-1} + alpha_r, long end, r >= 3
    Dm,      // 2 alpha_1 + ... + 2 alpha_{r-2} + alpha_{r-1} + alpha_r on a fork, r >= 4
    F4,      // alpha_1 + 2 alpha_2 + 3 alpha_3 + 2 alpha_4
    G2short, // 2 alpha_1 + alpha_2 (alpha_1 short)
    TwoG2,   // 4 alpha_1 + 2 alpha_2
};

const char* kind_name(SphericalRootKind k);

struct SphericalRoot {
    Weight weight;
    SphericalRootKind kind;
    std::vector<int> support; // ascending global indices
};

struct NotASphericalRoot : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matches w against the thirteen shapes; throws NotASphericalRoot when no
// shape fits (in particular for the one shape of the general theory that is
// never realized here). No normalization: the returned weight equals w.
SphericalRoot classify(const RootSystem& rs, const Weight& w);

bool matches_some_kind(const RootSystem& rs, const Weight& w);

// True when w is nonzero and either has coefficient gcd 1 or is itself one
// of the recognized shapes (the doubled shapes generate their own lattice
// line, so they count as primitive). Throws std::domain_error on w = 0.
bool is_primitive(const RootSystem& rs, const Weight& w);

// Exact rank computation over Q; a candidate set Sigma is accepted as
// lattice data only when linearly independent.
bool linearly_independent(std::span<const Weight> ws);

} // namespace luna
