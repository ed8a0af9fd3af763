// spherical_system.hpp — the (S^p, Sigma, A) data model and its invariants
//
// Part of luna, a toolkit for Luna spherical systems.
// Licensed under the Apache License, Version 2.0 (see LICENSE file).

#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "luna/spherical_root.hpp"

namespace luna {

struct MalformedSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonIntegralHalf : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NegativeRank : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One element of A with its pairing row c(D, sigma_j), indexed by position
// in the system's sigma list. Membership in A(alpha) is derived from the
// rows (c(D, alpha) = 1), never stored separately.
struct AColor {
    std::string name;
    std::vector<long long> row;
};

class SphericalSystem {
public:
    SphericalSystem(RootSystem rs, std::set<int> sp, std::vector<Weight> sigma,
                    std::vector<AColor> acolors);

    const RootSystem& root_system() const { return rs_; }
    const std::set<int>& sp() const { return sp_; }
    const std::vector<SphericalRoot>& sigma() const { return sigma_; }
    const std::vector<AColor>& acolors() const { return acolors_; }

    int card_sigma() const { return static_cast<int>(sigma_.size()); }

    // Position in sigma of the simple root alpha_i, if present.
    std::optional<int> sigma_index_of_simple(int i) const;
    // Whether alpha_i lies in (1/2) Sigma.
    bool simple_is_half_sigma(int i) const;

    // A(alpha_i) as indices into acolors(), for alpha_i in S cap Sigma.
    std::vector<int> a_of(int i) const;

private:
    RootSystem rs_;
    std::set<int> sp_;
    std::vector<SphericalRoot> sigma_;
    std::vector<AColor> acolors_;
};

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    bool ok() const { return errors.empty() && warnings.empty(); }
    std::string summary() const;
};

// Checks every structural invariant: nonnegative nonzero classified sigma
// elements, linear independence, card A(alpha) = 2 with every color used,
// the sum identity c(D+,sigma) + c(D-,sigma) = <alpha^vee, sigma>, the
// degenerate rule (Sigma empty forces A empty), and well-definedness of
// merged b-colors. Pairing values outside {1,0,-1} against non-orthogonal
// simple spherical roots are reported as warnings.
ValidationReport validate(const SphericalSystem& sys);

enum class ColorType { a, two_a, b };

struct Color {
    std::string name;
    ColorType type;
    std::vector<int> members;          // the simple roots this color sits at
    std::vector<long long> functional; // full Cartan pairing against sigma
};

struct ColorSet {
    std::vector<Color> colors;
    std::map<int, std::vector<int>> by_alpha; // alpha -> indices into colors
};

// Derives Delta = Delta^a u Delta^2a u Delta^b with functionals
//   stored row            for a-colors,
//   (1/2) <alpha^vee, .>  for 2a-colors,
//   <alpha^vee, .>        for b-colors (any class representative),
// where b-colors merge D_alpha ~ D_beta when alpha, beta are orthogonal and
// alpha + beta lies in Sigma. Throws MalformedSystem when validate fails.
ColorSet colors(const SphericalSystem& sys);

// The three-case full Cartan pairing value; throws NonIntegralHalf when a
// 2a-color meets an odd pairing.
long long full_cartan(const SphericalSystem& sys, const Color& color, int sigma_index);

// card Sigma + dim G/P for P given by S^p.
int codim(const SphericalSystem& sys);
// dim G - codim; this is the quantity matched against classical subgroup
// dimensions.
long long dim_subgroup(const SphericalSystem& sys);
// card Delta - card Sigma; throws NegativeRank when negative.
int char_rank(const SphericalSystem& sys);

struct ReductivityResult {
    bool reductive = false;
    std::vector<long long> witness; // an N-combination of sigma when reductive
};

// Exact criterion: reductive iff some x >= 0 over Q has all full pairings
// strictly positive; decided by Fourier-Motzkin on C x >= 1, x >= 0 and
// scaled to a natural-number witness.
ReductivityResult is_reductive(const SphericalSystem& sys);

// Disjoint union with reindexing; cross pairings vanish.
SphericalSystem direct_product(const SphericalSystem& a, const SphericalSystem& b);

} // namespace luna
