// root_system.hpp — finite root systems of types A–G and their products
//
// Part of luna, a toolkit for Luna spherical systems.
// Licensed under the Apache License, Version 2.0 (see LICENSE file).

#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace luna {

enum class TypeLetter { A, B, C, D, E, F, G };

char letter_char(TypeLetter t);

// One simple factor, Bourbaki numbering inside. Rank bounds are enforced at
// construction: A >= 1, B >= 2, C >= 2, D >= 3, E in {6,7,8}, F = 4, G = 2.
struct DynkinFactor {
    TypeLetter letter;
    int rank;

    DynkinFactor(TypeLetter l, int r);
    bool operator==(const DynkinFactor&) const = default;
};

// An integer vector in the simple-root basis ZS of an ambient root system.
struct Weight {
    std::vector<long long> coeffs; // coeffs[i] is the coefficient of alpha_{i+1}

    Weight() = default;
    explicit Weight(int n) : coeffs(n, 0) {}
    explicit Weight(std::vector<long long> c) : coeffs(std::move(c)) {}

    int size() const { return static_cast<int>(coeffs.size()); }
    long long at(int i) const { return coeffs.at(i - 1); } // 1-based
    long long& at(int i) { return coeffs.at(i - 1); }
    bool is_zero() const;
    std::vector<int> support() const; // 1-based indices of nonzero entries

    Weight operator+(const Weight& o) const;
    Weight operator*(long long k) const;
    bool operator==(const Weight&) const = default;
    bool operator<(const Weight& o) const { return coeffs < o.coeffs; }
};

// A product of simple factors with global 1-based simple-root indexing,
// factor by factor. Immutable after construction; the Cartan matrix and the
// positive roots (generated by string closure from the simple roots) are
// computed once.
class RootSystem {
public:
    explicit RootSystem(std::vector<DynkinFactor> factors);

    int rank() const { return n_; }
    const std::vector<DynkinFactor>& factors() const { return factors_; }
    int factor_of(int i) const; // 0-based factor index of simple root i
    int factor_offset(int f) const { return offsets_[f]; }

    // a_ij = <alpha_i^vee, alpha_j>, 1-based indices.
    long long cartan(int i, int j) const;
    // <alpha_i^vee, w> = sum_j a_ij w_j.
    long long pairing(int i, const Weight& w) const;

    const std::vector<Weight>& positive_roots() const { return positive_; }
    long long dim_group() const; // 2 * #positive + rank

    // dim G/P for the standard parabolic with simple-root set sp:
    // the number of positive roots whose support is not contained in sp.
    int dim_flag_quotient(const std::set<int>& sp) const;

    bool adjacent(int i, int j) const { return i != j && cartan(i, j) != 0; }
    std::string spec_string() const; // e.g. "B4 x A1"

    bool operator==(const RootSystem& o) const { return factors_ == o.factors_; }

private:
    void build_cartan();
    void build_positive_roots();

    std::vector<DynkinFactor> factors_;
    std::vector<int> offsets_; // global index offset per factor
    int n_ = 0;
    std::vector<std::vector<long long>> cartan_;
    std::vector<Weight> positive_;
};

// Parses a group specification: factors separated by `x`, each a letter A–G
// followed by a rank, e.g. "A5", "B4 x A1". Letters are case-insensitive and
// whitespace around `x` is optional. Throws std::invalid_argument.
RootSystem parse_group_spec(std::string_view spec);

} // namespace luna
