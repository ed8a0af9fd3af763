// root_system.cpp
//
// Part of luna, a toolkit for Luna spherical systems.
// Licensed under the Apache License, Version 2.0 (see LICENSE file).

#include "luna/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace luna {

char letter_char(TypeLetter t) {
    return "ABCDEFG"[static_cast<int>(t)];
}

DynkinFactor::DynkinFactor(TypeLetter l, int r) : letter(l), rank(r) {
    bool ok = false;
    switch (l) {
        case TypeLetter::A: ok = r >= 1; break;
        case TypeLetter::B: ok = r >= 2; break;
        case TypeLetter::C: ok = r >= 2; break;
        case TypeLetter::D: ok = r >= 3; break;
        case TypeLetter::E: ok = r >= 6 && r <= 8; break;
        case TypeLetter::F: ok = r == 4; break;
        case TypeLetter::G: ok = r == 2; break;
    }
    if (!ok)
        throw std::invalid_argument(std::string("invalid Dynkin factor ") +
                                    letter_char(l) + std::to_string(r));
}

bool Weight::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](long long v) { return v == 0; });
}

std::vector<int> Weight::support() const {
    std::vector<int> s;
    for (int i = 0; i < size(); ++i)
        if (coeffs[i] != 0) s.push_back(i + 1);
    return s;
}

Weight Weight::operator+(const Weight& o) const {
    if (size() != o.size()) throw std::invalid_argument("weight length mismatch");
    Weight r(*this);
    for (int i = 0; i < size(); ++i) r.coeffs[i] += o.coeffs[i];
    return r;
}

Weight Weight::operator*(long long k) const {
    Weight r(*this);
    for (auto& v : r.coeffs) v *= k;
    return r;
}

RootSystem::RootSystem(std::vector<DynkinFactor> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("empty group");
    for (const auto& f : factors_) {
        offsets_.push_back(n_);
        n_ += f.rank;
    }
    build_cartan();
    build_positive_roots();
}

int RootSystem::factor_of(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("simple root index");
    int f = 0;
    while (f + 1 < static_cast<int>(factors_.size()) && offsets_[f + 1] < i) ++f;
    return f;
}

namespace {

// Edges of one factor in local 1-based indices, with the off-diagonal Cartan
// entries (<a_i^vee, a_j>, <a_j^vee, a_i>) under Bourbaki numbering.
struct Bond {
    int i, j;
    long long aij, aji;
};

std::vector<Bond> factor_bonds(const DynkinFactor& f) {
    std::vector<Bond> bonds;
    auto chain = [&](int from, int to) {
        for (int i = from; i < to; ++i) bonds.push_back({i, i + 1, -1, -1});
    };
    int r = f.rank;
    switch (f.letter) {
        case TypeLetter::A:
            chain(1, r);
            break;
        case TypeLetter::B: // alpha_r short
            chain(1, r - 1);
            bonds.push_back({r - 1, r, -1, -2});
            break;
        case TypeLetter::C: // alpha_r long
            chain(1, r - 1);
            bonds.push_back({r - 1, r, -2, -1});
            break;
        case TypeLetter::D: // fork at alpha_{r-2}
            chain(1, r - 1);
            bonds.push_back({r - 2, r, -1, -1});
            break;
        case TypeLetter::E:
            bonds.push_back({1, 3, -1, -1});
            bonds.push_back({2, 4, -1, -1});
            chain(3, r);
            break;
        case TypeLetter::F: // alpha_3, alpha_4 short
            bonds.push_back({1, 2, -1, -1});
            bonds.push_back({2, 3, -1, -2});
            bonds.push_back({3, 4, -1, -1});
            break;
        case TypeLetter::G: // alpha_1 short
            bonds.push_back({1, 2, -3, -1});
            break;
    }
    return bonds;
}

} // namespace

void RootSystem::build_cartan() {
    cartan_.assign(n_, std::vector<long long>(n_, 0));
    for (int i = 0; i < n_; ++i) cartan_[i][i] = 2;
    for (size_t f = 0; f < factors_.size(); ++f) {
        int off = offsets_[f];
        for (const Bond& b : factor_bonds(factors_[f])) {
            cartan_[off + b.i - 1][off + b.j - 1] = b.aij;
            cartan_[off + b.j - 1][off + b.i - 1] = b.aji;
        }
    }
}

long long RootSystem::cartan(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw std::out_of_range("simple root index");
    return cartan_[i - 1][j - 1];
}

long long RootSystem::pairing(int i, const Weight& w) const {
    if (w.size() != n_) throw std::invalid_argument("weight length mismatch");
    if (i < 1 || i > n_) throw std::out_of_range("simple root index");
    long long s = 0;
    for (int j = 0; j < n_; ++j) s += cartan_[i - 1][j] * w.coeffs[j];
    return s;
}

void RootSystem::build_positive_roots() {
    // String closure from the simple roots: beta + alpha_i is a root iff the
    // descending string length q satisfies q - <alpha_i^vee, beta> > 0.
    std::set<std::vector<long long>> roots;
    std::vector<Weight> frontier;
    for (int i = 1; i <= n_; ++i) {
        Weight w(n_);
        w.at(i) = 1;
        roots.insert(w.coeffs);
        frontier.push_back(w);
    }
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const Weight& beta : frontier) {
            for (int i = 1; i <= n_; ++i) {
                long long q = 0;
                Weight down = beta;
                for (;;) {
                    down.at(i) -= 1;
                    bool nonneg = std::all_of(down.coeffs.begin(), down.coeffs.end(),
                                              [](long long v) { return v >= 0; });
                    if (!nonneg || !roots.count(down.coeffs)) break;
                    ++q;
                }
                if (q - pairing(i, beta) > 0) {
                    Weight up = beta;
                    up.at(i) += 1;
                    if (roots.insert(up.coeffs).second) next.push_back(up);
                }
            }
        }
        frontier = std::move(next);
    }
    for (const auto& c : roots) positive_.push_back(Weight(c));
    std::sort(positive_.begin(), positive_.end());
}

long long RootSystem::dim_group() const {
    return 2ll * static_cast<long long>(positive_.size()) + n_;
}

int RootSystem::dim_flag_quotient(const std::set<int>& sp) const {
    for (int i : sp)
        if (i < 1 || i > n_) throw std::out_of_range("sp index");
    int count = 0;
    for (const Weight& beta : positive_) {
        bool inside = true;
        for (int i : beta.support())
            if (!sp.count(i)) { inside = false; break; }
        if (!inside) ++count;
    }
    return count;
}

std::string RootSystem::spec_string() const {
    std::string s;
    for (size_t f = 0; f < factors_.size(); ++f) {
        if (f) s += " x ";
        s += letter_char(factors_[f].letter);
        s += std::to_string(factors_[f].rank);
    }
    return s;
}

RootSystem parse_group_spec(std::string_view spec) {
    std::vector<DynkinFactor> factors;
    size_t i = 0;
    auto skip_ws = [&] { while (i < spec.size() && std::isspace(static_cast<unsigned char>(spec[i]))) ++i; };
    skip_ws();
    while (i < spec.size()) {
        char c = static_cast<char>(std::toupper(static_cast<unsigned char>(spec[i])));
        if (c < 'A' || c > 'G')
            throw std::invalid_argument("group spec: expected type letter A-G, got '" +
                                        std::string(1, spec[i]) + "'");
        ++i;
        size_t start = i;
        while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) ++i;
        if (i == start) throw std::invalid_argument("group spec: missing rank");
        int rank = std::stoi(std::string(spec.substr(start, i - start)));
        factors.emplace_back(static_cast<TypeLetter>(c - 'A'), rank);
        skip_ws();
        if (i == spec.size()) break;
        if (spec[i] != 'x' && spec[i] != 'X')
            throw std::invalid_argument("group spec: expected 'x' between factors");
        ++i;
        skip_ws();
        if (i == spec.size()) throw std::invalid_argument("group spec: trailing 'x'");
    }
    if (factors.empty()) throw std::invalid_argument("group spec: empty");
    return RootSystem(std::move(factors));
}

} // namespace luna
