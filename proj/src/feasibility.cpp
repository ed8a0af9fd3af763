// feasibility.cpp
//
// Part of luna, a toolkit for Luna spherical systems.
// Licensed under the Apache License, Version 2.0 (see LICENSE file).

#include "luna/feasibility.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace luna {

namespace {

long long narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("feasibility: 64-bit overflow");
    return static_cast<long long>(v);
}

// Row with gcd 1; all-zero rows keep rhs sign only.
void normalize(LinearConstraint& c) {
    long long g = 0;
    for (long long v : c.coef) g = std::gcd(g, v < 0 ? -v : v);
    g = std::gcd(g, c.rhs < 0 ? -c.rhs : c.rhs);
    if (g > 1) {
        for (long long& v : c.coef) v /= g;
        c.rhs /= g;
    }
}

bool is_constant(const LinearConstraint& c) {
    return std::all_of(c.coef.begin(), c.coef.end(), [](long long v) { return v == 0; });
}

// b*lower + a*upper with the pivot eliminated.
LinearConstraint combine(const LinearConstraint& lo, const LinearConstraint& up, int var) {
    long long a = lo.coef[var];  // > 0
    long long b = -up.coef[var]; // > 0
    LinearConstraint out;
    out.coef.resize(lo.coef.size());
    for (size_t j = 0; j < lo.coef.size(); ++j)
        out.coef[j] = narrow(static_cast<__int128>(b) * lo.coef[j] +
                             static_cast<__int128>(a) * up.coef[j]);
    out.rhs = narrow(static_cast<__int128>(b) * lo.rhs + static_cast<__int128>(a) * up.rhs);
    out.coef[var] = 0;
    normalize(out);
    return out;
}

struct Level {
    int var;
    std::vector<LinearConstraint> lowers; // coef[var] > 0
    std::vector<LinearConstraint> uppers; // coef[var] < 0
};

Rat eval_rest(const LinearConstraint& c, int var, const std::vector<Rat>& x) {
    Rat s(c.rhs);
    for (size_t j = 0; j < c.coef.size(); ++j) {
        if (static_cast<int>(j) == var || c.coef[j] == 0) continue;
        s = s - Rat(c.coef[j]) * x[j];
    }
    return s;
}

// Smallest-denominator rational in [lo, hi]; integers are tried first.
Rat pick_value(const Rat& lo, bool has_hi, const Rat& hi) {
    long long k = lo.ceil();
    if (Rat(k) < lo) ++k; // guard against ceil rounding at exact integers
    if (!has_hi || Rat(k) <= hi) return Rat(k);
    for (long long q = 2;; ++q) {
        Rat step(1, q);
        long long m = (lo * Rat(q)).ceil();
        Rat cand(m, q);
        if (cand < lo) cand = cand + step;
        if (cand <= hi) return cand;
    }
}

} // namespace

std::optional<std::vector<Rat>> feasible_point(
    const std::vector<LinearConstraint>& constraints, int nvars) {
    std::vector<LinearConstraint> current;
    std::set<std::vector<long long>> seen;
    bool infeasible = false;
    auto add = [&](LinearConstraint c) {
        normalize(c);
        if (is_constant(c)) {
            if (c.rhs > 0) infeasible = true;
            return;
        }
        std::vector<long long> key = c.coef;
        key.push_back(c.rhs);
        if (seen.insert(std::move(key)).second) current.push_back(std::move(c));
    };

    for (const auto& c : constraints) {
        if (static_cast<int>(c.coef.size()) != nvars)
            throw std::invalid_argument("feasible_point: bad constraint width");
        add(c);
        if (infeasible) return std::nullopt;
    }

    std::vector<Level> levels;
    for (int v = 0; v < nvars; ++v) {
        Level lvl;
        lvl.var = v;
        std::vector<LinearConstraint> rest;
        for (auto& c : current) {
            if (c.coef[v] > 0)
                lvl.lowers.push_back(c);
            else if (c.coef[v] < 0)
                lvl.uppers.push_back(c);
            else
                rest.push_back(c);
        }
        current.clear();
        seen.clear();
        for (auto& c : rest) add(std::move(c));
        for (const auto& lo : lvl.lowers)
            for (const auto& up : lvl.uppers) {
                add(combine(lo, up, v));
                if (infeasible) return std::nullopt;
            }
        if (infeasible) return std::nullopt;
        levels.push_back(std::move(lvl));
    }

    for (const auto& c : current)
        if (c.rhs > 0) return std::nullopt;

    std::vector<Rat> x(nvars, Rat(0));
    for (int v = nvars - 1; v >= 0; --v) {
        const Level& lvl = levels[v];
        Rat lo(0);
        bool has_lo = false;
        for (const auto& c : lvl.lowers) {
            Rat bound = eval_rest(c, v, x) / Rat(c.coef[v]);
            if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
        }
        Rat hi(0);
        bool has_hi = false;
        for (const auto& c : lvl.uppers) {
            Rat bound = eval_rest(c, v, x) / Rat(c.coef[v]); // coef < 0 flips
            if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
        }
        if (!has_lo) lo = Rat(0);
        if (has_hi && hi < lo)
            throw std::logic_error("feasible_point: empty interval after elimination");
        x[v] = pick_value(lo, has_hi, hi);
    }
    return x;
}

} // namespace luna
