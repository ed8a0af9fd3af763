// spherical_system.cpp
//
// Part of luna, a toolkit for Luna spherical systems.
// Licensed under the Apache License, Version 2.0 (see LICENSE file).

#include "luna/spherical_system.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "luna/feasibility.hpp"

namespace luna {

SphericalSystem::SphericalSystem(RootSystem rs, std::set<int> sp, std::vector<Weight> sigma,
                                 std::vector<AColor> acolors)
    : rs_(std::move(rs)), sp_(std::move(sp)), acolors_(std::move(acolors)) {
    for (int i : sp_)
        if (i < 1 || i > rs_.rank()) throw std::invalid_argument("sp index out of range");
    for (const Weight& w : sigma)
        sigma_.push_back(classify(rs_, w));
    std::set<std::string> names;
    for (const AColor& c : acolors_) {
        if (c.name.empty()) throw std::invalid_argument("unnamed color");
        if (!names.insert(c.name).second)
            throw std::invalid_argument("duplicate color name " + c.name);
        if (c.row.size() != sigma_.size())
            throw std::invalid_argument("color row length mismatch for " + c.name);
    }
}

std::optional<int> SphericalSystem::sigma_index_of_simple(int i) const {
    for (size_t k = 0; k < sigma_.size(); ++k) {
        const Weight& w = sigma_[k].weight;
        if (w.coeffs[i - 1] == 1 && w.support().size() == 1) return static_cast<int>(k);
    }
    return std::nullopt;
}

bool SphericalSystem::simple_is_half_sigma(int i) const {
    for (const auto& sr : sigma_) {
        const Weight& w = sr.weight;
        if (w.coeffs[i - 1] == 2 && w.support().size() == 1) return true;
    }
    return false;
}

std::vector<int> SphericalSystem::a_of(int i) const {
    std::vector<int> out;
    auto k = sigma_index_of_simple(i);
    if (!k) return out;
    for (size_t d = 0; d < acolors_.size(); ++d)
        if (acolors_[d].row[*k] == 1) out.push_back(static_cast<int>(d));
    return out;
}

std::string ValidationReport::summary() const {
    std::string s;
    for (const auto& e : errors) s += "error: " + e + "\n";
    for (const auto& w : warnings) s += "warning: " + w + "\n";
    return s;
}

namespace {

// Pairs (alpha, beta) of orthogonal simple roots with alpha + beta in Sigma;
// these are the ~-merges of the b-color family.
std::vector<std::pair<int, int>> merge_pairs(const SphericalSystem& sys) {
    std::vector<std::pair<int, int>> out;
    const RootSystem& rs = sys.root_system();
    for (const auto& sr : sys.sigma()) {
        auto sup = sr.weight.support();
        if (sup.size() != 2) continue;
        int a = sup[0], b = sup[1];
        if (sr.weight.coeffs[a - 1] == 1 && sr.weight.coeffs[b - 1] == 1 &&
            rs.cartan(a, b) == 0)
            out.emplace_back(a, b);
    }
    return out;
}

} // namespace

ValidationReport validate(const SphericalSystem& sys) {
    ValidationReport rep;
    const RootSystem& rs = sys.root_system();
    const auto& sigma = sys.sigma();

    for (size_t k = 0; k < sigma.size(); ++k) {
        const Weight& w = sigma[k].weight;
        if (w.is_zero()) rep.errors.push_back("sigma s" + std::to_string(k + 1) + " is zero");
        bool nonneg = std::all_of(w.coeffs.begin(), w.coeffs.end(),
                                  [](long long v) { return v >= 0; });
        if (!nonneg)
            rep.errors.push_back("sigma s" + std::to_string(k + 1) + " has a negative coefficient");
        try {
            SphericalRoot re = classify(rs, w);
            if (re.kind != sigma[k].kind)
                rep.errors.push_back("sigma s" + std::to_string(k + 1) + " kind mismatch");
        } catch (const NotASphericalRoot& e) {
            rep.errors.push_back("sigma s" + std::to_string(k + 1) +
                                 " matches no recognized shape: " + e.what());
        }
    }

    std::vector<Weight> ws;
    for (const auto& sr : sigma) ws.push_back(sr.weight);
    if (!linearly_independent(ws))
        rep.errors.push_back("sigma is linearly dependent");

    if (sigma.empty() && !sys.acolors().empty())
        rep.errors.push_back("acolors present while sigma is empty");

    // Simple spherical roots: card A(alpha) = 2, sum identity, value window.
    std::vector<int> simple_positions; // sigma index of each alpha in S cap Sigma
    for (int i = 1; i <= rs.rank(); ++i) {
        auto k = sys.sigma_index_of_simple(i);
        if (!k) continue;
        simple_positions.push_back(*k);
        auto members = sys.a_of(i);
        if (members.size() != 2) {
            rep.errors.push_back("card A(a" + std::to_string(i) + ") = " +
                                 std::to_string(members.size()) + ", expected 2");
            continue;
        }
        for (size_t j = 0; j < sigma.size(); ++j) {
            long long lhs = sys.acolors()[members[0]].row[j] + sys.acolors()[members[1]].row[j];
            long long rhs = rs.pairing(i, sigma[j].weight);
            if (lhs != rhs)
                rep.errors.push_back("sum identity fails at a" + std::to_string(i) + ", s" +
                                     std::to_string(j + 1) + ": " + std::to_string(lhs) +
                                     " != " + std::to_string(rhs));
            if (rhs != 0) { // sigma_j not orthogonal to alpha_i
                for (int m : members) {
                    long long v = sys.acolors()[m].row[j];
                    if (v < -1 || v > 1)
                        rep.warnings.push_back("pairing of " + sys.acolors()[m].name + " with s" +
                                               std::to_string(j + 1) + " is " + std::to_string(v) +
                                               ", outside {1,0,-1}");
                }
            }
        }
    }

    // Every color of A must sit in some A(alpha).
    for (const AColor& c : sys.acolors()) {
        bool used = false;
        for (int k : simple_positions)
            if (c.row[k] == 1) { used = true; break; }
        if (!used)
            rep.errors.push_back("color " + c.name + " belongs to no A(alpha)");
    }

    // Merged b-colors are well defined only when both coroots agree on Sigma.
    for (auto [a, b] : merge_pairs(sys)) {
        for (size_t j = 0; j < sigma.size(); ++j) {
            long long va = rs.pairing(a, sigma[j].weight);
            long long vb = rs.pairing(b, sigma[j].weight);
            if (va != vb)
                rep.errors.push_back("merged pair (a" + std::to_string(a) + ", a" +
                                     std::to_string(b) + ") disagrees on s" +
                                     std::to_string(j + 1));
        }
    }

    return rep;
}

namespace {

void require_valid(const SphericalSystem& sys) {
    ValidationReport rep = validate(sys);
    if (!rep.errors.empty()) throw MalformedSystem("invalid system\n" + rep.summary());
}

} // namespace

ColorSet colors(const SphericalSystem& sys) {
    require_valid(sys);
    const RootSystem& rs = sys.root_system();
    ColorSet cs;

    // Delta^a = A.
    std::map<int, int> color_of_alpha; // moved simple root -> color index
    for (const AColor& c : sys.acolors())
        cs.colors.push_back(Color{c.name, ColorType::a, {}, c.row});
    for (int i = 1; i <= rs.rank(); ++i) {
        auto members = sys.a_of(i);
        for (int m : members) cs.colors[m].members.push_back(i);
    }

    // Delta^2a.
    for (int i = 1; i <= rs.rank(); ++i) {
        if (!sys.simple_is_half_sigma(i)) continue;
        Color c;
        c.name = "D2a_a" + std::to_string(i);
        c.type = ColorType::two_a;
        c.members = {i};
        for (const auto& sr : sys.sigma()) {
            long long v = rs.pairing(i, sr.weight);
            c.functional.push_back(v / 2); // integrality is re-checked in full_cartan
        }
        color_of_alpha[i] = static_cast<int>(cs.colors.size());
        cs.colors.push_back(std::move(c));
    }

    // Delta^b with ~-merging.
    std::vector<int> free_roots;
    for (int i = 1; i <= rs.rank(); ++i) {
        if (sys.sp().count(i)) continue;
        if (sys.sigma_index_of_simple(i) || sys.simple_is_half_sigma(i)) continue;
        free_roots.push_back(i);
    }
    std::map<int, int> rep_of; // union-find over free roots
    for (int i : free_roots) rep_of[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (rep_of[x] != x) x = rep_of[x] = rep_of[rep_of[x]];
        return x;
    };
    for (auto [a, b] : merge_pairs(sys))
        if (rep_of.count(a) && rep_of.count(b)) rep_of[find(a)] = find(b);
    std::map<int, std::vector<int>> classes;
    for (int i : free_roots) classes[find(i)].push_back(i);
    for (auto& [root, members] : classes) {
        std::sort(members.begin(), members.end());
        Color c;
        c.name = "Db_a" + std::to_string(members.front());
        c.type = ColorType::b;
        c.members = members;
        for (const auto& sr : sys.sigma())
            c.functional.push_back(rs.pairing(members.front(), sr.weight));
        for (int m : members) color_of_alpha[m] = static_cast<int>(cs.colors.size());
        cs.colors.push_back(std::move(c));
    }

    // Delta(alpha): empty on S^p, A(alpha) on S cap Sigma, {D_alpha} otherwise.
    for (int i = 1; i <= rs.rank(); ++i) {
        if (sys.sp().count(i)) {
            cs.by_alpha[i] = {};
        } else if (sys.sigma_index_of_simple(i)) {
            cs.by_alpha[i] = sys.a_of(i);
        } else {
            cs.by_alpha[i] = {color_of_alpha.at(i)};
        }
    }
    return cs;
}

long long full_cartan(const SphericalSystem& sys, const Color& color, int sigma_index) {
    if (sigma_index < 0 || sigma_index >= sys.card_sigma())
        throw std::out_of_range("sigma index");
    const RootSystem& rs = sys.root_system();
    switch (color.type) {
        case ColorType::a:
            return color.functional[sigma_index];
        case ColorType::two_a: {
            long long v = rs.pairing(color.members.front(), sys.sigma()[sigma_index].weight);
            if (v % 2 != 0)
                throw NonIntegralHalf("odd pairing for 2a-color " + color.name);
            return v / 2;
        }
        case ColorType::b:
            return rs.pairing(color.members.front(), sys.sigma()[sigma_index].weight);
    }
    throw std::logic_error("unreachable");
}

int codim(const SphericalSystem& sys) {
    require_valid(sys);
    return sys.card_sigma() + sys.root_system().dim_flag_quotient(sys.sp());
}

long long dim_subgroup(const SphericalSystem& sys) {
    return sys.root_system().dim_group() - codim(sys);
}

int char_rank(const SphericalSystem& sys) {
    ColorSet cs = colors(sys);
    int r = static_cast<int>(cs.colors.size()) - sys.card_sigma();
    if (r < 0) throw NegativeRank("card Delta < card Sigma");
    return r;
}

ReductivityResult is_reductive(const SphericalSystem& sys) {
    ColorSet cs = colors(sys);
    int n = sys.card_sigma();
    if (n == 0) {
        if (cs.colors.empty()) return {true, {}};
        return {false, {}};
    }
    std::vector<LinearConstraint> cons;
    for (const Color& c : cs.colors)
        cons.push_back({c.functional, 1});
    for (int v = 0; v < n; ++v) {
        LinearConstraint nonneg;
        nonneg.coef.assign(n, 0);
        nonneg.coef[v] = 1;
        nonneg.rhs = 0;
        cons.push_back(std::move(nonneg));
    }
    auto point = feasible_point(cons, n);
    if (!point) return {false, {}};

    long long lcm = 1;
    for (const Rat& r : *point) lcm = std::lcm(lcm, r.den());
    std::vector<long long> witness(n);
    for (int v = 0; v < n; ++v)
        witness[v] = (Rat(lcm) * (*point)[v]).num();
    long long g = 0;
    for (long long v : witness) g = std::gcd(g, v);
    if (g > 1)
        for (long long& v : witness) v /= g;
    // The scaled point stays strictly positive on every color.
    for (const Color& c : cs.colors) {
        long long s = 0;
        for (int v = 0; v < n; ++v) s += c.functional[v] * witness[v];
        if (s <= 0) throw std::logic_error("reductivity witness failed recheck");
    }
    return {true, witness};
}

SphericalSystem direct_product(const SphericalSystem& a, const SphericalSystem& b) {
    std::vector<DynkinFactor> factors = a.root_system().factors();
    for (const auto& f : b.root_system().factors()) factors.push_back(f);
    RootSystem rs(std::move(factors));
    int na = a.root_system().rank();
    int nb = b.root_system().rank();

    std::set<int> sp = a.sp();
    for (int i : b.sp()) sp.insert(na + i);

    std::vector<Weight> sigma;
    for (const auto& sr : a.sigma()) {
        Weight w(na + nb);
        std::copy(sr.weight.coeffs.begin(), sr.weight.coeffs.end(), w.coeffs.begin());
        sigma.push_back(std::move(w));
    }
    for (const auto& sr : b.sigma()) {
        Weight w(na + nb);
        std::copy(sr.weight.coeffs.begin(), sr.weight.coeffs.end(), w.coeffs.begin() + na);
        sigma.push_back(std::move(w));
    }

    int ka = a.card_sigma();
    int kb = b.card_sigma();
    std::vector<AColor> acolors;
    for (const AColor& c : a.acolors()) {
        AColor out{"L" + c.name, std::vector<long long>(ka + kb, 0)};
        std::copy(c.row.begin(), c.row.end(), out.row.begin());
        acolors.push_back(std::move(out));
    }
    for (const AColor& c : b.acolors()) {
        AColor out{"R" + c.name, std::vector<long long>(ka + kb, 0)};
        std::copy(c.row.begin(), c.row.end(), out.row.begin() + ka);
        acolors.push_back(std::move(out));
    }
    return SphericalSystem(std::move(rs), std::move(sp), std::move(sigma), std::move(acolors));
}

} // namespace luna
