// spherical_root.cpp
//
// Part of luna, a toolkit for Luna spherical systems.
// Licensed under the Apache License, Version 2.0 (see LICENSE file).

#include "luna/spherical_root.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "luna/rational.hpp"

namespace luna {

const char* kind_name(SphericalRootKind k) {
    switch (k) {
        case SphericalRootKind::A1: return "A1";
        case SphericalRootKind::TwoA1: return "2A1";
        case SphericalRootKind::A1xA1: return "A1xA1";
        case SphericalRootKind::Am: return "Am";
        case SphericalRootKind::D3: return "D3";
        case SphericalRootKind::Bm: return "Bm";
        case SphericalRootKind::TwoBm: return "2Bm";
        case SphericalRootKind::B3third: return "B3third";
        case SphericalRootKind::Cm: return "Cm";
        case SphericalRootKind::Dm: return "Dm";
        case SphericalRootKind::F4: return "F4";
        case SphericalRootKind::G2short: return "G2short";
        case SphericalRootKind::TwoG2: return "2G2";
    }
    return "?";
}

namespace {

struct Shape {
    std::vector<int> support;
    // adjacency within the support
    std::vector<std::vector<int>> nbr;
};

Shape induced_subdiagram(const RootSystem& rs, const std::vector<int>& support) {
    Shape s;
    s.support = support;
    s.nbr.resize(support.size());
    for (size_t a = 0; a < support.size(); ++a)
        for (size_t b = 0; b < support.size(); ++b)
            if (a != b && rs.adjacent(support[a], support[b]))
                s.nbr[a].push_back(static_cast<int>(b));
    return s;
}

bool connected(const Shape& s) {
    std::vector<bool> seen(s.support.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    size_t count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : s.nbr[v])
            if (!seen[w]) { seen[w] = true; stack.push_back(w); ++count; }
    }
    return count == s.support.size();
}

// Orders a path-shaped support from one endpoint to the other; empty when
// the shape is not a path.
std::vector<int> as_path(const Shape& s) {
    int r = static_cast<int>(s.support.size());
    std::vector<int> ends;
    for (int v = 0; v < r; ++v) {
        if (static_cast<int>(s.nbr[v].size()) > 2) return {};
        if (s.nbr[v].size() == 1) ends.push_back(v);
    }
    if (r == 1) return {0};
    if (ends.size() != 2) return {};
    std::vector<int> order{ends[0]};
    int prev = -1, cur = ends[0];
    while (static_cast<int>(order.size()) < r) {
        int next = -1;
        for (int w : s.nbr[cur])
            if (w != prev) { next = w; break; }
        if (next < 0) return {};
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

struct Edge {
    long long aij, aji; // <vi^vee, vj>, <vj^vee, vi> along the path order
};

std::optional<SphericalRootKind> match_path(const RootSystem& rs, const Weight& w,
                                            const std::vector<int>& path) {
    int r = static_cast<int>(path.size());
    std::vector<long long> c(r);
    for (int k = 0; k < r; ++k) c[k] = w.coeffs[path[k] - 1];
    std::vector<Edge> e(r - 1);
    int ndouble = 0, ntriple = 0, double_pos = -1;
    for (int k = 0; k + 1 < r; ++k) {
        e[k] = {rs.cartan(path[k], path[k + 1]), rs.cartan(path[k + 1], path[k])};
        long long prod = e[k].aij * e[k].aji;
        if (prod == 2) { ++ndouble; double_pos = k; }
        else if (prod == 3) ++ntriple;
        else if (prod != 1) return std::nullopt;
    }

    if (ntriple > 0) return std::nullopt; // no shape of rank >= 3 has a triple bond

    auto all_equal = [&](long long v) {
        return std::all_of(c.begin(), c.end(), [&](long long x) { return x == v; });
    };

    if (ndouble == 0) {
        if (all_equal(1) && r >= 2) return SphericalRootKind::Am;
        if (r == 3 && c[0] == 1 && c[1] == 2 && c[2] == 1) return SphericalRootKind::D3;
        return std::nullopt;
    }
    if (ndouble > 1) return std::nullopt;

    // One double bond; the short side is the vertex whose coroot pairs -2.
    bool at_start = double_pos == 0;
    bool at_end = double_pos == r - 2;
    if (at_end || at_start) {
        // Reorient so the double bond sits between v_{r-1} and v_r.
        std::vector<long long> cc = c;
        Edge last = e[double_pos];
        if (at_start && !at_end) {
            std::reverse(cc.begin(), cc.end());
            last = {e[0].aji, e[0].aij};
        }
        bool end_short = last.aji == -2; // <v_r^vee, v_{r-1}> = -2
        if (end_short) {
            bool ones = std::all_of(cc.begin(), cc.end(), [](long long x) { return x == 1; });
            bool twos = std::all_of(cc.begin(), cc.end(), [](long long x) { return x == 2; });
            if (ones) return SphericalRootKind::Bm;
            if (twos) return SphericalRootKind::TwoBm;
            if (r == 3 && cc[0] == 1 && cc[1] == 2 && cc[2] == 3) return SphericalRootKind::B3third;
            return std::nullopt;
        }
        // Long end: alpha_1 + 2 alpha_2 + ... + 2 alpha_{r-1} + alpha_r.
        if (r >= 3 && cc[0] == 1 && cc[r - 1] == 1 &&
            std::all_of(cc.begin() + 1, cc.end() - 1, [](long long x) { return x == 2; }))
            return SphericalRootKind::Cm;
        return std::nullopt;
    }

    // Double bond strictly inside: only the F4 shape qualifies.
    if (r == 4 && double_pos == 1) {
        std::vector<long long> cc = c;
        bool v2_long = e[1].aij == -1; // <v2^vee, v3> = -1 means v2 long
        if (!v2_long) std::reverse(cc.begin(), cc.end());
        if (cc[0] == 1 && cc[1] == 2 && cc[2] == 3 && cc[3] == 2) return SphericalRootKind::F4;
    }
    return std::nullopt;
}

std::optional<SphericalRootKind> match_fork(const RootSystem& rs, const Weight& w,
                                            const Shape& s) {
    int r = static_cast<int>(s.support.size());
    int center = -1;
    for (int v = 0; v < r; ++v) {
        if (static_cast<int>(s.nbr[v].size()) >= 4) return std::nullopt;
        if (s.nbr[v].size() == 3) {
            if (center >= 0) return std::nullopt;
            center = v;
        }
    }
    if (center < 0 || r < 4) return std::nullopt;
    // All bonds simply laced.
    for (int a = 0; a < r; ++a)
        for (int b : s.nbr[a])
            if (rs.cartan(s.support[a], s.support[b]) != -1) return std::nullopt;
    // Exactly two branches are coefficient-1 leaves; the rest, including the
    // center, is a coefficient-2 chain.
    std::vector<int> leaves;
    for (int v : s.nbr[center])
        if (s.nbr[v].size() == 1 && w.coeffs[s.support[v] - 1] == 1) leaves.push_back(v);
    if (leaves.size() < 2) return std::nullopt;
    if (leaves.size() > 2) return std::nullopt; // ambiguous star, not a fork shape
    for (int v = 0; v < r; ++v) {
        if (v == leaves[0] || v == leaves[1]) continue;
        if (w.coeffs[s.support[v] - 1] != 2) return std::nullopt;
    }
    // The remaining vertices must form a path ending at the center.
    Shape chain;
    for (int v = 0; v < r; ++v)
        if (v != leaves[0] && v != leaves[1]) chain.support.push_back(s.support[v]);
    Shape chain_shape = induced_subdiagram(rs, chain.support);
    if (!connected(chain_shape)) return std::nullopt;
    if (chain_shape.support.size() > 1 && as_path(chain_shape).empty()) return std::nullopt;
    return SphericalRootKind::Dm;
}

} // namespace

namespace {

[[noreturn]] void reject_weight(size_t support_size) {
    throw NotASphericalRoot("weight with support of size " + std::to_string(support_size) +
                            " matches no recognized shape");
}

} // namespace

SphericalRoot classify(const RootSystem& rs, const Weight& w) {
    if (w.size() != rs.rank()) throw std::invalid_argument("weight length mismatch");
    if (w.is_zero()) throw NotASphericalRoot("zero weight");
    for (long long v : w.coeffs)
        if (v < 0) throw NotASphericalRoot("negative coefficient");

    std::vector<int> support = w.support();
    auto made = [&](SphericalRootKind k) {
        return SphericalRoot{w, k, support};
    };

    if (support.size() == 1) {
        long long c = w.coeffs[support[0] - 1];
        if (c == 1) return made(SphericalRootKind::A1);
        if (c == 2) return made(SphericalRootKind::TwoA1);
        reject_weight(1);
    }

    if (support.size() == 2) {
        int i = support[0], j = support[1];
        long long ci = w.coeffs[i - 1], cj = w.coeffs[j - 1];
        long long aij = rs.cartan(i, j), aji = rs.cartan(j, i);
        long long prod = aij * aji;
        if (aij == 0) {
            if (ci == 1 && cj == 1) return made(SphericalRootKind::A1xA1);
        } else if (prod == 1) {
            if (ci == 1 && cj == 1) return made(SphericalRootKind::Am);
        } else if (prod == 2) {
            if (ci == 1 && cj == 1) return made(SphericalRootKind::Bm);
            if (ci == 2 && cj == 2) return made(SphericalRootKind::TwoBm);
        } else if (prod == 3) {
            // The short root carries the larger coefficient.
            long long cs = aij == -3 ? ci : cj;
            long long cl = aij == -3 ? cj : ci;
            if (cs == 2 && cl == 1) return made(SphericalRootKind::G2short);
            if (cs == 4 && cl == 2) return made(SphericalRootKind::TwoG2);
        }
        reject_weight(2);
    }

    Shape shape = induced_subdiagram(rs, support);
    if (!connected(shape)) reject_weight(support.size());
    std::vector<int> path_order = as_path(shape);
    if (!path_order.empty()) {
        std::vector<int> path;
        for (int v : path_order) path.push_back(shape.support[v]);
        if (auto k = match_path(rs, w, path)) return made(*k);
        reject_weight(support.size());
    }
    if (auto k = match_fork(rs, w, shape)) return made(*k);
    reject_weight(support.size());
}

bool matches_some_kind(const RootSystem& rs, const Weight& w) {
    try {
        classify(rs, w);
        return true;
    } catch (const NotASphericalRoot&) {
        return false;
    }
}

bool is_primitive(const RootSystem& rs, const Weight& w) {
    if (w.is_zero()) throw std::domain_error("is_primitive: zero weight");
    long long g = 0;
    for (long long v : w.coeffs) g = std::gcd(g, v < 0 ? -v : v);
    if (g == 1) return true;
    return matches_some_kind(rs, w);
}

bool linearly_independent(std::span<const Weight> ws) {
    if (ws.empty()) return true;
    int n = ws[0].size();
    std::vector<std::vector<Rat>> m;
    for (const Weight& w : ws) {
        std::vector<Rat> row(n);
        for (int j = 0; j < n; ++j) row[j] = Rat(w.coeffs[j]);
        m.push_back(std::move(row));
    }
    size_t rank = 0;
    for (int col = 0; col < n && rank < m.size(); ++col) {
        size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == Rat(0)) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col] == Rat(0)) continue;
            Rat f = m[r][col] / m[rank][col];
            for (int j = col; j < n; ++j) m[r][j] = m[r][j] - f * m[rank][j];
        }
        ++rank;
    }
    return rank == ws.size();
}

} // namespace luna
