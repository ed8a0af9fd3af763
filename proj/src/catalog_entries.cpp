// catalog_entries.cpp — the classification list as machine-checked data
//
// Every entry records the ambient group, the system data (S^p, Sigma, A with
// pairing rows), and two independent oracles: the classical dimension of the
// subgroup and the rank of its character group. The notes state which
// classical facts the oracles encode.
//
// Part of luna, a toolkit for Luna spherical systems.
// Licensed under the Apache License, Version 2.0 (see LICENSE file).

#include "luna/catalog.hpp"

#include <initializer_list>

namespace luna {
namespace {

using TL = TypeLetter;
using std::set;
using std::vector;

RootSystem simple_rs(TL t, int n) { return RootSystem({DynkinFactor(t, n)}); }

bool valid_type_rank(int t, int r) {
    switch (t) {
        case 1: return r >= 1;           // A
        case 2: return r >= 2;           // B
        case 3: return r >= 2;           // C
        case 4: return r >= 3;           // D
        case 5: return r >= 6 && r <= 8; // E
        case 6: return r == 4;           // F
        case 7: return r == 2;           // G
        default: return false;
    }
}

long long dim_simple(int t, int n) {
    switch (t) {
        case 1: return 1ll * n * n + 2 * n;  // SL(n+1)
        case 2: return 2ll * n * n + n;      // SO(2n+1)
        case 3: return 2ll * n * n + n;      // Sp(2n)
        case 4: return 2ll * n * n - n;      // SO(2n)
        case 5: return n == 6 ? 78 : n == 7 ? 133 : 248;
        case 6: return 52;
        case 7: return 14;
        default: throw std::logic_error("bad type index");
    }
}

long long dim_gl(long long n) { return n * n; }
long long dim_so(long long n) { return n * (n - 1) / 2; }
long long dim_sp(long long m) { return m * (m + 1) / 2; } // Sp(m), m even

// Weight with 1-based (index, coefficient) terms.
Weight wt(int n, std::initializer_list<std::pair<int, long long>> terms) {
    Weight w(n);
    for (auto [i, c] : terms) w.at(i) += c;
    return w;
}

// sum of k * a_i over i in [from, to]
Weight run(int n, int from, int to, long long k = 1) {
    Weight w(n);
    for (int i = from; i <= to; ++i) w.at(i) = k;
    return w;
}

// a_i + 2 a_{i+1} + a_{i+2}
Weight d3_at(int n, int i) { return wt(n, {{i, 1}, {i + 1, 2}, {i + 2, 1}}); }

// a_from + 2 a_{from+1} + ... + 2 a_{to-1} + a_to
Weight c_chain(int n, int from, int to) {
    Weight w = run(n, from, to, 2);
    w.at(from) = 1;
    w.at(to) = 1;
    return w;
}

// 2 a_from + ... + 2 a_{to-2} + a_{to-1} + a_to (fork pair at the end)
Weight d_chain(int n, int from, int to) {
    Weight w = run(n, from, to, 2);
    w.at(to - 1) = 1;
    w.at(to) = 1;
    return w;
}

set<int> rng(int from, int to) {
    set<int> s;
    for (int i = from; i <= to; ++i) s.insert(i);
    return s;
}

set<int> odds(int from, int to) {
    set<int> s;
    for (int i = from; i <= to; i += 2) s.insert(i);
    return s;
}

set<int> join(set<int> a, const set<int>& b) {
    a.insert(b.begin(), b.end());
    return a;
}

// Pairing row with 1-based sigma positions.
vector<long long> row(int nsigma, std::initializer_list<std::pair<int, long long>> terms) {
    vector<long long> r(nsigma, 0);
    for (auto [j, v] : terms) r[j - 1] = v;
    return r;
}

SphericalSystem doubled_all(RootSystem rs) {
    vector<Weight> sigma;
    for (int i = 1; i <= rs.rank(); ++i) sigma.push_back(wt(rs.rank(), {{i, 2}}));
    return SphericalSystem(std::move(rs), {}, std::move(sigma), {});
}

CatalogEntry make(int id, std::string label, vector<ParamSpec> params,
                  std::function<bool(const Params&)> constraint,
                  std::function<RootSystem(const Params&)> group_of,
                  std::function<SphericalSystem(const Params&)> system_of,
                  std::function<long long(const Params&)> dim,
                  std::function<int(const Params&)> rank, std::string notes) {
    CatalogEntry e;
    e.id = id;
    e.label = std::move(label);
    e.params = std::move(params);
    e.constraint = std::move(constraint);
    e.group_of = std::move(group_of);
    e.system_of = std::move(system_of);
    e.expected_dim = std::move(dim);
    e.expected_rank = std::move(rank);
    e.notes = std::move(notes);
    return e;
}

const std::function<bool(const Params&)> always{};

// ---- shared builders for the recurring shapes ----------------------------

// Items 16/17: the quadric root a_1+...+a_p over B_p, doubled for the
// normalizer.
SphericalSystem quadric(int p, long long mult) {
    RootSystem rs = simple_rs(TL::B, p);
    return SphericalSystem(std::move(rs), rng(2, p), {run(p, 1, p, mult)}, {});
}

// Items 18..21 share the B_p shape {a1 or 2a1, 2(a2+...+ap)}.
SphericalSystem so_odd_pair(int p, bool doubled_first) {
    RootSystem rs = simple_rs(TL::B, p);
    vector<Weight> sigma{wt(p, {{1, doubled_first ? 2ll : 1ll}}), run(p, 2, p, 2)};
    vector<AColor> a;
    if (!doubled_first) {
        a.push_back({"Dp", row(2, {{1, 1}, {2, -1}})});
        a.push_back({"Dm", row(2, {{1, 1}, {2, -1}})});
    }
    return SphericalSystem(std::move(rs), rng(3, p), std::move(sigma), std::move(a));
}

// Items 24/25: the a2-comb over B_p ending with a_p or 2a_p.
SphericalSystem gl_in_so_odd(int p, bool normalized) {
    RootSystem rs = simple_rs(TL::B, p);
    vector<Weight> sigma;
    for (int i = 1; i < p; ++i) sigma.push_back(wt(p, {{i, 1}, {i + 1, 1}}));
    sigma.push_back(wt(p, {{p, normalized ? 2ll : 1ll}}));
    vector<AColor> a;
    if (!normalized) {
        vector<long long> r(p, 0);
        if (p >= 3) r[p - 3] = -1;
        r[p - 1] = 1;
        a.push_back({"Dp", r});
        a.push_back({"Dm", r});
    }
    return SphericalSystem(std::move(rs), {}, std::move(sigma), std::move(a));
}

// Items 32/33: d3 comb over C_{2p} with the end root a_{2p-1}+a_{2p}, doubled
// for the normalizer.
SphericalSystem sp_half_pair(int p, long long mult) {
    int n = 2 * p;
    RootSystem rs = simple_rs(TL::C, n);
    vector<Weight> sigma;
    for (int i = 1; i < p; ++i) sigma.push_back(d3_at(n, 2 * i - 1));
    sigma.push_back(wt(n, {{n - 1, mult}, {n, mult}}));
    return SphericalSystem(std::move(rs), odds(1, n - 1), std::move(sigma), {});
}

// Items 40/41: {a1 or 2a1, full c-chain} over C_{p+1}.
SphericalSystem gl1_sp(int p, bool normalized) {
    int n = p + 1;
    RootSystem rs = simple_rs(TL::C, n);
    vector<Weight> sigma{wt(n, {{1, normalized ? 2ll : 1ll}}), c_chain(n, 1, n)};
    vector<AColor> a;
    if (!normalized) {
        a.push_back({"Dp", row(2, {{1, 1}})});
        a.push_back({"Dm", row(2, {{1, 1}})});
    }
    return SphericalSystem(std::move(rs), rng(3, n), std::move(sigma), std::move(a));
}

// Items 52/53: {a1 or 2a1, d-chain} over D_{p+1}.
SphericalSystem gl1_so_even(int p, bool normalized) {
    int n = p + 1;
    RootSystem rs = simple_rs(TL::D, n);
    vector<Weight> sigma{wt(n, {{1, normalized ? 2ll : 1ll}}), d_chain(n, 2, n)};
    vector<AColor> a;
    if (!normalized) {
        a.push_back({"Dp", row(2, {{1, 1}, {2, -1}})});
        a.push_back({"Dm", row(2, {{1, 1}, {2, -1}})});
    }
    return SphericalSystem(std::move(rs), rng(3, n), std::move(sigma), std::move(a));
}

// Items 58/59: d3 comb over D_{2p} ending with a_{2p} or 2a_{2p}.
SphericalSystem gl_in_so_even(int p, bool normalized) {
    int n = 2 * p;
    RootSystem rs = simple_rs(TL::D, n);
    vector<Weight> sigma;
    for (int i = 1; i < p; ++i) sigma.push_back(d3_at(n, 2 * i - 1));
    sigma.push_back(wt(n, {{n, normalized ? 2ll : 1ll}}));
    vector<AColor> a;
    if (!normalized) {
        a.push_back({"Dp", row(p, {{p - 1, -1}, {p, 1}})});
        a.push_back({"Dm", row(p, {{p - 1, -1}, {p, 1}})});
    }
    set<int> sp = odds(1, n - 3);
    sp.insert(n - 1);
    return SphericalSystem(std::move(rs), std::move(sp), std::move(sigma), std::move(a));
}

// Items 68/69: the two E7 dm-roots plus a7 or 2a7.
SphericalSystem e7_gl1_e6(bool normalized) {
    RootSystem rs = simple_rs(TL::E, 7);
    vector<Weight> sigma{
        wt(7, {{1, 2}, {2, 1}, {3, 2}, {4, 2}, {5, 1}}),
        wt(7, {{2, 1}, {3, 1}, {4, 2}, {5, 2}, {6, 2}}),
        wt(7, {{7, normalized ? 2ll : 1ll}})};
    vector<AColor> a;
    if (!normalized) {
        a.push_back({"Dp", row(3, {{2, -1}, {3, 1}})});
        a.push_back({"Dm", row(3, {{2, -1}, {3, 1}})});
    }
    return SphericalSystem(std::move(rs), {2, 3, 4, 5}, std::move(sigma), std::move(a));
}

vector<CatalogEntry> build_catalog() {
    vector<CatalogEntry> cat;

    cat.push_back(make(
        1, "G ⊂ G", {{"t", 1}, {"n", 1}},
        [](const Params& p) { return p[0] <= 7 && valid_type_rank(p[0], p[1]); },
        [](const Params& p) { return simple_rs(static_cast<TL>(p[0] - 1), p[1]); },
        [](const Params& p) {
            RootSystem rs = simple_rs(static_cast<TL>(p[0] - 1), p[1]);
            set<int> sp = rng(1, rs.rank());
            return SphericalSystem(std::move(rs), std::move(sp), {}, {});
        },
        [](const Params& p) { return dim_simple(p[0], p[1]); },
        [](const Params&) { return 0; },
        "H = G: full dimension, no characters."));

    cat.push_back(make(
        2, "G ⊂ G × G, diagonal", {{"t", 1}, {"n", 1}},
        [](const Params& p) { return p[0] <= 7 && valid_type_rank(p[0], p[1]); },
        [](const Params& p) {
            DynkinFactor f(static_cast<TL>(p[0] - 1), p[1]);
            return RootSystem({f, f});
        },
        [](const Params& p) {
            DynkinFactor f(static_cast<TL>(p[0] - 1), p[1]);
            RootSystem rs({f, f});
            int n = p[1];
            vector<Weight> sigma;
            for (int i = 1; i <= n; ++i) sigma.push_back(wt(2 * n, {{i, 1}, {n + i, 1}}));
            return SphericalSystem(std::move(rs), {}, std::move(sigma), {});
        },
        [](const Params& p) { return dim_simple(p[0], p[1]); },
        [](const Params&) { return 0; },
        "Diagonal copy: dim G; adjoint G has no characters; colors merge in pairs."));

    cat.push_back(make(
        3, "GL(1) ⊂ SL(2)", {}, always,
        [](const Params&) { return simple_rs(TL::A, 1); },
        [](const Params&) {
            RootSystem rs = simple_rs(TL::A, 1);
            vector<AColor> a{{"Dp", row(1, {{1, 1}})}, {"Dm", row(1, {{1, 1}})}};
            return SphericalSystem(std::move(rs), {}, {wt(1, {{1, 1}})}, std::move(a));
        },
        [](const Params&) { return 1; }, [](const Params&) { return 1; },
        "dim GL(1) = 1, character rank 1."));

    cat.push_back(make(
        4, "N(GL(1)) ⊂ SL(2)", {}, always,
        [](const Params&) { return simple_rs(TL::A, 1); },
        [](const Params&) {
            RootSystem rs = simple_rs(TL::A, 1);
            return SphericalSystem(std::move(rs), {}, {wt(1, {{1, 2}})}, {});
        },
        [](const Params&) { return 1; }, [](const Params&) { return 0; },
        "dim 1; the Weyl flip inverts the torus and kills the character."));

    cat.push_back(make(
        5, "GL(p) ⊂ SL(p+1)", {{"p", 2}}, always,
        [](const Params& p) { return simple_rs(TL::A, p[0]); },
        [](const Params& p) {
            int n = p[0];
            return SphericalSystem(simple_rs(TL::A, n), rng(2, n - 1), {run(n, 1, n)}, {});
        },
        [](const Params& p) { return dim_gl(p[0]); }, [](const Params&) { return 1; },
        "dim GL(p) = p^2, rank 1 (det)."));

    cat.push_back(make(
        6, "S(GL(p)×GL(p)) ⊂ SL(2p)", {{"p", 2}}, always,
        [](const Params& p) { return simple_rs(TL::A, 2 * p[0] - 1); },
        [](const Params& pr) {
            int p = pr[0], n = 2 * p - 1;
            vector<Weight> sigma;
            for (int i = 1; i < p; ++i) sigma.push_back(wt(n, {{i, 1}, {2 * p - i, 1}}));
            sigma.push_back(wt(n, {{p, 1}}));
            vector<AColor> a{{"Dp", row(p, {{p - 1, -1}, {p, 1}})},
                             {"Dm", row(p, {{p - 1, -1}, {p, 1}})}};
            return SphericalSystem(simple_rs(TL::A, n), {}, std::move(sigma), std::move(a));
        },
        [](const Params& p) { return 2ll * p[0] * p[0] - 1; }, [](const Params&) { return 1; },
        "dim = 2p^2-1, rank 1 (block determinant)."));

    cat.push_back(make(
        7, "N(S(GL(p)×GL(p))) ⊂ SL(2p)", {{"p", 2}}, always,
        [](const Params& p) { return simple_rs(TL::A, 2 * p[0] - 1); },
        [](const Params& pr) {
            int p = pr[0], n = 2 * p - 1;
            vector<Weight> sigma;
            for (int i = 1; i < p; ++i) sigma.push_back(wt(n, {{i, 1}, {2 * p - i, 1}}));
            sigma.push_back(wt(n, {{p, 2}}));
            return SphericalSystem(simple_rs(TL::A, n), {}, std::move(sigma), {});
        },
        [](const Params& p) { return 2ll * p[0] * p[0] - 1; }, [](const Params&) { return 0; },
        "Block swap inverts the determinant character: rank 0."));

    cat.push_back(make(
        8, "S(GL(p)×GL(q)) ⊂ SL(p+q)", {{"p", 2}, {"q", 3}},
        [](const Params& p) { return p[0] < p[1]; },
        [](const Params& p) { return simple_rs(TL::A, p[0] + p[1] - 1); },
        [](const Params& pr) {
            int p = pr[0], q = pr[1], n = p + q - 1;
            vector<Weight> sigma;
            for (int i = 1; i < p; ++i) sigma.push_back(wt(n, {{i, 1}, {p + q - i, 1}}));
            sigma.push_back(run(n, p, q));
            return SphericalSystem(simple_rs(TL::A, n), rng(p + 1, q - 1), std::move(sigma), {});
        },
        [](const Params& p) { return dim_gl(p[0]) + dim_gl(p[1]) - 1; },
        [](const Params&) { return 1; },
        "dim = p^2+q^2-1, rank 1; card Sigma = p."));

    cat.push_back(make(
        9, "N(SO(p)) ⊂ SL(p)", {{"p", 3}}, always,
        [](const Params& p) { return simple_rs(TL::A, p[0] - 1); },
        [](const Params& p) { return doubled_all(simple_rs(TL::A, p[0] - 1)); },
        [](const Params& p) { return dim_so(p[0]); }, [](const Params&) { return 0; },
        "dim SO(p) = p(p-1)/2, rank 0; all simple roots doubled."));

    cat.push_back(make(
        10, "N(Sp(2p)) ⊂ SL(2p)", {{"p", 2}}, always,
        [](const Params& p) { return simple_rs(TL::A, 2 * p[0] - 1); },
        [](const Params& pr) {
            int p = pr[0], n = 2 * p - 1;
            vector<Weight> sigma;
            for (int i = 1; i < p; ++i) sigma.push_back(d3_at(n, 2 * i - 1));
            return SphericalSystem(simple_rs(TL::A, n), odds(1, n), std::move(sigma), {});
        },
        [](const Params& p) { return dim_sp(2 * p[0]); }, [](const Params&) { return 0; },
        "dim Sp(2p) = p(2p+1), rank 0."));

    cat.push_back(make(
        11, "N(GL(1)×Sp(2p)) ⊂ SL(2p+1)", {{"p", 2}}, always,
        [](const Params& p) { return simple_rs(TL::A, 2 * p[0]); },
        [](const Params& p) {
            int n = 2 * p[0];
            vector<Weight> sigma;
            for (int i = 1; i < n; ++i) sigma.push_back(wt(n, {{i, 1}, {i + 1, 1}}));
            return SphericalSystem(simple_rs(TL::A, n), {}, std::move(sigma), {});
        },
        [](const Params& p) { return 1 + dim_sp(2 * p[0]); }, [](const Params&) { return 1; },
        "dim = 1 + p(2p+1); no element of SL(2p+1) inverts the central torus, so the "
        "character rank stays 1."));

    cat.push_back(make(
        12, "N(SL(2)) ⊂ SL(2)×SL(2)×SL(2), diagonal", {}, always,
        [](const Params&) {
            DynkinFactor f(TL::A, 1);
            return RootSystem({f, f, f});
        },
        [](const Params&) {
            DynkinFactor f(TL::A, 1);
            RootSystem rs({f, f, f});
            vector<Weight> sigma{wt(3, {{1, 1}}), wt(3, {{2, 1}}), wt(3, {{3, 1}})};
            vector<AColor> a{{"D1", row(3, {{1, 1}, {2, 1}, {3, -1}})},
                             {"D2", row(3, {{1, 1}, {2, -1}, {3, 1}})},
                             {"D3", row(3, {{1, -1}, {2, 1}, {3, 1}})}};
            return SphericalSystem(std::move(rs), {}, std::move(sigma), std::move(a));
        },
        [](const Params&) { return 3; }, [](const Params&) { return 0; },
        "dim SL(2) = 3, rank 0; the shared colors form a triangle."));

    cat.push_back(make(
        13, "GL(1)×SL(2)×SL(2) ⊂ SL(4)×SL(2)", {}, always,
        [](const Params&) { return RootSystem({{TL::A, 3}, {TL::A, 1}}); },
        [](const Params&) {
            RootSystem rs({{TL::A, 3}, {TL::A, 1}});
            vector<Weight> sigma{wt(4, {{1, 1}}), wt(4, {{2, 1}}), wt(4, {{3, 1}}),
                                 wt(4, {{4, 1}})};
            vector<AColor> a{{"D1", row(4, {{1, 1}, {2, -1}, {3, 1}, {4, -1}})},
                             {"D2", row(4, {{1, 1}, {3, -1}, {4, 1}})},
                             {"D3", row(4, {{1, -1}, {3, 1}, {4, 1}})},
                             {"D4", row(4, {{1, -1}, {2, 1}})},
                             {"D5", row(4, {{2, 1}, {3, -1}})}};
            return SphericalSystem(std::move(rs), {}, std::move(sigma), std::move(a));
        },
        [](const Params&) { return 7; }, [](const Params&) { return 1; },
        "dim = 1+3+3, rank 1 (the GL(1))."));

    cat.push_back(make(
        14, "GL(1)×SL(2)×SL(p) ⊂ SL(p+2)×SL(2)", {{"p", 3}}, always,
        [](const Params& p) { return RootSystem({{TL::A, p[0] + 1}, {TL::A, 1}}); },
        [](const Params& pr) {
            int p = pr[0], n = p + 2;
            RootSystem rs({{TL::A, p + 1}, {TL::A, 1}});
            vector<Weight> sigma{wt(n, {{1, 1}}), run(n, 2, p), wt(n, {{p + 1, 1}}),
                                 wt(n, {{p + 2, 1}})};
            vector<AColor> a{{"D1", row(4, {{1, 1}, {2, -1}, {3, 1}, {4, -1}})},
                             {"D2", row(4, {{1, 1}, {3, -1}, {4, 1}})},
                             {"D3", row(4, {{1, -1}, {3, 1}, {4, 1}})}};
            return SphericalSystem(std::move(rs), rng(3, p - 1), std::move(sigma), std::move(a));
        },
        [](const Params& p) { return dim_gl(p[0]) + 3; }, [](const Params&) { return 1; },
        "dim = 1 + 3 + (p^2-1), rank 1."));

    cat.push_back(make(
        15, "SL(p)×GL(1) ⊂ SL(p)×SL(p+1), diagonal", {{"p", 2}}, always,
        [](const Params& p) { return RootSystem({{TL::A, p[0] - 1}, {TL::A, p[0]}}); },
        [](const Params& pr) {
            int p = pr[0];
            int n = 2 * p - 1;              // (p-1) + p
            auto g = [&](int j) { return p - 1 + j; }; // primed roots
            RootSystem rs({{TL::A, p - 1}, {TL::A, p}});
            vector<Weight> sigma;
            for (int i = 1; i <= p - 1; ++i) sigma.push_back(wt(n, {{i, 1}}));
            for (int j = 1; j <= p; ++j) sigma.push_back(wt(n, {{g(j), 1}}));
            int k = n;
            auto su = [&](int i) { return i; };          // sigma position of a_i
            auto sg = [&](int j) { return p - 1 + j; };  // sigma position of a'_j
            vector<AColor> a;
            for (int i = 1; i <= p - 1; ++i) { // above pair {Ab a_i, Ab a'_{p+1-i}}
                vector<long long> r(k, 0);
                r[su(i) - 1] = 1;
                r[sg(p + 1 - i) - 1] = 1;
                if (i >= 2) r[su(i - 1) - 1] = -1;
                r[sg(p - i) - 1] = -1;
                a.push_back({"AP" + std::to_string(i), std::move(r)});
            }
            for (int i = 1; i <= p - 1; ++i) { // below pair {Be a_i, Be a'_{p-i}}
                vector<long long> r(k, 0);
                r[su(i) - 1] = 1;
                r[sg(p - i) - 1] = 1;
                if (i <= p - 2) r[su(i + 1) - 1] = -1;
                r[sg(p + 1 - i) - 1] = -1;
                a.push_back({"BP" + std::to_string(i), std::move(r)});
            }
            a.push_back({"AS", row(k, {{sg(1), 1}, {su(p - 1), -1}})});
            a.push_back({"BS", row(k, {{sg(p), 1}, {su(1), -1}})});
            return SphericalSystem(std::move(rs), {}, std::move(sigma), std::move(a));
        },
        [](const Params& p) { return dim_gl(p[0]); }, [](const Params&) { return 1; },
        "dim = (p^2-1) + 1, rank 1; staircase of shared colors."));

    cat.push_back(make(
        16, "SO(2p) ⊂ SO(2p+1)", {{"p", 2}}, always,
        [](const Params& p) { return simple_rs(TL::B, p[0]); },
        [](const Params& p) { return quadric(p[0], 1); },
        [](const Params& p) { return dim_so(2 * p[0]); }, [](const Params&) { return 0; },
        "dim SO(2p) = p(2p-1), rank 0."));

    cat.push_back(make(
        17, "N(SO(2p)) ⊂ SO(2p+1)", {{"p", 2}}, always,
        [](const Params& p) { return simple_rs(TL::B, p[0]); },
        [](const Params& p) { return quadric(p[0], 2); },
        [](const Params& p) { return dim_so(2 * p[0]); }, [](const Params&) { return 0; },
        "O(2p): same dimension, still no characters."));

    cat.push_back(make(
        18, "GL(1)×SO(3) ⊂ SO(5)", {}, always,
        [](const Params&) { return simple_rs(TL::B, 2); },
        [](const Params&) { return so_odd_pair(2, false); },
        [](const Params&) { return 4; }, [](const Params&) { return 1; },
        "dim = 1 + 3, rank 1."));

    cat.push_back(make(
        19, "N(GL(1)×SO(3)) ⊂ SO(5)", {}, always,
        [](const Params&) { return simple_rs(TL::B, 2); },
        [](const Params&) { return so_odd_pair(2, true); },
        [](const Params&) { return 4; }, [](const Params&) { return 0; },
        "Torus inverted by the normalizer: rank 0."));

    cat.push_back(make(
        20, "GL(1)×SO(2p-1) ⊂ SO(2p+1)", {{"p", 2}}, always,
        [](const Params& p) { return simple_rs(TL::B, p[0]); },
        [](const Params& p) { return so_odd_pair(p[0], false); },
        [](const Params& p) { return 1 + dim_so(2 * p[0] - 1); },
        [](const Params&) { return 1; },
        "dim = 1 + (2p-1)(p-1), rank 1."));

    cat.push_back(make(
        21, "N(GL(1)×SO(2p-1)) ⊂ SO(2p+1)", {{"p", 2}}, always,
        [](const Params& p) { return simple_rs(TL::B, p[0]); },
        [](const Params& p) { return so_odd_pair(p[0], true); },
        [](const Params& p) { return 1 + dim_so(2 * p[0] - 1); },
        [](const Params&) { return 0; },
        "Torus inverted by the normalizer: rank 0."));

    cat.push_back(make(
        22, "N(SO(p)×SO(p+1)) ⊂ SO(2p+1)", {{"p", 3}}, always,
        [](const Params& p) { return simple_rs(TL::B, p[0]); },
        [](const Params& p) { return doubled_all(simple_rs(TL::B, p[0])); },
        [](const Params& p) { return dim_so(p[0]) + dim_so(p[0] + 1); },
        [](const Params&) { return 0; },
        "dim = p(p-1)/2 + p(p+1)/2 = p^2, rank 0."));

    cat.push_back(make(
        23, "N(SO(p)×SO(2q+1-p)) ⊂ SO(2q+1)", {{"p", 3}, {"q", 4}},
        [](const Params& p) { return 2 < p[0] && p[0] < p[1]; },
        [](const Params& p) { return simple_rs(TL::B, p[1]); },
        [](const Params& pr) {
            int p = pr[0], q = pr[1];
            vector<Weight> sigma;
            for (int i = 1; i < p; ++i) sigma.push_back(wt(q, {{i, 2}}));
            sigma.push_back(run(q, p, q, 2));
            return SphericalSystem(simple_rs(TL::B, q), rng(p + 1, q), std::move(sigma), {});
        },
        [](const Params& p) { return dim_so(p[0]) + dim_so(2 * p[1] + 1 - p[0]); },
        [](const Params&) { return 0; },
        "dim = dim SO(p) + dim SO(2q+1-p), rank 0; card Sigma = p."));

    cat.push_back(make(
        24, "GL(p) ⊂ SO(2p+1)", {{"p", 2}}, always,
        [](const Params& p) { return simple_rs(TL::B, p[0]); },
        [](const Params& p) { return gl_in_so_odd(p[0], false); },
        [](const Params& p) { return dim_gl(p[0]); }, [](const Params&) { return 1; },
        "dim GL(p) = p^2, rank 1."));

    cat.push_back(make(
        25, "N(GL(p)) ⊂ SO(2p+1)", {{"p", 2}}, always,
        [](const Params& p) { return simple_rs(TL::B, p[0]); },
        [](const Params& p) { return gl_in_so_odd(p[0], true); },
        [](const Params& p) { return dim_gl(p[0]); }, [](const Params&) { return 0; },
        "Determinant character inverted: rank 0."));

    cat.push_back(make(
        26, "G2 ⊂ SO(7)", {}, always,
        [](const Params&) { return simple_rs(TL::B, 3); },
        [](const Params&) {
            return SphericalSystem(simple_rs(TL::B, 3), {1, 2},
                                   {wt(3, {{1, 1}, {2, 2}, {3, 3}})}, {});
        },
        [](const Params&) { return 14; }, [](const Params&) { return 0; },
        "dim G2 = 14, rank 0."));

    cat.push_back(make(
        27, "Spin(7) ⊂ SO(9)", {}, always,
        [](const Params&) { return simple_rs(TL::B, 4); },
        [](const Params&) {
            vector<Weight> sigma{run(4, 1, 4), wt(4, {{2, 1}, {3, 2}, {4, 3}})};
            return SphericalSystem(simple_rs(TL::B, 4), {2, 3}, std::move(sigma), {});
        },
        [](const Params&) { return 21; }, [](const Params&) { return 0; },
        "dim Spin(7) = 21, rank 0."));

    // Items 28-30: small diagonal SO cases over B2/B3 x (A1 A1 / A3).
    cat.push_back(make(
        28, "N(SO(4)) ⊂ SO(5)×SO(4), diagonal", {}, always,
        [](const Params&) { return RootSystem({{TL::B, 2}, {TL::A, 1}, {TL::A, 1}}); },
        [](const Params&) {
            RootSystem rs({{TL::B, 2}, {TL::A, 1}, {TL::A, 1}});
            vector<Weight> sigma{wt(4, {{1, 1}}), wt(4, {{2, 1}}), wt(4, {{3, 1}}),
                                 wt(4, {{4, 1}})};
            vector<AColor> a{{"D1", row(4, {{1, 1}, {2, -1}, {3, 1}, {4, 1}})},
                             {"D2", row(4, {{1, -1}, {2, 1}, {3, 1}, {4, -1}})},
                             {"D3", row(4, {{1, -1}, {2, 1}, {3, -1}, {4, 1}})},
                             {"D4", row(4, {{1, 1}, {3, -1}, {4, -1}})}};
            return SphericalSystem(std::move(rs), {}, std::move(sigma), std::move(a));
        },
        [](const Params&) { return 6; }, [](const Params&) { return 0; },
        "dim SO(4) = 6, rank 0."));

    cat.push_back(make(
        29, "N(SO(5)) ⊂ SO(5)×SO(6), diagonal", {}, always,
        [](const Params&) { return RootSystem({{TL::B, 2}, {TL::A, 3}}); },
        [](const Params&) {
            RootSystem rs({{TL::B, 2}, {TL::A, 3}});
            vector<Weight> sigma;
            for (int i = 1; i <= 5; ++i) sigma.push_back(wt(5, {{i, 1}}));
            vector<AColor> a{{"D1", row(5, {{1, 1}, {2, -1}, {3, 1}, {4, -1}, {5, 1}})},
                             {"D2", row(5, {{1, -1}, {2, 1}, {3, 1}, {5, -1}})},
                             {"D3", row(5, {{1, 1}, {3, -1}, {4, 1}, {5, -1}})},
                             {"D4", row(5, {{1, -1}, {2, 1}, {3, -1}, {5, 1}})},
                             {"D5", row(5, {{1, -1}, {4, 1}})}};
            return SphericalSystem(std::move(rs), {}, std::move(sigma), std::move(a));
        },
        [](const Params&) { return 10; }, [](const Params&) { return 0; },
        "dim SO(5) = 10, rank 0."));

    cat.push_back(make(
        30, "N(SO(6)) ⊂ SO(7)×SO(6), diagonal", {}, always,
        [](const Params&) { return RootSystem({{TL::B, 3}, {TL::A, 3}}); },
        [](const Params&) {
            RootSystem rs({{TL::B, 3}, {TL::A, 3}});
            vector<Weight> sigma;
            for (int i = 1; i <= 6; ++i) sigma.push_back(wt(6, {{i, 1}}));
            vector<AColor> a{
                {"D1", row(6, {{2, 1}, {3, -1}, {4, 1}, {5, -1}, {6, 1}})},
                {"D2", row(6, {{1, 1}, {2, -1}, {5, 1}})},
                {"D3", row(6, {{2, -1}, {3, 1}, {4, 1}, {6, -1}})},
                {"D4", row(6, {{1, -1}, {2, 1}, {4, -1}, {5, 1}, {6, -1}})},
                {"D5", row(6, {{2, -1}, {3, 1}, {4, -1}, {6, 1}})},
                {"D6", row(6, {{1, 1}, {5, -1}})}};
            return SphericalSystem(std::move(rs), {}, std::move(sigma), std::move(a));
        },
        [](const Params&) { return 15; }, [](const Params&) { return 0; },
        "dim SO(6) = 15, rank 0."));

    cat.push_back(make(
        31, "SL(2)×Sp(2p) ⊂ Sp(2p+2)", {{"p", 2}}, always,
        [](const Params& p) { return simple_rs(TL::C, p[0] + 1); },
        [](const Params& p) {
            int n = p[0] + 1;
            set<int> sp = join({1}, rng(3, n));
            return SphericalSystem(simple_rs(TL::C, n), std::move(sp), {c_chain(n, 1, n)}, {});
        },
        [](const Params& p) { return 3 + dim_sp(2 * p[0]); }, [](const Params&) { return 0; },
        "dim = 3 + p(2p+1), rank 0."));

    cat.push_back(make(
        32, "Sp(2p)×Sp(2p) ⊂ Sp(4p)", {{"p", 2}}, always,
        [](const Params& p) { return simple_rs(TL::C, 2 * p[0]); },
        [](const Params& p) { return sp_half_pair(p[0], 1); },
        [](const Params& p) { return 2 * dim_sp(2 * p[0]); }, [](const Params&) { return 0; },
        "dim = 2 p(2p+1), rank 0."));

    cat.push_back(make(
        33, "N(Sp(2p)×Sp(2p)) ⊂ Sp(4p)", {{"p", 2}}, always,
        [](const Params& p) { return simple_rs(TL::C, 2 * p[0]); },
        [](const Params& p) { return sp_half_pair(p[0], 2); },
        [](const Params& p) { return 2 * dim_sp(2 * p[0]); }, [](const Params&) { return 0; },
        "Same dimension and rank; the end root doubles."));

    cat.push_back(make(
        34, "Sp(2p)×Sp(2q) ⊂ Sp(2p+2q)", {{"p", 2}, {"q", 3}},
        [](const Params& p) { return p[0] < p[1]; },
        [](const Params& p) { return simple_rs(TL::C, p[0] + p[1]); },
        [](const Params& pr) {
            int p = pr[0], q = pr[1], n = p + q;
            vector<Weight> sigma;
            for (int i = 1; i < p; ++i) sigma.push_back(d3_at(n, 2 * i - 1));
            sigma.push_back(c_chain(n, 2 * p - 1, n));
            set<int> sp = join(odds(1, 2 * p - 1), rng(2 * p + 1, n));
            return SphericalSystem(simple_rs(TL::C, n), std::move(sp), std::move(sigma), {});
        },
        [](const Params& p) { return dim_sp(2 * p[0]) + dim_sp(2 * p[1]); },
        [](const Params&) { return 0; },
        "dim = p(2p+1) + q(2q+1), rank 0; card Sigma = p."));

    cat.push_back(make(
        35, "GL(p) ⊂ Sp(2p)", {{"p", 3}}, always,
        [](const Params& p) { return simple_rs(TL::C, p[0]); },
        [](const Params& pr) {
            int p = pr[0];
            vector<Weight> sigma;
            for (int i = 1; i < p; ++i) sigma.push_back(wt(p, {{i, 2}}));
            sigma.push_back(wt(p, {{p, 1}}));
            vector<AColor> a{{"Dp", row(p, {{p - 1, -1}, {p, 1}})},
                             {"Dm", row(p, {{p - 1, -1}, {p, 1}})}};
            return SphericalSystem(simple_rs(TL::C, p), {}, std::move(sigma), std::move(a));
        },
        [](const Params& p) { return dim_gl(p[0]); }, [](const Params&) { return 1; },
        "dim GL(p) = p^2, rank 1."));

    cat.push_back(make(
        36, "N(GL(p)) ⊂ Sp(2p)", {{"p", 3}}, always,
        [](const Params& p) { return simple_rs(TL::C, p[0]); },
        [](const Params& p) { return doubled_all(simple_rs(TL::C, p[0])); },
        [](const Params& p) { return dim_gl(p[0]); }, [](const Params&) { return 0; },
        "Determinant inverted: rank 0; all simple roots doubled."));

    cat.push_back(make(
        37, "N(Sp(4)×Sp(2)) ⊂ Sp(4)×Sp(6), diagonal", {}, always,
        [](const Params&) { return RootSystem({{TL::B, 2}, {TL::C, 3}}); },
        [](const Params&) {
            RootSystem rs({{TL::B, 2}, {TL::C, 3}});
            vector<Weight> sigma;
            for (int i = 1; i <= 5; ++i) sigma.push_back(wt(5, {{i, 1}}));
            vector<AColor> a{{"D1", row(5, {{1, 1}, {2, -1}, {3, 1}, {4, -1}, {5, 1}})},
                             {"D2", row(5, {{1, -1}, {2, 1}, {3, 1}, {5, -1}})},
                             {"D3", row(5, {{1, 1}, {3, -1}, {4, 1}, {5, -1}})},
                             {"D4", row(5, {{1, -1}, {2, 1}, {3, -1}, {5, 1}})},
                             {"D5", row(5, {{1, -1}, {4, 1}, {5, -1}})}};
            return SphericalSystem(std::move(rs), {}, std::move(sigma), std::move(a));
        },
        [](const Params&) { return 13; }, [](const Params&) { return 0; },
        "dim = 10 + 3, rank 0; the Sp(4) factor carries the B2 labeling."));

    cat.push_back(make(
        38, "N(SL(2)×Sp(2p)) ⊂ SL(2)×Sp(2p+2)", {{"p", 2}}, always,
        [](const Params& p) { return RootSystem({{TL::A, 1}, {TL::C, p[0] + 1}}); },
        [](const Params& pr) {
            int p = pr[0], n = p + 2; // 1 + (p+1)
            RootSystem rs({{TL::A, 1}, {TL::C, p + 1}});
            vector<Weight> sigma{wt(n, {{1, 1}, {2, 1}}), c_chain(n, 2, n)};
            return SphericalSystem(std::move(rs), rng(4, n), std::move(sigma), {});
        },
        [](const Params& p) { return 3 + dim_sp(2 * p[0]); }, [](const Params&) { return 0; },
        "dim = 3 + p(2p+1), rank 0; the diagonal SL(2) merges colors across factors."));

    cat.push_back(make(
        39, "N(SL(2)×Sp(2p)×Sp(2q)) ⊂ Sp(2p+2)×Sp(2q+2)", {{"p", 2}, {"q", 2}}, always,
        [](const Params& p) {
            return RootSystem({{TL::C, p[0] + 1}, {TL::C, p[1] + 1}});
        },
        [](const Params& pr) {
            int p = pr[0], q = pr[1], n = p + q + 2;
            int off = p + 1;
            RootSystem rs({{TL::C, p + 1}, {TL::C, q + 1}});
            vector<Weight> sigma{wt(n, {{1, 1}, {off + 1, 1}}), c_chain(n, 1, p + 1)};
            Weight ce(n);
            for (int j = 1; j <= q + 1; ++j) ce.at(off + j) = 2;
            ce.at(off + 1) = 1;
            ce.at(off + q + 1) = 1;
            sigma.push_back(std::move(ce));
            set<int> sp = join(rng(3, p + 1), rng(off + 3, n));
            return SphericalSystem(std::move(rs), std::move(sp), std::move(sigma), {});
        },
        [](const Params& p) { return 3 + dim_sp(2 * p[0]) + dim_sp(2 * p[1]); },
        [](const Params&) { return 0; },
        "dim = 3 + p(2p+1) + q(2q+1), rank 0."));

    cat.push_back(make(
        40, "GL(1)×Sp(2p) ⊂ Sp(2p+2)", {{"p", 2}}, always,
        [](const Params& p) { return simple_rs(TL::C, p[0] + 1); },
        [](const Params& p) { return gl1_sp(p[0], false); },
        [](const Params& p) { return 1 + dim_sp(2 * p[0]); }, [](const Params&) { return 1; },
        "dim = 1 + p(2p+1), rank 1."));

    cat.push_back(make(
        41, "N(GL(1)×Sp(2p)) ⊂ Sp(2p+2)", {{"p", 2}}, always,
        [](const Params& p) { return simple_rs(TL::C, p[0] + 1); },
        [](const Params& p) { return gl1_sp(p[0], true); },
        [](const Params& p) { return 1 + dim_sp(2 * p[0]); }, [](const Params&) { return 0; },
        "Torus inverted: rank 0."));

    cat.push_back(make(
        42, "N(SL(2)×Sp(2p)) ⊂ SL(2)×SL(2)×Sp(2p+2)", {{"p", 2}}, always,
        [](const Params& p) {
            return RootSystem({{TL::A, 1}, {TL::A, 1}, {TL::C, p[0] + 1}});
        },
        [](const Params& pr) {
            int p = pr[0], n = p + 3;
            RootSystem rs({{TL::A, 1}, {TL::A, 1}, {TL::C, p + 1}});
            vector<Weight> sigma{wt(n, {{1, 1}}), wt(n, {{2, 1}}), wt(n, {{3, 1}}),
                                 c_chain(n, 3, n)};
            vector<AColor> a{{"D1", row(4, {{1, 1}, {2, 1}, {3, -1}})},
                             {"D2", row(4, {{1, 1}, {2, -1}, {3, 1}})},
                             {"D3", row(4, {{1, -1}, {2, 1}, {3, 1}})}};
            return SphericalSystem(std::move(rs), rng(5, n), std::move(sigma), std::move(a));
        },
        [](const Params& p) { return 3 + dim_sp(2 * p[0]); }, [](const Params&) { return 0; },
        "dim = 3 + p(2p+1), rank 0; triangle over the three simple spherical roots."));

    cat.push_back(make(
        43, "N(SL(2)×Sp(2p)×Sp(2q)) ⊂ SL(2)×Sp(2p+2)×Sp(2q+2)", {{"p", 2}, {"q", 2}}, always,
        [](const Params& p) {
            return RootSystem({{TL::A, 1}, {TL::C, p[0] + 1}, {TL::C, p[1] + 1}});
        },
        [](const Params& pr) {
            int p = pr[0], q = pr[1], n = p + q + 3;
            int og = 1, oe = p + 2;
            RootSystem rs({{TL::A, 1}, {TL::C, p + 1}, {TL::C, q + 1}});
            vector<Weight> sigma{wt(n, {{1, 1}}), wt(n, {{og + 1, 1}}), wt(n, {{oe + 1, 1}}),
                                 c_chain(n, og + 1, og + p + 1), c_chain(n, oe + 1, oe + q + 1)};
            vector<AColor> a{{"D1", row(5, {{1, 1}, {2, 1}, {3, -1}})},
                             {"D2", row(5, {{1, 1}, {2, -1}, {3, 1}})},
                             {"D3", row(5, {{1, -1}, {2, 1}, {3, 1}})}};
            set<int> sp = join(rng(og + 3, og + p + 1), rng(oe + 3, oe + q + 1));
            return SphericalSystem(std::move(rs), std::move(sp), std::move(sigma), std::move(a));
        },
        [](const Params& p) { return 3 + dim_sp(2 * p[0]) + dim_sp(2 * p[1]); },
        [](const Params&) { return 0; },
        "dim = 3 + p(2p+1) + q(2q+1), rank 0."));

    cat.push_back(make(
        44, "N(SL(2)×Sp(2p)×Sp(2q)×Sp(2r)) ⊂ Sp(2p+2)×Sp(2q+2)×Sp(2r+2)",
        {{"p", 2}, {"q", 2}, {"r", 2}}, always,
        [](const Params& p) {
            return RootSystem({{TL::C, p[0] + 1}, {TL::C, p[1] + 1}, {TL::C, p[2] + 1}});
        },
        [](const Params& pr) {
            int p = pr[0], q = pr[1], r = pr[2], n = p + q + r + 3;
            int og = 0, oe = p + 1, oz = p + q + 2;
            RootSystem rs({{TL::C, p + 1}, {TL::C, q + 1}, {TL::C, r + 1}});
            vector<Weight> sigma{wt(n, {{og + 1, 1}}), wt(n, {{oe + 1, 1}}), wt(n, {{oz + 1, 1}}),
                                 c_chain(n, og + 1, og + p + 1), c_chain(n, oe + 1, oe + q + 1),
                                 c_chain(n, oz + 1, oz + r + 1)};
            vector<AColor> a{{"D1", row(6, {{1, 1}, {2, 1}, {3, -1}})},
                             {"D2", row(6, {{1, 1}, {2, -1}, {3, 1}})},
                             {"D3", row(6, {{1, -1}, {2, 1}, {3, 1}})}};
            set<int> sp = join(join(rng(og + 3, og + p + 1), rng(oe + 3, oe + q + 1)),
                               rng(oz + 3, oz + r + 1));
            return SphericalSystem(std::move(rs), std::move(sp), std::move(sigma), std::move(a));
        },
        [](const Params& p) {
            return 3 + dim_sp(2 * p[0]) + dim_sp(2 * p[1]) + dim_sp(2 * p[2]);
        },
        [](const Params&) { return 0; },
        "dim = 3 + sum of the three Sp dimensions, rank 0."));

    cat.push_back(make(
        45, "GL(1)×SL(2)×SL(2)×Sp(2q) ⊂ SL(4)×Sp(2q+2)", {{"q", 2}}, always,
        [](const Params& p) { return RootSystem({{TL::A, 3}, {TL::C, p[0] + 1}}); },
        [](const Params& pr) {
            int q = pr[0], n = q + 5;
            RootSystem rs({{TL::A, 3}, {TL::C, q + 1}});
            vector<Weight> sigma{wt(n, {{1, 1}}), wt(n, {{2, 1}}), wt(n, {{3, 1}}),
                                 wt(n, {{4, 1}}), c_chain(n, 4, n)};
            vector<AColor> a{{"D1", row(5, {{1, 1}, {2, -1}, {3, 1}, {4, -1}})},
                             {"D2", row(5, {{1, 1}, {3, -1}, {4, 1}})},
                             {"D3", row(5, {{1, -1}, {3, 1}, {4, 1}})},
                             {"D4", row(5, {{1, -1}, {2, 1}})},
                             {"D5", row(5, {{2, 1}, {3, -1}})}};
            return SphericalSystem(std::move(rs), rng(6, n), std::move(sigma), std::move(a));
        },
        [](const Params& p) { return 7 + dim_sp(2 * p[0]); }, [](const Params&) { return 1; },
        "dim = 1+3+3+q(2q+1), rank 1."));

    cat.push_back(make(
        46, "GL(1)×SL(2)×SL(p)×Sp(2q) ⊂ SL(p+2)×Sp(2q+2)", {{"p", 3}, {"q", 2}}, always,
        [](const Params& p) {
            return RootSystem({{TL::A, p[0] + 1}, {TL::C, p[1] + 1}});
        },
        [](const Params& pr) {
            int p = pr[0], q = pr[1], n = p + q + 2;
            RootSystem rs({{TL::A, p + 1}, {TL::C, q + 1}});
            vector<Weight> sigma{wt(n, {{1, 1}}), run(n, 2, p), wt(n, {{p + 1, 1}}),
                                 wt(n, {{p + 2, 1}}), c_chain(n, p + 2, n)};
            vector<AColor> a{{"D1", row(5, {{1, 1}, {2, -1}, {3, 1}, {4, -1}})},
                             {"D2", row(5, {{1, 1}, {3, -1}, {4, 1}})},
                             {"D3", row(5, {{1, -1}, {3, 1}, {4, 1}})}};
            set<int> sp = join(rng(3, p - 1), rng(p + 4, n));
            return SphericalSystem(std::move(rs), std::move(sp), std::move(sigma), std::move(a));
        },
        [](const Params& p) { return dim_gl(p[0]) + 3 + dim_sp(2 * p[1]); },
        [](const Params&) { return 1; },
        "dim = 1 + 3 + (p^2-1) + q(2q+1), rank 1."));

    cat.push_back(make(
        47, "GL(1)×SL(2)×Sp(2p) ⊂ SL(3)×Sp(2p+2)", {{"p", 2}}, always,
        [](const Params& p) { return RootSystem({{TL::A, 2}, {TL::C, p[0] + 1}}); },
        [](const Params& pr) {
            int p = pr[0], n = p + 3;
            RootSystem rs({{TL::A, 2}, {TL::C, p + 1}});
            vector<Weight> sigma{wt(n, {{1, 1}}), wt(n, {{2, 1}}), wt(n, {{3, 1}}),
                                 c_chain(n, 3, n)};
            vector<AColor> a{{"D1", row(4, {{1, 1}, {2, -1}, {3, 1}})},
                             {"D2", row(4, {{1, 1}, {3, -1}})},
                             {"D3", row(4, {{2, 1}, {3, -1}})},
                             {"D4", row(4, {{1, -1}, {2, 1}, {3, 1}})}};
            return SphericalSystem(std::move(rs), rng(5, n), std::move(sigma), std::move(a));
        },
        [](const Params& p) { return 4 + dim_sp(2 * p[0]); }, [](const Params&) { return 1; },
        "dim = 1 + 3 + p(2p+1), rank 1."));

    cat.push_back(make(
        48, "N(SL(2)×SL(2)×Sp(2p)) ⊂ Sp(4)×SL(2)×Sp(2p+2)", {{"p", 2}}, always,
        [](const Params& p) {
            return RootSystem({{TL::B, 2}, {TL::A, 1}, {TL::C, p[0] + 1}});
        },
        [](const Params& pr) {
            int p = pr[0], n = p + 4;
            RootSystem rs({{TL::B, 2}, {TL::A, 1}, {TL::C, p + 1}});
            vector<Weight> sigma{wt(n, {{1, 1}}), wt(n, {{2, 1}}), wt(n, {{3, 1}}),
                                 wt(n, {{4, 1}}), c_chain(n, 4, n)};
            vector<AColor> a{{"D1", row(5, {{1, 1}, {2, -1}, {3, 1}, {4, 1}})},
                             {"D2", row(5, {{1, -1}, {2, 1}, {3, 1}, {4, -1}})},
                             {"D3", row(5, {{1, -1}, {2, 1}, {3, -1}, {4, 1}})},
                             {"D4", row(5, {{1, 1}, {3, -1}, {4, -1}})}};
            return SphericalSystem(std::move(rs), rng(6, n), std::move(sigma), std::move(a));
        },
        [](const Params& p) { return 6 + dim_sp(2 * p[0]); }, [](const Params&) { return 0; },
        "dim = 3 + 3 + p(2p+1), rank 0."));

    cat.push_back(make(
        49, "N(SL(2)×SL(2)×Sp(2p)×Sp(2q)) ⊂ Sp(4)×Sp(2p+2)×Sp(2q+2)",
        {{"p", 2}, {"q", 2}}, always,
        [](const Params& p) {
            return RootSystem({{TL::B, 2}, {TL::C, p[0] + 1}, {TL::C, p[1] + 1}});
        },
        [](const Params& pr) {
            int p = pr[0], q = pr[1], n = p + q + 4;
            int og = 2, oe = p + 3;
            RootSystem rs({{TL::B, 2}, {TL::C, p + 1}, {TL::C, q + 1}});
            vector<Weight> sigma{wt(n, {{1, 1}}), wt(n, {{2, 1}}), wt(n, {{og + 1, 1}}),
                                 wt(n, {{oe + 1, 1}}), c_chain(n, og + 1, og + p + 1),
                                 c_chain(n, oe + 1, oe + q + 1)};
            vector<AColor> a{{"D1", row(6, {{1, 1}, {2, -1}, {3, 1}, {4, 1}})},
                             {"D2", row(6, {{1, -1}, {2, 1}, {3, 1}, {4, -1}})},
                             {"D3", row(6, {{1, -1}, {2, 1}, {3, -1}, {4, 1}})},
                             {"D4", row(6, {{1, 1}, {3, -1}, {4, -1}})}};
            set<int> sp = join(rng(og + 3, og + p + 1), rng(oe + 3, oe + q + 1));
            return SphericalSystem(std::move(rs), std::move(sp), std::move(sigma), std::move(a));
        },
        [](const Params& p) { return 6 + dim_sp(2 * p[0]) + dim_sp(2 * p[1]); },
        [](const Params&) { return 0; },
        "dim = 3 + 3 + p(2p+1) + q(2q+1), rank 0."));

    cat.push_back(make(
        50, "N(Sp(4)×Sp(2p)) ⊂ Sp(4)×Sp(2p+4), diagonal", {{"p", 2}}, always,
        [](const Params& p) { return RootSystem({{TL::B, 2}, {TL::C, p[0] + 2}}); },
        [](const Params& pr) {
            int p = pr[0], n = p + 4;
            RootSystem rs({{TL::B, 2}, {TL::C, p + 2}});
            vector<Weight> sigma{wt(n, {{1, 1}}), wt(n, {{2, 1}}), wt(n, {{3, 1}}),
                                 wt(n, {{4, 1}}), wt(n, {{5, 1}}), c_chain(n, 5, n)};
            vector<AColor> a{{"D1", row(6, {{1, 1}, {2, -1}, {3, 1}, {4, -1}, {5, 1}})},
                             {"D2", row(6, {{1, -1}, {2, 1}, {3, 1}, {5, -1}})},
                             {"D3", row(6, {{1, 1}, {3, -1}, {4, 1}, {5, -1}})},
                             {"D4", row(6, {{1, -1}, {2, 1}, {3, -1}, {5, 1}})},
                             {"D5", row(6, {{1, -1}, {4, 1}, {6, -1}})}};
            return SphericalSystem(std::move(rs), rng(7, n), std::move(sigma), std::move(a));
        },
        [](const Params& p) { return 10 + dim_sp(2 * p[0]); }, [](const Params&) { return 0; },
        "dim = 10 + p(2p+1), rank 0."));

    cat.push_back(make(
        51, "N(SO(2p-1)) ⊂ SO(2p)", {{"p", 4}}, always,
        [](const Params& p) { return simple_rs(TL::D, p[0]); },
        [](const Params& p) {
            int n = p[0];
            return SphericalSystem(simple_rs(TL::D, n), rng(2, n), {d_chain(n, 1, n)}, {});
        },
        [](const Params& p) { return dim_so(2 * p[0] - 1); }, [](const Params&) { return 0; },
        "dim SO(2p-1) = (2p-1)(p-1), rank 0."));

    cat.push_back(make(
        52, "GL(1)×SO(2p) ⊂ SO(2p+2)", {{"p", 3}}, always,
        [](const Params& p) { return simple_rs(TL::D, p[0] + 1); },
        [](const Params& p) { return gl1_so_even(p[0], false); },
        [](const Params& p) { return 1 + dim_so(2 * p[0]); }, [](const Params&) { return 1; },
        "dim = 1 + p(2p-1), rank 1."));

    cat.push_back(make(
        53, "N(GL(1)×SO(2p)) ⊂ SO(2p+2)", {{"p", 3}}, always,
        [](const Params& p) { return simple_rs(TL::D, p[0] + 1); },
        [](const Params& p) { return gl1_so_even(p[0], true); },
        [](const Params& p) { return 1 + dim_so(2 * p[0]); }, [](const Params&) { return 0; },
        "Torus inverted: rank 0."));

    cat.push_back(make(
        54, "N(SO(p)×SO(2q-p)) ⊂ SO(2q)", {{"p", 3}, {"q", 5}},
        [](const Params& p) { return 3 <= p[0] && p[0] <= p[1] - 2; },
        [](const Params& p) { return simple_rs(TL::D, p[1]); },
        [](const Params& pr) {
            int p = pr[0], q = pr[1];
            vector<Weight> sigma;
            for (int i = 1; i < p; ++i) sigma.push_back(wt(q, {{i, 2}}));
            sigma.push_back(d_chain(q, p, q));
            return SphericalSystem(simple_rs(TL::D, q), rng(p + 1, q), std::move(sigma), {});
        },
        [](const Params& p) { return dim_so(p[0]) + dim_so(2 * p[1] - p[0]); },
        [](const Params&) { return 0; },
        "dim = dim SO(p) + dim SO(2q-p), rank 0; card Sigma = p."));

    cat.push_back(make(
        55, "N(SO(p)×SO(p+2)) ⊂ SO(2p+2)", {{"p", 3}}, always,
        [](const Params& p) { return simple_rs(TL::D, p[0] + 1); },
        [](const Params& pr) {
            int p = pr[0], n = p + 1;
            vector<Weight> sigma;
            for (int i = 1; i < p; ++i) sigma.push_back(wt(n, {{i, 2}}));
            sigma.push_back(wt(n, {{p, 1}, {p + 1, 1}}));
            return SphericalSystem(simple_rs(TL::D, n), {}, std::move(sigma), {});
        },
        [](const Params& p) { return dim_so(p[0]) + dim_so(p[0] + 2); },
        [](const Params&) { return 0; },
        "dim = p(p-1)/2 + (p+2)(p+1)/2, rank 0; the fork pair merges."));

    cat.push_back(make(
        56, "N(SO(p)×SO(p)) ⊂ SO(2p)", {{"p", 4}}, always,
        [](const Params& p) { return simple_rs(TL::D, p[0]); },
        [](const Params& p) { return doubled_all(simple_rs(TL::D, p[0])); },
        [](const Params& p) { return 2 * dim_so(p[0]); }, [](const Params&) { return 0; },
        "dim = p(p-1), rank 0; all simple roots doubled."));

    cat.push_back(make(
        57, "GL(2p+1) ⊂ SO(4p+2)", {{"p", 2}}, always,
        [](const Params& p) { return simple_rs(TL::D, 2 * p[0] + 1); },
        [](const Params& pr) {
            int p = pr[0], n = 2 * p + 1;
            vector<Weight> sigma;
            for (int i = 1; i < p; ++i) sigma.push_back(d3_at(n, 2 * i - 1));
            sigma.push_back(wt(n, {{n - 2, 1}, {n - 1, 1}, {n, 1}}));
            return SphericalSystem(simple_rs(TL::D, n), odds(1, n - 2), std::move(sigma), {});
        },
        [](const Params& p) { return dim_gl(2 * p[0] + 1); }, [](const Params&) { return 1; },
        "dim GL(2p+1) = (2p+1)^2, rank 1."));

    cat.push_back(make(
        58, "GL(2p) ⊂ SO(4p)", {{"p", 2}}, always,
        [](const Params& p) { return simple_rs(TL::D, 2 * p[0]); },
        [](const Params& p) { return gl_in_so_even(p[0], false); },
        [](const Params& p) { return dim_gl(2 * p[0]); }, [](const Params&) { return 1; },
        "dim GL(2p) = 4p^2, rank 1."));

    cat.push_back(make(
        59, "N(GL(2p)) ⊂ SO(4p)", {{"p", 2}}, always,
        [](const Params& p) { return simple_rs(TL::D, 2 * p[0]); },
        [](const Params& p) { return gl_in_so_even(p[0], true); },
        [](const Params& p) { return dim_gl(2 * p[0]); }, [](const Params&) { return 0; },
        "Determinant inverted: rank 0."));

    cat.push_back(make(
        60, "G2 ⊂ SO(8)", {}, always,
        [](const Params&) { return simple_rs(TL::D, 4); },
        [](const Params&) {
            vector<Weight> sigma{wt(4, {{1, 2}, {2, 2}, {3, 1}, {4, 1}}),
                                 wt(4, {{1, 1}, {2, 2}, {3, 2}, {4, 1}}),
                                 wt(4, {{1, 1}, {2, 2}, {3, 1}, {4, 2}})};
            return SphericalSystem(simple_rs(TL::D, 4), {2}, std::move(sigma), {});
        },
        [](const Params&) { return 14; }, [](const Params&) { return 0; },
        "dim G2 = 14, rank 0; the three roots are permuted by triality."));

    cat.push_back(make(
        61, "GL(1)×Spin(7) ⊂ SO(10)", {}, always,
        [](const Params&) { return simple_rs(TL::D, 5); },
        [](const Params&) {
            vector<Weight> sigma{wt(5, {{1, 1}}), wt(5, {{2, 2}, {3, 2}, {4, 1}, {5, 1}}),
                                 wt(5, {{2, 1}, {3, 2}, {4, 2}, {5, 1}}),
                                 wt(5, {{2, 1}, {3, 2}, {4, 1}, {5, 2}})};
            vector<AColor> a{{"Dp", row(4, {{1, 1}, {2, -1}, {3, -1}})},
                             {"Dm", row(4, {{1, 1}, {2, -1}, {4, -1}})}};
            return SphericalSystem(simple_rs(TL::D, 5), {3}, std::move(sigma), std::move(a));
        },
        [](const Params&) { return 22; }, [](const Params&) { return 1; },
        "dim = 1 + 21, rank 1; the two A-colors split over the fork roots."));

    cat.push_back(make(
        62, "N(SO(2p-1)) ⊂ SO(2p-1)×SO(2p), diagonal", {{"p", 4}}, always,
        [](const Params& p) { return RootSystem({{TL::B, p[0] - 1}, {TL::D, p[0]}}); },
        [](const Params& pr) {
            int p = pr[0];
            int n = 2 * p - 1;
            auto g = [&](int j) { return p - 1 + j; }; // D-factor roots
            RootSystem rs({{TL::B, p - 1}, {TL::D, p}});
            vector<Weight> sigma;
            for (int i = 1; i <= n; ++i) sigma.push_back(wt(n, {{i, 1}}));
            auto sb = [&](int i) { return i; };
            auto sg = [&](int j) { return p - 1 + j; };
            vector<AColor> a;
            for (int i = 1; i <= p - 3; ++i) {
                vector<long long> r(n, 0);
                r[sb(i) - 1] = 1;
                r[sg(i + 1) - 1] = 1;
                r[sb(i + 1) - 1] = -1;
                r[sg(i) - 1] = -1;
                a.push_back({"A" + std::to_string(i), std::move(r)});
            }
            a.push_back({"Af", row(n, {{sb(p - 2), 1}, {sg(p - 1), 1}, {sg(p), 1},
                                       {sb(p - 1), -1}, {sg(p - 2), -1}})});
            a.push_back({"Al", row(n, {{sb(p - 1), 1}, {sg(p - 1), 1}, {sb(p - 2), -1},
                                       {sg(p), -1}})});
            a.push_back({"G1", row(n, {{sg(1), 1}, {sb(1), -1}})});
            for (int i = 1; i <= p - 3; ++i) {
                vector<long long> r(n, 0);
                r[sb(i) - 1] = 1;
                r[sg(i) - 1] = 1;
                if (i >= 2) r[sb(i - 1) - 1] = -1;
                r[sg(i + 1) - 1] = -1;
                a.push_back({"B" + std::to_string(i), std::move(r)});
            }
            a.push_back({"Bf", row(n, {{sb(p - 2), 1}, {sg(p - 2), 1}, {sb(p - 3), -1},
                                       {sg(p - 1), -1}, {sg(p), -1}})});
            a.push_back({"Bl", row(n, {{sb(p - 1), 1}, {sg(p), 1}, {sb(p - 2), -1},
                                       {sg(p - 1), -1}})});
            (void)g;
            return SphericalSystem(std::move(rs), {}, std::move(sigma), std::move(a));
        },
        [](const Params& p) { return dim_so(2 * p[0] - 1); }, [](const Params&) { return 0; },
        "dim SO(2p-1), rank 0; staircase of shared colors ending at the fork."));

    cat.push_back(make(
        63, "N(SO(2p)) ⊂ SO(2p+1)×SO(2p), diagonal", {{"p", 4}}, always,
        [](const Params& p) { return RootSystem({{TL::B, p[0]}, {TL::D, p[0]}}); },
        [](const Params& pr) {
            int p = pr[0];
            int n = 2 * p;
            RootSystem rs({{TL::B, p}, {TL::D, p}});
            vector<Weight> sigma;
            for (int i = 1; i <= n; ++i) sigma.push_back(wt(n, {{i, 1}}));
            auto sb = [&](int i) { return i; };
            auto sg = [&](int j) { return p + j; };
            vector<AColor> a;
            for (int i = 1; i <= p - 2; ++i) {
                vector<long long> r(n, 0);
                r[sb(i) - 1] = 1;
                r[sg(i) - 1] = 1;
                r[sb(i + 1) - 1] = -1;
                if (i >= 2) r[sg(i - 1) - 1] = -1;
                a.push_back({"P" + std::to_string(i), std::move(r)});
            }
            a.push_back({"Pf", row(n, {{sb(p - 1), 1}, {sg(p - 1), 1}, {sg(p), 1},
                                       {sb(p), -1}, {sg(p - 2), -1}})});
            a.push_back({"Pl", row(n, {{sb(p), 1}, {sg(p - 1), 1}, {sb(p - 1), -1},
                                       {sg(p), -1}})});
            for (int i = 1; i <= p - 2; ++i) {
                vector<long long> r(n, 0);
                r[sb(i + 1) - 1] = 1;
                r[sg(i) - 1] = 1;
                r[sb(i) - 1] = -1;
                if (i < p - 2) {
                    r[sg(i + 1) - 1] = -1;
                } else {
                    r[sg(p - 1) - 1] = -1;
                    r[sg(p) - 1] = -1;
                }
                a.push_back({"Q" + std::to_string(i), std::move(r)});
            }
            a.push_back({"Ql", row(n, {{sb(p), 1}, {sg(p), 1}, {sb(p - 1), -1},
                                       {sg(p - 1), -1}})});
            a.push_back({"Q0", row(n, {{sb(1), 1}, {sg(1), -1}})});
            return SphericalSystem(std::move(rs), {}, std::move(sigma), std::move(a));
        },
        [](const Params& p) { return dim_so(2 * p[0]); }, [](const Params&) { return 0; },
        "dim SO(2p), rank 0."));

    cat.push_back(make(
        64, "N(F4) ⊂ E6", {}, always,
        [](const Params&) { return simple_rs(TL::E, 6); },
        [](const Params&) {
            vector<Weight> sigma{wt(6, {{1, 2}, {2, 1}, {3, 2}, {4, 2}, {5, 1}}),
                                 wt(6, {{2, 1}, {3, 1}, {4, 2}, {5, 2}, {6, 2}})};
            return SphericalSystem(simple_rs(TL::E, 6), {2, 3, 4, 5}, std::move(sigma), {});
        },
        [](const Params&) { return 52; }, [](const Params&) { return 0; },
        "dim F4 = 52, rank 0."));

    cat.push_back(make(
        65, "GL(1)×Spin(10) ⊂ E6", {}, always,
        [](const Params&) { return simple_rs(TL::E, 6); },
        [](const Params&) {
            vector<Weight> sigma{wt(6, {{1, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}}),
                                 wt(6, {{2, 2}, {3, 1}, {4, 2}, {5, 1}})};
            return SphericalSystem(simple_rs(TL::E, 6), {3, 4, 5}, std::move(sigma), {});
        },
        [](const Params&) { return 46; }, [](const Params&) { return 1; },
        "dim = 1 + 45, rank 1."));

    cat.push_back(make(
        66, "N(SL(6)×SL(2)) ⊂ E6", {}, always,
        [](const Params&) { return simple_rs(TL::E, 6); },
        [](const Params&) {
            vector<Weight> sigma{wt(6, {{2, 2}}), wt(6, {{4, 2}}), wt(6, {{1, 1}, {6, 1}}),
                                 wt(6, {{3, 1}, {5, 1}})};
            return SphericalSystem(simple_rs(TL::E, 6), {}, std::move(sigma), {});
        },
        [](const Params&) { return 38; }, [](const Params&) { return 0; },
        "dim = 35 + 3, rank 0."));

    cat.push_back(make(
        67, "N(Sp(8)) ⊂ E6", {}, always,
        [](const Params&) { return simple_rs(TL::E, 6); },
        [](const Params&) { return doubled_all(simple_rs(TL::E, 6)); },
        [](const Params&) { return 36; }, [](const Params&) { return 0; },
        "dim Sp(8) = 36, rank 0; all simple roots doubled."));

    cat.push_back(make(
        68, "GL(1)×E6 ⊂ E7", {}, always,
        [](const Params&) { return simple_rs(TL::E, 7); },
        [](const Params&) { return e7_gl1_e6(false); },
        [](const Params&) { return 79; }, [](const Params&) { return 1; },
        "dim = 1 + 78, rank 1."));

    cat.push_back(make(
        69, "N(GL(1)×E6) ⊂ E7", {}, always,
        [](const Params&) { return simple_rs(TL::E, 7); },
        [](const Params&) { return e7_gl1_e6(true); },
        [](const Params&) { return 79; }, [](const Params&) { return 0; },
        "Torus inverted: rank 0."));

    cat.push_back(make(
        70, "N(Spin(12)×SL(2)) ⊂ E7", {}, always,
        [](const Params&) { return simple_rs(TL::E, 7); },
        [](const Params&) {
            vector<Weight> sigma{wt(7, {{1, 2}}), wt(7, {{3, 2}}),
                                 wt(7, {{2, 1}, {4, 2}, {5, 1}}),
                                 wt(7, {{5, 1}, {6, 2}, {7, 1}})};
            return SphericalSystem(simple_rs(TL::E, 7), {2, 5, 7}, std::move(sigma), {});
        },
        [](const Params&) { return 69; }, [](const Params&) { return 0; },
        "dim = 66 + 3, rank 0."));

    cat.push_back(make(
        71, "N(SL(8)) ⊂ E7", {}, always,
        [](const Params&) { return simple_rs(TL::E, 7); },
        [](const Params&) { return doubled_all(simple_rs(TL::E, 7)); },
        [](const Params&) { return 63; }, [](const Params&) { return 0; },
        "dim SL(8) = 63, rank 0."));

    cat.push_back(make(
        72, "N(SL(2)×E7) ⊂ E8", {}, always,
        [](const Params&) { return simple_rs(TL::E, 8); },
        [](const Params&) {
            vector<Weight> sigma{wt(8, {{1, 2}, {2, 1}, {3, 2}, {4, 2}, {5, 1}}),
                                 wt(8, {{2, 1}, {3, 1}, {4, 2}, {5, 2}, {6, 2}}),
                                 wt(8, {{7, 2}}), wt(8, {{8, 2}})};
            return SphericalSystem(simple_rs(TL::E, 8), {2, 3, 4, 5}, std::move(sigma), {});
        },
        [](const Params&) { return 136; }, [](const Params&) { return 0; },
        "dim = 3 + 133, rank 0."));

    cat.push_back(make(
        73, "N(Spin(16)) ⊂ E8", {}, always,
        [](const Params&) { return simple_rs(TL::E, 8); },
        [](const Params&) { return doubled_all(simple_rs(TL::E, 8)); },
        [](const Params&) { return 120; }, [](const Params&) { return 0; },
        "dim Spin(16) = 120, rank 0."));

    cat.push_back(make(
        74, "Spin(9) ⊂ F4", {}, always,
        [](const Params&) { return simple_rs(TL::F, 4); },
        [](const Params&) {
            return SphericalSystem(simple_rs(TL::F, 4), {1, 2, 3},
                                   {wt(4, {{1, 1}, {2, 2}, {3, 3}, {4, 2}})}, {});
        },
        [](const Params&) { return 36; }, [](const Params&) { return 0; },
        "dim Spin(9) = 36, rank 0."));

    cat.push_back(make(
        75, "Sp(6)×SL(2) ⊂ F4", {}, always,
        [](const Params&) { return simple_rs(TL::F, 4); },
        [](const Params&) { return doubled_all(simple_rs(TL::F, 4)); },
        [](const Params&) { return 24; }, [](const Params&) { return 0; },
        "dim = 21 + 3, rank 0; all simple roots doubled."));

    cat.push_back(make(
        76, "SL(3) ⊂ G2", {}, always,
        [](const Params&) { return simple_rs(TL::G, 2); },
        [](const Params&) {
            return SphericalSystem(simple_rs(TL::G, 2), {2}, {wt(2, {{1, 2}, {2, 1}})}, {});
        },
        [](const Params&) { return 8; }, [](const Params&) { return 0; },
        "dim SL(3) = 8, rank 0."));

    cat.push_back(make(
        77, "N(SL(3)) ⊂ G2", {}, always,
        [](const Params&) { return simple_rs(TL::G, 2); },
        [](const Params&) {
            return SphericalSystem(simple_rs(TL::G, 2), {2}, {wt(2, {{1, 4}, {2, 2}})}, {});
        },
        [](const Params&) { return 8; }, [](const Params&) { return 0; },
        "Same dimension; the root doubles."));

    cat.push_back(make(
        78, "SL(2)×SL(2) ⊂ G2", {}, always,
        [](const Params&) { return simple_rs(TL::G, 2); },
        [](const Params&) { return doubled_all(simple_rs(TL::G, 2)); },
        [](const Params&) { return 6; }, [](const Params&) { return 0; },
        "dim = 3 + 3, rank 0."));

    return cat;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> cat = build_catalog();
    return cat;
}

} // namespace luna
