// catalog.hpp — the classification list as parametric entries plus the
// verification harness and the (dim, rank) matching report
//
// Part of luna, a toolkit for Luna spherical systems.
// Licensed under the Apache License, Version 2.0 (see LICENSE file).

#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "luna/spherical_system.hpp"

namespace luna {

struct ParamOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParamSpec {
    std::string name;
    int min;
};

using Params = std::vector<int>;

struct CatalogEntry {
    int id = 0;
    std::string label; // subgroup inclusion, e.g. "GL(p) ⊂ SL(p+1)"
    std::vector<ParamSpec> params;
    std::function<bool(const Params&)> constraint;
    std::function<RootSystem(const Params&)> group_of;
    std::function<SphericalSystem(const Params&)> system_of;
    std::function<long long(const Params&)> expected_dim;
    std::function<int(const Params&)> expected_rank;
    std::string notes;

    bool admissible(const Params& p) const;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& entry(int id); // throws std::out_of_range

// Builds the transcribed system; throws ParamOutOfRange when the parameters
// violate the entry's constraints.
SphericalSystem build(const CatalogEntry& e, const Params& p);

struct VerificationRecord {
    int entry_id = 0;
    std::vector<std::pair<std::string, int>> params;
    int card_sigma = 0;
    int card_delta = 0;
    long long dim_formula = 0;
    long long dim_expected = 0;
    int rank_formula = 0;
    int rank_expected = 0;
    bool reductive = false;
    std::vector<long long> witness;
    std::vector<std::string> validation_report;
    bool pass = false;
};

VerificationRecord verify(const CatalogEntry& e, const Params& p);

// Every entry, each free parameter ranging over [min, min + budget] subject
// to the entry's constraints; deterministic ordering by (id, params).
std::vector<VerificationRecord> verify_all(int budget);

// Enumerates the parameter tuples used by verify_all for one entry.
std::vector<Params> param_grid(const CatalogEntry& e, int budget);

std::string format_records(const std::vector<VerificationRecord>& records);

struct MatchInstance {
    int entry_id = 0;
    std::vector<std::pair<std::string, int>> params;
    long long dim = 0;
    int rank = 0;
};

struct MatchCollision {
    MatchInstance a, b;
    bool identical_systems = false; // equal canonical forms
};

struct MatchReport {
    RootSystem ambient;
    std::vector<MatchInstance> instances;
    std::vector<MatchCollision> collisions;
};

// Groups catalog instantiations by ambient group and lists every pair of
// distinct entries with equal (dim_subgroup, char_rank). Collisions are
// findings to report, not hard failures.
MatchReport match_report(const RootSystem& g, int budget);

std::string format_match_report(const MatchReport& report);

} // namespace luna
