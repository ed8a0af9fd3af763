// catalog.cpp — verification harness and matching report over the entry list
//
// Part of luna, a toolkit for Luna spherical systems.
// Licensed under the Apache License, Version 2.0 (see LICENSE file).

#include "luna/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "luna/textio.hpp"

namespace luna {

bool CatalogEntry::admissible(const Params& p) const {
    if (p.size() != params.size()) return false;
    for (size_t i = 0; i < params.size(); ++i)
        if (p[i] < params[i].min) return false;
    return !constraint || constraint(p);
}

const CatalogEntry& entry(int id) {
    for (const auto& e : catalog())
        if (e.id == id) return e;
    throw std::out_of_range("no catalog entry with id " + std::to_string(id));
}

SphericalSystem build(const CatalogEntry& e, const Params& p) {
    if (!e.admissible(p))
        throw ParamOutOfRange("entry " + std::to_string(e.id) + ": parameters out of range");
    return e.system_of(p);
}

namespace {

std::vector<std::pair<std::string, int>> named_params(const CatalogEntry& e, const Params& p) {
    std::vector<std::pair<std::string, int>> out;
    for (size_t i = 0; i < e.params.size(); ++i)
        out.emplace_back(e.params[i].name, p[i]);
    return out;
}

std::string params_str(const std::vector<std::pair<std::string, int>>& params) {
    std::string s;
    for (const auto& [k, v] : params) {
        if (!s.empty()) s += ", ";
        s += k + "=" + std::to_string(v);
    }
    return s;
}

std::string witness_str(const SphericalSystem& sys, const std::vector<long long>& witness) {
    if (sys.card_sigma() == 0) return "0";
    std::string s;
    for (size_t j = 0; j < witness.size(); ++j) {
        if (witness[j] == 0) continue;
        if (!s.empty()) s += " + ";
        if (witness[j] != 1) s += std::to_string(witness[j]) + " ";
        s += "s" + std::to_string(j + 1);
    }
    return s.empty() ? "0" : s;
}

} // namespace

VerificationRecord verify(const CatalogEntry& e, const Params& p) {
    VerificationRecord rec;
    rec.entry_id = e.id;
    rec.params = named_params(e, p);

    SphericalSystem sys = build(e, p);
    ValidationReport rep = validate(sys);
    rec.validation_report = rep.errors;
    rec.validation_report.insert(rec.validation_report.end(), rep.warnings.begin(),
                                 rep.warnings.end());
    rec.card_sigma = sys.card_sigma();
    if (!rep.errors.empty()) {
        rec.pass = false;
        return rec;
    }

    ColorSet cs = colors(sys);
    rec.card_delta = static_cast<int>(cs.colors.size());
    rec.dim_formula = dim_subgroup(sys);
    rec.dim_expected = e.expected_dim(p);
    rec.rank_formula = char_rank(sys);
    rec.rank_expected = e.expected_rank(p);
    ReductivityResult red = is_reductive(sys);
    rec.reductive = red.reductive;
    rec.witness = red.witness;
    rec.pass = rep.errors.empty() && rep.warnings.empty() &&
               rec.dim_formula == rec.dim_expected && rec.rank_formula == rec.rank_expected &&
               rec.reductive;
    return rec;
}

std::vector<Params> param_grid(const CatalogEntry& e, int budget) {
    std::vector<Params> grid;
    Params cur(e.params.size());
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == e.params.size()) {
            if (e.admissible(cur)) grid.push_back(cur);
            return;
        }
        for (int v = e.params[i].min; v <= e.params[i].min + budget; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return grid;
}

std::vector<VerificationRecord> verify_all(int budget) {
    std::vector<VerificationRecord> out;
    for (const auto& e : catalog())
        for (const auto& p : param_grid(e, budget))
            out.push_back(verify(e, p));
    return out;
}

std::string format_records(const std::vector<VerificationRecord>& records) {
    std::ostringstream out;
    for (const auto& r : records) {
        out << "entry_id: " << r.entry_id << "\n";
        out << "params: " << params_str(r.params) << "\n";
        out << "card_sigma: " << r.card_sigma << "\n";
        out << "card_delta: " << r.card_delta << "\n";
        out << "dim_formula: " << r.dim_formula << "\n";
        out << "dim_expected: " << r.dim_expected << "\n";
        out << "rank_formula: " << r.rank_formula << "\n";
        out << "rank_expected: " << r.rank_expected << "\n";
        out << "reductive: " << (r.reductive ? "true" : "false") << "\n";
        out << "witness: ";
        {
            std::string s;
            for (size_t j = 0; j < r.witness.size(); ++j) {
                if (r.witness[j] == 0) continue;
                if (!s.empty()) s += " + ";
                if (r.witness[j] != 1) s += std::to_string(r.witness[j]) + " ";
                s += "s" + std::to_string(j + 1);
            }
            out << (s.empty() ? "0" : s) << "\n";
        }
        out << "validation_report:";
        if (r.validation_report.empty()) out << " clean";
        else
            for (const auto& v : r.validation_report) out << " [" << v << "]";
        out << "\n";
        out << "pass: " << (r.pass ? "true" : "false") << "\n";
        out << "\n";
    }
    return out.str();
}

MatchReport match_report(const RootSystem& g, int budget) {
    MatchReport report{g, {}, {}};
    std::vector<std::pair<MatchInstance, std::string>> found; // with canonical form
    for (const auto& e : catalog()) {
        std::vector<Params> tuples;
        if (e.id == 1 || e.id == 2) {
            // Family over all simple types: instantiate directly at the query.
            if (g.factors().size() == 1) {
                tuples.push_back({static_cast<int>(g.factors()[0].letter) + 1,
                                  g.factors()[0].rank});
            } else if (e.id == 2 && g.factors().size() == 2 &&
                       g.factors()[0] == g.factors()[1]) {
                tuples.push_back({static_cast<int>(g.factors()[0].letter) + 1,
                                  g.factors()[0].rank});
            }
            std::erase_if(tuples, [&](const Params& p) { return !e.admissible(p); });
        } else {
            tuples = param_grid(e, budget);
        }
        for (const auto& p : tuples) {
            if (!(e.group_of(p) == g)) continue;
            SphericalSystem sys = build(e, p);
            MatchInstance inst;
            inst.entry_id = e.id;
            inst.params = named_params(e, p);
            inst.dim = dim_subgroup(sys);
            inst.rank = char_rank(sys);
            found.emplace_back(std::move(inst), print_system(sys, "m"));
        }
    }
    for (auto& [inst, canon] : found) report.instances.push_back(inst);
    for (size_t a = 0; a < found.size(); ++a)
        for (size_t b = a + 1; b < found.size(); ++b) {
            if (found[a].first.entry_id == found[b].first.entry_id) continue;
            if (found[a].first.dim != found[b].first.dim ||
                found[a].first.rank != found[b].first.rank)
                continue;
            MatchCollision col{found[a].first, found[b].first,
                               found[a].second == found[b].second};
            report.collisions.push_back(std::move(col));
        }
    return report;
}

std::string format_match_report(const MatchReport& report) {
    std::ostringstream out;
    out << "ambient: " << report.ambient.spec_string() << "\n";
    out << "instances: " << report.instances.size() << "\n";
    for (const auto& i : report.instances) {
        out << "  entry " << i.entry_id;
        if (!i.params.empty()) out << " (" << params_str(i.params) << ")";
        out << ": dim " << i.dim << ", rank " << i.rank << "\n";
    }
    out << "collisions: " << report.collisions.size() << "\n";
    for (const auto& c : report.collisions) {
        out << "  entry " << c.a.entry_id;
        if (!c.a.params.empty()) out << " (" << params_str(c.a.params) << ")";
        out << " ~ entry " << c.b.entry_id;
        if (!c.b.params.empty()) out << " (" << params_str(c.b.params) << ")";
        out << ": dim " << c.a.dim << ", rank " << c.a.rank;
        out << (c.identical_systems ? " [identical systems]" : " [distinct systems]") << "\n";
    }
    return out.str();
}

} // namespace luna
