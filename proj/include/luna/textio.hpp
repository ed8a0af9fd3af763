// textio.hpp — textual DSL for spherical systems: parser and canonical printer
//
// Part of luna, a toolkit for Luna spherical systems.
// Licensed under the Apache License, Version 2.0 (see LICENSE file).

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "luna/spherical_system.hpp"

namespace luna {

struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(int l, int c, const std::string& msg);
};

// Parse succeeded syntactically but validate() rejected the system; the
// message carries the full report.
struct SemanticError : std::runtime_error {
    ValidationReport report;
    explicit SemanticError(ValidationReport r);
};

struct ParsedSystem {
    std::string name;
    SphericalSystem system;
};

// Line-oriented grammar, `#` comments, whitespace-insensitive:
//
//   system "<name>" {
//     group: <factor> (x <factor>)* ;
//     sp: { a<i> (, a<i>)* } ;                        (possibly {})
//     sigma: { <sid>: <combo>; ... } ;                (combo: [k] a<i> (+ [k] a<i>)*)
//     acolors: { <cid>: { <sid>: <int>, ... }; ... } ; (clause optional)
//   }
ParsedSystem parse_system(std::string_view text);

// Canonical form: sp ascending, sigma sorted by coefficient vector and
// renamed s1, s2, ..., colors sorted by row vector and renamed D1, D2, ...;
// byte-deterministic. An empty acolors clause is omitted.
std::string print_system(const SphericalSystem& sys, std::string_view name);

// Parses a single weight combo such as "a1 + 2 a2 + a3" against rs.
Weight parse_combo(std::string_view text, const RootSystem& rs);

std::string format_weight(const Weight& w); // "a1 + 2 a2"; "0" for zero

} // namespace luna
