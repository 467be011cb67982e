#pragma once

#include <string>
#include <string_view>

#include "tautcalc/taut_class.hpp"
#include "tautcalc/verification.hpp"

namespace tautcalc::json {

// All rationals are written as "p/q" strings. Output is deterministic: terms follow
// the canonical ordering of TautClass. `indent` < 0 gives compact output.

std::string dump_graph(const StableGraph& g, int indent = -1);
/// Throws std::invalid_argument on malformed input or an unstable graph.
StableGraph parse_graph(std::string_view text);

std::string dump_class(const TautClass& x, int indent = -1);
/// Inverse of dump_class (terms are re-canonicalised and merged).
TautClass parse_class(std::string_view text);

/// Strata of codimension `codim` on `space`: graphs with that many edges, or with
/// --decorated every decorated stratum of that degree. Each item carries its
/// canonical code (hex), automorphism order and, at top degree, its integral.
std::string dump_strata(MarkedSpace space, int codim, bool decorated, int indent = -1);

std::string dump_report(const VerificationReport& r, int indent = -1);

}  // namespace tautcalc::json
