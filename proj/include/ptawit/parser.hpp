#pragma once

#include "ptawit/pta.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ptawit {

// The .pta wire format, line oriented:
//
//   # comment
//   clocks x y;
//   actions a alpha;           (optional; the union with used actions wins)
//   bound 2;                   (optional clock bound K)
//   loc l0 inv "x<=0" init;
//   loc goal inv "true" goal;
//   loc fail inv "true" fail;
//   trans l0 guard "true" act a { 2/5 -> l1; 3/5 -> l2; };
//   trans l1 guard "x>=1" act alpha { 1/2 -> reset{x} l0; 1/2 -> goal; };
//
// Constraints are conjunctions of atoms "c<=5", "c>0", "c-c'<2" joined by
// '&', or "true"/"false". Probabilities are exact rationals "p/q" or "p".
// Keywords are case sensitive; comments run from '#' to end of line.

struct ParseError {
    int line;
    int col;
    bool syntax; // false: validation error
    std::string message;

    std::string str() const;
};

struct ParseResult {
    std::optional<Pta> pta;
    std::vector<ParseError> errors;

    bool ok() const { return pta.has_value(); }
};

ParseResult parse_pta(const std::string& text);
ParseResult parse_pta_file(const std::string& path);

// Deterministic serialization (declaration order, exact rationals). The
// optional header lines are emitted as leading '#' comments; goal/fail
// self-loops are implied and not written.
std::string serialize_pta(const Pta& pta, const std::vector<std::string>& header = {});

// Constraint sub-language used by inv/guard strings; exposed for the CLI.
std::optional<ClockConstraint> parse_constraint(const std::string& text,
                                                const std::vector<std::string>& clocks,
                                                std::string* error = nullptr);

} // namespace ptawit
