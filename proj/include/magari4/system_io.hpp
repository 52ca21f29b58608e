#pragma once

// Text form of systems of formulas: one member per line, either a formula or a
// table (`<arity>:<entries>`), optionally prefixed by a label (`F3: ~p | #q`).
// Blank lines and lines starting with `//` are skipped.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "magari4/closure.hpp"
#include "magari4/constants_engine.hpp"
#include "magari4/formula.hpp"

namespace magari4 {

struct SystemLine {
    std::string label;               // given or generated (S1, S2, ...)
    std::optional<Formula> formula;  // absent for table lines
    FuncTable table;
    std::size_t line_number;
};

/// Throws ParseError (with the line number folded into the message) or UsageError.
std::vector<SystemLine> parse_system(std::string_view text);

SystemSigma to_sigma(const std::vector<SystemLine>& lines);

/// Needs labels F1..F12, each exactly once. Table lines get a synthesized formula.
TwelveSystem to_twelve_system(const std::vector<SystemLine>& lines);

/// `1:ss11`-style text?
bool looks_like_table(std::string_view text);

}  // namespace magari4
