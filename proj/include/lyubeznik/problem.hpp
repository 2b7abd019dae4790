#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lyubeznik/groebner.hpp"

namespace lyz {

/// Contents of a problem file before any algebra is done.
struct ProblemSpec {
    std::uint64_t p = 0;
    std::vector<std::string> vars;
    /// Raw text of the ideal generators and its byte offset in the file.
    std::string ideal_text;
    std::size_t ideal_offset = 0;
    std::vector<std::int64_t> point;
};

/// Line-oriented `key = value` format with keys p, vars, ideal and optional point.
/// `#` starts a comment; a line ending in `\` continues on the next one.
/// Throws ParseError with a byte offset into `text`.
ProblemSpec parse_problem(std::string_view text);

struct Problem {
    RingPtr ring;
    /// Generators after the shift X_k -> X_k + point_k.
    std::vector<Polynomial> generators;
    Submodule ideal;
};

/// Builds the ring and ideal; ParseError for bad polynomials or declarations.
Problem build_problem(const ProblemSpec& spec);

/// Command-line entry point: `table <file>` or `number <file> --i I --j J`.
/// Exit codes: 0 success, 2 parse error, 3 computation failure, 4 invalid problem.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace lyz
