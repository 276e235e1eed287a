#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kindep/constructions.hpp"

namespace kindep::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kCapError = 3 };

// One grid line: whitespace-separated key=value pairs, e.g.
//   family=g1 r=3 l=1 t=1
//   family=join-chain sizes=2,1,3
// Throws ParseError (offset = column) or PreconditionError.
FamilyParams parse_grid_line(std::string_view line);

struct BatchLine {
    std::size_t line_no = 0;
    std::string text;
    std::optional<Certificate> certificate;
    std::string error;  // set when the line was rejected
};

struct BatchSummary {
    std::vector<BatchLine> lines;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t indeterminate = 0;
    std::size_t rejected = 0;

    bool ok() const { return failed == 0 && rejected == 0; }
};

// Blank lines and lines starting with '#' are skipped.
BatchSummary batch_verify(std::istream& grid, const ExactOptions& options = {kDefaultVerifyNodeBudget});

// Entry point behind the kindep executable. args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace kindep::cli
