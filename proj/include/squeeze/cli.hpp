#pragma once

// Command-line front end. run() is the whole program minus process plumbing,
// so the tool binary and the tests drive exactly the same code.
//
// Exit codes: 0 success, 1 domain error (error name on stderr),
// 2 malformed command line (usage on stderr).

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "squeeze/mat2.hpp"
#include "squeeze/twolevel.hpp"

namespace squeeze::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::string_view kSweepHeader = "g,regime,class,m11,m12,m21,m22,eta";

struct SweepRow {
    double g = 0.0;
    std::string regime_tag;
    std::string class_tag;
    double m11 = 0.0, m12 = 0.0, m21 = 0.0, m22 = 0.0;
    double eta = 0.0;
};

/// Shortest decimal string that parses back to exactly x. Zero prints as "0".
std::string format_double(double x);

/// Whole-string decimal parse; returns false on any trailing garbage.
bool parse_double(std::string_view text, double& out);

/// "a,b,c,d" -> [[a,b],[c,d]].
bool parse_matrix(std::string_view text, RealMatrix2& out);

/// steps + 1 uniformly spaced values from lo to hi, both ends exact.
std::vector<double> uniform_grid(double lo, double hi, unsigned steps);

std::vector<SweepRow> to_rows(std::span<const twolevel::SweepEntry> entries);

/// Header plus one line per row, '\n' terminated.
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

/// args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace squeeze::cli
