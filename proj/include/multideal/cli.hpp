#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "multideal/monomial_ideal.hpp"

namespace multideal::cli {

/// Ideal file contents: {"vars": [...], "gens": [...]}. Extra keys are ignored.
struct IdealDocument {
    std::vector<std::string> variables;
    std::vector<std::string> generators;

    /// Throws ParseError on malformed JSON, missing fields or empty `vars`.
    static IdealDocument from_json(std::string_view text);
    static IdealDocument from_file(const std::string& path);
    /// Comma-separated `--vars` / `--gens` lists.
    static IdealDocument from_lists(std::string_view vars, std::string_view gens);

    MonomialIdeal to_ideal() const;
};

/// Splits on commas and trims whitespace; empty input gives an empty list.
std::vector<std::string> split_list(std::string_view text);

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain_error = 1;
inline constexpr int exit_usage_error = 2;

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`; returns 0, 1 (domain error) or 2 (usage or parse error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace multideal::cli
