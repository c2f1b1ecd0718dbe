#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "varregion/core.hpp"
#include "varregion/quad.hpp"

namespace varregion::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitInvalidParameters = 2,
    kExitQuadrature = 3,
    kExitInvariantViolation = 4,
};

enum class Subcommand { boundary, sample, verify, diskbound, lemma, figures };
enum class OutputFormat { csv, json, svg };

struct RunConfig {
    Subcommand subcommand = Subcommand::boundary;
    RegionParams params{Complex(0.5, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0)};
    std::size_t n_samples = 512;
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::csv;
    /// File (or directory for figures). Empty writes to the output stream.
    std::filesystem::path output_path;
    QuadConfig quad;
    /// Members drawn by `sample` and `verify`.
    std::size_t count = 100;
    /// `lemma` inputs.
    double theta = 0.0;
    double radius = 0.9;
    /// Relative chord tolerance for boundary refinement; 0 keeps the uniform samples.
    double refine = 0.0;
};

/// Runs one subcommand. Library errors propagate as exceptions; `main_entry`
/// maps them to exit codes. Returns kExitInvariantViolation when `verify`
/// finds a violated invariant.
int run(const RunConfig& config, std::ostream& out, std::ostream& log);

/// Full command line front end: parses argv, runs, maps errors to exit codes.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace varregion::cli
