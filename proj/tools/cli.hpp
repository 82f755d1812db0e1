#pragma once

// Command implementations behind the unogrid executable. Each command writes its
// report to `out`, diagnostics to `err`, and returns the process exit code.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "unogrid/error.hpp"
#include "unogrid/grid.hpp"

namespace unogrid::cli {

enum class OutputFormat { Table, Json };

struct RunConfig {
  int state_cap = 8;
  OutputFormat output = OutputFormat::Table;
  int threads = 1;
  std::uint64_t seed = 20240611;
  std::string dump_dir;  // where verify writes the first counterexample, if set
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitCapExceeded = 3;
inline constexpr int kExitMoveSequenceInvalid = 4;
inline constexpr int kExitUnknownSuite = 5;

int exit_code(ErrorCode code);

int cmd_homology(const std::string& grid_file, const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_movie(const std::string& grid_file, const std::string& movie_file, const RunConfig& cfg, std::ostream& out,
              std::ostream& err);
int cmd_sites(const std::string& grid_file, const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& suite, const RunConfig& cfg, std::ostream& out, std::ostream& err);

const std::vector<std::string>& suite_names();

/// A failed check, reproducible from a grid and a movie script.
struct Counterexample {
  std::string check;
  std::string grid;   // grid file text
  std::string movie;  // movie script text, possibly empty
};

struct SuiteReport {
  std::string suite;
  long checks = 0;
  long failures = 0;
  std::optional<Counterexample> first_failure;

  bool passed() const noexcept { return failures == 0; }
};

/// Throws Error{UnknownSuite}.
SuiteReport run_suite(const std::string& suite, const RunConfig& cfg);

/// Full argument parsing and dispatch.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace unogrid::cli
