#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gwq::cli {

enum class Command { Compute, Compare, Dlambda, Table, Ledger };
enum class Format { Json, Csv };

// One parsed invocation. Textual fields are stored in canonical form, so
// serialize(parse_job(argv)) is the same for every spelling of a job.
struct JobSpec {
  Command command = Command::Compute;
  std::string model;       // compute: "P2", "P1xP1"
  std::string family;      // compare, table, ledger: "torus:1,1", "grass:4,2"
  std::string degree;      // compute: curve class "3" or "1,1"; compare, ledger: d
  std::string insertions;  // compute, compare: canonical class list
  int m = 0;               // dlambda
  int n = 0;
  std::string lambda;      // dlambda: "2,1"
  int genus = 0;           // ledger
  int points = 0;
  int max_degree = 1;      // table
  bool all = false;
  int max_points = 6;
  std::optional<std::size_t> slot;  // compare, 1-based
  bool probe_slots = false;
  Format format = Format::Json;
  std::string output;      // empty: standard output
  bool timing = false;

  bool operator==(const JobSpec&) const = default;
};

const char* command_name(Command c);

// Thrown by parse_job for --help; carries the usage text.
struct HelpRequested {
  std::string text;
};

// args excludes the program name. Throws gwq::ParameterError on bad input
// and HelpRequested for --help.
JobSpec parse_job(const std::vector<std::string>& args);

// Canonical argument vector (without program name).
std::vector<std::string> serialize(const JobSpec& job);

// Full front end: parses, runs and writes the report to out (or the
// --output file). Diagnostics go to err as single lines. Returns the exit
// code: 0 ok, 1 internal failure or comparison inequality, 2 parameter
// error, 3 unsupported configuration.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gwq::cli
