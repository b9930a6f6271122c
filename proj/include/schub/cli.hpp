#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schub/parabolic.hpp"
#include "schub/permutation.hpp"

namespace schub::cli {

enum class Command { analyze, heads, toroidal, bp, sweep, classify };
enum class Format { json, text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitLimit = 3;

struct AnalysisRequest {
  Command command = Command::analyze;
  Format format = Format::json;
  int n = 0;
  std::optional<int> d;
  ParabolicSet parabolic = ParabolicSet::none(1);  ///< J, or J_P for bp
  std::optional<Permutation> w;
  std::optional<ParabolicSet> levi;                ///< defaults to l_max where needed
  std::optional<ParabolicSet> k;                   ///< K for bp
  int max_n = 6;
  int max_m = 1000;
  std::string check = "all";
  int rank_limit = 8;
};

/// Invalid command line; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was requested; carries the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses arguments (without the program name) into a validated request.
AnalysisRequest parse_request(const std::vector<std::string>& args);

/// Executes a request, writing JSON lines or text to `out`. Returns the exit code.
int run(const AnalysisRequest& request, std::ostream& out);

/// parse_request + run with every error mapped to its exit code.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schub::cli
