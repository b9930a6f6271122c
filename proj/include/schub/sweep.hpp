#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "schub/json.hpp"

// Exhaustive verification sweeps over all small instances. Each instance is
// reported to a sink as a JSON object carrying an "ok" flag.

namespace schub {

struct SweepSummary {
  std::string check;
  int max_n;
  long long instances = 0;
  long long disagreements = 0;
};

using InstanceSink = std::function<void(const Json& instance)>;

/// Names accepted by run_sweep, in their canonical order.
const std::vector<std::string>& sweep_checks();

/// Runs one named check for every rank 2..max_n. Throws PreconditionError for
/// an unknown check and RankLimitError when max_n exceeds the rank limit.
SweepSummary run_sweep(std::string_view check, int max_n, const InstanceSink& sink = {});

Json to_json(const SweepSummary& summary);

}  // namespace schub
