#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tmzv/identities.hpp"

namespace tmzv {

struct SweepOptions {
  /// Size knob; 3 reproduces the standard ranges of every sweep.
  int max = 3;
  /// Worker threads; results are ordered by parameter order regardless.
  unsigned threads = 1;
  /// Cutoff used by the numeric sweeps.
  std::uint64_t cutoff = 100000;
};

/// Parameter tasks for one statement, in deterministic order.
std::vector<std::function<VerifyReport()>> sweep_tasks(Statement s, const SweepOptions& opt);

/// Runs tasks on up to `threads` workers; result i belongs to task i.
std::vector<VerifyReport> run_tasks(const std::vector<std::function<VerifyReport()>>& tasks,
                                    unsigned threads);

std::vector<VerifyReport> run_sweep(Statement s, const SweepOptions& opt);

/// Value of TMZV_THREADS if set and positive, else `fallback`.
unsigned threads_from_env(unsigned fallback = 1);

/// All index tuples with depth in [min_depth, max_depth] and parts in [1, max_part],
/// shortest first.
std::vector<Index> all_indices(int min_depth, int max_depth, int max_part);

std::string report_to_text(const VerifyReport& r);
std::string reports_to_json(const std::vector<VerifyReport>& reports);

}  // namespace tmzv
