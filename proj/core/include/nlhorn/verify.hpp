#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nlhorn/inequalities.hpp"
#include "nlhorn/partition.hpp"

namespace nlhorn {

/// One triple's verdict against an inequality set. `violated` holds indices
/// into the set's canonical record order. For saturation findings, t is the
/// stretch factor that witnessed the failure; 0 elsewhere.
struct TripleVerdict {
  Partition mu, nu, la;
  bool parity = false;
  bool nl_pos = false;
  std::vector<int> violated;
  int t = 0;
};

/// Scan totals plus every finding. `kind` is "conjecture", "saturation" or
/// "rowcol". counterexamples: triples the inequalities admit but NL rejects
/// (or row/column rule disagreements). breaches: NL-positive triples that
/// violate an inequality; these refute soundness and must never occur.
struct ScanReport {
  std::string kind;
  int n = 0;
  long long max_size = 0;
  std::string family;
  int t_max = 0;
  long long scanned = 0;
  long long nl_positive_count = 0;
  long long compatible = 0;  // parity holds and no inequality is violated
  std::vector<TripleVerdict> counterexamples;
  std::vector<TripleVerdict> breaches;
  double wall_seconds = 0.0;
};

using ProgressFn = std::function<void(long long done, long long total)>;

/// Partitions with at most n_parts parts and size up to max_size, ordered by
/// size then reverse-lexicographically: 0, 1, 2, 1,1, 3, 2,1, 1,1,1, ...
std::vector<Partition> partitions_up_to(int n_parts, long long max_size);

/// Evaluates one triple against a set. Throws std::invalid_argument if a
/// partition has more parts than set.n.
TripleVerdict check_triple(const Partition& mu, const Partition& nu, const Partition& la,
                           const InequalitySet& set);

/// Full cube scan over partitions_up_to(n, max_size): both the necessity
/// direction (breaches) and the sufficiency direction (counterexamples).
ScanReport scan_conjecture(int n, long long max_size, const InequalitySet& set, int jobs = 1,
                           const ProgressFn& progress = {});

/// Looks for parity-compatible triples where N(t*mu, t*nu, t*la) > 0 but
/// N(mu, nu, la) = 0, for t in 2..t_max.
ScanReport scan_saturation(int n, long long max_size, int t_max, int jobs = 1,
                           const ProgressFn& progress = {});

/// Cross-checks the closed row/column criteria (and their witnesses) against
/// nl_positive for one-row and one-column lambda, in every block position.
ScanReport scan_rowcol(int n, long long max_size, int jobs = 1,
                       const ProgressFn& progress = {});

}  // namespace nlhorn
