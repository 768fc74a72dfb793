#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "lppgames/model.hpp"

namespace lpp {

/// Best profit coalition S can reach when it may draw at most z units of the
/// pool resource (it pays only for what it draws). Always finite: x = 0 is
/// feasible and the technology admits no free output.
Rational value_of(const LPPInstance& instance, Coalition coalition, const Rational& z);

/// d_S: the smallest pool draw at which S's profit is maximal. Solved as the
/// free-z profit program followed by z-minimization over its optimal face;
/// the two stages agree because adding the redundant bound z <= d_S leaves
/// the optimum unchanged. Not capped by the stock r.
Rational optimal_demand(const LPPInstance& instance, Coalition coalition);

/// Per-coalition demand cache plus a memo for fixed-allotment values.
/// Lazy, write-once: concurrent callers may race to compute the same entry
/// but every computation yields the identical rational.
class DemandProfile {
 public:
  explicit DemandProfile(LPPInstance instance);

  const LPPInstance& instance() const { return instance_; }

  Rational demand(Coalition coalition);
  Rational partition_demand(const Partition& partition);
  /// Cached value_of.
  Rational value_at(Coalition coalition, const Rational& z);
  /// Fills the whole demand table (2^n - 1 programs) up front.
  void compute_all_demands();

 private:
  LPPInstance instance_;
  std::vector<std::optional<Rational>> demands_;
  std::map<std::pair<std::uint32_t, Rational>, Rational> values_;
  std::mutex mutex_;
};

enum class Regime { Unconstrained, GrandOnly, General };

std::string to_string(Regime regime);

/// The refinement-minimal partitions whose total demand exceeds the stock,
/// and the regime they imply: none (pool never binds), exactly the grand
/// coalition, or anything else.
struct RegimeReport {
  std::vector<Partition> minimal_exceeding;
  Regime regime = Regime::Unconstrained;
};

/// Scans every partition; a candidate is minimal when no strict refinement
/// also exceeds the stock. Demands are not superadditive, so minimality is
/// settled by enumerating refinements rather than by any shortcut.
RegimeReport classify_regime(DemandProfile& profile, int cap = kDefaultPartitionCap);

/// Probes value_of(S, k z*/grid) > 0 for k = 1..grid-1. Requires a positive
/// profit at z*; scaling an optimal plan shows every probe should pass.
bool positivity_scan(const LPPInstance& instance, Coalition coalition, const Rational& z_star,
                     int grid);

}  // namespace lpp
