#include "lppgames/demand.hpp"

#include <stdexcept>

namespace lpp {

Rational value_of(const LPPInstance& instance, Coalition coalition, const Rational& z) {
  if (z < 0) throw std::domain_error("pool allotment must be nonnegative");
  // The free-draw program with the draw capped by the allotment. The cap is
  // a plain right-hand side, so the value is nondecreasing and concave in z
  // and flattens out at the optimal demand.
  StandardLP<Rational> lp = coalition_program(instance, coalition);
  const Eigen::Index rows = lp.rows();
  lp.constraints.conservativeResize(rows + 1, Eigen::NoChange);
  lp.constraints.row(rows).setZero();
  lp.constraints(rows, lp.cols() - 1) = Rational(1);
  lp.rhs.conservativeResize(rows + 1);
  lp.rhs(rows) = z;
  const LPOutcome<Rational> out = solve(lp);
  if (out.status != LPStatus::Optimal) {
    throw std::logic_error("capped-allotment program must be solvable");
  }
  return out.value;
}

Rational optimal_demand(const LPPInstance& instance, Coalition coalition) {
  const StandardLP<Rational> lp = coalition_program(instance, coalition);
  const LPOutcome<Rational> best = solve(lp);
  if (best.status != LPStatus::Optimal) {
    throw std::logic_error("coalition profit program must be solvable");
  }
  VectorQ pool_only = VectorQ::Zero(lp.cols());
  pool_only(lp.cols() - 1) = Rational(1);
  const LPOutcome<Rational> lean =
      solve_with_value_constraint(lp, best.value, pool_only, Sense::Minimize);
  return lean.primal(lp.cols() - 1);
}

DemandProfile::DemandProfile(LPPInstance instance) : instance_(std::move(instance)) {
  demands_.resize(std::size_t{1} << instance_.n);
}

Rational DemandProfile::demand(Coalition coalition) {
  if (coalition.empty()) throw std::invalid_argument("empty coalition has no demand");
  {
    std::lock_guard lock(mutex_);
    if (auto& slot = demands_[coalition.mask()]) return *slot;
  }
  Rational computed = optimal_demand(instance_, coalition);
  std::lock_guard lock(mutex_);
  auto& slot = demands_[coalition.mask()];
  if (!slot) slot = std::move(computed);
  return *slot;
}

Rational DemandProfile::partition_demand(const Partition& partition) {
  Rational total = 0;
  for (Coalition block : partition.blocks()) total += demand(block);
  return total;
}

Rational DemandProfile::value_at(Coalition coalition, const Rational& z) {
  const auto key = std::make_pair(coalition.mask(), z);
  {
    std::lock_guard lock(mutex_);
    if (auto it = values_.find(key); it != values_.end()) return it->second;
  }
  Rational computed = value_of(instance_, coalition, z);
  std::lock_guard lock(mutex_);
  return values_.emplace(key, std::move(computed)).first->second;
}

void DemandProfile::compute_all_demands() {
  const std::uint32_t full = Coalition::full(instance_.n).mask();
  for (std::uint32_t mask = 1; mask <= full; ++mask) demand(Coalition::from_mask(mask));
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::Unconstrained: return "unconstrained";
    case Regime::GrandOnly: return "grand-only";
    case Regime::General: return "general";
  }
  return "?";
}

RegimeReport classify_regime(DemandProfile& profile, int cap) {
  const int n = profile.instance().n;
  if (n > cap) throw CapError(n, cap);
  profile.compute_all_demands();
  const Rational& stock = profile.instance().r;

  RegimeReport report;
  for_each_partition(n, cap, [&](const Partition& partition) {
    if (profile.partition_demand(partition) <= stock) return;
    const bool deeper_excess = any_strict_refinement(partition, [&](const Partition& finer) {
      return profile.partition_demand(finer) > stock;
    });
    if (!deeper_excess) report.minimal_exceeding.push_back(partition);
  });

  if (report.minimal_exceeding.empty()) {
    report.regime = Regime::Unconstrained;
  } else if (report.minimal_exceeding.size() == 1 &&
             report.minimal_exceeding.front() == Partition::grand(n)) {
    report.regime = Regime::GrandOnly;
  } else {
    report.regime = Regime::General;
  }
  return report;
}

bool positivity_scan(const LPPInstance& instance, Coalition coalition, const Rational& z_star,
                     int grid) {
  if (grid < 1) throw std::domain_error("grid must be positive");
  if (!(z_star > 0) || !(value_of(instance, coalition, z_star) > 0)) {
    throw std::domain_error("positivity scan needs a profitable z*");
  }
  for (int k = 1; k < grid; ++k) {
    if (!(value_of(instance, coalition, z_star * k / grid) > 0)) return false;
  }
  return true;
}

}  // namespace lpp
