#include "lppgames/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpp {

std::string to_string(CoreVerdict verdict) {
  return verdict == CoreVerdict::Empty ? "empty" : "non-empty";
}

std::string to_string(WitnessSource source) {
  switch (source) {
    case WitnessSource::FeasibilityPoint: return "feasibility-lp";
    case WitnessSource::OwenDuals: return "owen-duals";
    case WitnessSource::ScarcityDuals: return "scarcity-duals";
  }
  return "?";
}

MembershipCheck check_core_membership(const CharacteristicGame& game, const Allocation& payoff) {
  if (payoff.size() != game.players()) throw std::invalid_argument("payoff length != player count");
  MembershipCheck check;
  const Coalition grand = game.grand();
  Rational total = 0;
  for (int i = 0; i < game.players(); ++i) total += payoff(i);
  if (total != game.worth(grand)) check.violated.push_back(grand);
  game.for_each_nonempty([&](Coalition coalition, const Rational& worth) {
    if (coalition == grand) return;
    Rational sum = 0;
    for (int member : coalition.members()) sum += payoff(member);
    if (sum < worth) check.violated.push_back(coalition);
  });
  check.in_core = check.violated.empty();
  return check;
}

CoreReport core_nonempty(const CharacteristicGame& game) {
  // Shift by singleton worths: any core point has x_i >= v({i}), so w = x -
  // (v({i}))_i is a sign-constrained unknown and the canonical form applies.
  const int n = game.players();
  VectorQ singles(n);
  for (int i = 0; i < n; ++i) singles(i) = game.worth(Coalition::single(i));

  const std::uint32_t full = game.grand().mask();
  const Eigen::Index rows = static_cast<Eigen::Index>(full) + 1;  // proper sets + equality pair
  StandardLP<Rational> lp;
  lp.constraints = MatrixQ::Zero(rows, n);
  lp.rhs = VectorQ::Zero(rows);
  lp.objective = VectorQ::Zero(n);

  Eigen::Index row = 0;
  for (std::uint32_t mask = 1; mask < full; ++mask, ++row) {
    const Coalition coalition = Coalition::from_mask(mask);
    Rational shifted = game.worth(coalition);
    for (int member : coalition.members()) {
      lp.constraints(row, member) = Rational(-1);
      shifted -= singles(member);
    }
    lp.rhs(row) = -shifted;
  }
  Rational surplus = game.worth(game.grand());
  for (int i = 0; i < n; ++i) surplus -= singles(i);
  lp.constraints.row(row).setConstant(Rational(1));
  lp.rhs(row) = surplus;
  ++row;
  lp.constraints.row(row).setConstant(Rational(-1));
  lp.rhs(row) = -surplus;

  const LPOutcome<Rational> out = solve(lp);
  CoreReport report;
  if (out.status != LPStatus::Optimal) {
    report.verdict = CoreVerdict::Empty;
    return report;
  }
  report.verdict = CoreVerdict::NonEmpty;
  report.witness = out.primal + singles;
  report.source = WitnessSource::FeasibilityPoint;
  return report;
}

Allocation owen_allocation(DemandProfile& profile) {
  const LPPInstance& instance = profile.instance();
  const Coalition grand = Coalition::full(instance.n);
  if (profile.demand(grand) > instance.r) {
    throw PreconditionError(
        "owen pricing needs d_N <= r; the pool binds here, use the scarcity construction "
        "(allocation_from_resource_core) instead");
  }
  const LPOutcome<Rational> out = solve(coalition_program(instance, grand));
  if (out.status != LPStatus::Optimal) throw std::logic_error("grand program must be solvable");
  Allocation payoff(instance.n);
  for (int i = 0; i < instance.n; ++i) {
    payoff(i) = instance.B.col(i).dot(out.dual.head(instance.q));
  }
  return payoff;
}

namespace {

/// Solves square * x = rhs exactly; empty result when singular.
std::optional<VectorQ> solve_square(MatrixQ m, VectorQ rhs) {
  const Eigen::Index n = m.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    m.row(col).swap(m.row(pivot));
    std::swap(rhs(col), rhs(pivot));
    const Rational inv = Rational(1) / m(col, col);
    m.row(col) *= inv;
    rhs(col) *= inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      m.row(r) -= f * m.row(col);
      rhs(r) -= f * rhs(col);
    }
  }
  return rhs;
}

/// Vertices of {y : M y <= h}, by exhaustive choice of active rows.
std::vector<VectorQ> polytope_vertices(const MatrixQ& m, const VectorQ& h) {
  const Eigen::Index dim = m.cols();
  const Eigen::Index rows = m.rows();
  std::vector<VectorQ> found;
  std::vector<Eigen::Index> pick(static_cast<std::size_t>(dim), 0);
  const std::function<void(Eigen::Index, Eigen::Index)> recurse = [&](Eigen::Index level,
                                                                      Eigen::Index from) {
    if (level == dim) {
      MatrixQ active(dim, dim);
      VectorQ rhs(dim);
      for (Eigen::Index k = 0; k < dim; ++k) {
        active.row(k) = m.row(pick[static_cast<std::size_t>(k)]);
        rhs(k) = h(pick[static_cast<std::size_t>(k)]);
      }
      const auto point = solve_square(std::move(active), std::move(rhs));
      if (!point) return;
      if (((m * *point) - h).maxCoeff() > 0) return;
      if (std::find(found.begin(), found.end(), *point) == found.end()) found.push_back(*point);
      return;
    }
    for (Eigen::Index r = from; r < rows; ++r) {
      pick[static_cast<std::size_t>(level)] = r;
      recurse(level + 1, r + 1);
    }
  };
  if (dim > 0 && rows >= dim) recurse(0, 0);
  return found;
}

}  // namespace

std::vector<Allocation> owen_set_vertices(DemandProfile& profile) {
  const LPPInstance& instance = profile.instance();
  if (instance.n > 3) {
    throw PreconditionError("exhaustive dual enumeration is limited to 3 producers");
  }
  const Coalition grand = Coalition::full(instance.n);
  if (profile.demand(grand) > instance.r) {
    throw PreconditionError("owen pricing needs d_N <= r");
  }
  const StandardLP<Rational> primal = coalition_program(instance, grand);
  const LPOutcome<Rational> out = solve(primal);
  if (out.status != LPStatus::Optimal) throw std::logic_error("grand program must be solvable");

  // Dual feasible set of the grand program: A^T y >= p (columnwise), the
  // pool price capped at c, y >= 0; intersected with the optimal-value slice.
  const Eigen::Index dim = instance.q + 1;
  const Eigen::Index structural = instance.g;
  MatrixQ m = MatrixQ::Zero(structural + 1 + dim + 2, dim);
  VectorQ h = VectorQ::Zero(m.rows());
  for (Eigen::Index j = 0; j < structural; ++j) {
    m.row(j) = -instance.A.col(j).transpose();
    h(j) = -instance.p(j);
  }
  m(structural, dim - 1) = Rational(1);
  h(structural) = instance.c;
  for (Eigen::Index k = 0; k < dim; ++k) m(structural + 1 + k, k) = Rational(-1);
  const VectorQ bundle = coalition_resources(instance, grand);
  VectorQ price_row = VectorQ::Zero(dim);
  price_row.head(instance.q) = bundle;
  m.row(structural + 1 + dim) = price_row.transpose();
  h(structural + 1 + dim) = out.value;
  m.row(structural + 2 + dim) = -price_row.transpose();
  h(structural + 2 + dim) = -out.value;

  std::vector<Allocation> allocations;
  for (const VectorQ& dual : polytope_vertices(m, h)) {
    Allocation payoff(instance.n);
    for (int i = 0; i < instance.n; ++i) {
      payoff(i) = instance.B.col(i).dot(dual.head(instance.q));
    }
    if (std::find(allocations.begin(), allocations.end(), payoff) == allocations.end()) {
      allocations.push_back(payoff);
    }
  }
  return allocations;
}

Allocation allocation_from_resource_core(DemandProfile& profile,
                                         const CharacteristicGame& resource_game,
                                         const Allocation& resource_core_point) {
  const LPPInstance& instance = profile.instance();
  if (resource_game.players() != instance.n || resource_core_point.size() != instance.n) {
    throw std::invalid_argument("resource game / core point sized for a different instance");
  }
  const Coalition grand = Coalition::full(instance.n);
  if (!(profile.demand(grand) > instance.r)) {
    throw PreconditionError("the scarcity construction needs d_N > r; use owen_allocation");
  }
  Rational handed = 0;
  for (int i = 0; i < instance.n; ++i) handed += resource_core_point(i);
  if (handed != instance.r) {
    throw PreconditionError("the resource core point must hand out exactly the stock r");
  }
  const MembershipCheck check = check_core_membership(resource_game, resource_core_point);
  if (!check.in_core) {
    throw std::domain_error("point is outside the resource game's core; first violation at " +
                            to_text(check.violated.front()));
  }

  const LPOutcome<Rational> out = solve(fixed_allocation_program(instance, grand, instance.r));
  if (out.status != LPStatus::Optimal) throw std::logic_error("stock-r program must be solvable");
  const Rational pool_margin = out.dual(instance.q) - instance.c;
  Allocation payoff(instance.n);
  for (int i = 0; i < instance.n; ++i) {
    payoff(i) = instance.B.col(i).dot(out.dual.head(instance.q)) +
                resource_core_point(i) * pool_margin;
  }
  return payoff;
}

bool dominates(const Allocation& challenger, const Allocation& incumbent, Coalition coalition,
               const PartitionFunctionGame& game, DominanceScope scope) {
  if (coalition.empty()) throw std::invalid_argument("dominance needs a non-empty coalition");
  if (challenger.size() != game.players() || incumbent.size() != game.players()) {
    throw std::invalid_argument("allocation length != player count");
  }
  Rational claimed = 0;
  for (int member : coalition.members()) {
    if (!(challenger(member) > incumbent(member))) return false;
    claimed += challenger(member);
  }
  bool coverable = scope == DominanceScope::AllPartitions;
  for (std::size_t p = 0; p < game.partitions().size(); ++p) {
    if (!game.partitions()[p].contains_block(coalition)) continue;
    const bool fits = claimed <= game.worth(game.partitions()[p], coalition);
    if (scope == DominanceScope::AllPartitions && !fits) return false;
    if (scope == DominanceScope::SomePartition && fits) coverable = true;
  }
  return coverable;
}

CoreReport partition_core(const PartitionFunctionGame& game, CoreView view) {
  auto [worst, best] = pessimistic_and_optimistic_views(game);
  return core_nonempty(view == CoreView::Pessimistic ? worst : best);
}

}  // namespace lpp
