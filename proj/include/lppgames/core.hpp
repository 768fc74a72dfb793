#pragma once

#include <optional>
#include <vector>

#include "lppgames/games.hpp"

namespace lpp {

/// Payoff per producer.
using Allocation = VectorQ;

enum class CoreVerdict { Empty, NonEmpty };

/// How a witness allocation was produced: a feasible point of the core
/// system, endowments priced at grand-coalition duals (with or without the
/// redundant demand bound), or the scarcity construction that adds a resource
/// share priced at the pool's shadow value.
enum class WitnessSource { FeasibilityPoint, OwenDuals, ScarcityDuals };

std::string to_string(CoreVerdict verdict);
std::string to_string(WitnessSource source);

struct CoreReport {
  CoreVerdict verdict = CoreVerdict::Empty;
  std::optional<Allocation> witness;
  std::optional<WitnessSource> source;
};

struct MembershipCheck {
  bool in_core = false;
  std::vector<Coalition> violated;  // N itself flags a failed efficiency check
};

/// Exact test of efficiency and coalitional rationality.
MembershipCheck check_core_membership(const CharacteristicGame& game, const Allocation& payoff);

/// Decides core non-emptiness by a violation-minimizing feasibility program
/// over the core system; the feasible point at violation zero is the witness.
/// Deterministic: the solver's pivot rule is fixed.
CoreReport core_nonempty(const CharacteristicGame& game);

/// Prices each producer's endowment at the grand coalition's dual resource
/// values: x_i = b^i . y. Requires d_N <= r (the pool must not bind); the
/// result is efficient for v_opt and coalitionally rational everywhere.
Allocation owen_allocation(DemandProfile& profile);

/// All extreme dual solutions of the grand-coalition program, mapped to
/// allocations. Exhaustive search, so only small instances (n <= 3) are
/// accepted; duplicates are removed.
std::vector<Allocation> owen_set_vertices(DemandProfile& profile);

/// Scarcity construction for d_N > r: given u in the core of the resource
/// game R with u(N) = r, prices endowments at the stock-r duals y* and adds
/// the resource share priced at the pool margin, x_i = b^i . y*_q + u_i
/// (y*_{q+1} - c). Lands in the core of v^R.
Allocation allocation_from_resource_core(DemandProfile& profile,
                                         const CharacteristicGame& resource_game,
                                         const Allocation& resource_core_point);

enum class DominanceScope { AllPartitions, SomePartition };

/// Whether `challenger` dominates `incumbent` through S: strictly better for
/// every member of S, and S's total under the challenger is coverable --
/// against every structure containing S, or against at least one.
bool dominates(const Allocation& challenger, const Allocation& incumbent, Coalition coalition,
               const PartitionFunctionGame& game, DominanceScope scope);

enum class CoreView { Pessimistic, Optimistic };

/// Core of the partition-function game, reduced to the matching
/// characteristic view: worst-case embedded worths for the pessimistic core,
/// best-case for the optimistic one.
CoreReport partition_core(const PartitionFunctionGame& game, CoreView view);

}  // namespace lpp
