#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lppgames/core.hpp"

namespace lpp {

/// Two readings of the reduced game a block union U inherits once the rest
/// of the structure has claimed its demands. The budget is always
/// r_U = (r - sum of outsider-block demands)_+; they differ in whether
/// sub-coalitions of U are capped by that budget too, or only U itself.
enum class ReductionSemantics { CappedSubcoalitions, CappedBlockOnly };

struct ReducedGame {
  Coalition ground;          // union of blocks, global player ids
  std::vector<int> members;  // local index -> global id
  Rational budget;           // r_U
  CharacteristicGame game;   // over |ground| local players
};

/// Game on U induced by structure P: worth(T) = value(T; min(d_T, r_U))
/// (default semantics), with the cap applied only at T = U under the
/// block-only reading. U must be a non-empty union of blocks of P.
ReducedGame reduced_game(DemandProfile& profile, const Partition& partition, Coalition ground,
                         ReductionSemantics semantics = ReductionSemantics::CappedSubcoalitions);

struct StabilityCheck {
  bool stable = false;
  /// Condition (1) failure: a block whose reduced game has an empty core.
  std::optional<Coalition> block_with_empty_core;
  /// Condition (2) failure: a union of two or more blocks whose reduced game
  /// has a non-empty core.
  std::optional<Coalition> profitable_merger;
  /// When stable: a core witness per block's reduced game (global indexing,
  /// zero off-block).
  std::vector<std::pair<Coalition, Allocation>> block_witnesses;
};

/// A structure is stable when every block's reduced game has a non-empty
/// core and no merger of blocks does.
StabilityCheck is_partitionally_stable(
    DemandProfile& profile, const Partition& partition,
    ReductionSemantics semantics = ReductionSemantics::CappedSubcoalitions);

std::vector<Partition> stable_partitions(
    DemandProfile& profile, int cap = kDefaultPartitionCap,
    ReductionSemantics semantics = ReductionSemantics::CappedSubcoalitions);

}  // namespace lpp
