#include "lppgames/stability.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpp {

ReducedGame reduced_game(DemandProfile& profile, const Partition& partition, Coalition ground,
                         ReductionSemantics semantics) {
  if (ground.empty()) throw std::invalid_argument("reduced game needs a non-empty ground set");
  Coalition covered;
  Rational outsider_demand = 0;
  for (Coalition block : partition.blocks()) {
    if (block.subset_of(ground)) {
      covered = covered.unite(block);
    } else if (!block.intersects(ground)) {
      outsider_demand += profile.demand(block);
    } else {
      throw std::invalid_argument("ground set must be a union of blocks of the structure");
    }
  }
  if (!(covered == ground)) {
    throw std::invalid_argument("ground set must be a union of blocks of the structure");
  }

  const Rational budget = positive_part(profile.instance().r - outsider_demand);
  const std::vector<int> members = ground.members();
  const int k = static_cast<int>(members.size());
  CharacteristicGame game(k);
  game.for_each_nonempty([&](Coalition local, const Rational&) {
    Coalition global;
    for (int bit : local.members()) {
      global = global.unite(Coalition::single(members[static_cast<std::size_t>(bit)]));
    }
    const bool capped =
        semantics == ReductionSemantics::CappedSubcoalitions || global == ground;
    const Rational z =
        capped ? std::min(profile.demand(global), budget) : profile.demand(global);
    game.set_worth(local, profile.value_at(global, z));
  });
  return ReducedGame{ground, members, budget, std::move(game)};
}

namespace {

Allocation globalize(const ReducedGame& reduced, const Allocation& local, int n) {
  Allocation out = Allocation::Zero(n);
  for (std::size_t i = 0; i < reduced.members.size(); ++i) {
    out(reduced.members[i]) = local(static_cast<Eigen::Index>(i));
  }
  return out;
}

}  // namespace

StabilityCheck is_partitionally_stable(DemandProfile& profile, const Partition& partition,
                                       ReductionSemantics semantics) {
  StabilityCheck check;
  const int n = profile.instance().n;
  for (Coalition block : partition.blocks()) {
    const ReducedGame reduced = reduced_game(profile, partition, block, semantics);
    const CoreReport report = core_nonempty(reduced.game);
    if (report.verdict == CoreVerdict::Empty) {
      check.block_with_empty_core = block;
      return check;
    }
    check.block_witnesses.emplace_back(block, globalize(reduced, *report.witness, n));
  }

  const std::size_t block_count = partition.blocks().size();
  for (std::uint32_t choice = 1; choice < (std::uint32_t{1} << block_count); ++choice) {
    if (__builtin_popcount(choice) < 2) continue;
    Coalition merger;
    for (std::size_t b = 0; b < block_count; ++b) {
      if ((choice >> b) & 1u) merger = merger.unite(partition.blocks()[b]);
    }
    const ReducedGame reduced = reduced_game(profile, partition, merger, semantics);
    if (core_nonempty(reduced.game).verdict == CoreVerdict::NonEmpty) {
      check.profitable_merger = merger;
      check.block_witnesses.clear();
      return check;
    }
  }
  check.stable = true;
  return check;
}

std::vector<Partition> stable_partitions(DemandProfile& profile, int cap,
                                         ReductionSemantics semantics) {
  std::vector<Partition> out;
  for_each_partition(profile.instance().n, cap, [&](const Partition& partition) {
    if (is_partitionally_stable(profile, partition, semantics).stable) out.push_back(partition);
  });
  return out;
}

}  // namespace lpp
