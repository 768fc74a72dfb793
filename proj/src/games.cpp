#include "lppgames/games.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpp {

AllocationRule demand_capped_proportional_rule() {
  return {"demand-capped-proportional",
          [](const Partition& partition, Coalition block, DemandProfile& profile) {
            const Rational total = profile.partition_demand(partition);
            const Rational own = profile.demand(block);
            if (total <= profile.instance().r) return own;
            return profile.instance().r * own / total;
          }};
}

AllocationRule optimistic_embedded_rule() {
  return {"optimistic-embedded",
          [](const Partition& partition, Coalition block, DemandProfile& profile) {
            const Rational& stock = profile.instance().r;
            Rational total = 0;
            for (Coalition other : partition.blocks()) {
              total += std::min(profile.demand(other), stock);
            }
            const Rational own = std::min(profile.demand(block), stock);
            if (total <= stock) return own;
            return stock * own / total;
          }};
}

AllocationRule pessimistic_embedded_rule() {
  return {"pessimistic-embedded",
          [](const Partition& partition, Coalition block, DemandProfile& profile) {
            Rational others = 0;
            for (Coalition other : partition.blocks()) {
              if (!(other == block)) others += profile.demand(other);
            }
            const Rational leftover = positive_part(profile.instance().r - others);
            return std::min(profile.demand(block), leftover);
          }};
}

AllocationRule rule_by_name(const std::string& name) {
  if (name == "demand-capped-proportional" || name == "proportional") {
    return demand_capped_proportional_rule();
  }
  if (name == "optimistic-embedded" || name == "optimistic") return optimistic_embedded_rule();
  if (name == "pessimistic-embedded" || name == "pessimistic") return pessimistic_embedded_rule();
  throw std::invalid_argument("unknown allocation rule: '" + name + "'");
}

std::vector<std::string> builtin_rule_names() {
  return {"demand-capped-proportional", "optimistic-embedded", "pessimistic-embedded"};
}

PartitionFunctionGame::PartitionFunctionGame(int players, std::string rule_name,
                                             std::vector<Partition> partitions,
                                             std::vector<std::vector<Cell>> cells)
    : n_(players),
      rule_name_(std::move(rule_name)),
      partitions_(std::move(partitions)),
      cells_(std::move(cells)) {
  if (partitions_.size() != cells_.size()) throw std::invalid_argument("cells/partitions mismatch");
  for (std::size_t i = 0; i < partitions_.size(); ++i) index_[partitions_[i].rgs()] = i;
}

const Rational& PartitionFunctionGame::worth(const Partition& partition, Coalition block) const {
  const auto found = index_.find(partition.rgs());
  if (found == index_.end()) throw std::invalid_argument("unknown partition");
  for (const Cell& cell : cells_[found->second]) {
    if (cell.block == block) return cell.worth;
  }
  throw std::invalid_argument("coalition is not a block of that partition");
}

CharacteristicGame characteristic_game(DemandProfile& profile, int cap) {
  const RegimeReport report = classify_regime(profile, cap);
  if (report.regime == Regime::General) {
    std::string blockers;
    for (const Partition& partition : report.minimal_exceeding) {
      if (!blockers.empty()) blockers += ", ";
      blockers += to_text(partition);
    }
    throw PreconditionError(
        "the pool binds away from the grand coalition, so no structure-free game exists; "
        "minimal over-demand structures: " + blockers);
  }
  const LPPInstance& instance = profile.instance();
  CharacteristicGame game(instance.n);
  const Coalition grand = game.grand();
  game.for_each_nonempty([&](Coalition coalition, const Rational&) {
    const Rational z = coalition == grand ? std::min(profile.demand(grand), instance.r)
                                          : profile.demand(coalition);
    game.set_worth(coalition, profile.value_at(coalition, z));
  });
  return game;
}

CharacteristicGame optimistic_resource_game(DemandProfile& profile) {
  CharacteristicGame game(profile.instance().n);
  game.for_each_nonempty([&](Coalition coalition, const Rational&) {
    game.set_worth(coalition, std::min(profile.demand(coalition), profile.instance().r));
  });
  return game;
}

CharacteristicGame pessimistic_resource_game(DemandProfile& profile, int cap) {
  const LPPInstance& instance = profile.instance();
  if (instance.n > cap) throw CapError(instance.n, cap);
  CharacteristicGame game(instance.n);
  const Coalition grand = game.grand();
  game.for_each_nonempty([&](Coalition coalition, const Rational&) {
    if (coalition == grand) {
      game.set_worth(coalition, std::min(profile.demand(grand), instance.r));
      return;
    }
    // Outsiders can organize to absorb as much of the stock as any structure
    // of the complement allows; S is left the worst-case remainder.
    const std::vector<int> outsiders = grand.setminus(coalition).members();
    Rational heaviest = 0;
    bool first = true;
    for_each_partition(static_cast<int>(outsiders.size()), cap, [&](const Partition& shape) {
      Rational total = 0;
      for (Coalition piece : shape.blocks()) {
        Coalition mapped;
        for (int bit : piece.members()) {
          mapped = mapped.unite(Coalition::single(outsiders[static_cast<std::size_t>(bit)]));
        }
        total += profile.demand(mapped);
      }
      if (first || total > heaviest) heaviest = total;
      first = false;
    });
    const Rational leftover = positive_part(instance.r - heaviest);
    game.set_worth(coalition, std::min(leftover, profile.demand(coalition)));
  });
  return game;
}

CharacteristicGame lpp_game_from_resource_game(DemandProfile& profile,
                                               const CharacteristicGame& resource_game) {
  const LPPInstance& instance = profile.instance();
  if (resource_game.players() != instance.n) {
    throw std::invalid_argument("resource game has the wrong player count");
  }
  CharacteristicGame game(instance.n);
  resource_game.for_each_nonempty([&](Coalition coalition, const Rational& share) {
    if (share < 0 || share > instance.r) {
      throw std::domain_error("resource share for " + to_text(coalition) +
                              " is outside [0, r]: " + to_string(share));
    }
    game.set_worth(coalition, profile.value_at(coalition, share));
  });
  return game;
}

PartitionFunctionGame partition_function_game(DemandProfile& profile, const AllocationRule& rule,
                                              int cap) {
  const LPPInstance& instance = profile.instance();
  std::vector<Partition> partitions;
  std::vector<std::vector<PartitionFunctionGame::Cell>> cells;
  for_each_partition(instance.n, cap, [&](const Partition& partition) {
    std::vector<PartitionFunctionGame::Cell> row;
    Rational total = 0;
    for (Coalition block : partition.blocks()) {
      Rational share = rule.share(partition, block, profile);
      if (share < 0) {
        throw std::domain_error("rule '" + rule.name + "' allocated a negative share at " +
                                to_text(partition));
      }
      total += share;
      row.push_back({block, share, profile.value_at(block, share)});
    }
    if (total > instance.r) {
      throw std::domain_error("rule '" + rule.name + "' allocates beyond the stock at " +
                              to_text(partition));
    }
    partitions.push_back(partition);
    cells.push_back(std::move(row));
  });
  return PartitionFunctionGame(instance.n, rule.name, std::move(partitions), std::move(cells));
}

std::pair<CharacteristicGame, CharacteristicGame> pessimistic_and_optimistic_views(
    const PartitionFunctionGame& game) {
  const int n = game.players();
  CharacteristicGame worst(n);
  CharacteristicGame best(n);
  std::vector<bool> seen(std::size_t{1} << n, false);
  for (std::size_t p = 0; p < game.partitions().size(); ++p) {
    for (const auto& cell : game.cells(p)) {
      const std::uint32_t mask = cell.block.mask();
      if (!seen[mask]) {
        worst.set_worth(cell.block, cell.worth);
        best.set_worth(cell.block, cell.worth);
        seen[mask] = true;
      } else {
        if (cell.worth < worst.worth(cell.block)) worst.set_worth(cell.block, cell.worth);
        if (cell.worth > best.worth(cell.block)) best.set_worth(cell.block, cell.worth);
      }
    }
  }
  return {std::move(worst), std::move(best)};
}

CharacteristicGame bankruptcy_game(const Rational& estate, const std::vector<Rational>& claims) {
  if (estate < 0) throw std::domain_error("estate must be nonnegative");
  Rational total = 0;
  for (const Rational& claim : claims) {
    if (claim < 0) throw std::domain_error("claims must be nonnegative");
    total += claim;
  }
  if (total < estate) throw std::domain_error("claims fall short of the estate");
  const int n = static_cast<int>(claims.size());
  CharacteristicGame game(n);
  game.for_each_nonempty([&](Coalition coalition, const Rational&) {
    Rational outside = 0;
    for (int i = 0; i < n; ++i) {
      if (!coalition.contains(i)) outside += claims[static_cast<std::size_t>(i)];
    }
    game.set_worth(coalition, positive_part(estate - outside));
  });
  return game;
}

}  // namespace lpp
