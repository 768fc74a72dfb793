#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lppgames/demand.hpp"

namespace lpp {

/// Characteristic-function game: a worth per non-empty coalition, zero for
/// the empty set. Worths live in a dense array indexed by coalition mask.
class CharacteristicGame {
 public:
  explicit CharacteristicGame(int players)
      : n_(players), worth_(std::size_t{1} << players, Rational(0)) {
    if (players < 1 || players > 31) throw std::invalid_argument("unsupported player count");
  }

  int players() const { return n_; }
  Coalition grand() const { return Coalition::full(n_); }

  const Rational& worth(Coalition coalition) const {
    require_in_range(coalition);
    return worth_[coalition.mask()];
  }
  void set_worth(Coalition coalition, Rational value) {
    require_in_range(coalition);
    if (coalition.empty()) throw std::invalid_argument("the empty coalition's worth is fixed at 0");
    worth_[coalition.mask()] = std::move(value);
  }

  template <typename Visit>
  void for_each_nonempty(Visit&& visit) const {
    for (std::uint32_t mask = 1; mask < worth_.size(); ++mask) {
      visit(Coalition::from_mask(mask), worth_[mask]);
    }
  }

  friend bool operator==(const CharacteristicGame& a, const CharacteristicGame& b) {
    return a.n_ == b.n_ && a.worth_ == b.worth_;
  }

 private:
  void require_in_range(Coalition coalition) const {
    if (coalition.mask() >= worth_.size()) throw std::invalid_argument("coalition out of range");
  }
  int n_;
  std::vector<Rational> worth_;
};

/// How the manager splits the stock once a coalition structure has formed.
/// The model deliberately leaves this open, so the builder takes any rule
/// that keeps each share nonnegative and each partition's total within r.
struct AllocationRule {
  std::string name;
  std::function<Rational(const Partition&, Coalition, DemandProfile&)> share;
};

/// d_S when the structure's total demand fits, otherwise everyone is scaled
/// back pro rata: z_S(P) = r d_S / d(P).
AllocationRule demand_capped_proportional_rule();
/// min(d_S, r), rescaled pro rata when a structure's total would exceed r.
AllocationRule optimistic_embedded_rule();
/// What the other blocks' demands leave over: min(d_S, (r - sum_{T != S} d_T)_+).
AllocationRule pessimistic_embedded_rule();
/// Lookup by name (accepts the short aliases "proportional", "optimistic",
/// "pessimistic"). Throws std::invalid_argument for unknown names.
AllocationRule rule_by_name(const std::string& name);
std::vector<std::string> builtin_rule_names();

/// Worths for every embedded coalition (block of a partition), together with
/// the pool share the generating rule granted it.
class PartitionFunctionGame {
 public:
  struct Cell {
    Coalition block;
    Rational allotment;
    Rational worth;
  };

  PartitionFunctionGame(int players, std::string rule_name, std::vector<Partition> partitions,
                        std::vector<std::vector<Cell>> cells);

  int players() const { return n_; }
  const std::string& rule_name() const { return rule_name_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  const std::vector<Cell>& cells(std::size_t partition_index) const {
    return cells_[partition_index];
  }
  const Rational& worth(const Partition& partition, Coalition block) const;

 private:
  int n_;
  std::string rule_name_;
  std::vector<Partition> partitions_;
  std::vector<std::vector<Cell>> cells_;
  std::map<std::vector<std::uint8_t>, std::size_t> index_;
};

/// The induced characteristic game v(S) = value(S; d_S), v(N) = value(N;
/// min(d_N, r)). Only meaningful when the pool binds nowhere or for the grand
/// coalition alone; otherwise refuses and names the partitions in the way.
CharacteristicGame characteristic_game(DemandProfile& profile, int cap = kDefaultPartitionCap);

/// R_opt(S) = min(d_S, r): resource units, not profit.
CharacteristicGame optimistic_resource_game(DemandProfile& profile);

/// R_pes(S) = min((r - max over structures of the outsiders' demand)_+, d_S),
/// R_pes(N) = min(d_N, r).
CharacteristicGame pessimistic_resource_game(DemandProfile& profile,
                                             int cap = kDefaultPartitionCap);

/// v^R(S) = value(S; R(S)). Every R(S) must lie in [0, r]; the manager cannot
/// hand out more than the stock.
CharacteristicGame lpp_game_from_resource_game(DemandProfile& profile,
                                               const CharacteristicGame& resource_game);

/// V(S|P) = value(S; z_S(P)) for every embedded coalition, z from `rule`.
/// Rejects rules that allocate a negative share or bust the stock on some
/// partition, naming that partition.
PartitionFunctionGame partition_function_game(DemandProfile& profile, const AllocationRule& rule,
                                              int cap = kDefaultPartitionCap);

/// (v^-, v^+): per coalition, the worst and best embedded worth over all
/// structures having it as a block.
std::pair<CharacteristicGame, CharacteristicGame> pessimistic_and_optimistic_views(
    const PartitionFunctionGame& game);

/// w(S) = max(E - sum of claims outside S, 0). Claims must cover the estate.
CharacteristicGame bankruptcy_game(const Rational& estate, const std::vector<Rational>& claims);

}  // namespace lpp
