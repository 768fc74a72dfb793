// Acceptance suite: one criterion per run line, exit code = failure count.
// Every expected value is pinned here exactly; tolerances are zero throughout.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "lppgames/generate.hpp"
#include "lppgames/json_io.hpp"
#include "lppgames/stability.hpp"
#include "oracle.hpp"
#include "support.hpp"

using lpp::Allocation;
using lpp::CharacteristicGame;
using lpp::Coalition;
using lpp::CoreVerdict;
using lpp::DemandProfile;
using lpp::Partition;
using lpp::Rational;
using testing::load_fixture;
using testing::rat;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::function<void(std::vector<std::string>&)> run;  // append a note per defect
};

void expect(std::vector<std::string>& notes, bool ok, const std::string& what) {
  if (!ok) notes.push_back(what);
}

void expect_value(std::vector<std::string>& notes, const Rational& computed,
                  const Rational& stated, const std::string& what) {
  if (computed != stated) {
    notes.push_back(what + ": stated " + lpp::to_string(stated) + ", computed " +
                    lpp::to_string(computed));
  }
}

CharacteristicGame optimistic_game(DemandProfile& profile) {
  return lpp::lpp_game_from_resource_game(profile, lpp::optimistic_resource_game(profile));
}

CharacteristicGame pessimistic_game(DemandProfile& profile) {
  return lpp::lpp_game_from_resource_game(profile, lpp::pessimistic_resource_game(profile));
}

const std::vector<Coalition> kThreePlayerOrder = {
    Coalition::single(0),    Coalition::single(1),    Coalition::single(2),
    Coalition::of({0, 1}),   Coalition::of({0, 2}),   Coalition::of({1, 2}),
    Coalition::of({0, 1, 2})};

// ---------------------------------------------------------------- criterion 1
void criterion1(std::vector<std::string>& notes) {
  DemandProfile profile(load_fixture("example1.json"));
  expect_value(notes, profile.demand(Coalition::single(0)), Rational(7), "d({1})");
  expect_value(notes, profile.demand(Coalition::single(1)), Rational(7), "d({2})");
  expect_value(notes, profile.demand(Coalition::full(2)), Rational(5), "d({1,2})");
}

// ---------------------------------------------------------------- criterion 2
void criterion2(std::vector<std::string>& notes) {
  DemandProfile profile(load_fixture("example2.json"));
  const std::vector<Rational> stated_demands = {rat("4/3"),  rat("4"),    rat("4/5"), rat("22/3"),
                                                rat("17/3"), rat("42/5"), rat("31/3")};
  for (std::size_t i = 0; i < kThreePlayerOrder.size(); ++i) {
    expect_value(notes, profile.demand(kThreePlayerOrder[i]), stated_demands[i],
                 "d(" + lpp::to_text(kThreePlayerOrder[i]) + ")");
  }

  const auto regime = lpp::classify_regime(profile);
  expect(notes, regime.regime == lpp::Regime::GrandOnly, "regime: expected grand-only");
  expect(notes,
         regime.minimal_exceeding.size() == 1 &&
             regime.minimal_exceeding.front() == Partition::grand(3),
         "minimal over-demand structures: expected exactly {1,2,3}");

  const CharacteristicGame game = lpp::characteristic_game(profile);
  const std::vector<Rational> stated_worths = {rat("4"),  rat("12"),    rat("12/5"), rat("22"),
                                               rat("13"), rat("126/5"), rat("30")};
  for (std::size_t i = 0; i < kThreePlayerOrder.size(); ++i) {
    expect_value(notes, game.worth(kThreePlayerOrder[i]), stated_worths[i],
                 "v(" + lpp::to_text(kThreePlayerOrder[i]) + ")");
  }

  expect(notes, lpp::core_nonempty(game).verdict == CoreVerdict::Empty, "core: expected empty");

  const auto stable = lpp::stable_partitions(profile);
  bool stable_ok = stable.size() == 3;
  for (int lone = 0; lone < 3 && stable_ok; ++lone) {
    const Partition split = Partition::make(
        3, {Coalition::full(3).setminus(Coalition::single(lone)), Coalition::single(lone)});
    bool found = false;
    for (const auto& partition : stable) found = found || partition == split;
    stable_ok = found;
  }
  expect(notes, stable_ok, "stable structures: expected exactly the three {N-i}{i} splits");
}

// ---------------------------------------------------------------- criterion 3
void criterion3(std::vector<std::string>& notes) {
  DemandProfile profile(load_fixture("example3.json"));
  CharacteristicGame resource(2);
  resource.set_worth(Coalition::single(0), Rational(4));
  resource.set_worth(Coalition::single(1), Rational(4));
  resource.set_worth(Coalition::full(2), Rational(4));
  expect(notes, lpp::core_nonempty(resource).verdict == CoreVerdict::Empty,
         "core of R: expected empty");
  expect_value(notes, profile.demand(Coalition::full(2)), Rational(5), "d_N");
  const CharacteristicGame priced = lpp::lpp_game_from_resource_game(profile, resource);
  expect_value(notes, priced.worth(Coalition::single(0)), Rational(10), "v^R({1})");
  expect_value(notes, priced.worth(Coalition::single(1)), Rational(10), "v^R({2})");
  expect_value(notes, priced.worth(Coalition::full(2)), Rational(28), "v^R({1,2})");
  const auto report = lpp::core_nonempty(priced);
  expect(notes, report.verdict == CoreVerdict::NonEmpty, "core of v^R: expected non-empty");
  if (report.witness) {
    expect(notes, lpp::check_core_membership(priced, *report.witness).in_core,
           "witness must satisfy the core system exactly");
  }
}

// ---------------------------------------------------------------- criterion 4
void criterion4(std::vector<std::string>& notes) {
  DemandProfile profile(load_fixture("example4.json"));
  const std::vector<Rational> stated_demands = {rat("20"), rat("20"), rat("25"), rat("40"),
                                                rat("46"), rat("45"), rat("66")};
  for (std::size_t i = 0; i < kThreePlayerOrder.size(); ++i) {
    expect_value(notes, profile.demand(kThreePlayerOrder[i]), stated_demands[i],
                 "d(" + lpp::to_text(kThreePlayerOrder[i]) + ")");
  }
  const CharacteristicGame v_opt = optimistic_game(profile);
  const std::vector<Rational> stated_worths = {rat("720"),  rat("920"),  rat("1150"), rat("1640"),
                                               rat("1936"), rat("2070"), rat("2300")};
  for (std::size_t i = 0; i < kThreePlayerOrder.size(); ++i) {
    expect_value(notes, v_opt.worth(kThreePlayerOrder[i]), stated_worths[i],
                 "v_opt(" + lpp::to_text(kThreePlayerOrder[i]) + ")");
  }
  expect(notes, lpp::core_nonempty(v_opt).verdict == CoreVerdict::Empty,
         "core of v_opt: expected empty");
  expect(notes,
         lpp::core_nonempty(lpp::optimistic_resource_game(profile)).verdict == CoreVerdict::Empty,
         "core of R_opt: expected empty");
}

// ---------------------------------------------------------------- criterion 5
void criterion5(std::vector<std::string>& notes) {
  DemandProfile profile(load_fixture("example5.json"));
  const std::vector<Rational> stated_demands = {rat("1"),    rat("3/2"),  rat("1"),
                                                rat("15/4"), rat("11/5"), rat("7/2")};
  for (std::size_t i = 0; i < stated_demands.size(); ++i) {
    expect_value(notes, profile.demand(kThreePlayerOrder[i]), stated_demands[i],
                 "d(" + lpp::to_text(kThreePlayerOrder[i]) + ")");
  }
  const CharacteristicGame v_opt = optimistic_game(profile);
  const std::vector<Rational> stated_worths = {rat("3/2"),   rat("21/4"),  rat("7/2"), rat("105/8"),
                                               rat("77/10"), rat("49/4"), rat("35/2")};
  for (std::size_t i = 0; i < kThreePlayerOrder.size(); ++i) {
    expect_value(notes, v_opt.worth(kThreePlayerOrder[i]), stated_worths[i],
                 "v_opt(" + lpp::to_text(kThreePlayerOrder[i]) + ")");
  }
  const auto report = lpp::core_nonempty(v_opt);
  expect(notes, report.verdict == CoreVerdict::NonEmpty, "core of v_opt: expected non-empty");
  if (report.witness) {
    expect(notes, lpp::check_core_membership(v_opt, *report.witness).in_core,
           "witness must satisfy the core system exactly");
  }
}

// ---------------------------------------------------------------- criterion 6
void criterion6(std::vector<std::string>& notes) {
  int passed = 0, failed = 0;
  std::uint64_t seed = 1000;
  while (passed + failed < 200) {
    const int n = 2 + static_cast<int>(seed % 3);
    const int q = 1 + static_cast<int>(seed % 3);
    const int g = 1 + static_cast<int>((seed / 3) % 3);
    lpp::LPPInstance instance = lpp::generate_structure(n, q, g, seed);
    DemandProfile sizing(instance);
    instance.r = sizing.demand(Coalition::full(n)) + Rational(static_cast<int>(seed % 3));
    ++seed;
    DemandProfile profile(instance);
    const Allocation payoff = lpp::owen_allocation(profile);
    if (lpp::check_core_membership(optimistic_game(profile), payoff).in_core) {
      ++passed;
    } else {
      ++failed;
    }
  }
  expect(notes, failed == 0,
         "dual pricing fell outside the optimistic core " + std::to_string(failed) + "/200 times");
}

// ---------------------------------------------------------------- criterion 7
void criterion7(std::vector<std::string>& notes) {
  int passed = 0, failed = 0;
  std::uint64_t seed = 2000;
  while (passed + failed < 100) {
    const int n = 2 + static_cast<int>(seed % 3);
    lpp::LPPInstance instance = lpp::generate_structure(n, 1 + static_cast<int>(seed % 3),
                                                        1 + static_cast<int>((seed / 3) % 3), seed);
    DemandProfile sizing(instance);
    const Rational grand_demand = sizing.demand(Coalition::full(n));
    ++seed;
    instance.r = grand_demand * 2 / 3;
    if (!(instance.r > 0)) continue;
    DemandProfile profile(instance);

    CharacteristicGame resource(n);
    resource.for_each_nonempty([&](Coalition coalition, const Rational&) {
      resource.set_worth(coalition, std::min(instance.r * coalition.size() / n,
                                             profile.demand(coalition)));
    });
    Allocation share(n);
    share.setConstant(instance.r / n);
    if (!lpp::check_core_membership(resource, share).in_core) {
      ++failed;  // the balanced point must sit in C(R) before the construction runs
      continue;
    }
    const Allocation payoff = lpp::allocation_from_resource_core(profile, resource, share);
    const CharacteristicGame priced = lpp::lpp_game_from_resource_game(profile, resource);
    if (lpp::check_core_membership(priced, payoff).in_core) {
      ++passed;
    } else {
      ++failed;
    }
  }
  expect(notes, failed == 0,
         "scarcity construction missed the core " + std::to_string(failed) + "/100 times");
}

// ---------------------------------------------------------------- criterion 8
void criterion8(std::vector<std::string>& notes) {
  int passed = 0, failed = 0;
  std::uint64_t seed = 3000;
  while (passed + failed < 100) {
    const int n = 2 + static_cast<int>(seed % 3);
    lpp::LPPInstance instance = lpp::generate_structure(n, 1 + static_cast<int>(seed % 2),
                                                        1 + static_cast<int>(seed % 3), seed);
    DemandProfile sizing(instance);
    const Rational grand_demand = sizing.demand(Coalition::full(n));
    Rational singles = 0;
    for (int i = 0; i < n; ++i) singles += sizing.demand(Coalition::single(i));
    ++seed;
    instance.r = std::min(grand_demand, singles) * 3 / 4;
    if (!(instance.r > 0)) continue;
    DemandProfile profile(instance);
    if (lpp::core_nonempty(pessimistic_game(profile)).verdict == CoreVerdict::NonEmpty) {
      ++passed;
    } else {
      ++failed;
    }
  }
  expect(notes, failed == 0,
         "pessimistic core came up empty " + std::to_string(failed) + "/100 times");
}

// ---------------------------------------------------------------- criterion 9
void criterion9(std::vector<std::string>& notes) {
  const auto rules = lpp::builtin_rule_names();

  int positivity_failures = 0;
  for (std::uint64_t seed = 4000; seed < 4100; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const lpp::LPPInstance instance =
        lpp::generate_structure(n, 1 + static_cast<int>(seed % 3), 1 + static_cast<int>(seed % 2), seed);
    DemandProfile profile(instance);
    const std::uint32_t full = Coalition::full(n).mask();
    const Coalition coalition = Coalition::from_mask(1 + static_cast<std::uint32_t>(seed % full));
    if (!lpp::positivity_scan(instance, coalition, profile.demand(coalition), 4)) {
      ++positivity_failures;
    }
  }
  expect(notes, positivity_failures == 0,
         "positivity scan failed " + std::to_string(positivity_failures) + "/100 times");

  int superadditivity_failures = 0;
  int chain_failures = 0;
  for (std::uint64_t seed = 5000; seed < 5100; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    lpp::LPPInstance instance =
        lpp::generate_structure(n, 1 + static_cast<int>(seed % 2), 1 + static_cast<int>(seed % 3), seed);
    DemandProfile sizing(instance);
    const Rational grand_demand = sizing.demand(Coalition::full(n));
    switch (seed % 3) {
      case 0: {
        Rational worst = grand_demand;
        lpp::for_each_partition(n, 10, [&](const Partition& partition) {
          worst = std::max(worst, sizing.partition_demand(partition));
        });
        instance.r = worst + 1;
        break;
      }
      case 1:
        instance.r = std::max(Rational(1), grand_demand * 3 / 4);
        break;
      default:
        instance.r = 1 + static_cast<int>(seed % 4);
        break;
    }
    DemandProfile profile(instance);
    const CharacteristicGame v_opt = optimistic_game(profile);
    const CharacteristicGame v_pes = pessimistic_game(profile);
    for (const auto& name : rules) {
      const auto game = lpp::partition_function_game(profile, lpp::rule_by_name(name));
      const Rational grand_worth = game.worth(Partition::grand(n), Coalition::full(n));
      for (std::size_t p = 0; p < game.partitions().size(); ++p) {
        Rational split = 0;
        for (const auto& cell : game.cells(p)) split += cell.worth;
        if (split > grand_worth) ++superadditivity_failures;
      }
      const auto [worst, best] = lpp::pessimistic_and_optimistic_views(game);
      for (std::uint32_t mask = 1; mask <= Coalition::full(n).mask(); ++mask) {
        const Coalition coalition = Coalition::from_mask(mask);
        const bool ordered = v_opt.worth(coalition) >= best.worth(coalition) &&
                             best.worth(coalition) >= worst.worth(coalition) &&
                             worst.worth(coalition) >= v_pes.worth(coalition);
        if (!ordered) ++chain_failures;
      }
    }
  }
  expect(notes, superadditivity_failures == 0,
         "a structure's embedded worths exceeded the grand worth " +
             std::to_string(superadditivity_failures) + " times");
  expect(notes, chain_failures == 0,
         "the optimistic/pessimistic sandwich failed " + std::to_string(chain_failures) + " times");

  int cap_failures = 0;
  for (std::uint64_t seed = 6000; seed < 6100; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    lpp::LPPInstance instance =
        lpp::generate_structure(n, 1 + static_cast<int>(seed % 3), 1 + static_cast<int>(seed % 3), seed);
    DemandProfile sizing(instance);
    instance.r = sizing.demand(Coalition::full(n)) + 1;
    DemandProfile profile(instance);
    const Coalition grand = Coalition::full(n);
    const Rational grand_value = profile.value_at(grand, profile.demand(grand));
    lpp::for_each_partition(n, 10, [&](const Partition& partition) {
      Rational split = 0;
      for (Coalition block : partition.blocks()) {
        split += profile.value_at(block, profile.demand(block));
      }
      if (split > grand_value) ++cap_failures;
    });
  }
  expect(notes, cap_failures == 0,
         "free-demand splits beat the grand value " + std::to_string(cap_failures) + " times");

  int bankruptcy_failures = 0;
  std::mt19937_64 engine(7000);
  for (int round = 0; round < 100; ++round) {
    const int n = 2 + static_cast<int>(engine() % 4);
    std::vector<Rational> claims;
    Rational total = 0;
    for (int i = 0; i < n; ++i) {
      claims.emplace_back(static_cast<long long>(engine() % 21));
      total += claims.back();
    }
    const Rational estate =
        total == 0 ? Rational(0)
                   : Rational(static_cast<long long>(engine() %
                                                     (1 + total.convert_to<long long>())));
    const CharacteristicGame game = lpp::bankruptcy_game(estate, claims);
    const auto report = lpp::core_nonempty(game);
    const bool witness_ok =
        report.verdict == CoreVerdict::NonEmpty &&
        lpp::check_core_membership(game, *report.witness).in_core;
    if (!witness_ok) ++bankruptcy_failures;
  }
  expect(notes, bankruptcy_failures == 0,
         "a bankruptcy game had an empty core " + std::to_string(bankruptcy_failures) +
             "/100 times");
}

// --------------------------------------------------------------- criterion 10
void criterion10(std::vector<std::string>& notes) {
  std::mt19937_64 engine(20240810);
  const auto draw = [&](int lo, int hi) {
    return lo + static_cast<int>(engine() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  int mismatches = 0;
  for (int round = 0; round < 500; ++round) {
    const int n = draw(1, 4);
    const int m = draw(1, 4);
    lpp::StandardLP<Rational> lp;
    lp.constraints.resize(m, n);
    lp.rhs.resize(m);
    lp.objective.resize(n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) lp.constraints(i, j) = draw(-3, 5);
      lp.rhs(i) = draw(-5, 10);
    }
    for (int j = 0; j < n; ++j) lp.objective(j) = draw(-5, 5);
    const auto fast = lpp::solve(lp);
    const auto slow = testing::solve_by_enumeration(lp);
    if (fast.status != slow.status) {
      ++mismatches;
      continue;
    }
    if (fast.status == lpp::LPStatus::Optimal && fast.value != slow.value) ++mismatches;
  }
  expect(notes, mismatches == 0,
         "simplex disagreed with vertex enumeration " + std::to_string(mismatches) + "/500 times");
}

// --------------------------------------------------------------- criterion 11
void criterion11(std::vector<std::string>& notes) {
  int disagreements = 0;
  for (std::uint64_t seed = 8000; seed < 8050; ++seed) {
    lpp::LPPInstance instance = lpp::generate_structure(3, 2, 2, seed);
    DemandProfile sizing(instance);
    const Rational grand_demand = sizing.demand(Coalition::full(3));
    switch (seed % 3) {
      case 0: instance.r = grand_demand + 2; break;
      case 1: instance.r = std::max(Rational(1), grand_demand * 3 / 4); break;
      default: instance.r = 1 + static_cast<int>(seed % 3); break;
    }
    DemandProfile profile(instance);
    const auto game =
        lpp::partition_function_game(profile, lpp::demand_capped_proportional_rule());
    const auto [worst, best] = lpp::pessimistic_and_optimistic_views(game);
    const Rational grand_worth = worst.worth(Coalition::full(3));

    std::mt19937_64 engine(seed * 7919);
    for (int sample = 0; sample < 20; ++sample) {
      lpp::VectorQ weights(3);
      Rational total = 0;
      for (int i = 0; i < 3; ++i) {
        weights(i) = Rational(static_cast<long long>(engine() % 9));
        total += weights(i);
      }
      if (total == 0) {
        weights.setConstant(1);
        total = 3;
      }
      Allocation x(3);
      for (int i = 0; i < 3; ++i) x(i) = grand_worth * weights(i) / total;

      bool brute_dominated = false;
      bool reduction_dominated = false;
      for (std::uint32_t mask = 1; mask < 8; ++mask) {
        const Coalition coalition = Coalition::from_mask(mask);
        Rational claim = 0;
        for (int member : coalition.members()) claim += x(member);
        const Rational floor = worst.worth(coalition);

        // brute-force side: try to exhibit a dominating allocation
        bool dominated_here = false;
        if (claim < floor) {
          Allocation challenger = x;
          const Rational bump = (floor - claim) / coalition.size();
          for (int member : coalition.members()) challenger(member) += bump;
          dominated_here = lpp::dominates(challenger, x, coalition, game,
                                          lpp::DominanceScope::AllPartitions);
        } else {
          for (const Rational& bump : {Rational(1), rat("1/3"), rat("1/17")}) {
            Allocation challenger = x;
            for (int member : coalition.members()) challenger(member) += bump;
            dominated_here = dominated_here ||
                             lpp::dominates(challenger, x, coalition, game,
                                            lpp::DominanceScope::AllPartitions);
          }
        }
        brute_dominated = brute_dominated || dominated_here;
        reduction_dominated = reduction_dominated || claim < floor;
        if (dominated_here != (claim < floor)) ++disagreements;
      }
      if (brute_dominated != reduction_dominated) ++disagreements;
    }
  }
  expect(notes, disagreements == 0,
         "dominance characterizations disagreed " + std::to_string(disagreements) + " times");
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "two-producer demands reproduce exactly", criterion1},
      {2, "empty-core instance: demands, regime, game, core, stable structures", criterion2},
      {3, "flat resource game prices into a non-empty core", criterion3},
      {4, "scarce three-producer instance: demands, optimistic game, empty cores", criterion4},
      {5, "general-regime instance: demands, optimistic game, non-empty core", criterion5},
      {6, "dual pricing lands in the optimistic core on 200 roomy instances", criterion6},
      {7, "scarcity construction lands in the core on 100 tight instances", criterion7},
      {8, "pessimistic game keeps a core on 100 over-demanded instances", criterion8},
      {9, "structural properties: positivity, embedded caps, value chain, bankruptcy", criterion9},
      {10, "simplex matches brute-force vertex enumeration on 500 programs", criterion10},
      {11, "dominance brute force agrees with the worst-view core reduction", criterion11},
  };

  int selected = 0;
  if (argc > 1) selected = std::atoi(argv[1]);

  int failures = 0;
  for (const auto& criterion : criteria) {
    if (selected != 0 && criterion.number != selected) continue;
    std::vector<std::string> notes;
    try {
      criterion.run(notes);
    } catch (const std::exception& error) {
      notes.push_back(std::string("exception: ") + error.what());
    }
    if (notes.empty()) {
      std::cout << "criterion " << criterion.number << ": PASS — " << criterion.title << "\n";
    } else {
      ++failures;
      std::cout << "criterion " << criterion.number << ": FAIL — " << criterion.title << "\n";
      for (const auto& note : notes) std::cout << "    " << note << "\n";
    }
  }
  return failures;
}
