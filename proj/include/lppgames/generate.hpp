#pragma once

#include <cstdint>
#include <optional>

#include "lppgames/demand.hpp"

namespace lpp {

struct GeneratorConfig {
  int n = 3;
  int q = 2;
  int g = 2;
  std::uint64_t seed = 0;
  Regime regime = Regime::Unconstrained;
  int attempts = 500;
  int partition_cap = kDefaultPartitionCap;
};

/// Random valid instance with the stock left at a placeholder r = 1:
/// integer A entries in [0,5] (pool row and one owned-resource row strictly
/// positive), integer B entries in [0,20] with every resource owned, prices
/// set above the pool cost of each good. Deterministic in the seed.
LPPInstance generate_structure(int n, int q, int g, std::uint64_t seed);

/// Structure plus a stock r placed to land in the requested regime, verified
/// by the regime classifier; resamples until the attempt budget runs out and
/// then refuses, naming the regime.
LPPInstance generate_instance(const GeneratorConfig& config);

}  // namespace lpp
