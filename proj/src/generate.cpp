#include "lppgames/generate.hpp"

#include <algorithm>
#include <random>

namespace lpp {

namespace {

/// Bounded draw straight off the engine; <random> distributions are not
/// pinned down by the standard, and identical output per seed matters here.
int draw(std::mt19937_64& engine, int lo, int hi) {
  return lo + static_cast<int>(engine() % static_cast<std::uint64_t>(hi - lo + 1));
}

LPPInstance draw_structure(std::mt19937_64& engine, int n, int q, int g) {
  LPPInstance instance;
  instance.n = n;
  instance.q = q;
  instance.g = g;
  instance.A.resize(q + 1, g);
  instance.B.resize(q, n);
  instance.p.resize(g);
  const int positive_row = draw(engine, 0, q - 1);
  for (int t = 0; t < q; ++t) {
    for (int j = 0; j < g; ++j) {
      instance.A(t, j) = t == positive_row ? draw(engine, 1, 5) : draw(engine, 0, 5);
    }
  }
  for (int j = 0; j < g; ++j) instance.A(q, j) = draw(engine, 1, 5);
  for (int t = 0; t < q; ++t) {
    for (int i = 0; i < n; ++i) instance.B(t, i) = draw(engine, 0, 20);
    bool owned = false;
    for (int i = 0; i < n; ++i) owned = owned || instance.B(t, i) > 0;
    if (!owned) instance.B(t, draw(engine, 0, n - 1)) = draw(engine, 1, 20);
  }
  instance.c = draw(engine, 0, 3);
  for (int j = 0; j < g; ++j) {
    instance.p(j) = instance.A(q, j) * instance.c + draw(engine, 1, 10);
  }
  instance.r = 1;
  return instance;
}

BigInt ceil_of(const Rational& value) {
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  BigInt out = num / den;
  if (out * den < num) ++out;
  return out;
}

}  // namespace

LPPInstance generate_structure(int n, int q, int g, std::uint64_t seed) {
  if (n < 1 || q < 1 || g < 1) throw std::invalid_argument("n, q, g must be positive");
  std::mt19937_64 engine(seed);
  for (int attempt = 0; attempt < 500; ++attempt) {
    LPPInstance instance = draw_structure(engine, n, q, g);
    if (validate(instance).empty()) return instance;
  }
  throw PreconditionError("could not draw a valid structure for these dimensions");
}

LPPInstance generate_instance(const GeneratorConfig& config) {
  if (config.n < 1 || config.q < 1 || config.g < 1) {
    throw std::invalid_argument("n, q, g must be positive");
  }
  if (config.n > config.partition_cap) throw CapError(config.n, config.partition_cap);
  std::mt19937_64 engine(config.seed);
  for (int attempt = 0; attempt < config.attempts; ++attempt) {
    LPPInstance instance = draw_structure(engine, config.n, config.q, config.g);
    if (!validate(instance).empty()) continue;

    DemandProfile profile(instance);
    profile.compute_all_demands();
    const Rational grand_demand = profile.demand(Coalition::full(config.n));
    Rational proper_max = 0;
    bool has_proper = false;
    for_each_partition(config.n, config.partition_cap, [&](const Partition& partition) {
      if (partition.blocks().size() < 2) return;
      const Rational total = profile.partition_demand(partition);
      if (!has_proper || total > proper_max) proper_max = total;
      has_proper = true;
    });

    Rational stock;
    switch (config.regime) {
      case Regime::Unconstrained: {
        const Rational base = has_proper ? std::max(grand_demand, proper_max) : grand_demand;
        stock = Rational(ceil_of(base)) + draw(engine, 0, 4);
        break;
      }
      case Regime::GrandOnly: {
        const Rational floor_ok = has_proper ? proper_max : Rational(0);
        if (!(floor_ok < grand_demand)) continue;  // grand demand must stick out
        const BigInt lo = ceil_of(floor_ok);
        if (Rational(lo) < grand_demand && Rational(lo) >= floor_ok && lo > 0) {
          stock = Rational(lo);
        } else {
          stock = (floor_ok + grand_demand) / 2;
        }
        break;
      }
      case Regime::General: {
        if (!has_proper) continue;  // a single producer cannot leave the grand regime
        const BigInt hi = ceil_of(proper_max) - 1;
        if (hi >= 1) {
          stock = Rational(1 + static_cast<long long>(
                               engine() % static_cast<std::uint64_t>(hi.convert_to<long long>())));
        } else {
          stock = proper_max / 2;
        }
        break;
      }
    }
    if (!(stock > 0)) continue;
    instance.r = stock;

    DemandProfile placed(instance);
    if (classify_regime(placed, config.partition_cap).regime != config.regime) continue;
    if (!validate(instance).empty()) continue;
    return instance;
  }
  throw PreconditionError("generation budget exhausted for regime '" + to_string(config.regime) +
                          "' after " + std::to_string(config.attempts) + " attempts");
}

}  // namespace lpp
