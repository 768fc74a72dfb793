#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "lppgames/rational.hpp"
#include "lppgames/simplex.hpp"

namespace lpp {

/// Raised when a request would enumerate more partitions than the configured
/// cap allows; the message names the cap so callers can surface it verbatim.
class CapError : public std::runtime_error {
 public:
  CapError(int n, int cap)
      : std::runtime_error("refusing to enumerate partitions of " + std::to_string(n) +
                           " players: cap is " + std::to_string(cap) +
                           " (raise --partition-cap to override)"),
        n_(n),
        cap_(cap) {}
  int players() const { return n_; }
  int cap() const { return cap_; }

 private:
  int n_;
  int cap_;
};

/// Raised when an operation's mathematical precondition does not hold
/// (wrong regime, scarce resource for a construction that needs slack, ...).
class PreconditionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultPartitionCap = 10;

/// Subset of producers, bitset semantics. Players are 0-based in the API;
/// all rendering is 1-based.
class Coalition {
 public:
  Coalition() = default;
  static Coalition from_mask(std::uint32_t mask) { return Coalition(mask); }
  static Coalition single(int player) { return Coalition(std::uint32_t{1} << player); }
  static Coalition full(int n) { return Coalition((std::uint32_t{1} << n) - 1); }
  static Coalition of(std::initializer_list<int> players) {
    std::uint32_t mask = 0;
    for (int p : players) mask |= std::uint32_t{1} << p;
    return Coalition(mask);
  }

  std::uint32_t mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }
  int size() const { return __builtin_popcount(mask_); }
  bool contains(int player) const { return (mask_ >> player) & 1u; }
  bool subset_of(Coalition other) const { return (mask_ & ~other.mask_) == 0; }
  bool intersects(Coalition other) const { return (mask_ & other.mask_) != 0; }
  Coalition unite(Coalition other) const { return Coalition(mask_ | other.mask_); }
  Coalition setminus(Coalition other) const { return Coalition(mask_ & ~other.mask_); }
  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i) {
      if (contains(i)) out.push_back(i);
    }
    return out;
  }

  friend bool operator==(Coalition a, Coalition b) { return a.mask_ == b.mask_; }
  friend bool operator<(Coalition a, Coalition b) { return a.mask_ < b.mask_; }

 private:
  explicit Coalition(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

/// "{1,3}" with 1-based labels.
std::string to_text(Coalition coalition);

/// Set of disjoint non-empty coalitions covering {0,...,n-1}, blocks sorted
/// by smallest member.
class Partition {
 public:
  static Partition make(int n, std::vector<Coalition> blocks);
  static Partition grand(int n) { return make(n, {Coalition::full(n)}); }
  static Partition singletons(int n);

  int ground_size() const { return n_; }
  const std::vector<Coalition>& blocks() const { return blocks_; }
  bool contains_block(Coalition coalition) const;
  /// Restricted-growth-string encoding; canonical key for lookups.
  std::vector<std::uint8_t> rgs() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }

 private:
  Partition(int n, std::vector<Coalition> blocks) : n_(n), blocks_(std::move(blocks)) {}
  int n_ = 0;
  std::vector<Coalition> blocks_;
};

/// "{1,2}{3}" in canonical block order.
std::string to_text(const Partition& partition);

struct EmbeddedCoalition {
  Coalition coalition;
  Partition partition;  // coalition must be one of its blocks

  static EmbeddedCoalition make(Coalition coalition, Partition partition);
};

/// Visits every partition of {0,...,n-1} exactly once, in restricted-growth
/// lexicographic order. Throws CapError when n exceeds the cap.
void for_each_partition(int n, int cap, const std::function<void(const Partition&)>& visit);

std::vector<Partition> enumerate_partitions(int n, int cap = kDefaultPartitionCap);

/// True when every block of `fine` fits inside a block of `coarse`.
/// Ground sets must agree.
bool is_refinement(const Partition& fine, const Partition& coarse);

/// Visits the strict refinements of `partition` until `visit` returns true;
/// returns whether any call did. Refinements are generated directly as
/// products of per-block partitions, so no monotonicity of any demand-like
/// quantity is assumed.
bool any_strict_refinement(const Partition& partition,
                           const std::function<bool(const Partition&)>& visit);

/// Linear production situation with a managed common-pool resource.
/// A has q+1 rows: rows 1..q consume the producers' own resources, the last
/// row draws on the common pool. B's column i is producer i's endowment.
struct LPPInstance {
  int n = 0;  // producers
  int q = 0;  // owned resource kinds
  int g = 0;  // goods
  MatrixQ A;  // (q+1) x g
  MatrixQ B;  // q x n
  VectorQ p;  // g prices
  Rational c;  // unit cost of the pool resource
  Rational r;  // pool stock

  friend bool operator==(const LPPInstance& a, const LPPInstance& b) {
    return a.n == b.n && a.q == b.q && a.g == b.g && a.A == b.A && a.B == b.B &&
           a.p == b.p && a.c == b.c && a.r == b.r;
  }
};

/// Checks every model assumption and returns a message per violation
/// (empty list = valid). Structural problems are reported with row/column
/// coordinates; the last check verifies that each producer alone can turn a
/// positive profit, which is what the rest of the theory presumes.
std::vector<std::string> validate(const LPPInstance& instance);

/// b^S: componentwise sum of the endowment columns of S's members.
VectorQ coalition_resources(const LPPInstance& instance, Coalition coalition);

/// Profit program with the pool draw as a free variable:
/// variables (x_1..x_g, z), maximize p.x - c z subject to
/// A_[1..q] x <= b^S and pool-row . x <= z.
StandardLP<Rational> coalition_program(const LPPInstance& instance, Coalition coalition);

/// Profit program at a fixed pool allotment z: variables x only, rows
/// A x <= (b^S; z). The -c z constant is left to the caller.
StandardLP<Rational> fixed_allocation_program(const LPPInstance& instance, Coalition coalition,
                                              const Rational& z);

}  // namespace lpp
