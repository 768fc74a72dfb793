#include "lppgames/model.hpp"

#include <algorithm>

namespace lpp {

std::string to_text(Coalition coalition) {
  std::string out = "{";
  bool first = true;
  for (int member : coalition.members()) {
    if (!first) out += ",";
    out += std::to_string(member + 1);
    first = false;
  }
  out += "}";
  return out;
}

Partition Partition::make(int n, std::vector<Coalition> blocks) {
  if (n < 0) throw std::invalid_argument("negative ground size");
  std::uint32_t seen = 0;
  for (Coalition block : blocks) {
    if (block.empty()) throw std::invalid_argument("partition block is empty");
    if (block.mask() & seen) throw std::invalid_argument("partition blocks overlap");
    seen |= block.mask();
  }
  if (seen != Coalition::full(n).mask()) {
    throw std::invalid_argument("partition blocks do not cover the ground set");
  }
  std::sort(blocks.begin(), blocks.end(), [](Coalition a, Coalition b) {
    return (a.mask() & -a.mask()) < (b.mask() & -b.mask());  // by smallest member
  });
  return Partition(n, std::move(blocks));
}

Partition Partition::singletons(int n) {
  std::vector<Coalition> blocks;
  blocks.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) blocks.push_back(Coalition::single(i));
  return make(n, std::move(blocks));
}

bool Partition::contains_block(Coalition coalition) const {
  return std::find(blocks_.begin(), blocks_.end(), coalition) != blocks_.end();
}

std::vector<std::uint8_t> Partition::rgs() const {
  std::vector<std::uint8_t> code(static_cast<std::size_t>(n_), 0);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (int member : blocks_[b].members()) {
      code[static_cast<std::size_t>(member)] = static_cast<std::uint8_t>(b);
    }
  }
  return code;
}

std::string to_text(const Partition& partition) {
  std::string out;
  for (Coalition block : partition.blocks()) out += to_text(block);
  return out;
}

EmbeddedCoalition EmbeddedCoalition::make(Coalition coalition, Partition partition) {
  if (!partition.contains_block(coalition)) {
    throw std::invalid_argument("coalition is not a block of the partition");
  }
  return EmbeddedCoalition{coalition, std::move(partition)};
}

void for_each_partition(int n, int cap, const std::function<void(const Partition&)>& visit) {
  if (n < 0) throw std::invalid_argument("negative ground size");
  if (n > cap) throw CapError(n, cap);
  if (n == 0) {
    visit(Partition::make(0, {}));
    return;
  }
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<int> code(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  for (;;) {
    int block_count = 0;
    for (int i = 0; i < n; ++i) block_count = std::max(block_count, code[static_cast<std::size_t>(i)] + 1);
    std::vector<Coalition> blocks(static_cast<std::size_t>(block_count));
    for (int i = 0; i < n; ++i) {
      auto& slot = blocks[static_cast<std::size_t>(code[static_cast<std::size_t>(i)])];
      slot = slot.unite(Coalition::single(i));
    }
    visit(Partition::make(n, std::move(blocks)));

    int i = n - 1;
    while (i > 0) {
      if (code[static_cast<std::size_t>(i)] <= prefix_max[static_cast<std::size_t>(i - 1)]) break;
      --i;
    }
    if (i == 0) return;
    ++code[static_cast<std::size_t>(i)];
    prefix_max[static_cast<std::size_t>(i)] =
        std::max(prefix_max[static_cast<std::size_t>(i - 1)], code[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < n; ++j) {
      code[static_cast<std::size_t>(j)] = 0;
      prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(j - 1)];
    }
  }
}

std::vector<Partition> enumerate_partitions(int n, int cap) {
  std::vector<Partition> out;
  for_each_partition(n, cap, [&](const Partition& p) { out.push_back(p); });
  return out;
}

bool is_refinement(const Partition& fine, const Partition& coarse) {
  if (fine.ground_size() != coarse.ground_size()) {
    throw std::invalid_argument("partitions have different ground sets");
  }
  for (Coalition small : fine.blocks()) {
    bool fits = false;
    for (Coalition big : coarse.blocks()) {
      if (small.subset_of(big)) {
        fits = true;
        break;
      }
    }
    if (!fits) return false;
  }
  return true;
}

namespace {

/// Product over blocks of per-block partitions, depth-first with early exit.
bool refine_blocks(const Partition& base, std::size_t index, bool split_somewhere,
                   std::vector<Coalition>& acc,
                   const std::function<bool(const Partition&)>& visit) {
  if (index == base.blocks().size()) {
    if (!split_somewhere) return false;  // the all-trivial choice is `base` itself
    return visit(Partition::make(base.ground_size(), acc));
  }
  const Coalition block = base.blocks()[index];
  const std::vector<int> members = block.members();
  const int size = block.size();
  bool found = false;
  for_each_partition(size, size, [&](const Partition& local) {
    if (found) return;
    std::size_t checkpoint = acc.size();
    for (Coalition piece : local.blocks()) {
      Coalition mapped;
      for (int bit : piece.members()) mapped = mapped.unite(Coalition::single(members[static_cast<std::size_t>(bit)]));
      acc.push_back(mapped);
    }
    const bool split = local.blocks().size() > 1;
    if (refine_blocks(base, index + 1, split_somewhere || split, acc, visit)) found = true;
    acc.resize(checkpoint);
  });
  return found;
}

}  // namespace

bool any_strict_refinement(const Partition& partition,
                           const std::function<bool(const Partition&)>& visit) {
  std::vector<Coalition> acc;
  return refine_blocks(partition, 0, false, acc, visit);
}

std::vector<std::string> validate(const LPPInstance& instance) {
  std::vector<std::string> out;
  const auto note = [&out](std::string message) { out.push_back(std::move(message)); };

  if (instance.n < 1) note("producer count n must be at least 1");
  if (instance.q < 1) note("resource count q must be at least 1");
  if (instance.g < 1) note("good count g must be at least 1");
  if (instance.A.rows() != instance.q + 1 || instance.A.cols() != instance.g) {
    note("A must be (q+1) x g");
  }
  if (instance.B.rows() != instance.q || instance.B.cols() != instance.n) {
    note("B must be q x n");
  }
  if (instance.p.size() != instance.g) note("p must have one price per good");
  if (!out.empty()) return out;  // shape is off; element checks would misindex

  for (int t = 0; t <= instance.q; ++t) {
    for (int j = 0; j < instance.g; ++j) {
      if (instance.A(t, j) < 0) {
        note("A(" + std::to_string(t + 1) + "," + std::to_string(j + 1) + ") is negative");
      }
    }
  }
  for (int t = 0; t < instance.q; ++t) {
    for (int i = 0; i < instance.n; ++i) {
      if (instance.B(t, i) < 0) {
        note("B(" + std::to_string(t + 1) + "," + std::to_string(i + 1) + ") is negative");
      }
    }
  }
  for (int j = 0; j < instance.g; ++j) {
    if (instance.p(j) <= 0) note("price p(" + std::to_string(j + 1) + ") must be positive");
  }
  if (instance.c < 0) note("pool unit cost c must be nonnegative");
  if (instance.r <= 0) note("pool stock r must be positive");

  for (int j = 0; j < instance.g; ++j) {
    if (instance.A(instance.q, j) <= 0) {
      note("common-pool row must be strictly positive: A(" + std::to_string(instance.q + 1) +
           "," + std::to_string(j + 1) + ") = " + to_string(instance.A(instance.q, j)));
    }
  }

  for (int j = 0; j < instance.g; ++j) {
    bool consumes_owned = false;
    for (int t = 0; t < instance.q; ++t) {
      if (instance.A(t, j) > 0) {
        consumes_owned = true;
        break;
      }
    }
    if (!consumes_owned) {
      note("no output without input: good " + std::to_string(j + 1) +
           " consumes no owned resource");
    }
  }

  for (int j = 0; j < instance.g; ++j) {
    if (instance.p(j) <= instance.A(instance.q, j) * instance.c) {
      note("profitability p_j > a_(q+1)j c fails at good " + std::to_string(j + 1));
    }
  }

  for (int t = 0; t < instance.q; ++t) {
    bool owned = false;
    for (int i = 0; i < instance.n; ++i) {
      if (instance.B(t, i) > 0) {
        owned = true;
        break;
      }
    }
    if (!owned) note("resource " + std::to_string(t + 1) + " is owned by no producer");
  }
  if (!out.empty()) return out;

  // Standing assumption: each producer alone can earn a positive profit.
  // Resource monotonicity then extends positivity to every coalition.
  for (int i = 0; i < instance.n; ++i) {
    const LPOutcome<Rational> best = solve(coalition_program(instance, Coalition::single(i)));
    if (best.status != LPStatus::Optimal || best.value <= 0) {
      note("producer " + std::to_string(i + 1) + " cannot earn a positive profit alone");
    }
  }
  return out;
}

VectorQ coalition_resources(const LPPInstance& instance, Coalition coalition) {
  if (coalition.empty()) throw std::invalid_argument("empty coalition has no resource bundle");
  VectorQ total = VectorQ::Zero(instance.q);
  for (int member : coalition.members()) total += instance.B.col(member);
  return total;
}

StandardLP<Rational> coalition_program(const LPPInstance& instance, Coalition coalition) {
  const VectorQ bundle = coalition_resources(instance, coalition);
  StandardLP<Rational> lp;
  lp.constraints = MatrixQ::Zero(instance.q + 1, instance.g + 1);
  lp.constraints.topLeftCorner(instance.q + 1, instance.g) = instance.A;
  lp.constraints(instance.q, instance.g) = Rational(-1);  // pool row: a.x - z <= 0
  lp.rhs = VectorQ::Zero(instance.q + 1);
  lp.rhs.head(instance.q) = bundle;
  lp.objective.resize(instance.g + 1);
  lp.objective.head(instance.g) = instance.p;
  lp.objective(instance.g) = -instance.c;
  return lp;
}

StandardLP<Rational> fixed_allocation_program(const LPPInstance& instance, Coalition coalition,
                                              const Rational& z) {
  const VectorQ bundle = coalition_resources(instance, coalition);
  StandardLP<Rational> lp;
  lp.constraints = instance.A;
  lp.rhs.resize(instance.q + 1);
  lp.rhs.head(instance.q) = bundle;
  lp.rhs(instance.q) = z;
  lp.objective = instance.p;
  return lp;
}

}  // namespace lpp
