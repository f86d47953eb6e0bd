#pragma once

#include <vector>

#include "semired/lattice.hpp"

namespace semired {

// Finitely many characters of Z_p, each given by its value a_j at 1; all
// must lie in the open unit disc 1 + p Z_(p).
struct CharacterSet {
  std::uint64_t p = 0;
  std::vector<Rat> chars;
};

// Partition of {0, ..., m-1}: blocks of ascending indices, blocks ordered
// by their least element.
using Partition = std::vector<std::vector<int>>;

// One partition per saturation level; level i+1 refines level i.
struct PartitionLevels {
  std::vector<Partition> levels;
};

// Runs the saturation chain on diag(a_1, ..., a_m) and reads the level-i
// partition off the subalgebra generated by the level-i reduced image:
// two indices fall together iff every spanning element has equal diagonal
// entries there (the idempotent-support partition of a diagonal algebra).
PartitionLevels cluster(const CharacterSet& cs, int max_level, int max_steps = 64);

// The congruence partition: j, j' together iff v_p(a_j - a_j') >= level + 1.
Partition predicted(const CharacterSet& cs, int level);

struct CompareResult {
  PartitionLevels computed;
  std::vector<Partition> expected;
  std::vector<bool> level_match;
  bool all_match = true;
};

// Per-level equality of the computed and congruence partitions.
CompareResult compare(const CharacterSet& cs, int max_level, int max_steps = 64);

}  // namespace semired
