#include "semired/dual.hpp"

#include <algorithm>
#include <string>

#include "semired/errors.hpp"

namespace semired {

namespace {

// Group indices by equal signatures; insertion order keeps blocks sorted.
template <typename Signature>
Partition group_by(const std::vector<Signature>& sig) {
  Partition part;
  for (std::size_t j = 0; j < sig.size(); ++j) {
    int found = -1;
    for (std::size_t b = 0; b < part.size(); ++b) {
      if (sig[static_cast<std::size_t>(part[b][0])] == sig[j]) {
        found = static_cast<int>(b);
        break;
      }
    }
    if (found < 0) {
      part.push_back({static_cast<int>(j)});
    } else {
      part[static_cast<std::size_t>(found)].push_back(static_cast<int>(j));
    }
  }
  return part;
}

void check_characters(const CharacterSet& cs) {
  if (cs.chars.empty()) throw InputError("character set is empty");
  for (std::size_t j = 0; j < cs.chars.size(); ++j) {
    if (val_p(cs.chars[j] - 1, cs.p) < 1) {
      throw NotInDiscError("character " + std::to_string(j) +
                           " does not lie in the open unit disc 1 + p Z_(p)");
    }
  }
}

}  // namespace

PartitionLevels cluster(const CharacterSet& cs, int max_level, int max_steps) {
  check_characters(cs);
  const int m = static_cast<int>(cs.chars.size());
  RatMat g = RatMat::diagonal(cs.chars);
  OperatorLattice l0 = algebra_closure(cs.p, m, {g});
  ReductionChain chain = saturate(l0, max_steps);
  PartitionLevels out;
  for (int level = 0; level <= max_level; ++level) {
    const ChainLevel& lvl =
        chain.levels[std::min<std::size_t>(static_cast<std::size_t>(level),
                                           chain.levels.size() - 1)];
    FpAlgebra sub = generated_subalgebra(cs.p, lvl.alpha);
    // Everything in sight is diagonal; the partition reads off the columns
    // of diagonal values of the generated algebra's basis.
    std::vector<FpVec> signatures(static_cast<std::size_t>(m));
    for (const auto& mat : sub.matrix_model()) {
      for (int j = 0; j < m; ++j) {
        for (int k = 0; k < m; ++k) {
          if (j != k && mat.at(j, k) != 0) {
            throw InternalError("cluster: generated algebra is not diagonal");
          }
        }
        signatures[static_cast<std::size_t>(j)].push_back(mat.at(j, j));
      }
    }
    out.levels.push_back(group_by(signatures));
  }
  return out;
}

Partition predicted(const CharacterSet& cs, int level) {
  check_characters(cs);
  const int m = static_cast<int>(cs.chars.size());
  // Congruence mod p^(level+1) is an ultrametric equivalence, so grouping
  // against block representatives is sound.
  Partition part;
  for (int j = 0; j < m; ++j) {
    int found = -1;
    for (std::size_t b = 0; b < part.size(); ++b) {
      const Rat diff = cs.chars[static_cast<std::size_t>(j)] -
                       cs.chars[static_cast<std::size_t>(part[b][0])];
      if (val_p(diff, cs.p) >= static_cast<long>(level) + 1) {
        found = static_cast<int>(b);
        break;
      }
    }
    if (found < 0) {
      part.push_back({j});
    } else {
      part[static_cast<std::size_t>(found)].push_back(j);
    }
  }
  return part;
}

CompareResult compare(const CharacterSet& cs, int max_level, int max_steps) {
  CompareResult result;
  result.computed = cluster(cs, max_level, max_steps);
  for (int level = 0; level <= max_level; ++level) {
    result.expected.push_back(predicted(cs, level));
    bool match = result.computed.levels[static_cast<std::size_t>(level)] ==
                 result.expected.back();
    result.level_match.push_back(match);
    result.all_match = result.all_match && match;
  }
  return result;
}

}  // namespace semired
