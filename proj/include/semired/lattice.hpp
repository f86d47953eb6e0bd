#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "semired/algebra.hpp"
#include "semired/matrix.hpp"

namespace semired {

// Finitely generated Z_(p)-lattice of n x n matrices with p-integral
// entries, held in a canonical echelon form over the row-major
// vectorisation: pivot entries are exact powers of p at strictly increasing
// positions, entries below a pivot vanish, entries above it are the
// canonical integer residues mod the pivot power, and unit factors away
// from p are normalised out. Two generating sets of the same lattice
// canonicalise to identical bases, so equality is structural.
class OperatorLattice {
 public:
  static OperatorLattice from_generators(std::uint64_t p, int n,
                                         const std::vector<RatMat>& gens);

  std::uint64_t p() const { return p_; }
  int n() const { return n_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<RatMat>& basis() const { return basis_; }
  const std::vector<int>& pivot_positions() const { return pivot_positions_; }
  const std::vector<long>& pivot_valuations() const { return pivot_valuations_; }

  bool member(const RatMat& m) const;
  // Z_(p)-coordinates of m in the canonical basis, when m is a member.
  std::optional<std::vector<Rat>> coordinates(const RatMat& m) const;
  bool contains(const OperatorLattice& other) const;

  bool operator==(const OperatorLattice& o) const;

 private:
  OperatorLattice(std::uint64_t p, int n) : p_(p), n_(n) {}

  std::uint64_t p_ = 0;
  int n_ = 0;
  std::vector<RatMat> basis_;
  std::vector<int> pivot_positions_;
  std::vector<long> pivot_valuations_;
};

inline OperatorLattice canonicalize(std::uint64_t p, int n, const std::vector<RatMat>& gens) {
  return OperatorLattice::from_generators(p, n, gens);
}

struct ChainLevel {
  OperatorLattice lattice;
  std::vector<FpMat> alpha;  // echelon basis of the reduced image
  int alpha_dim = 0;
};

struct ReductionChain {
  std::vector<ChainLevel> levels;
  int stabilized_at = 0;  // first index i with L_{i+1} = L_i

  std::vector<int> alpha_dims() const;
  const ChainLevel& final_level() const { return levels.back(); }
};

// Image lattice of k°[M]: smallest canonical lattice containing the
// identity and all finite products of the generators. Throws
// NotIntegralError when a generator is not p-integral (the representation
// is not unitary for the chosen norm).
OperatorLattice algebra_closure(std::uint64_t p, int n, const std::vector<RatMat>& gens,
                                int max_rounds = 64);

// L + p^-1 (L ∩ p·M_n), the one-step enlargement of the integral model.
OperatorLattice saturation_step(const OperatorLattice& l);

// Echelon basis of the entrywise reduction of the lattice basis.
std::vector<FpMat> reduced_image(const OperatorLattice& l);

// Iterates saturation_step until the lattice is a fixpoint, recording each
// level and its reduced image. The stopping rule is lattice equality of
// canonical forms, which is strictly stronger than one-step equality of
// the reduced images.
ReductionChain saturate(const OperatorLattice& l0, int max_steps = 64);

// Independent oracle: (Q-span of l0) ∩ {p-integral matrices}, computed by
// integer kernel-of-kernel saturation of the vectorised basis rather than
// by iterating saturation_step.
OperatorLattice oracle_saturation(const OperatorLattice& l0);

// basis_change^-1 . g . basis_change for each generator; throws
// NotUnitaryError when a conjugate fails to be p-integral.
std::vector<RatMat> conjugate_to_lattice_basis(const std::vector<RatMat>& gens,
                                               const RatMat& basis_change, std::uint64_t p);

// Reduction of a user-supplied integral model modulo p, as an abstract
// algebra by structure constants in the given order basis.
FpAlgebra order_reduction(std::uint64_t p, int n, const std::vector<RatMat>& order_basis);

}  // namespace semired
