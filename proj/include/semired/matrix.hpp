#pragma once

#include <optional>
#include <vector>

#include "semired/fp.hpp"
#include "semired/rational.hpp"

namespace semired {

// Square matrix over Q, modelling an operator on k^n in an orthonormal
// basis. For strictly Cartesian spaces the operator norm is the sup of
// entry norms, so the norm exponent is -min over entries of v_p.
class RatMat {
 public:
  RatMat() = default;
  explicit RatMat(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {}

  static RatMat identity(int n);
  static RatMat unit(int n, int i, int j);  // matrix unit E_ij
  static RatMat diagonal(const std::vector<Rat>& d);

  int n() const { return n_; }
  Rat& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  const Rat& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

  bool is_zero() const;
  Rat trace() const;

  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat operator*(const RatMat& o) const;
  RatMat operator-() const;
  bool operator==(const RatMat& o) const { return n_ == o.n_ && e_ == o.e_; }

 private:
  int n_ = 0;
  std::vector<Rat> e_;
};

RatMat scale(const Rat& c, const RatMat& m);

// Min over entries of v_p; kValInfinity for the zero matrix.
long min_valuation(const RatMat& m, std::uint64_t p);
bool is_p_integral(const RatMat& m, std::uint64_t p);

// Entrywise reduction mod p. Throws NotIntegralError naming the offending
// position when some entry has negative valuation.
FpMat reduce_matrix(const RatMat& m, std::uint64_t p);

// Exact inverse by Gauss-Jordan; throws InputError when singular.
RatMat rat_inverse(const RatMat& m);

std::vector<Rat> rat_vectorize(const RatMat& m);
RatMat rat_matrix_from_vector(int n, const std::vector<Rat>& v);

// Exact reduced row echelon form over Q and the induced nullspace basis.
struct RatRref {
  std::vector<std::vector<Rat>> rows;
  std::vector<int> pivots;
};
RatRref rat_rref(std::vector<std::vector<Rat>> rows);
std::vector<std::vector<Rat>> rat_nullspace(const std::vector<std::vector<Rat>>& rows,
                                            int unknowns);

// Echelonised span over Q tracking coordinates in the generators as added.
class RatCoordSolver {
 public:
  explicit RatCoordSolver(int ambient) : ambient_(ambient) {}
  bool add(const std::vector<Rat>& v);
  std::optional<std::vector<Rat>> coordinates(const std::vector<Rat>& v) const;
  int dim() const { return static_cast<int>(rows_.size()); }

 private:
  int ambient_;
  int added_ = 0;
  std::vector<std::vector<Rat>> rows_;
  std::vector<std::vector<Rat>> coords_;
  std::vector<int> pivots_;
};

}  // namespace semired
