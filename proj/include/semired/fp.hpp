#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace semired {

// Residue-field scalars: elements of F_p kept in [0, p). All helpers assume
// p prime and small enough that (p-1)^2 fits in 64 bits.
using FpScalar = std::uint64_t;
using FpVec = std::vector<FpScalar>;

inline FpScalar fp_add(FpScalar a, FpScalar b, std::uint64_t p) { return (a + b) % p; }
inline FpScalar fp_sub(FpScalar a, FpScalar b, std::uint64_t p) { return (a + p - b) % p; }
inline FpScalar fp_mul(FpScalar a, FpScalar b, std::uint64_t p) { return (a * b) % p; }
inline FpScalar fp_neg(FpScalar a, std::uint64_t p) { return (p - a) % p; }
FpScalar fp_inv(FpScalar a, std::uint64_t p);

// Square matrix over F_p.
struct FpMat {
  std::uint64_t p = 0;
  int n = 0;
  FpVec e;  // row-major

  FpMat() = default;
  FpMat(std::uint64_t p_, int n_) : p(p_), n(n_), e(static_cast<std::size_t>(n_) * n_, 0) {}
  static FpMat identity(std::uint64_t p, int n);

  FpScalar& at(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; }
  FpScalar at(int i, int j) const { return e[static_cast<std::size_t>(i) * n + j]; }
  bool is_zero() const;
  bool operator==(const FpMat& o) const { return p == o.p && n == o.n && e == o.e; }
};

FpMat fp_mat_mul(const FpMat& a, const FpMat& b);
FpMat fp_mat_add(const FpMat& a, const FpMat& b);
FpVec fp_vectorize(const FpMat& m);
FpMat fp_matrix_from_vec(std::uint64_t p, int n, const FpVec& v);

// Reduced row echelon form over F_p: unit pivots at strictly increasing
// columns, zeros above and below. Canonical for the row span.
struct FpRref {
  std::vector<FpVec> rows;
  std::vector<int> pivots;
};
FpRref rref_fp(std::vector<FpVec> rows, std::uint64_t p);

// Basis of {x : M x = 0}, one vector per free column, echelonised.
std::vector<FpVec> fp_nullspace(const std::vector<FpVec>& equations, int unknowns,
                                std::uint64_t p);

// Incrementally echelonised span with membership queries.
class FpSpan {
 public:
  FpSpan(std::uint64_t p, int ambient) : p_(p), ambient_(ambient) {}

  // Returns true when v enlarged the span.
  bool add(const FpVec& v);
  FpVec reduce(FpVec v) const;
  bool contains(const FpVec& v) const;

  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return ambient_; }
  std::uint64_t p() const { return p_; }
  // Rows are kept in reduced echelon form at all times.
  const std::vector<FpVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  std::uint64_t p_;
  int ambient_;
  std::vector<FpVec> rows_;
  std::vector<int> pivots_;
};

// Span that tracks coordinates of its content in terms of the vectors as
// added, for expressing elements in a designated generating set.
class FpCoordSpan {
 public:
  FpCoordSpan(std::uint64_t p, int ambient) : p_(p), ambient_(ambient) {}

  bool add(const FpVec& v);
  // Coordinates of v in terms of the added generators, if v lies in the span.
  std::optional<FpVec> coordinates(const FpVec& v) const;
  int dim() const { return static_cast<int>(rows_.size()); }

 private:
  std::uint64_t p_;
  int ambient_;
  int added_ = 0;
  std::vector<FpVec> rows_;
  std::vector<FpVec> coords_;
  std::vector<int> pivots_;
};

}  // namespace semired
