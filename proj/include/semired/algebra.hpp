#pragma once

#include <cstdint>
#include <vector>

#include "semired/fp.hpp"

namespace semired {

// Subspace of F_p^d, basis in reduced echelon form.
struct FpSubspace {
  std::uint64_t p = 0;
  int parent_dim = 0;
  std::vector<FpVec> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  bool contains(const FpVec& v) const;
  bool operator==(const FpSubspace& o) const {
    return p == o.p && parent_dim == o.parent_dim && basis == o.basis;
  }
};

struct WedderburnComponent {
  int dim = 0;           // l^2 * m
  int center_degree = 0;  // m: the component is M_l(F_{p^m})
  int matrix_size = 0;    // l
};

struct StructureReport {
  int radical_dim = 0;
  bool semisimple = false;
  bool simple = false;
  // Populated only when semisimple; components follow the idempotent order.
  std::vector<WedderburnComponent> components;
  std::vector<FpVec> primitive_central_idempotents;
};

// Finite dimensional unital associative F_p-algebra given by structure
// constants c[i][j][k]: b_i * b_j = sum_k c[i][j][k] b_k.
class FpAlgebra {
 public:
  FpAlgebra(std::uint64_t p, int dim, std::vector<FpScalar> structure, FpVec identity,
            std::vector<FpMat> matrix_model = {});

  std::uint64_t p() const { return p_; }
  int dim() const { return dim_; }
  FpScalar c(int i, int j, int k) const {
    return sc_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }
  const FpVec& identity() const { return identity_; }
  bool has_matrix_model() const { return !matrix_model_.empty(); }
  const std::vector<FpMat>& matrix_model() const { return matrix_model_; }

  FpVec mul(const FpVec& a, const FpVec& b) const;
  // Matrix of left multiplication by a on the algebra, row-major dim x dim:
  // L[k][j] = coefficient of b_k in a * b_j.
  std::vector<FpVec> left_regular(const FpVec& a) const;
  bool is_invertible(const FpVec& a) const;
  FpMat model_matrix(const FpVec& coords) const;

  // Checks associativity on basis triples, identity laws, and agreement
  // with the matrix model when present. Throws InternalError on failure.
  void validate() const;

 private:
  std::uint64_t p_;
  int dim_;
  std::vector<FpScalar> sc_;
  FpVec identity_;
  std::vector<FpMat> matrix_model_;
};

// Packages an independent multiplicatively closed matrix span, identity
// included, as an abstract algebra with the span attached as matrix model.
FpAlgebra from_matrix_span(std::uint64_t p, const std::vector<FpMat>& basis);

// Closes a spanning set (which must contain the identity) under products,
// then packages the closure.
FpAlgebra generated_subalgebra(std::uint64_t p, const std::vector<FpMat>& span);

FpSubspace center(const FpAlgebra& a);

// Jacobson radical by the characteristic-p trace-coefficient chain:
// R_0 = {x : Tr(L_{xy}) = 0 for all y}, refined by the degree-p^i
// characteristic polynomial coefficient conditions while p^i <= dim.
FpSubspace radical(const FpAlgebra& a);

// Oracle: {x : 1 - a*x is invertible for all a}, by full enumeration.
// Throws TooLargeError when p^dim exceeds the bound.
FpSubspace radical_bruteforce(const FpAlgebra& a, std::uint64_t max_enum = 4096);

bool is_semisimple(const FpAlgebra& a);

// Complete set of primitive central idempotents of a semisimple algebra,
// sorted lexicographically by coordinate vector. Small centers are handled
// by enumeration; larger ones by splitting the Frobenius-fixed subalgebra
// of the center along eigenspaces of multiplication operators.
std::vector<FpVec> primitive_central_idempotents(const FpAlgebra& a,
                                                 std::uint64_t enum_bound = 4096);

StructureReport wedderburn_components(const FpAlgebra& a);

// Structure constants of a / ideal (ideal must be two-sided).
FpAlgebra quotient_algebra(const FpAlgebra& a, const FpSubspace& ideal);

// Characteristic polynomial of a row-major d x d matrix over F_p by the
// division-free Berkowitz algorithm; returns monic coefficients
// [1, c_1, ..., c_d] with det(tI - M) = sum c_i t^(d-i).
FpVec fp_charpoly(const std::vector<FpVec>& m, std::uint64_t p);

}  // namespace semired
