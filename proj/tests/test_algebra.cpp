#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "semired/algebra.hpp"
#include "semired/errors.hpp"
#include "semired/lattice.hpp"
#include "support/testutil.hpp"

using namespace semired;

namespace {

FpMat fpmat2(std::uint64_t p, FpScalar a, FpScalar b, FpScalar c, FpScalar d) {
  FpMat m(p, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

std::vector<FpMat> fp_matrix_units(std::uint64_t p, int n) {
  std::vector<FpMat> units;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      FpMat m(p, n);
      m.at(i, j) = 1;
      units.push_back(std::move(m));
    }
  }
  return units;
}

// dim-2 algebra F_2[X]/(X^2): basis {1, x}, x^2 = 0.
FpAlgebra dual_numbers_f2() {
  FpMat one = FpMat::identity(2, 2);
  FpMat x = fpmat2(2, 0, 1, 0, 0);
  return from_matrix_span(2, {one, x});
}

// F_2 x F_2 in the diagonal matrix model.
FpAlgebra f2_squared() {
  return from_matrix_span(2, {fpmat2(2, 1, 0, 0, 0), fpmat2(2, 0, 0, 0, 1)});
}

FpAlgebra m2_f2() { return from_matrix_span(2, fp_matrix_units(2, 2)); }

// F_4 as a dim-2 F_2-algebra: x^2 = x + 1.
FpAlgebra f4() {
  std::vector<FpScalar> sc(8, 0);
  auto at = [&](int i, int j, int k) -> FpScalar& { return sc[(i * 2 + j) * 2 + k]; };
  at(0, 0, 0) = 1;  // 1*1 = 1
  at(0, 1, 1) = 1;  // 1*x = x
  at(1, 0, 1) = 1;  // x*1 = x
  at(1, 1, 0) = 1;  // x*x = 1 + x
  at(1, 1, 1) = 1;
  FpAlgebra a(2, 2, std::move(sc), FpVec{1, 0});
  a.validate();
  return a;
}

// Reduction of the Iwahori-type order {E11, E12, 2E21, E22} mod 2.
FpAlgebra iwahori_reduction() {
  std::vector<RatMat> basis{RatMat::unit(2, 0, 0), RatMat::unit(2, 0, 1),
                            scale(Rat(2), RatMat::unit(2, 1, 0)), RatMat::unit(2, 1, 1)};
  return order_reduction(2, 2, basis);
}

// Upper triangular 2x2 over F_3 as an abstract dim-3 algebra with basis
// {E11, E12, E22}.
FpAlgebra upper_triangular_f3() {
  FpMat e11(3, 2), e12(3, 2), e22(3, 2);
  e11.at(0, 0) = 1;
  e12.at(0, 1) = 1;
  e22.at(1, 1) = 1;
  return from_matrix_span(3, {e11, e12, e22});
}

FpAlgebra diagonal_f3_cubed() {
  std::vector<FpMat> basis;
  for (int i = 0; i < 3; ++i) {
    FpMat m(3, 3);
    m.at(i, i) = 1;
    basis.push_back(std::move(m));
  }
  return from_matrix_span(3, basis);
}

// Random matrix-span algebra over F_p, at most max_dim dimensional.
FpAlgebra random_span_algebra(testutil::Rng& rng, std::uint64_t p, int n) {
  std::vector<FpMat> span{FpMat::identity(p, n)};
  int count = testutil::uniform(rng, 1, 2);
  for (int i = 0; i < count; ++i) span.push_back(testutil::random_fp_matrix(rng, p, n));
  return generated_subalgebra(p, span);
}

}  // namespace

TEST_CASE("from_matrix_span spec examples") {
  FpAlgebra a = dual_numbers_f2();
  CHECK(a.dim() == 2);
  CHECK(a.mul(FpVec{0, 1}, FpVec{0, 1}) == FpVec{0, 0});  // x^2 = 0

  FpAlgebra b = m2_f2();
  CHECK(b.dim() == 4);
  // E12 * E21 = E11 in the matrix-unit basis order (11, 12, 21, 22).
  CHECK(b.mul(FpVec{0, 1, 0, 0}, FpVec{0, 0, 1, 0}) == FpVec{1, 0, 0, 0});

  FpAlgebra c = f2_squared();
  CHECK(c.dim() == 2);
  CHECK(c.mul(FpVec{1, 0}, FpVec{0, 1}) == FpVec{0, 0});
  CHECK(c.identity() == FpVec{1, 1});

  // Dependent span and missing identity.
  CHECK_THROWS_AS(from_matrix_span(2, {FpMat::identity(2, 2), FpMat::identity(2, 2)}),
                  InputError);
  FpMat e12 = fpmat2(2, 0, 1, 0, 0);
  CHECK_THROWS_AS(from_matrix_span(2, {e12}), NoIdentityError);
  // Not closed: {I, E12 + E21} is closed, {I, E11, E12} is not (E12*?).
  FpMat e11 = fpmat2(2, 1, 0, 0, 0);
  FpMat e21 = fpmat2(2, 0, 0, 1, 0);
  CHECK_THROWS_AS(from_matrix_span(2, {FpMat::identity(2, 2), e12, e21}), NotClosedError);
}

TEST_CASE("generated_subalgebra spec examples") {
  FpAlgebra one = generated_subalgebra(2, {FpMat::identity(2, 2)});
  CHECK(one.dim() == 1);

  FpMat swap = fpmat2(2, 0, 1, 1, 0);
  FpAlgebra two = generated_subalgebra(2, {FpMat::identity(2, 2), swap});
  CHECK(two.dim() == 2);
  // (E12 + E21)^2 = I: commutative dim-2 algebra.
  CHECK(fp_mat_mul(swap, swap) == FpMat::identity(2, 2));

  // Already closed spans come back unchanged in dimension and content.
  FpAlgebra direct = m2_f2();
  FpAlgebra closed = generated_subalgebra(2, fp_matrix_units(2, 2));
  CHECK(direct.dim() == closed.dim());
  for (int i = 0; i < 4; ++i) {
    CHECK(direct.matrix_model()[i] == closed.matrix_model()[i]);
  }
}

TEST_CASE("center spec examples") {
  FpSubspace zm2 = center(m2_f2());
  CHECK(zm2.dim() == 1);
  CHECK(zm2.contains(FpVec{1, 0, 0, 1}));  // scalars

  CHECK(center(f2_squared()).dim() == 2);

  // Oracle: brute force over all 16 elements of the Iwahori reduction.
  // The commutant is F_2 * identity, dimension 1.
  FpAlgebra iw = iwahori_reduction();
  std::vector<FpVec> central;
  for (int code = 0; code < 16; ++code) {
    FpVec x{static_cast<FpScalar>(code & 1), static_cast<FpScalar>((code >> 1) & 1),
            static_cast<FpScalar>((code >> 2) & 1), static_cast<FpScalar>((code >> 3) & 1)};
    bool ok = true;
    for (int j = 0; j < 4 && ok; ++j) {
      FpVec ej(4, 0);
      ej[j] = 1;
      ok = iw.mul(x, ej) == iw.mul(ej, x);
    }
    if (ok) central.push_back(x);
  }
  CHECK(central.size() == 2);  // {0, 1}: the F_2-line through the identity
  FpSubspace ziw = center(iw);
  CHECK(ziw.dim() == 1);
  for (const auto& x : central) {
    CHECK(ziw.contains(x));
  }
}

TEST_CASE("fp_charpoly matches determinant evaluation") {
  testutil::Rng rng(2718);
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    for (int t = 0; t < 40; ++t) {
      int d = testutil::uniform(rng, 1, 5);
      std::vector<FpVec> m(d, FpVec(d));
      for (auto& row : m) {
        for (auto& x : row) x = static_cast<FpScalar>(testutil::uniform(rng, 0, static_cast<int>(p) - 1));
      }
      FpVec cp = fp_charpoly(m, p);
      REQUIRE(cp.size() == static_cast<std::size_t>(d) + 1);
      CHECK(cp[0] == 1);
      for (FpScalar lambda = 0; lambda < p; ++lambda) {
        // det(lambda I - M) by Gaussian elimination.
        std::vector<FpVec> a = m;
        for (int i = 0; i < d; ++i) {
          for (int j = 0; j < d; ++j) {
            a[i][j] = fp_sub(i == j ? lambda : 0, m[i][j], p);
          }
        }
        FpScalar det = 1;
        for (int col = 0; col < d && det != 0; ++col) {
          int sel = -1;
          for (int i = col; i < d; ++i) {
            if (a[i][col] != 0) {
              sel = i;
              break;
            }
          }
          if (sel < 0) {
            det = 0;
            break;
          }
          if (sel != col) {
            std::swap(a[sel], a[col]);
            det = fp_neg(det, p);
          }
          det = fp_mul(det, a[col][col], p);
          FpScalar inv = fp_inv(a[col][col], p);
          for (int i = col + 1; i < d; ++i) {
            FpScalar f = fp_mul(a[i][col], inv, p);
            for (int j = col; j < d; ++j) {
              a[i][j] = fp_sub(a[i][j], fp_mul(f, a[col][j], p), p);
            }
          }
        }
        FpScalar horner = 0;
        for (std::size_t i = 0; i < cp.size(); ++i) horner = fp_add(fp_mul(horner, lambda, p), cp[i], p);
        CHECK(horner == det);
      }
    }
  }
}

TEST_CASE("radical spec examples") {
  FpSubspace r1 = radical(dual_numbers_f2());
  CHECK(r1.dim() == 1);
  CHECK(r1.contains(FpVec{0, 1}));  // span{x}

  CHECK(radical(m2_f2()).dim() == 0);

  FpSubspace riw = radical(iwahori_reduction());
  CHECK(riw.dim() == 2);
  CHECK(riw.contains(FpVec{0, 1, 0, 0}));
  CHECK(riw.contains(FpVec{0, 0, 1, 0}));
  CHECK(riw == radical_bruteforce(iwahori_reduction()));
}

TEST_CASE("radical_bruteforce spec examples") {
  CHECK(radical_bruteforce(f2_squared()).dim() == 0);
  FpSubspace r = radical_bruteforce(dual_numbers_f2());
  CHECK(r.dim() == 1);
  CHECK(r.contains(FpVec{0, 1}));

  FpSubspace rt = radical_bruteforce(upper_triangular_f3());
  CHECK(rt.dim() == 1);
  CHECK(rt.contains(FpVec{0, 1, 0}));  // span{E12}

  // Bound enforcement.
  CHECK_THROWS_AS(radical_bruteforce(m2_f2(), 8), TooLargeError);
}

TEST_CASE("radical properties: ideal, nilpotent, semisimple quotient, oracle equality") {
  testutil::Rng rng(90210);
  int checked = 0;
  while (checked < 40) {
    std::uint64_t p = (testutil::uniform(rng, 0, 1) == 0) ? 2 : 3;
    int n = testutil::uniform(rng, 2, 3);
    FpAlgebra a = random_span_algebra(rng, p, n);
    std::uint64_t size = 1;
    bool too_large = false;
    for (int i = 0; i < a.dim(); ++i) {
      size *= p;
      if (size > 4096) {
        too_large = true;
        break;
      }
    }
    if (too_large) continue;
    ++checked;
    FpSubspace rad = radical(a);
    CHECK(rad == radical_bruteforce(a));
    // Two-sided ideal.
    for (const auto& r : rad.basis) {
      for (int i = 0; i < a.dim(); ++i) {
        FpVec ei(a.dim(), 0);
        ei[i] = 1;
        CHECK(rad.contains(a.mul(ei, r)));
        CHECK(rad.contains(a.mul(r, ei)));
      }
    }
    // Nilpotent: products of dim-many radical elements vanish.
    if (rad.dim() > 0) {
      FpVec prod = rad.basis[0];
      for (int t = 1; t < a.dim(); ++t) prod = a.mul(prod, rad.basis[t % rad.dim()]);
      prod = a.mul(prod, rad.basis[0]);
      bool all_zero = std::all_of(prod.begin(), prod.end(), [](FpScalar x) { return x == 0; });
      CHECK(all_zero);
    }
    // The quotient by the radical is semisimple.
    FpAlgebra q = quotient_algebra(a, rad);
    CHECK(radical(q).dim() == 0);
    CHECK(q.dim() == a.dim() - rad.dim());
  }
}

TEST_CASE("is_semisimple spec examples") {
  CHECK(is_semisimple(m2_f2()));
  CHECK_FALSE(is_semisimple(dual_numbers_f2()));
  CHECK(is_semisimple(f2_squared()));
}

TEST_CASE("primitive_central_idempotents spec examples") {
  auto e = primitive_central_idempotents(f2_squared());
  REQUIRE(e.size() == 2);
  CHECK(e[0] == FpVec{0, 1});
  CHECK(e[1] == FpVec{1, 0});

  auto m2 = primitive_central_idempotents(m2_f2());
  REQUIRE(m2.size() == 1);
  CHECK(m2[0] == FpVec{1, 0, 0, 1});

  // F_3 x F_3 x F_3: 27 centre elements, 8 idempotents, 3 minimal ones.
  FpAlgebra d3 = diagonal_f3_cubed();
  int idem_count = 0;
  for (int code = 0; code < 27; ++code) {
    FpVec x{static_cast<FpScalar>(code % 3), static_cast<FpScalar>((code / 3) % 3),
            static_cast<FpScalar>(code / 9)};
    if (d3.mul(x, x) == x) ++idem_count;
  }
  CHECK(idem_count == 8);
  auto prims = primitive_central_idempotents(d3);
  REQUIRE(prims.size() == 3);
  CHECK(prims[0] == FpVec{0, 0, 1});
  CHECK(prims[1] == FpVec{0, 1, 0});
  CHECK(prims[2] == FpVec{1, 0, 0});

  CHECK_THROWS_AS(primitive_central_idempotents(dual_numbers_f2()), NotSemisimpleError);
}

TEST_CASE("idempotent suite on random semisimple algebras") {
  testutil::Rng rng(60601);
  int checked = 0;
  while (checked < 30) {
    std::uint64_t p = (testutil::uniform(rng, 0, 1) == 0) ? 2 : 3;
    int n = testutil::uniform(rng, 2, 3);
    FpAlgebra a = random_span_algebra(rng, p, n);
    if (!is_semisimple(a)) continue;
    ++checked;
    auto prims = primitive_central_idempotents(a);
    FpSubspace z = center(a);
    FpVec sum(a.dim(), 0);
    for (std::size_t i = 0; i < prims.size(); ++i) {
      CHECK(a.mul(prims[i], prims[i]) == prims[i]);
      CHECK(z.contains(prims[i]));
      for (std::size_t j = 0; j < prims.size(); ++j) {
        if (i == j) continue;
        FpVec prod = a.mul(prims[i], prims[j]);
        bool zero = std::all_of(prod.begin(), prod.end(), [](FpScalar x) { return x == 0; });
        CHECK(zero);
      }
      for (int k = 0; k < a.dim(); ++k) sum[k] = fp_add(sum[k], prims[i][k], p);
    }
    CHECK(sum == a.identity());
    // The splitting path must agree with the enumeration path.
    auto forced = primitive_central_idempotents(a, 1);
    CHECK(forced == prims);
  }
}

TEST_CASE("wedderburn_components spec examples") {
  StructureReport m2 = wedderburn_components(m2_f2());
  CHECK(m2.semisimple);
  CHECK(m2.simple);
  REQUIRE(m2.components.size() == 1);
  CHECK(m2.components[0].matrix_size == 2);
  CHECK(m2.components[0].center_degree == 1);
  CHECK(m2.components[0].dim == 4);

  StructureReport ff = wedderburn_components(f2_squared());
  CHECK(ff.semisimple);
  CHECK_FALSE(ff.simple);
  REQUIRE(ff.components.size() == 2);
  for (const auto& c : ff.components) {
    CHECK(c.matrix_size == 1);
    CHECK(c.center_degree == 1);
    CHECK(c.dim == 1);
  }

  StructureReport f4r = wedderburn_components(f4());
  CHECK(f4r.semisimple);
  CHECK(f4r.simple);
  REQUIRE(f4r.components.size() == 1);
  CHECK(f4r.components[0].matrix_size == 1);
  CHECK(f4r.components[0].center_degree == 2);
  CHECK(f4r.components[0].dim == 2);

  StructureReport iw = wedderburn_components(iwahori_reduction());
  CHECK_FALSE(iw.semisimple);
  CHECK(iw.radical_dim == 2);
  CHECK(iw.components.empty());
}

TEST_CASE("component dims sum to dim on random semisimple algebras") {
  testutil::Rng rng(11);
  int checked = 0;
  while (checked < 25) {
    std::uint64_t p = (testutil::uniform(rng, 0, 1) == 0) ? 2 : 3;
    int n = testutil::uniform(rng, 2, 3);
    FpAlgebra a = random_span_algebra(rng, p, n);
    StructureReport rep = wedderburn_components(a);
    if (!rep.semisimple) continue;
    ++checked;
    int total = 0;
    for (const auto& c : rep.components) {
      CHECK(c.matrix_size * c.matrix_size * c.center_degree == c.dim);
      total += c.dim;
    }
    CHECK(total == a.dim());
    CHECK(rep.components.size() == rep.primitive_central_idempotents.size());
  }
}
