#include "semired/lattice.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "semired/errors.hpp"

namespace semired {

namespace {

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

// Canonical echelon form of the Z_(p)-span of the given vectors. Forward
// pass picks the minimal-valuation entry in each column as pivot,
// normalises it to an exact power of p (a unit multiple), and clears the
// column below; the backward pass replaces entries above each pivot by
// their canonical residue mod the pivot power.
struct EchelonResult {
  std::vector<RatVec> rows;
  std::vector<int> pivots;
  std::vector<long> pivot_vals;
};

EchelonResult p_echelon(std::vector<RatVec> rows, std::uint64_t p) {
  EchelonResult out;
  if (rows.empty()) return out;
  const int width = static_cast<int>(rows[0].size());
  int r = 0;
  for (int col = 0; col < width && r < static_cast<int>(rows.size()); ++col) {
    int sel = -1;
    long best = kValInfinity;
    for (int i = r; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][col] == 0) continue;
      long v = val_p(rows[i][col], p);
      if (v < best) {
        best = v;
        sel = i;
      }
    }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    const long a = best;
    const Rat pivot_value(pow_p(p, a));
    const Rat unit = pivot_value / rows[r][col];
    for (int j = col; j < width; ++j) rows[r][j] *= unit;
    for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][col] == 0) continue;
      Rat lambda = rows[i][col] / pivot_value;  // p-integral by pivot minimality
      for (int j = col; j < width; ++j) rows[i][j] -= lambda * rows[r][j];
    }
    out.pivots.push_back(col);
    out.pivot_vals.push_back(a);
    ++r;
  }
  rows.resize(r);
  // Reduce above pivots in pivot order; row j vanishes left of its pivot,
  // so earlier pivot columns stay canonical.
  for (int j = 0; j < r; ++j) {
    const int col = out.pivots[j];
    const Int modulus = pow_p(p, out.pivot_vals[j]);
    const Rat pivot_value(modulus);
    for (int i = 0; i < j; ++i) {
      const Rat& x = rows[i][col];
      if (x == 0) continue;
      Rat target(canonical_residue(x, modulus));
      Rat lambda = (x - target) / pivot_value;
      if (lambda == 0) continue;
      for (int t = col; t < width; ++t) rows[i][t] -= lambda * rows[j][t];
    }
  }
  out.rows = std::move(rows);
  return out;
}

// Basis of {x in Z^m : A x = 0} for an integer matrix A, via unimodular row
// reduction of [A^T | I]: transform rows matching zero echelon rows form a
// basis of the kernel lattice.
std::vector<IntVec> integer_kernel(const std::vector<IntVec>& a, int width) {
  const int r = static_cast<int>(a.size());
  const int m = width;
  std::vector<IntVec> t(static_cast<std::size_t>(m), IntVec(static_cast<std::size_t>(r)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < r; ++j) t[i][j] = a[j][i];
  }
  std::vector<IntVec> u(static_cast<std::size_t>(m), IntVec(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < m; ++i) u[i][i] = 1;
  int row = 0;
  for (int col = 0; col < r && row < m; ++col) {
    for (;;) {
      int sel = -1;
      for (int i = row; i < m; ++i) {
        if (t[i][col] == 0) continue;
        if (sel < 0 || abs(t[i][col]) < abs(t[sel][col])) sel = i;
      }
      if (sel < 0) break;
      std::swap(t[row], t[sel]);
      std::swap(u[row], u[sel]);
      bool cleared = true;
      for (int i = row + 1; i < m; ++i) {
        if (t[i][col] == 0) continue;
        Int q = t[i][col] / t[row][col];
        if (q != 0) {
          for (int j = 0; j < r; ++j) t[i][j] -= q * t[row][j];
          for (int j = 0; j < m; ++j) u[i][j] -= q * u[row][j];
        }
        if (t[i][col] != 0) cleared = false;
      }
      if (cleared) {
        ++row;
        break;
      }
    }
  }
  std::vector<IntVec> kernel;
  for (int i = row; i < m; ++i) kernel.push_back(u[i]);
  return kernel;
}

std::vector<RatVec> vectorize_all(const std::vector<RatMat>& mats) {
  std::vector<RatVec> rows;
  rows.reserve(mats.size());
  for (const auto& m : mats) rows.push_back(rat_vectorize(m));
  return rows;
}

}  // namespace

OperatorLattice OperatorLattice::from_generators(std::uint64_t p, int n,
                                                 const std::vector<RatMat>& gens) {
  if (!is_prime(p)) throw InputError("p must be prime");
  OperatorLattice l(p, n);
  std::vector<RatVec> rows;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (gens[g].n() != n) throw InputError("generator has wrong dimension");
    if (!is_p_integral(gens[g], p)) {
      throw NotIntegralError("generator " + std::to_string(g) +
                             " has an entry of negative p-adic valuation");
    }
    if (!gens[g].is_zero()) rows.push_back(rat_vectorize(gens[g]));
  }
  EchelonResult ech = p_echelon(std::move(rows), p);
  l.pivot_positions_ = std::move(ech.pivots);
  l.pivot_valuations_ = std::move(ech.pivot_vals);
  l.basis_.reserve(ech.rows.size());
  for (const auto& row : ech.rows) l.basis_.push_back(rat_matrix_from_vector(n, row));
  return l;
}

std::optional<std::vector<Rat>> OperatorLattice::coordinates(const RatMat& m) const {
  if (m.n() != n_) return std::nullopt;
  RatVec v = rat_vectorize(m);
  std::vector<Rat> coords(basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    const Rat& x = v[pivot_positions_[j]];
    if (x == 0) continue;
    Rat lambda = x / Rat(pow_p(p_, pivot_valuations_[j]));
    if (val_p(lambda, p_) < 0) return std::nullopt;
    const RatVec row = rat_vectorize(basis_[j]);
    for (std::size_t t = pivot_positions_[j]; t < v.size(); ++t) v[t] -= lambda * row[t];
    coords[j] = std::move(lambda);
  }
  for (const Rat& x : v) {
    if (x != 0) return std::nullopt;
  }
  return coords;
}

bool OperatorLattice::member(const RatMat& m) const { return coordinates(m).has_value(); }

bool OperatorLattice::contains(const OperatorLattice& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const RatMat& b) { return member(b); });
}

bool OperatorLattice::operator==(const OperatorLattice& o) const {
  return p_ == o.p_ && n_ == o.n_ && pivot_positions_ == o.pivot_positions_ &&
         pivot_valuations_ == o.pivot_valuations_ && basis_ == o.basis_;
}

std::vector<int> ReductionChain::alpha_dims() const {
  std::vector<int> dims;
  dims.reserve(levels.size());
  for (const auto& lvl : levels) dims.push_back(lvl.alpha_dim);
  return dims;
}

OperatorLattice algebra_closure(std::uint64_t p, int n, const std::vector<RatMat>& gens,
                                int max_rounds) {
  std::vector<RatMat> seed = gens;
  seed.push_back(RatMat::identity(n));
  OperatorLattice l = OperatorLattice::from_generators(p, n, seed);
  for (int round = 0; round < max_rounds; ++round) {
    std::vector<RatMat> extra;
    for (const auto& b : l.basis()) {
      for (const auto& g : gens) {
        RatMat prod = b * g;
        if (!l.member(prod)) extra.push_back(std::move(prod));
      }
    }
    if (extra.empty()) return l;
    std::vector<RatMat> next = l.basis();
    next.insert(next.end(), extra.begin(), extra.end());
    l = OperatorLattice::from_generators(p, n, next);
  }
  throw MaxIterationsError("algebra_closure did not stabilise; the input is likely invalid");
}

std::vector<FpMat> reduced_image(const OperatorLattice& l) {
  std::vector<FpVec> rows;
  rows.reserve(l.basis().size());
  for (const auto& b : l.basis()) rows.push_back(fp_vectorize(reduce_matrix(b, l.p())));
  FpRref rr = rref_fp(std::move(rows), l.p());
  std::vector<FpMat> out;
  out.reserve(rr.rows.size());
  for (const auto& row : rr.rows) out.push_back(fp_matrix_from_vec(l.p(), l.n(), row));
  return out;
}

OperatorLattice saturation_step(const OperatorLattice& l) {
  // L ∩ p·M_n is spanned by p·L together with the lifts of the nullspace of
  // the reduced basis; dividing the nullspace combinations by p realises
  // the ϖ^-1-enlargement.
  const std::uint64_t p = l.p();
  std::vector<FpVec> reduced;
  reduced.reserve(l.basis().size());
  for (const auto& b : l.basis()) reduced.push_back(fp_vectorize(reduce_matrix(b, p)));
  const int d = l.rank();
  std::vector<FpVec> eqs;  // rows are coordinates: nullspace of the d x n^2 matrix
  // fp_nullspace works on equations; here the "equations" are the transpose:
  // we need {c in F_p^d : sum c_i reduced_i = 0}.
  const int width = l.n() * l.n();
  std::vector<FpVec> transposed(static_cast<std::size_t>(width),
                                FpVec(static_cast<std::size_t>(d), 0));
  for (int i = 0; i < d; ++i) {
    for (int t = 0; t < width; ++t) transposed[t][i] = reduced[i][t];
  }
  std::vector<FpVec> null = fp_nullspace(transposed, d, p);
  std::vector<RatMat> gens = l.basis();
  const Rat inv_p(Rat(1) / Rat(Int(p)));
  for (const auto& c : null) {
    RatMat combo(l.n());
    for (int i = 0; i < d; ++i) {
      if (c[i] == 0) continue;
      combo = combo + scale(Rat(Int(c[i])), l.basis()[i]);
    }
    gens.push_back(scale(inv_p, combo));
  }
  return OperatorLattice::from_generators(p, l.n(), gens);
}

ReductionChain saturate(const OperatorLattice& l0, int max_steps) {
  const auto make_level = [](const OperatorLattice& l) {
    std::vector<FpMat> alpha = reduced_image(l);
    int dim = static_cast<int>(alpha.size());
    return ChainLevel{l, std::move(alpha), dim};
  };
  ReductionChain chain;
  chain.levels.push_back(make_level(l0));
  for (int step = 0; step < max_steps; ++step) {
    OperatorLattice next = saturation_step(chain.levels.back().lattice);
    if (next == chain.levels.back().lattice) {
      chain.stabilized_at = static_cast<int>(chain.levels.size()) - 1;
      return chain;
    }
    chain.levels.push_back(make_level(next));
  }
  throw MaxIterationsError(
      "saturation chain did not stabilise within max_steps; raise --max-steps if the input "
      "mixes characters at very different p-adic depths");
}

OperatorLattice oracle_saturation(const OperatorLattice& l0) {
  const int width = l0.n() * l0.n();
  if (l0.rank() == 0) return l0;
  // Q-orthogonal complement of the span, as a primitive integer matrix.
  std::vector<RatVec> rows = vectorize_all(l0.basis());
  std::vector<RatVec> complement = rat_nullspace(rows, width);
  std::vector<IntVec> k_rows;
  for (const auto& v : complement) {
    Int lcm(1);
    for (const Rat& x : v) {
      Int den = denominator(x);
      lcm = lcm / gcd(lcm, den) * den;
    }
    IntVec iv(v.size());
    Int content(0);
    for (std::size_t t = 0; t < v.size(); ++t) {
      iv[t] = numerator(v[t] * Rat(lcm));
      content = gcd(content, iv[t]);
    }
    if (content > 1) {
      for (auto& x : iv) x /= content;
    }
    k_rows.push_back(std::move(iv));
  }
  // Integral vectors annihilated by the complement = saturation of the span.
  std::vector<IntVec> saturated = integer_kernel(k_rows, width);
  std::vector<RatMat> gens;
  gens.reserve(saturated.size());
  for (const auto& iv : saturated) {
    RatVec rv(iv.size());
    for (std::size_t t = 0; t < iv.size(); ++t) rv[t] = Rat(iv[t]);
    gens.push_back(rat_matrix_from_vector(l0.n(), rv));
  }
  return OperatorLattice::from_generators(l0.p(), l0.n(), gens);
}

std::vector<RatMat> conjugate_to_lattice_basis(const std::vector<RatMat>& gens,
                                               const RatMat& basis_change, std::uint64_t p) {
  RatMat inv = rat_inverse(basis_change);
  std::vector<RatMat> out;
  out.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    RatMat conj = inv * gens[i] * basis_change;
    if (!is_p_integral(conj, p)) {
      throw NotUnitaryError("generator " + std::to_string(i) +
                            " is not unitary for the norm defined by the given lattice basis");
    }
    out.push_back(std::move(conj));
  }
  return out;
}

FpAlgebra order_reduction(std::uint64_t p, int n, const std::vector<RatMat>& order_basis) {
  if (!is_prime(p)) throw InputError("p must be prime");
  if (order_basis.empty()) throw InputError("order basis is empty");
  const int d = static_cast<int>(order_basis.size());
  RatCoordSolver solver(n * n);
  for (int i = 0; i < d; ++i) {
    if (order_basis[i].n() != n) throw InputError("order basis element has wrong dimension");
    if (!is_p_integral(order_basis[i], p)) {
      throw NotIntegralError("order basis element " + std::to_string(i) +
                             " has an entry of negative p-adic valuation");
    }
    if (!solver.add(rat_vectorize(order_basis[i]))) {
      throw InputError("order basis is linearly dependent");
    }
  }
  const auto integral_coords = [&](const RatMat& m) -> std::optional<std::vector<Rat>> {
    auto coords = solver.coordinates(rat_vectorize(m));
    if (!coords) return std::nullopt;
    for (const Rat& x : *coords) {
      if (val_p(x, p) < 0) return std::nullopt;
    }
    return coords;
  };
  auto idc = integral_coords(RatMat::identity(n));
  if (!idc) throw NoIdentityError("order basis span does not contain the identity over Z_(p)");
  FpVec identity_coords(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) identity_coords[k] = reduce_mod_p((*idc)[k], p);
  std::vector<FpScalar> sc(static_cast<std::size_t>(d) * d * d, 0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      auto coords = integral_coords(order_basis[i] * order_basis[j]);
      if (!coords) {
        throw NotClosedError("order basis span is not multiplicatively closed: product of "
                             "elements " +
                             std::to_string(i) + " and " + std::to_string(j) +
                             " leaves the Z_(p)-span");
      }
      for (int k = 0; k < d; ++k) {
        sc[(static_cast<std::size_t>(i) * d + j) * d + k] = reduce_mod_p((*coords)[k], p);
      }
    }
  }
  FpAlgebra a(p, d, std::move(sc), std::move(identity_coords));
  a.validate();
  return a;
}

}  // namespace semired
