#include "semired/algebra.hpp"

#include <algorithm>
#include <string>

#include "semired/errors.hpp"

namespace semired {

namespace {

// p^e clamped so comparisons against small bounds stay exact.
std::uint64_t pow_clamped(std::uint64_t p, int e, std::uint64_t clamp) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > clamp / p) return clamp + 1;
    r *= p;
  }
  return r;
}

FpVec unit_vec(int dim, int i) {
  FpVec v(static_cast<std::size_t>(dim), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

FpSubspace make_subspace(std::uint64_t p, int parent, std::vector<FpVec> rows) {
  FpRref rr = rref_fp(std::move(rows), p);
  return FpSubspace{p, parent, std::move(rr.rows)};
}

}  // namespace

bool FpSubspace::contains(const FpVec& v) const {
  FpSpan s(p, parent_dim);
  for (const auto& row : basis) s.add(row);
  return s.contains(v);
}

FpAlgebra::FpAlgebra(std::uint64_t p, int dim, std::vector<FpScalar> structure, FpVec identity,
                     std::vector<FpMat> matrix_model)
    : p_(p),
      dim_(dim),
      sc_(std::move(structure)),
      identity_(std::move(identity)),
      matrix_model_(std::move(matrix_model)) {
  if (sc_.size() != static_cast<std::size_t>(dim_) * dim_ * dim_ ||
      identity_.size() != static_cast<std::size_t>(dim_)) {
    throw InternalError("FpAlgebra: inconsistent construction data");
  }
}

FpVec FpAlgebra::mul(const FpVec& a, const FpVec& b) const {
  FpVec r(static_cast<std::size_t>(dim_), 0);
  for (int i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      FpScalar f = (a[i] * b[j]) % p_;
      const std::size_t base = (static_cast<std::size_t>(i) * dim_ + j) * dim_;
      for (int k = 0; k < dim_; ++k) {
        r[k] = (r[k] + f * sc_[base + k]) % p_;
      }
    }
  }
  return r;
}

std::vector<FpVec> FpAlgebra::left_regular(const FpVec& a) const {
  std::vector<FpVec> l(static_cast<std::size_t>(dim_), FpVec(static_cast<std::size_t>(dim_), 0));
  for (int j = 0; j < dim_; ++j) {
    FpVec col = mul(a, unit_vec(dim_, j));
    for (int k = 0; k < dim_; ++k) l[k][j] = col[k];
  }
  return l;
}

bool FpAlgebra::is_invertible(const FpVec& a) const {
  FpRref rr = rref_fp(left_regular(a), p_);
  return static_cast<int>(rr.rows.size()) == dim_;
}

FpMat FpAlgebra::model_matrix(const FpVec& coords) const {
  if (matrix_model_.empty()) throw InternalError("FpAlgebra: no matrix model attached");
  FpMat m(p_, matrix_model_[0].n);
  for (int k = 0; k < dim_; ++k) {
    if (coords[k] == 0) continue;
    for (std::size_t t = 0; t < m.e.size(); ++t) {
      m.e[t] = (m.e[t] + coords[k] * matrix_model_[k].e[t]) % p_;
    }
  }
  return m;
}

void FpAlgebra::validate() const {
  for (int i = 0; i < dim_; ++i) {
    FpVec ei = unit_vec(dim_, i);
    if (mul(identity_, ei) != ei || mul(ei, identity_) != ei) {
      throw InternalError("FpAlgebra: identity laws fail on basis element " + std::to_string(i));
    }
  }
  for (int i = 0; i < dim_; ++i) {
    FpVec ei = unit_vec(dim_, i);
    for (int j = 0; j < dim_; ++j) {
      FpVec ej = unit_vec(dim_, j);
      FpVec ij = mul(ei, ej);
      for (int k = 0; k < dim_; ++k) {
        FpVec ek = unit_vec(dim_, k);
        if (mul(ij, ek) != mul(ei, mul(ej, ek))) {
          throw InternalError("FpAlgebra: associativity fails on basis triple");
        }
      }
    }
  }
  if (!matrix_model_.empty()) {
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j) {
        FpMat lhs = fp_mat_mul(matrix_model_[i], matrix_model_[j]);
        FpMat rhs = model_matrix(mul(unit_vec(dim_, i), unit_vec(dim_, j)));
        if (!(lhs == rhs)) {
          throw InternalError("FpAlgebra: structure constants disagree with matrix model");
        }
      }
    }
  }
}

FpAlgebra from_matrix_span(std::uint64_t p, const std::vector<FpMat>& basis) {
  if (basis.empty()) throw InputError("from_matrix_span: empty basis");
  const int n = basis[0].n;
  FpCoordSpan solver(p, n * n);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].n != n || basis[i].p != p) {
      throw InputError("from_matrix_span: mixed shapes or primes");
    }
    if (!solver.add(fp_vectorize(basis[i]))) {
      throw InputError("from_matrix_span: basis is linearly dependent");
    }
  }
  const int d = static_cast<int>(basis.size());
  auto idc = solver.coordinates(fp_vectorize(FpMat::identity(p, n)));
  if (!idc) throw NoIdentityError("matrix span does not contain the identity");
  std::vector<FpScalar> sc(static_cast<std::size_t>(d) * d * d, 0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      FpMat prod = fp_mat_mul(basis[i], basis[j]);
      auto coords = solver.coordinates(fp_vectorize(prod));
      if (!coords) {
        throw NotClosedError("matrix span is not closed under multiplication: product of basis "
                             "elements " +
                             std::to_string(i) + " and " + std::to_string(j) +
                             " leaves the span");
      }
      for (int k = 0; k < d; ++k) {
        sc[(static_cast<std::size_t>(i) * d + j) * d + k] = (*coords)[k];
      }
    }
  }
  FpAlgebra a(p, d, std::move(sc), *idc, basis);
  a.validate();
  return a;
}

FpAlgebra generated_subalgebra(std::uint64_t p, const std::vector<FpMat>& span) {
  if (span.empty()) throw InputError("generated_subalgebra: empty span");
  const int n = span[0].n;
  FpSpan s(p, n * n);
  std::vector<FpMat> pool;
  for (const auto& m : span) {
    if (s.add(fp_vectorize(m))) pool.push_back(m);
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      FpMat prod = fp_mat_mul(pool[i], pool[j]);
      if (s.add(fp_vectorize(prod))) pool.push_back(std::move(prod));
    }
  }
  std::vector<FpMat> basis;
  basis.reserve(s.rows().size());
  for (const auto& row : s.rows()) basis.push_back(fp_matrix_from_vec(p, n, row));
  return from_matrix_span(p, basis);
}

FpSubspace center(const FpAlgebra& a) {
  const int d = a.dim();
  std::vector<FpVec> eqs;
  eqs.reserve(static_cast<std::size_t>(d) * d);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      FpVec row(static_cast<std::size_t>(d), 0);
      for (int i = 0; i < d; ++i) {
        row[i] = fp_sub(a.c(i, j, k), a.c(j, i, k), a.p());
      }
      eqs.push_back(std::move(row));
    }
  }
  return make_subspace(a.p(), d, fp_nullspace(eqs, d, a.p()));
}

FpVec fp_charpoly(const std::vector<FpVec>& m, std::uint64_t p) {
  const int d = static_cast<int>(m.size());
  if (d == 0) return FpVec{1};
  FpVec c{1, fp_neg(m[0][0], p)};
  for (int r = 2; r <= d; ++r) {
    // Q[i] = -(R . A^{i-2} . S) for the leading principal blocks.
    FpVec q(static_cast<std::size_t>(r) + 1, 0);
    q[0] = 1;
    q[1] = fp_neg(m[r - 1][r - 1], p);
    FpVec w(static_cast<std::size_t>(r) - 1);
    for (int i = 0; i < r - 1; ++i) w[i] = m[i][r - 1];
    for (int i = 2; i <= r; ++i) {
      FpScalar dot = 0;
      for (int t = 0; t < r - 1; ++t) dot = (dot + m[r - 1][t] * w[t]) % p;
      q[i] = fp_neg(dot, p);
      if (i < r) {
        FpVec nw(static_cast<std::size_t>(r) - 1, 0);
        for (int row = 0; row < r - 1; ++row) {
          FpScalar acc = 0;
          for (int t = 0; t < r - 1; ++t) acc = (acc + m[row][t] * w[t]) % p;
          nw[row] = acc;
        }
        w = std::move(nw);
      }
    }
    FpVec nc(static_cast<std::size_t>(r) + 1, 0);
    for (int i = 0; i <= r; ++i) {
      FpScalar acc = 0;
      int jmax = std::min<int>(i, r - 1);
      for (int j = 0; j <= jmax; ++j) {
        if (i - j > r) continue;
        acc = (acc + q[i - j] * c[j]) % p;
      }
      nc[i] = acc;
    }
    c = std::move(nc);
  }
  return c;
}

FpSubspace radical(const FpAlgebra& a) {
  const int d = a.dim();
  const std::uint64_t p = a.p();
  std::vector<FpVec> current;
  for (int i = 0; i < d; ++i) current.push_back(unit_vec(d, i));
  for (int i = 0; pow_clamped(p, i, static_cast<std::uint64_t>(d)) <= static_cast<std::uint64_t>(d);
       ++i) {
    if (current.empty()) break;
    const std::size_t coeff_index = pow_clamped(p, i, static_cast<std::uint64_t>(d));
    const int s = static_cast<int>(current.size());
    // One equation per basis element y of the current space; the coefficient
    // functions are F_p-linear there, so a plain kernel suffices.
    std::vector<FpVec> eqs;
    eqs.reserve(static_cast<std::size_t>(s));
    for (int j = 0; j < s; ++j) {
      FpVec row(static_cast<std::size_t>(s), 0);
      for (int k = 0; k < s; ++k) {
        FpVec prod = a.mul(current[k], current[j]);
        FpVec cp = fp_charpoly(a.left_regular(prod), p);
        row[k] = cp[coeff_index];
      }
      eqs.push_back(std::move(row));
    }
    std::vector<FpVec> ker = fp_nullspace(eqs, s, p);
    std::vector<FpVec> next;
    next.reserve(ker.size());
    for (const auto& t : ker) {
      FpVec v(static_cast<std::size_t>(d), 0);
      for (int k = 0; k < s; ++k) {
        if (t[k] == 0) continue;
        for (int idx = 0; idx < d; ++idx) v[idx] = (v[idx] + t[k] * current[k][idx]) % p;
      }
      next.push_back(std::move(v));
    }
    FpRref rr = rref_fp(std::move(next), p);
    current = std::move(rr.rows);
  }
  return make_subspace(p, d, std::move(current));
}

FpSubspace radical_bruteforce(const FpAlgebra& a, std::uint64_t max_enum) {
  const int d = a.dim();
  const std::uint64_t p = a.p();
  const std::uint64_t count = pow_clamped(p, d, max_enum);
  if (count > max_enum) {
    throw TooLargeError("radical_bruteforce: p^dim exceeds the enumeration bound");
  }
  const auto decode = [&](std::uint64_t code) {
    FpVec v(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      v[i] = code % p;
      code /= p;
    }
    return v;
  };
  const auto encode = [&](const FpVec& v) {
    std::uint64_t code = 0;
    for (int i = d - 1; i >= 0; --i) code = code * p + v[i];
    return code;
  };
  std::vector<bool> invertible(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    invertible[code] = a.is_invertible(decode(code));
  }
  std::vector<FpVec> members;
  for (std::uint64_t xcode = 0; xcode < count; ++xcode) {
    FpVec x = decode(xcode);
    // Right multiplication by x as a matrix, so each a*x costs d^2.
    std::vector<FpVec> rx(static_cast<std::size_t>(d), FpVec(static_cast<std::size_t>(d), 0));
    for (int j = 0; j < d; ++j) {
      FpVec col = a.mul(unit_vec(d, j), x);
      for (int k = 0; k < d; ++k) rx[k][j] = col[k];
    }
    bool quasi_regular = true;
    for (std::uint64_t acode = 0; acode < count && quasi_regular; ++acode) {
      FpVec av = decode(acode);
      FpVec z = a.identity();
      for (int k = 0; k < d; ++k) {
        FpScalar acc = 0;
        for (int j = 0; j < d; ++j) acc = (acc + rx[k][j] * av[j]) % p;
        z[k] = fp_sub(z[k], acc, p);
      }
      if (!invertible[encode(z)]) quasi_regular = false;
    }
    if (quasi_regular) members.push_back(std::move(x));
  }
  FpSpan span(p, d);
  for (const auto& v : members) span.add(v);
  std::uint64_t span_size = pow_clamped(p, span.dim(), max_enum + 1);
  if (span_size != members.size()) {
    throw InternalError("radical_bruteforce: quasi-regular set is not a subspace");
  }
  return FpSubspace{p, d, span.rows()};
}

bool is_semisimple(const FpAlgebra& a) { return radical(a).dim() == 0; }

namespace {

// Commutative subalgebra view: structure constants of the centre in its own
// echelon basis, plus conversion back to ambient coordinates.
struct CenterAlgebra {
  std::uint64_t p;
  int cdim;
  std::vector<FpVec> basis;  // rows in ambient coordinates
  std::vector<FpVec> cc;     // cc[i*cdim+j] = product coordinates, length cdim
  FpVec identity_c;

  FpVec mul(const FpVec& x, const FpVec& y) const {
    FpVec r(static_cast<std::size_t>(cdim), 0);
    for (int i = 0; i < cdim; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < cdim; ++j) {
        if (y[j] == 0) continue;
        FpScalar f = (x[i] * y[j]) % p;
        const FpVec& prod = cc[static_cast<std::size_t>(i) * cdim + j];
        for (int k = 0; k < cdim; ++k) r[k] = (r[k] + f * prod[k]) % p;
      }
    }
    return r;
  }

  FpVec pow(FpVec base, std::uint64_t e) const {
    FpVec r = identity_c;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  FpVec to_ambient(const FpVec& x, int ambient_dim) const {
    FpVec v(static_cast<std::size_t>(ambient_dim), 0);
    for (int i = 0; i < cdim; ++i) {
      if (x[i] == 0) continue;
      for (int t = 0; t < ambient_dim; ++t) v[t] = (v[t] + x[i] * basis[i][t]) % p;
    }
    return v;
  }
};

CenterAlgebra make_center_algebra(const FpAlgebra& a, const FpSubspace& z) {
  CenterAlgebra c;
  c.p = a.p();
  c.cdim = z.dim();
  c.basis = z.basis;
  FpCoordSpan span(a.p(), a.dim());
  for (const auto& row : z.basis) span.add(row);
  c.cc.resize(static_cast<std::size_t>(c.cdim) * c.cdim);
  for (int i = 0; i < c.cdim; ++i) {
    for (int j = 0; j < c.cdim; ++j) {
      auto coords = span.coordinates(a.mul(z.basis[i], z.basis[j]));
      if (!coords) throw InternalError("centre is not closed under multiplication");
      c.cc[static_cast<std::size_t>(i) * c.cdim + j] = *coords;
    }
  }
  auto idc = span.coordinates(a.identity());
  if (!idc) throw InternalError("identity is missing from the centre");
  c.identity_c = *idc;
  return c;
}

// Primitive idempotents of a commutative semisimple F_p-algebra, via the
// Frobenius-fixed subalgebra (isomorphic to F_p^r) split along eigenspaces
// of multiplication operators. Returns centre-coordinate vectors.
std::vector<FpVec> split_fixed_subalgebra(const CenterAlgebra& c) {
  const std::uint64_t p = c.p;
  const int cd = c.cdim;
  // Frobenius is F_p-linear on a commutative algebra in characteristic p.
  std::vector<FpVec> frob_eqs(static_cast<std::size_t>(cd), FpVec(static_cast<std::size_t>(cd), 0));
  for (int j = 0; j < cd; ++j) {
    FpVec img = c.pow(unit_vec(cd, j), p);
    for (int k = 0; k < cd; ++k) {
      FpScalar delta = (k == j) ? 1 : 0;
      frob_eqs[k][j] = fp_sub(img[k], delta, p);
    }
  }
  std::vector<FpVec> fixed = fp_nullspace(frob_eqs, cd, p);
  if (fixed.size() <= 1) return {c.identity_c};
  std::vector<std::vector<FpVec>> queue{fixed};
  std::vector<FpVec> lines;
  while (!queue.empty()) {
    std::vector<FpVec> w = std::move(queue.back());
    queue.pop_back();
    if (w.size() == 1) {
      lines.push_back(w[0]);
      continue;
    }
    const int s = static_cast<int>(w.size());
    FpCoordSpan wspan(p, cd);
    for (const auto& row : w) wspan.add(row);
    bool split = false;
    for (const auto& v : fixed) {
      // Multiplication by v preserves w (eigenspaces of commuting operators).
      std::vector<FpVec> mult(static_cast<std::size_t>(s), FpVec(static_cast<std::size_t>(s), 0));
      for (int t = 0; t < s; ++t) {
        auto coords = wspan.coordinates(c.mul(v, w[t]));
        if (!coords) throw InternalError("eigencomponent is not an ideal");
        for (int k = 0; k < s; ++k) mult[k][t] = (*coords)[k];
      }
      std::vector<std::vector<FpVec>> parts;
      for (std::uint64_t lam = 0; lam < p; ++lam) {
        std::vector<FpVec> shifted = mult;
        for (int t = 0; t < s; ++t) shifted[t][t] = fp_sub(shifted[t][t], lam, p);
        std::vector<FpVec> ker = fp_nullspace(shifted, s, p);
        if (ker.empty()) continue;
        std::vector<FpVec> part;
        for (const auto& t : ker) {
          FpVec vec(static_cast<std::size_t>(cd), 0);
          for (int idx = 0; idx < s; ++idx) {
            if (t[idx] == 0) continue;
            for (int q = 0; q < cd; ++q) vec[q] = (vec[q] + t[idx] * w[idx][q]) % p;
          }
          part.push_back(std::move(vec));
        }
        parts.push_back(std::move(part));
      }
      if (parts.size() >= 2) {
        for (auto& part : parts) queue.push_back(std::move(part));
        split = true;
        break;
      }
    }
    if (!split) throw InternalError("failed to split a semisimple commutative algebra");
  }
  std::vector<FpVec> idems;
  for (const auto& w : lines) {
    FpVec sq = c.mul(w, w);
    int lead = -1;
    for (int t = 0; t < cd; ++t) {
      if (w[t] != 0) {
        lead = t;
        break;
      }
    }
    if (lead < 0) throw InternalError("zero line in idempotent split");
    FpScalar mu = (sq[lead] * fp_inv(w[lead], p)) % p;
    if (mu == 0) throw InternalError("nilpotent line in a semisimple centre");
    FpScalar muinv = fp_inv(mu, p);
    FpVec e(static_cast<std::size_t>(cd), 0);
    for (int t = 0; t < cd; ++t) e[t] = (w[t] * muinv) % p;
    if (c.mul(e, e) != e) throw InternalError("idempotent normalisation failed");
    idems.push_back(std::move(e));
  }
  return idems;
}

}  // namespace

std::vector<FpVec> primitive_central_idempotents(const FpAlgebra& a, std::uint64_t enum_bound) {
  if (!is_semisimple(a)) {
    throw NotSemisimpleError("primitive central idempotents require a semisimple algebra");
  }
  const std::uint64_t p = a.p();
  const int d = a.dim();
  FpSubspace z = center(a);
  CenterAlgebra cz = make_center_algebra(a, z);
  std::vector<FpVec> prims;  // ambient coordinates
  if (pow_clamped(p, z.dim(), enum_bound) <= enum_bound) {
    // Enumerate every central element; keep the nonzero idempotents, then
    // the minimal ones in the order e <= f iff e*f = e.
    std::vector<FpVec> idems;
    FpVec t(static_cast<std::size_t>(z.dim()), 0);
    for (;;) {
      FpVec cand = cz.to_ambient(t, d);
      bool zero = std::all_of(cand.begin(), cand.end(), [](FpScalar x) { return x == 0; });
      if (!zero && a.mul(cand, cand) == cand) idems.push_back(cand);
      int pos = 0;
      while (pos < z.dim() && t[pos] + 1 == p) t[pos++] = 0;
      if (pos == z.dim()) break;
      ++t[pos];
    }
    for (const auto& e : idems) {
      bool primitive = true;
      for (const auto& f : idems) {
        if (f == e) continue;
        if (a.mul(e, f) == f) {
          primitive = false;
          break;
        }
      }
      if (primitive) prims.push_back(e);
    }
  } else {
    for (const auto& e : split_fixed_subalgebra(cz)) prims.push_back(cz.to_ambient(e, d));
  }
  std::sort(prims.begin(), prims.end());
  // Contract checks: orthogonal system of central idempotents summing to 1.
  FpVec sum(static_cast<std::size_t>(d), 0);
  for (std::size_t i = 0; i < prims.size(); ++i) {
    if (a.mul(prims[i], prims[i]) != prims[i]) throw InternalError("non-idempotent output");
    if (!z.contains(prims[i])) throw InternalError("non-central idempotent output");
    for (std::size_t j = i + 1; j < prims.size(); ++j) {
      FpVec prod = a.mul(prims[i], prims[j]);
      if (!std::all_of(prod.begin(), prod.end(), [](FpScalar x) { return x == 0; })) {
        throw InternalError("idempotents are not orthogonal");
      }
    }
    for (int k = 0; k < d; ++k) sum[k] = fp_add(sum[k], prims[i][k], p);
  }
  if (sum != a.identity()) throw InternalError("idempotents do not sum to the identity");
  return prims;
}

StructureReport wedderburn_components(const FpAlgebra& a) {
  StructureReport report;
  FpSubspace rad = radical(a);
  report.radical_dim = rad.dim();
  report.semisimple = rad.dim() == 0;
  report.simple = false;
  if (!report.semisimple) return report;
  std::vector<FpVec> prims = primitive_central_idempotents(a);
  FpSubspace z = center(a);
  int total = 0;
  for (const auto& e : prims) {
    FpSpan comp(a.p(), a.dim());
    for (int i = 0; i < a.dim(); ++i) {
      comp.add(a.mul(a.mul(e, unit_vec(a.dim(), i)), e));
    }
    FpSpan zcomp(a.p(), a.dim());
    for (const auto& zrow : z.basis) zcomp.add(a.mul(e, zrow));
    const int cdim = comp.dim();
    const int m = zcomp.dim();
    if (m <= 0 || cdim % m != 0) {
      throw InternalError("component dimension is not a multiple of its centre degree");
    }
    int l = 0;
    while ((l + 1) * (l + 1) <= cdim / m) ++l;
    if (l * l * m != cdim) {
      throw InternalError("component dimension is not of the form l^2 * m");
    }
    report.components.push_back(WedderburnComponent{cdim, m, l});
    total += cdim;
  }
  if (total != a.dim()) throw InternalError("component dimensions do not sum to dim");
  report.simple = prims.size() == 1;
  report.primitive_central_idempotents = std::move(prims);
  return report;
}

FpAlgebra quotient_algebra(const FpAlgebra& a, const FpSubspace& ideal) {
  const int d = a.dim();
  const std::uint64_t p = a.p();
  FpSpan ispan(p, d);
  for (const auto& row : ideal.basis) ispan.add(row);
  std::vector<bool> is_pivot(static_cast<std::size_t>(d), false);
  for (int c : ispan.pivots()) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<int> free_coords;
  for (int i = 0; i < d; ++i) {
    if (!is_pivot[static_cast<std::size_t>(i)]) free_coords.push_back(i);
  }
  const int q = static_cast<int>(free_coords.size());
  const auto project = [&](const FpVec& v) {
    FpVec reduced = ispan.reduce(v);
    FpVec r(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) r[i] = reduced[free_coords[i]];
    return r;
  };
  std::vector<FpScalar> sc(static_cast<std::size_t>(q) * q * q, 0);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      FpVec prod =
          project(a.mul(unit_vec(d, free_coords[i]), unit_vec(d, free_coords[j])));
      for (int k = 0; k < q; ++k) {
        sc[(static_cast<std::size_t>(i) * q + j) * q + k] = prod[k];
      }
    }
  }
  FpAlgebra out(p, q, std::move(sc), project(a.identity()));
  out.validate();
  return out;
}

}  // namespace semired
