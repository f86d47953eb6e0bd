#include "semired/fp.hpp"

#include <algorithm>

#include "semired/errors.hpp"

namespace semired {

FpScalar fp_inv(FpScalar a, std::uint64_t p) {
  if (a == 0) throw InternalError("fp_inv: zero is not invertible");
  // Extended Euclid on signed 128-bit to dodge negative wraparound.
  __int128 r0 = static_cast<__int128>(p), r1 = static_cast<__int128>(a);
  __int128 s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  __int128 inv = s0 % static_cast<__int128>(p);
  if (inv < 0) inv += static_cast<__int128>(p);
  return static_cast<FpScalar>(inv);
}

FpMat FpMat::identity(std::uint64_t p, int n) {
  FpMat m(p, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool FpMat::is_zero() const {
  return std::all_of(e.begin(), e.end(), [](FpScalar x) { return x == 0; });
}

FpMat fp_mat_mul(const FpMat& a, const FpMat& b) {
  if (a.p != b.p || a.n != b.n) throw InternalError("fp_mat_mul: shape/prime mismatch");
  FpMat c(a.p, a.n);
  for (int i = 0; i < a.n; ++i) {
    for (int k = 0; k < a.n; ++k) {
      FpScalar aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < a.n; ++j) {
        c.at(i, j) = (c.at(i, j) + aik * b.at(k, j)) % a.p;
      }
    }
  }
  return c;
}

FpMat fp_mat_add(const FpMat& a, const FpMat& b) {
  if (a.p != b.p || a.n != b.n) throw InternalError("fp_mat_add: shape/prime mismatch");
  FpMat c(a.p, a.n);
  for (std::size_t i = 0; i < a.e.size(); ++i) c.e[i] = (a.e[i] + b.e[i]) % a.p;
  return c;
}

FpVec fp_vectorize(const FpMat& m) { return m.e; }

FpMat fp_matrix_from_vec(std::uint64_t p, int n, const FpVec& v) {
  FpMat m(p, n);
  m.e = v;
  return m;
}

FpRref rref_fp(std::vector<FpVec> rows, std::uint64_t p) {
  FpRref out;
  if (rows.empty()) return out;
  const int width = static_cast<int>(rows[0].size());
  int r = 0;
  for (int col = 0; col < width && r < static_cast<int>(rows.size()); ++col) {
    int sel = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][col] != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    FpScalar inv = fp_inv(rows[r][col], p);
    for (int j = col; j < width; ++j) rows[r][j] = (rows[r][j] * inv) % p;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      FpScalar f = rows[i][col];
      for (int j = col; j < width; ++j) {
        rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
      }
    }
    out.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

std::vector<FpVec> fp_nullspace(const std::vector<FpVec>& equations, int unknowns,
                                std::uint64_t p) {
  FpRref rr = rref_fp(equations, p);
  std::vector<bool> is_pivot(unknowns, false);
  for (int c : rr.pivots) is_pivot[c] = true;
  std::vector<FpVec> basis;
  for (int f = 0; f < unknowns; ++f) {
    if (is_pivot[f]) continue;
    FpVec v(unknowns, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < rr.rows.size(); ++r) {
      v[rr.pivots[r]] = fp_neg(rr.rows[r][f], p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool FpSpan::add(const FpVec& v) {
  FpVec w = reduce(v);
  int col = -1;
  for (int j = 0; j < ambient_; ++j) {
    if (w[j] != 0) {
      col = j;
      break;
    }
  }
  if (col < 0) return false;
  FpScalar inv = fp_inv(w[col], p_);
  for (auto& x : w) x = (x * inv) % p_;
  // Keep reduced echelon: clear this column in the existing rows, then
  // insert at the position that keeps pivots increasing.
  for (auto& row : rows_) {
    FpScalar f = row[col];
    if (f == 0) continue;
    for (int j = 0; j < ambient_; ++j) row[j] = (row[j] + (p_ - f) * w[j]) % p_;
  }
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), col);
  auto idx = static_cast<std::size_t>(it - pivots_.begin());
  pivots_.insert(it, col);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(w));
  return true;
}

FpVec FpSpan::reduce(FpVec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    FpScalar f = v[pivots_[r]];
    if (f == 0) continue;
    const FpVec& row = rows_[r];
    for (int j = 0; j < ambient_; ++j) v[j] = (v[j] + (p_ - f) * row[j]) % p_;
  }
  return v;
}

bool FpSpan::contains(const FpVec& v) const {
  FpVec w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](FpScalar x) { return x == 0; });
}

bool FpCoordSpan::add(const FpVec& v) {
  FpVec w = v;
  FpVec c(static_cast<std::size_t>(added_) + 1, 0);
  c[static_cast<std::size_t>(added_)] = 1;
  ++added_;
  for (auto& row : coords_) row.push_back(0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    FpScalar f = w[pivots_[r]];
    if (f == 0) continue;
    for (int j = 0; j < ambient_; ++j) w[j] = (w[j] + (p_ - f) * rows_[r][j]) % p_;
    for (std::size_t j = 0; j < c.size(); ++j) {
      c[j] = (c[j] + (p_ - f) * coords_[r][j]) % p_;
    }
  }
  int col = -1;
  for (int j = 0; j < ambient_; ++j) {
    if (w[j] != 0) {
      col = j;
      break;
    }
  }
  if (col < 0) return false;
  FpScalar inv = fp_inv(w[col], p_);
  for (auto& x : w) x = (x * inv) % p_;
  for (auto& x : c) x = (x * inv) % p_;
  rows_.push_back(std::move(w));
  coords_.push_back(std::move(c));
  pivots_.push_back(col);
  return true;
}

std::optional<FpVec> FpCoordSpan::coordinates(const FpVec& v) const {
  FpVec w = v;
  FpVec c(static_cast<std::size_t>(added_), 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    FpScalar f = w[pivots_[r]];
    if (f == 0) continue;
    for (int j = 0; j < ambient_; ++j) w[j] = (w[j] + (p_ - f) * rows_[r][j]) % p_;
    for (std::size_t j = 0; j < c.size(); ++j) {
      c[j] = (c[j] + coords_[r][j] * f) % p_;
    }
  }
  for (FpScalar x : w) {
    if (x != 0) return std::nullopt;
  }
  return c;
}

}  // namespace semired
