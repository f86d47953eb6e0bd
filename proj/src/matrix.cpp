#include "semired/matrix.hpp"

#include <algorithm>
#include <string>

#include "semired/errors.hpp"

namespace semired {

RatMat RatMat::identity(int n) {
  RatMat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::unit(int n, int i, int j) {
  RatMat m(n);
  m.at(i, j) = 1;
  return m;
}

RatMat RatMat::diagonal(const std::vector<Rat>& d) {
  RatMat m(static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

bool RatMat::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rat& x) { return x == 0; });
}

Rat RatMat::trace() const {
  Rat t;
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

RatMat RatMat::operator+(const RatMat& o) const {
  if (n_ != o.n_) throw InternalError("RatMat: dimension mismatch");
  RatMat r(n_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
  if (n_ != o.n_) throw InternalError("RatMat: dimension mismatch");
  RatMat r(n_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (n_ != o.n_) throw InternalError("RatMat: dimension mismatch");
  RatMat r(n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n_; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  }
  return r;
}

RatMat RatMat::operator-() const {
  RatMat r(n_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
  return r;
}

RatMat scale(const Rat& c, const RatMat& m) {
  RatMat r(m.n());
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) r.at(i, j) = c * m.at(i, j);
  }
  return r;
}

long min_valuation(const RatMat& m, std::uint64_t p) {
  long best = kValInfinity;
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) {
      long v = val_p(m.at(i, j), p);
      if (v < best) best = v;
    }
  }
  return best;
}

bool is_p_integral(const RatMat& m, std::uint64_t p) { return min_valuation(m, p) >= 0; }

FpMat reduce_matrix(const RatMat& m, std::uint64_t p) {
  FpMat r(p, m.n());
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) {
      if (val_p(m.at(i, j), p) < 0) {
        throw NotIntegralError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                               ") has negative p-adic valuation");
      }
      r.at(i, j) = reduce_mod_p(m.at(i, j), p);
    }
  }
  return r;
}

RatMat rat_inverse(const RatMat& m) {
  const int n = m.n();
  // [m | I] -> [I | m^-1]
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int sel = -1;
    for (int i = col; i < n; ++i) {
      if (a[i][col] != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) throw InputError("matrix is singular");
    std::swap(a[col], a[sel]);
    Rat inv = Rat(1) / a[col][col];
    for (int j = 0; j < 2 * n; ++j) a[col][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  RatMat r(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) r.at(i, j) = a[i][n + j];
  }
  return r;
}

std::vector<Rat> rat_vectorize(const RatMat& m) {
  std::vector<Rat> v;
  v.reserve(static_cast<std::size_t>(m.n()) * m.n());
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) v.push_back(m.at(i, j));
  }
  return v;
}

RatMat rat_matrix_from_vector(int n, const std::vector<Rat>& v) {
  RatMat m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.at(i, j) = v[static_cast<std::size_t>(i) * n + j];
  }
  return m;
}

RatRref rat_rref(std::vector<std::vector<Rat>> rows) {
  RatRref out;
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
    Rat inv = Rat(1) / rows[r][col];
    for (int j = col; j < width; ++j) rows[r][j] *= inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Rat f = rows[i][col];
      for (int j = col; j < width; ++j) rows[i][j] -= f * rows[r][j];
    }
    out.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

std::vector<std::vector<Rat>> rat_nullspace(const std::vector<std::vector<Rat>>& rows,
                                            int unknowns) {
  RatRref rr = rat_rref(rows);
  std::vector<bool> is_pivot(unknowns, false);
  for (int c : rr.pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int f = 0; f < unknowns; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(unknowns);
    v[f] = 1;
    for (std::size_t r = 0; r < rr.rows.size(); ++r) v[rr.pivots[r]] = -rr.rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool RatCoordSolver::add(const std::vector<Rat>& v) {
  std::vector<Rat> w = v;
  std::vector<Rat> c(static_cast<std::size_t>(added_) + 1);
  c[static_cast<std::size_t>(added_)] = 1;
  ++added_;
  for (auto& row : coords_) row.emplace_back();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat& f = w[pivots_[r]];
    if (f == 0) continue;
    Rat ff = f;
    for (int j = 0; j < ambient_; ++j) w[j] -= ff * rows_[r][j];
    for (std::size_t j = 0; j < c.size(); ++j) c[j] -= ff * coords_[r][j];
  }
  int col = -1;
  for (int j = 0; j < ambient_; ++j) {
    if (w[j] != 0) {
      col = j;
      break;
    }
  }
  if (col < 0) return false;
  Rat inv = Rat(1) / w[col];
  for (auto& x : w) x *= inv;
  for (auto& x : c) x *= inv;
  rows_.push_back(std::move(w));
  coords_.push_back(std::move(c));
  pivots_.push_back(col);
  return true;
}

std::optional<std::vector<Rat>> RatCoordSolver::coordinates(const std::vector<Rat>& v) const {
  std::vector<Rat> w = v;
  std::vector<Rat> c(static_cast<std::size_t>(added_));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat f = w[pivots_[r]];
    if (f == 0) continue;
    for (int j = 0; j < ambient_; ++j) w[j] -= f * rows_[r][j];
    for (std::size_t j = 0; j < c.size(); ++j) c[j] += f * coords_[r][j];
  }
  for (const Rat& x : w) {
    if (x != 0) return std::nullopt;
  }
  return c;
}

}  // namespace semired
