#include "hbm/linalg.hpp"

#include "hbm/error.hpp"

#include <cassert>

namespace hbm {

bool is_zero(const RatVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

RatVector zero_vector(std::size_t n) { return RatVector(n, Rational(0)); }

RatVector unit_vector(std::size_t n, std::size_t k) {
  RatVector v = zero_vector(n);
  v.at(k) = 1;
  return v;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  assert(a.size() == b.size());
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  assert(a.size() == b.size());
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVector operator*(const Rational& s, const RatVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    assert(rows[r].size() == cols);
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

RatMatrix RatMatrix::from_columns(std::size_t rows, const std::vector<RatVector>& cols) {
  RatMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    assert(cols[c].size() == rows);
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, cols[c][r]);
  }
  return m;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (const auto& [key, value] : entries_)
    if (at(key.first, key.second) != value) return false;
  return true;
}

Rational RatMatrix::at(std::size_t r, std::size_t c) const {
  auto it = entries_.find({c, r});
  return it == entries_.end() ? Rational(0) : it->second;
}

void RatMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  assert(r < rows_ && c < cols_);
  if (value == 0)
    entries_.erase({c, r});
  else
    entries_[{c, r}] = value;
}

void RatMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
  if (value == 0) return;
  assert(r < rows_ && c < cols_);
  auto [it, inserted] = entries_.try_emplace({c, r}, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector v = zero_vector(rows_);
  for_each_in_column(c, [&](std::size_t r, const Rational& x) { v[r] = x; });
  return v;
}

std::vector<RatVector> RatMatrix::to_dense() const {
  std::vector<RatVector> out(rows_, zero_vector(cols_));
  for (const auto& [key, value] : entries_) out[key.second][key.first] = value;
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (const auto& [key, value] : entries_) t.entries_.emplace(std::pair{key.second, key.first}, value);
  return t;
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
  RatMatrix b(nr, nc);
  for (std::size_t c = 0; c < nc; ++c)
    for_each_in_column(c0 + c, [&](std::size_t r, const Rational& x) {
      if (r >= r0 && r < r0 + nr) b.entries_.emplace(std::pair{c, r - r0}, x);
    });
  return b;
}

RatVector RatMatrix::operator*(const RatVector& v) const {
  assert(v.size() == cols_);
  RatVector out = zero_vector(rows_);
  for (const auto& [key, value] : entries_)
    if (v[key.first] != 0) out[key.second] += value * v[key.first];
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  assert(a.cols_ == b.rows_);
  RatMatrix out(a.rows_, b.cols_);
  for (const auto& [key, bv] : b.entries_) {
    const std::size_t col = key.first;
    a.for_each_in_column(key.second, [&](std::size_t r, const Rational& av) { out.add(r, col, av * bv); });
  }
  return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
  RatMatrix out = a;
  for (const auto& [key, value] : b.entries_) out.add(key.second, key.first, value);
  return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
  RatMatrix out = a;
  for (const auto& [key, value] : b.entries_) out.add(key.second, key.first, -value);
  return out;
}

RatMatrix operator*(const Rational& s, const RatMatrix& m) {
  RatMatrix out(m.rows_, m.cols_);
  if (s == 0) return out;
  for (const auto& [key, value] : m.entries_) out.entries_.emplace(key, s * value);
  return out;
}

namespace {

struct Echelon {
  std::vector<RatVector> rows;       // reduced rows, pivot entries 1
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

Echelon reduce(std::vector<RatVector> a, std::size_t cols) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    const Rational inv = 1 / a[row][c];
    for (std::size_t k = c; k < cols; ++k) a[row][k] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = c; k < cols; ++k)
        if (a[row][k] != 0) a[r][k] -= f * a[row][k];
    }
    e.pivots.push_back(c);
    ++row;
  }
  a.resize(row);
  e.rows = std::move(a);
  return e;
}

}  // namespace

RankKernelImage rank_kernel_image(const RatMatrix& m) {
  const Echelon e = reduce(m.to_dense(), m.cols());
  RankKernelImage out;
  out.rank = e.pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector k = zero_vector(m.cols());
    k[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) k[e.pivots[i]] = -e.rows[i][f];
    out.kernel_basis.push_back(std::move(k));
  }
  for (auto p : e.pivots) out.image_basis.push_back(m.column(p));
  return out;
}

std::size_t rank(const RatMatrix& m) { return reduce(m.to_dense(), m.cols()).pivots.size(); }

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  assert(b.size() == m.rows());
  std::vector<RatVector> aug = m.to_dense();
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  const Echelon e = reduce(std::move(aug), m.cols() + 1);
  RatVector x = zero_vector(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][m.cols()];
  }
  return x;
}

void require_positive_definite(const RatMatrix& inner) {
  if (!inner.is_symmetric()) throw Error(ErrorKind::InnerNotPositiveDefinite, "inner product matrix is not symmetric");
  std::vector<RatVector> a = inner.to_dense();
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] <= 0)
      throw Error(ErrorKind::InnerNotPositiveDefinite, "pivot " + std::to_string(k) + " is " + to_string(a[k][k]));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::InvalidArgument, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<RatVector> aug = m.to_dense();
  for (std::size_t r = 0; r < n; ++r) {
    aug[r].resize(2 * n, Rational(0));
    aug[r][n + r] = 1;
  }
  const Echelon e = reduce(std::move(aug), 2 * n);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw Error(ErrorKind::InvalidArgument, "matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.set(r, c, e.rows[r][n + c]);
  return inv;
}

Rational pairing(const RatVector& u, const RatMatrix& inner, const RatVector& v) {
  const RatVector iv = inner * v;
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * iv[i];
  return s;
}

RatMatrix orthogonal_projector(const std::vector<RatVector>& basis, const RatMatrix& inner, std::size_t dim) {
  require_positive_definite(inner);
  if (basis.empty()) return RatMatrix(dim, dim);
  // P = S (S^T A S)^{-1} S^T A
  const RatMatrix s = RatMatrix::from_columns(dim, basis);
  const RatMatrix st_a = s.transpose() * inner;
  return s * inverse(st_a * s) * st_a;
}

RatVector orthogonal_project(const std::vector<RatVector>& basis, const RatMatrix& inner, const RatVector& v) {
  return orthogonal_projector(basis, inner, v.size()) * v;
}

}  // namespace hbm
