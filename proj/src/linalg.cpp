#include "orthoweave/linalg.hpp"

#include <utility>

#include "orthoweave/errors.hpp"

namespace orthoweave {

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<QuadExt> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw DomainError("matrix data has wrong size");
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  if (rows.empty()) return {};
  QMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw DomainError("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols) { return from_rows(cols).transpose(); }

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QVector QMatrix::row(std::size_t r) const {
  return QVector(data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_));
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
  if (x.cols_ != y.rows_) throw DomainError("matrix dimension mismatch");
  QMatrix p(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const QuadExt& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j)
        if (!y(k, j).is_zero()) p(i, j) += xik * y(k, j);
    }
  return p;
}

QVector operator*(const QMatrix& m, const QVector& v) {
  if (m.cols_ != v.size()) throw DomainError("matrix-vector dimension mismatch");
  QVector out(m.rows_);
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t k = 0; k < m.cols_; ++k)
      if (!m(i, k).is_zero() && !v[k].is_zero()) out[i] += m(i, k) * v[k];
  return out;
}

QMatrix operator*(const QuadExt& s, const QMatrix& m) {
  QMatrix out = m;
  for (auto& e : out.data_) e *= s;
  return out;
}

QMatrix operator+(const QMatrix& x, const QMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DomainError("matrix dimension mismatch");
  QMatrix out = x;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += y.data_[i];
  return out;
}

QMatrix operator-(const QMatrix& x, const QMatrix& y) { return x + QuadExt(-1) * y; }

QuadExt dot(const QVector& u, const QVector& v) {
  if (u.size() != v.size()) throw DomainError("vector dimension mismatch");
  QuadExt s;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    QuadExt inv = m(r, c).inverse();
    for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      QuadExt f = m(i, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<QMatrix> inverse(const QMatrix& m) {
  std::size_t n = m.rows();
  if (n != m.cols()) throw DomainError("inverse of non-square matrix");
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<QVector> nullspace(const QMatrix& m) {
  QMatrix r = m;
  auto piv = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace orthoweave
