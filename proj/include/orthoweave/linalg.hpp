#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "orthoweave/exactnum.hpp"

namespace orthoweave {

using QVector = std::vector<QuadExt>;

// Small dense row-major matrix over Q(√2).
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::size_t rows, std::size_t cols, std::vector<QuadExt> data);

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows);
  static QMatrix from_columns(const std::vector<QVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  QuadExt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const QuadExt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QMatrix transpose() const;
  QVector row(std::size_t r) const;
  QVector column(std::size_t c) const;

  friend QMatrix operator*(const QMatrix& x, const QMatrix& y);
  friend QVector operator*(const QMatrix& m, const QVector& v);
  friend QMatrix operator*(const QuadExt& s, const QMatrix& m);
  friend QMatrix operator+(const QMatrix& x, const QMatrix& y);
  friend QMatrix operator-(const QMatrix& x, const QMatrix& y);
  friend bool operator==(const QMatrix& x, const QMatrix& y) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<QuadExt> data_;
};

// Unique solution of a square system, or nullopt if singular.
std::optional<QMatrix> inverse(const QMatrix& m);
// Basis of {x : m x = 0}.
std::vector<QVector> nullspace(const QMatrix& m);

QuadExt dot(const QVector& u, const QVector& v);

}  // namespace orthoweave
