// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "error.hpp"

namespace qmat {

Matrix::Matrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)),
      rows_(rows),
      cols_(cols),
      data_(static_cast<size_t>(rows) * cols, 0) {
  Require(rows >= 0 && cols >= 0, ErrorCode::kShape, "negative dimension");
}

Matrix::Matrix(FieldPtr field, int rows, int cols, std::vector<Elem> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
  Require(rows >= 0 && cols >= 0 &&
              data_.size() == static_cast<size_t>(rows) * cols,
          ErrorCode::kShape, "entry count does not match dimensions");
  for (Elem v : data_)
    Require(v < field_->size(), ErrorCode::kInvalidArgument,
            "entry outside the field");
}

Matrix Matrix::Identity(FieldPtr field, int k) {
  Matrix m(std::move(field), k, k);
  for (int i = 0; i < k; ++i) m(i, i) = 1;
  return m;
}

int EliminateInPlace(const Field& f, std::span<Elem> data, int rows, int cols,
                     bool reduce, std::vector<int>* pivots) {
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (data[r * cols + c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    Elem* prow = data.data() + rank * cols;
    if (pivot != rank) {
      std::swap_ranges(prow, prow + cols, data.data() + pivot * cols);
    }
    const Elem scale = f.inv(prow[c]);
    if (scale != 1) {
      for (int j = c; j < cols; ++j) prow[j] = f.mul(prow[j], scale);
    }
    for (int r = reduce ? 0 : rank + 1; r < rows; ++r) {
      if (r == rank) continue;
      Elem* row = data.data() + r * cols;
      const Elem factor = row[c];
      if (factor == 0) continue;
      const Elem nf = f.neg(factor);
      for (int j = c; j < cols; ++j) {
        if (prow[j] != 0) row[j] = f.add(row[j], f.mul(nf, prow[j]));
      }
    }
    if (pivots) pivots->push_back(c);
    ++rank;
  }
  return rank;
}

Echelon Rref(const Matrix& m) {
  std::vector<Elem> data = m.data();
  std::vector<int> pivots;
  EliminateInPlace(m.field(), data, m.rows(), m.cols(), true, &pivots);
  return {Matrix(m.field_ptr(), m.rows(), m.cols(), std::move(data)),
          std::move(pivots)};
}

int Rank(const Matrix& m) {
  std::vector<Elem> data = m.data();
  return EliminateInPlace(m.field(), data, m.rows(), m.cols(), false);
}

Matrix KernelBasis(const Matrix& m) {
  const Field& f = m.field();
  Echelon e = Rref(m);
  const int n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix k(m.field_ptr(), static_cast<int>(free_cols.size()), n);
  for (size_t i = 0; i < free_cols.size(); ++i) {
    const int fc = free_cols[i];
    k(static_cast<int>(i), fc) = 1;
    for (size_t r = 0; r < e.pivots.size(); ++r) {
      k(static_cast<int>(i), e.pivots[r]) =
          f.neg(e.reduced(static_cast<int>(r), fc));
    }
  }
  return Rref(k).reduced;
}

Elem Det(const Matrix& m) {
  Require(m.rows() == m.cols(), ErrorCode::kShape,
          "determinant needs a square matrix");
  const Field& f = m.field();
  const int n = m.rows();
  std::vector<Elem> a = m.data();
  Elem det = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r) {
      if (a[r * n + c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != c) {
      std::swap_ranges(a.begin() + c * n, a.begin() + (c + 1) * n,
                       a.begin() + pivot * n);
      det = f.neg(det);
    }
    const Elem pv = a[c * n + c];
    det = f.mul(det, pv);
    const Elem pinv = f.inv(pv);
    for (int r = c + 1; r < n; ++r) {
      const Elem factor = f.mul(a[r * n + c], pinv);
      if (factor == 0) continue;
      for (int j = c; j < n; ++j)
        a[r * n + j] = f.sub(a[r * n + j], f.mul(factor, a[c * n + j]));
    }
  }
  return det;
}

Matrix Multiply(const Matrix& a, const Matrix& b) {
  Require(a.cols() == b.rows(), ErrorCode::kShape,
          "cannot multiply " + std::to_string(a.rows()) + "x" +
              std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
              "x" + std::to_string(b.cols()));
  Require(a.field() == b.field(), ErrorCode::kShape, "field mismatch");
  const Field& f = a.field();
  Matrix out(a.field_ptr(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int l = 0; l < a.cols(); ++l) {
      const Elem x = a(i, l);
      if (x == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        out(i, j) = f.add(out(i, j), f.mul(x, b(l, j)));
    }
  }
  return out;
}

Matrix Transpose(const Matrix& m) {
  Matrix out(m.field_ptr(), m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

Matrix StackRows(const Matrix& top, const Matrix& bottom) {
  Require(top.cols() == bottom.cols(), ErrorCode::kShape,
          "column count mismatch");
  std::vector<Elem> data = top.data();
  data.insert(data.end(), bottom.data().begin(), bottom.data().end());
  return Matrix(top.field_ptr(), top.rows() + bottom.rows(), top.cols(),
                std::move(data));
}

}  // namespace qmat
