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

#ifndef QMAT_MATRIX_HPP_
#define QMAT_MATRIX_HPP_

#include <span>
#include <vector>

#include "field.hpp"

namespace qmat {

// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, int rows, int cols);
  Matrix(FieldPtr field, int rows, int cols, std::vector<Elem> data);

  static Matrix Identity(FieldPtr field, int k);

  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Elem operator()(int r, int c) const { return data_[r * cols_ + c]; }
  Elem& operator()(int r, int c) { return data_[r * cols_ + c]; }
  std::span<const Elem> row(int r) const {
    return {data_.data() + r * cols_, static_cast<size_t>(cols_)};
  }
  std::span<Elem> row(int r) {
    return {data_.data() + r * cols_, static_cast<size_t>(cols_)};
  }
  const std::vector<Elem>& data() const { return data_; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_ &&
           (field_ == o.field_ || (field_ && o.field_ && *field_ == *o.field_));
  }

 private:
  FieldPtr field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> data_;
};

struct Echelon {
  Matrix reduced;
  std::vector<int> pivots;
};

// Gaussian elimination in place on a row-major buffer. With `reduce` the
// result is the reduced row echelon form; otherwise only row echelon form.
// Returns the rank; pivot columns are appended to `pivots` when given.
int EliminateInPlace(const Field& f, std::span<Elem> data, int rows, int cols,
                     bool reduce, std::vector<int>* pivots = nullptr);

Echelon Rref(const Matrix& m);
int Rank(const Matrix& m);
// Rows form the canonical (RREF) basis of {x : m x = 0}.
Matrix KernelBasis(const Matrix& m);
Elem Det(const Matrix& m);
Matrix Multiply(const Matrix& a, const Matrix& b);
Matrix Transpose(const Matrix& m);
Matrix StackRows(const Matrix& top, const Matrix& bottom);

}  // namespace qmat

#endif  // QMAT_MATRIX_HPP_
