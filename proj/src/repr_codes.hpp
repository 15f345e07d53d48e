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

#ifndef QMAT_REPR_CODES_HPP_
#define QMAT_REPR_CODES_HPP_

#include <optional>
#include <random>
#include <span>

#include "qmatroid.hpp"

namespace qmat {

// Full-row-rank k x n matrix over F_{q^m} with q prime; the ground field is
// the prime field of the matrix's field.
class GeneratorMatrix {
 public:
  // Throws kInvalidArgument if k == 0 or the rows are dependent.
  explicit GeneratorMatrix(Matrix m);

  const Matrix& matrix() const { return m_; }
  int k() const { return m_.rows(); }
  int n() const { return m_.cols(); }
  int q() const { return m_.field().characteristic(); }
  int extension_degree() const { return m_.field().degree(); }

 private:
  Matrix m_;
};

// F_{q^m}-linear code held by the RREF of a spanning matrix. Dimension 0
// (the zero code) is allowed.
class RankMetricCode {
 public:
  explicit RankMetricCode(const Matrix& spanning_rows);
  explicit RankMetricCode(const GeneratorMatrix& g)
      : RankMetricCode(g.matrix()) {}

  const Matrix& generator() const { return generator_; }
  int k() const { return generator_.rows(); }
  int n() const { return generator_.cols(); }
  int q() const { return generator_.field().characteristic(); }
  int extension_degree() const { return generator_.field().degree(); }

  bool operator==(const RankMetricCode& o) const {
    return generator_ == o.generator_;
  }

 private:
  Matrix generator_;
};

// rho(V) = rank over F_{q^m} of G Y_V^T, with Y_V the canonical basis of V
// read as prime-field constants.
RankTable QMatroidFromGenerator(const GeneratorMatrix& g);
// Same for any code; the zero code gives U_{0,n}.
RankTable QMatroidOfCode(const RankMetricCode& c);

// F_q-dimension of the span of the coordinates of v in `ext`.
int RankWeight(const Field& ext, std::span<const Elem> v);

// Exact minimum rank weight over all nonzero codewords. Refuses (kCeiling)
// above 10^7 codewords; the zero code has no distance (kUndefinedDistance).
int MinRankDistance(const RankMetricCode& c);
// k == n - d + 1.
bool IsMrd(const RankMetricCode& c);

// Orthogonal complement under the standard dot product.
RankMetricCode DualCode(const RankMetricCode& c);

// Uniformly random full-rank k x n generator over F_{q^m}.
GeneratorMatrix RandomGenerator(int q, int m, int n, int k,
                                std::mt19937_64& rng);

struct RepresentationSearch {
  bool found = false;
  int m = 0;
  // k x n over F_{q^m}; 0 x n over F_q for the rank-0 q-matroid.
  std::optional<Matrix> generator;
};

// Walks m = 1..m_max and, for each, the k-subspaces of F_{q^m}^n in
// canonical order (only the row space matters). A candidate is rejected on
// the first subspace whose rank differs from `t`, trying k-dimensional
// non-bases, then bases, then the rest. Returns the first witness. Not
// finding one only means no representation with m <= m_max exists.
// Refuses with kCeiling when a Grassmannian exceeds 10^7 members.
RepresentationSearch SearchRepresentation(const RankTable& t, int m_max,
                                          int threads = 1);

}  // namespace qmat

#endif  // QMAT_REPR_CODES_HPP_
