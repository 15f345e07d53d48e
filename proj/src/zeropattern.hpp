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

#ifndef QMAT_ZEROPATTERN_HPP_
#define QMAT_ZEROPATTERN_HPP_

#include <span>
#include <string>
#include <vector>

#include "qmatroid.hpp"

namespace qmat {

// A string over {'0', '*'}.
class ZeroPattern {
 public:
  explicit ZeroPattern(std::string symbols);

  const std::string& symbols() const { return symbols_; }
  int size() const { return static_cast<int>(symbols_.size()); }
  bool IsZero(int i) const { return symbols_[i] == '0'; }

  auto operator<=>(const ZeroPattern&) const = default;

 private:
  std::string symbols_;
};

// The determinant system f_U(x) = det(G Y_U^T) for a generic k x n matrix G,
// one polynomial per k-subspace U of F_q^n in canonical order. The
// polynomials are never expanded; they are evaluated at points only.
class DetSystem {
 public:
  // Needs q prime and 1 <= k <= n.
  DetSystem(int q, int n, int k);

  int q() const { return q_; }
  int n() const { return n_; }
  int k() const { return k_; }
  // Number of polynomials, [n choose k]_q.
  int size() const { return size_; }
  // Canonical k x n basis of the i-th subspace, row-major.
  std::span<const Elem> basis(int i) const {
    const size_t w = static_cast<size_t>(k_) * n_;
    return {bases_.data() + i * w, w};
  }

 private:
  int q_;
  int n_;
  int k_;
  int size_;
  std::vector<Elem> bases_;
};

// u (length k n, over `ext` of characteristic q) is read row-major as G;
// entry i is '0' iff det(G Y_i^T) = 0.
ZeroPattern EvaluatePattern(const DetSystem& sys, const Field& ext,
                            std::span<const Elem> u);

struct SweepOutcome {
  long long points = 0;
  // Every distinct pattern attained over F_{q^m}^{kn}, sorted.
  std::vector<ZeroPattern> patterns;
  // Those attained at some u whose matrix G has full rank k, sorted.
  std::vector<ZeroPattern> full_rank_patterns;
};

// Exhaustive sweep over F_{q^m}^{kn}; refuses (kCeiling) above 10^8 points.
SweepOutcome SweepPatterns(const DetSystem& sys, int m, int threads = 1);

// '0' at each non-basis k-subspace, '*' at each basis. Rank 0 tables are
// rejected with kDegenerate.
ZeroPattern PatternOfQMatroid(const RankTable& t);

BigInt Binomial(long long n, long long k);
// (M d choose s); needs M >= s >= 0 and d >= 1.
BigInt ZeroPatternBound(long long polys, long long degree, long long vars);
// sum_{j=0}^{s} (M choose j); needs M >= s >= 0.
BigInt ZeroPatternBoundLinear(long long polys, long long vars);

}  // namespace qmat

#endif  // QMAT_ZEROPATTERN_HPP_
