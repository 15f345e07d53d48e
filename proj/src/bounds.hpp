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

#ifndef QMAT_BOUNDS_HPP_
#define QMAT_BOUNDS_HPP_

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "lattice.hpp"

namespace qmat {

using Real = boost::multiprecision::cpp_bin_float_50;

// log2(e) and log2(111/32), pinned to 40 significant digits.
const Real& Log2E();
const Real& Log2OneElevenOverThirtyTwo();

// Base-2 logarithm of a positive quantity too large to materialize.
class LogValue {
 public:
  LogValue() = default;
  explicit LogValue(Real log2) : log2_(std::move(log2)) {}

  const Real& log2() const { return log2_; }
  // log2 of (2^a + 2^b), computed without overflow.
  static LogValue Add(const LogValue& a, const LogValue& b);
  // Fixed-point decimal with `decimals` digits after the point.
  std::string Format(int decimals = 12) const;

  auto operator<=>(const LogValue& o) const {
    return log2_ < o.log2_ ? -1 : (log2_ > o.log2_ ? 1 : 0);
  }
  bool operator==(const LogValue& o) const { return log2_ == o.log2_; }

 private:
  Real log2_ = 0;
};

// Exponent q^((n-k)(k-1)) of the lower bound 2^{...} < N_q(k, n);
// needs n >= 4 and 2 <= k <= n/2.
BigInt LowerBoundNExponent(int n, int k, int q);
// The k = floor(n/2) case, bounding N_q(n); needs n >= 4.
BigInt LowerBoundNAllExponent(int n, int q);

// log2(q^{log_q n + n^2 + n log_q e} + 1); needs n >= 2.
LogValue UpperBoundRRank1(int n, int q);
// log2 q^{n^2k^2 - nk^3 + nk log_q e + nk log_q(111/32)}; 2 <= k <= n/2.
LogValue UpperBoundRRankK(int n, int k, int q);
// log2 q^{n^2/4 + log_q(e) n^2/2 + log_q(111/32) n^2/2}; needs n >= 4.
LogValue UpperBoundRUniform(int n, int q);
// max over 2 <= k <= n/2 of UpperBoundRRankK; needs n >= 4.
LogValue UpperBoundRUniformFromRankK(int n, int q);

struct BoundOptions {
  // Use the true maximum of the rank-k bound in place of the k-independent
  // exponent n^2/4 (which is smaller than the rank-k exponent at k = n/2).
  bool corrected_uniform = false;
  // Lower bound sums 2^{q^{(n-k)(k-1)}} over 2 <= k <= n/2.
  bool sum_over_k = false;
};

// log2 of 2 (n/2 * U + q^{log_q n + n^2 + n log_q e} + 2), U the uniform
// rank-k bound; needs n >= 4.
LogValue UpperBoundRAll(int n, int q, const BoundOptions& opts = {});

struct BoundRow {
  int n = 0;
  // Exponent of the k = floor(n/2) lower bound, exact.
  BigInt lower_exponent;
  // log2 of the lower bound is lower_exponent + lower_correction; the
  // correction is nonzero only with sum_over_k.
  Real lower_correction = 0;
  LogValue upper;
  // (log2 lower - log2 upper) * 10^12, rounded to nearest.
  BigInt gap_e12;

  std::string LowerString() const;
  std::string GapString() const;
};

// Rows n_from..n_to; needs 4 <= n_from <= n_to.
std::vector<BoundRow> AsymptoticTable(int q, int n_from, int n_to,
                                      const BoundOptions& opts = {});
// Smallest n whose gap is positive and from which the gap strictly increases
// through the end of the table.
std::optional<int> Crossover(const std::vector<BoundRow>& rows);

struct QBinomSandwich {
  BigInt lower;     // q^{(n-k)k}
  BigInt value;     // [n choose k]_q
  Rational upper;   // 111/32 q^{(n-k)k}
  bool Holds() const { return lower <= value && Rational(value) <= upper; }
};
QBinomSandwich QBinomSandwichOf(int n, int k, int q);

}  // namespace qmat

#endif  // QMAT_BOUNDS_HPP_
