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

#include "bounds.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"

namespace qmat {
namespace {

Real Log2(const Real& x) {
  static const Real ln2 = boost::multiprecision::log(Real(2));
  return boost::multiprecision::log(x) / ln2;
}

BigInt ScaleE12(const Real& x) {
  static const Real scale("1e12");
  return boost::multiprecision::round(x * scale).convert_to<BigInt>();
}

std::string FormatScaled(const BigInt& scaled, int decimals) {
  const bool negative = scaled < 0;
  const BigInt mag = negative ? BigInt(-scaled) : scaled;
  const BigInt unit = boost::multiprecision::pow(BigInt(10), decimals);
  std::string frac = BigInt(mag % unit).str();
  frac.insert(0, decimals - frac.size(), '0');
  std::string out = negative ? "-" : "";
  out += BigInt(mag / unit).str();
  if (decimals > 0) out += "." + frac;
  return out;
}

void RequireRankK(int n, int k) {
  Require(n >= 4 && k >= 2 && k <= n / 2, ErrorCode::kHypothesis,
          "bound needs n >= 4 and 2 <= k <= floor(n/2)");
}

}  // namespace

const Real& Log2E() {
  static const Real v("1.442695040888963407359924681001892137427");
  return v;
}

const Real& Log2OneElevenOverThirtyTwo() {
  static const Real v("1.794415866350105963311543121560992008521");
  return v;
}

LogValue LogValue::Add(const LogValue& a, const LogValue& b) {
  const Real& hi = a.log2_ > b.log2_ ? a.log2_ : b.log2_;
  const Real& lo = a.log2_ > b.log2_ ? b.log2_ : a.log2_;
  const Real diff = lo - hi;
  if (diff < -400) return LogValue(hi);
  return LogValue(hi + Log2(1 + boost::multiprecision::pow(Real(2), diff)));
}

std::string LogValue::Format(int decimals) const {
  const Real scale = boost::multiprecision::pow(Real(10), decimals);
  return FormatScaled(
      boost::multiprecision::round(log2_ * scale).convert_to<BigInt>(),
      decimals);
}

BigInt LowerBoundNExponent(int n, int k, int q) {
  RequireRankK(n, k);
  Require(q >= 2, ErrorCode::kInvalidArgument, "need q >= 2");
  return boost::multiprecision::pow(BigInt(q), (n - k) * (k - 1));
}

BigInt LowerBoundNAllExponent(int n, int q) {
  Require(n >= 4, ErrorCode::kHypothesis, "bound needs n >= 4");
  return LowerBoundNExponent(n, n / 2, q);
}

LogValue UpperBoundRRank1(int n, int q) {
  Require(n >= 2, ErrorCode::kHypothesis, "rank-1 bound needs n >= 2");
  const Real main = Log2(Real(n)) + Real(n) * n * Log2(Real(q)) +
                    Real(n) * Log2E();
  return LogValue::Add(LogValue(main), LogValue(0));
}

LogValue UpperBoundRRankK(int n, int k, int q) {
  RequireRankK(n, k);
  const Real nk = Real(n) * k;
  const Real poly = Real(n) * n * k * k - Real(n) * k * k * k;
  return LogValue(poly * Log2(Real(q)) + nk * Log2E() +
                  nk * Log2OneElevenOverThirtyTwo());
}

LogValue UpperBoundRUniform(int n, int q) {
  Require(n >= 4, ErrorCode::kHypothesis, "uniform bound needs n >= 4");
  const Real n2 = Real(n) * n;
  return LogValue(n2 / 4 * Log2(Real(q)) + n2 / 2 * Log2E() +
                  n2 / 2 * Log2OneElevenOverThirtyTwo());
}

LogValue UpperBoundRUniformFromRankK(int n, int q) {
  Require(n >= 4, ErrorCode::kHypothesis, "uniform bound needs n >= 4");
  LogValue best = UpperBoundRRankK(n, 2, q);
  for (int k = 3; k <= n / 2; ++k) best = std::max(best, UpperBoundRRankK(n, k, q));
  return best;
}

LogValue UpperBoundRAll(int n, int q, const BoundOptions& opts) {
  Require(n >= 4, ErrorCode::kHypothesis, "bound needs n >= 4");
  const LogValue uniform = opts.corrected_uniform
                               ? UpperBoundRUniformFromRankK(n, q)
                               : UpperBoundRUniform(n, q);
  const LogValue scaled(uniform.log2() + Log2(Real(n) / 2));
  const LogValue rank1(Log2(Real(n)) + Real(n) * n * Log2(Real(q)) +
                       Real(n) * Log2E());
  const LogValue inner = LogValue::Add(LogValue::Add(scaled, rank1), LogValue(1));
  return LogValue(inner.log2() + 1);
}

std::string BoundRow::LowerString() const {
  if (lower_correction == 0) return lower_exponent.str();
  return FormatScaled(lower_exponent * 1000000000000LL + ScaleE12(lower_correction),
                      12);
}

std::string BoundRow::GapString() const { return FormatScaled(gap_e12, 12); }

std::vector<BoundRow> AsymptoticTable(int q, int n_from, int n_to,
                                      const BoundOptions& opts) {
  Require(n_from >= 4 && n_from <= n_to, ErrorCode::kHypothesis,
          "table needs 4 <= n_from <= n_to");
  std::vector<BoundRow> rows;
  for (int n = n_from; n <= n_to; ++n) {
    BoundRow row;
    row.n = n;
    row.lower_exponent = LowerBoundNAllExponent(n, q);
    if (opts.sum_over_k) {
      // log2 sum_k 2^{e_k} = e_max + log2(1 + sum_k 2^{e_k - e_max}).
      Real acc = 1;
      for (int k = 2; k < n / 2; ++k) {
        const BigInt diff = LowerBoundNExponent(n, k, q) - row.lower_exponent;
        if (diff > -400) acc += boost::multiprecision::pow(Real(2), Real(diff));
      }
      row.lower_correction = Log2(acc);
    }
    row.upper = UpperBoundRAll(n, q, opts);
    row.gap_e12 = row.lower_exponent * 1000000000000LL +
                  ScaleE12(row.lower_correction) - ScaleE12(row.upper.log2());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<int> Crossover(const std::vector<BoundRow>& rows) {
  // Walk back from the end while the gap stays positive and increasing.
  if (rows.empty() || rows.back().gap_e12 <= 0) return std::nullopt;
  size_t i = rows.size() - 1;
  while (i > 0 && rows[i - 1].gap_e12 > 0 &&
         rows[i - 1].gap_e12 < rows[i].gap_e12)
    --i;
  return rows[i].n;
}

QBinomSandwich QBinomSandwichOf(int n, int k, int q) {
  Require(n >= 0 && k >= 0 && k <= n && q >= 2, ErrorCode::kInvalidArgument,
          "need 0 <= k <= n and q >= 2");
  QBinomSandwich s;
  s.lower = boost::multiprecision::pow(BigInt(q), (n - k) * k);
  s.value = GaussianBinomial(n, k, q);
  s.upper = Rational(s.lower * 111, 32);
  return s;
}

}  // namespace qmat
