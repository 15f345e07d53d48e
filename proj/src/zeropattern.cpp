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

#include "zeropattern.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>
#include <utility>

#include "error.hpp"

namespace qmat {
namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  size_t operator()(const Bits& b) const {
    size_t h = b.size();
    for (std::uint64_t w : b) h = (h * 0x9e3779b97f4a7c15ull) ^ w;
    return h;
  }
};

std::string ToSymbols(const Bits& bits, int size) {
  std::string s(size, '0');
  for (int i = 0; i < size; ++i)
    if (bits[i / 64] >> (i % 64) & 1) s[i] = '*';
  return s;
}

// Nonzero-determinant flags of G Y_i^T for every i, packed into `bits`.
void EvaluateBits(const DetSystem& sys, const Field& ext, const Elem* g,
                  std::vector<Elem>& scratch, Bits& bits) {
  const int k = sys.k(), n = sys.n();
  std::fill(bits.begin(), bits.end(), 0);
  for (int idx = 0; idx < sys.size(); ++idx) {
    const Elem* y = sys.basis(idx).data();
    scratch.assign(static_cast<size_t>(k) * k, 0);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        Elem acc = 0;
        for (int c = 0; c < n; ++c)
          if (g[i * n + c] != 0 && y[j * n + c] != 0)
            acc = ext.add(acc, ext.mul(g[i * n + c], y[j * n + c]));
        scratch[i * k + j] = acc;
      }
    }
    // det != 0 iff the square matrix has full rank.
    if (EliminateInPlace(ext, scratch, k, k, false) == k)
      bits[idx / 64] |= std::uint64_t{1} << (idx % 64);
  }
}

}  // namespace

ZeroPattern::ZeroPattern(std::string symbols) : symbols_(std::move(symbols)) {
  Require(symbols_.find_first_not_of("0*") == std::string::npos,
          ErrorCode::kParse, "zero pattern alphabet is {0, *}");
}

DetSystem::DetSystem(int q, int n, int k) : q_(q), n_(n), k_(k) {
  Require(IsPrime(q), ErrorCode::kInvalidArgument,
          "determinant systems need a prime q");
  Require(k >= 1 && k <= n, ErrorCode::kInvalidArgument, "need 1 <= k <= n");
  bases_ = GrassmannianFlat(*Field::Make(q), n, k);
  size_ = static_cast<int>(bases_.size() / (static_cast<size_t>(k) * n));
}

ZeroPattern EvaluatePattern(const DetSystem& sys, const Field& ext,
                            std::span<const Elem> u) {
  Require(static_cast<int>(u.size()) == sys.k() * sys.n(), ErrorCode::kShape,
          "point must have k * n coordinates");
  Require(ext.characteristic() == sys.q(), ErrorCode::kInvalidArgument,
          "point field has the wrong characteristic");
  std::vector<Elem> scratch;
  Bits bits((sys.size() + 63) / 64);
  EvaluateBits(sys, ext, u.data(), scratch, bits);
  return ZeroPattern(ToSymbols(bits, sys.size()));
}

SweepOutcome SweepPatterns(const DetSystem& sys, int m, int threads) {
  FieldPtr ext = Field::Make(sys.q(), m);
  const int vars = sys.k() * sys.n();
  double points = 1;
  for (int i = 0; i < vars; ++i) points *= ext->size();
  Require(points <= 1e8, ErrorCode::kCeiling,
          "sweep exceeds 10^8 evaluation points");
  const long long total = static_cast<long long>(points);
  threads = std::max(1, threads);

  std::unordered_set<Bits, BitsHash> all, full;
  std::mutex mu;
  auto work = [&](long long begin, long long end) {
    std::unordered_set<Bits, BitsHash> local_all, local_full;
    std::vector<Elem> u(vars), scratch, gcopy;
    Bits bits((sys.size() + 63) / 64);
    long long t = begin;
    for (int i = 0; i < vars; ++i) {
      u[i] = static_cast<Elem>(t % ext->size());
      t /= ext->size();
    }
    for (long long p = begin; p < end; ++p) {
      EvaluateBits(sys, *ext, u.data(), scratch, bits);
      gcopy = u;
      if (EliminateInPlace(*ext, gcopy, sys.k(), sys.n(), false) == sys.k())
        local_full.insert(bits);
      local_all.insert(bits);
      for (int i = 0; i < vars; ++i) {
        if (++u[i] < ext->size()) break;
        u[i] = 0;
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    all.insert(local_all.begin(), local_all.end());
    full.insert(local_full.begin(), local_full.end());
  };
  if (threads == 1) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    const long long chunk = (total + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
      const long long b = std::min(total, w * chunk);
      const long long e = std::min(total, b + chunk);
      pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
  }

  SweepOutcome out;
  out.points = total;
  for (const Bits& b : all) out.patterns.emplace_back(ToSymbols(b, sys.size()));
  for (const Bits& b : full)
    out.full_rank_patterns.emplace_back(ToSymbols(b, sys.size()));
  std::sort(out.patterns.begin(), out.patterns.end());
  std::sort(out.full_rank_patterns.begin(), out.full_rank_patterns.end());
  return out;
}

ZeroPattern PatternOfQMatroid(const RankTable& t) {
  const int k = t.rank();
  Require(k >= 1, ErrorCode::kDegenerate,
          "rank 0 q-matroid: the k = 0 system has a single trivial "
          "polynomial and no meaningful pattern");
  const LatticeIndex& lat = t.lattice();
  std::string s;
  for (int v = lat.begin_of_dim(k); v < lat.begin_of_dim(k + 1); ++v)
    s.push_back(t[v] == k ? '*' : '0');
  return ZeroPattern(std::move(s));
}

BigInt Binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt ZeroPatternBound(long long polys, long long degree, long long vars) {
  Require(vars >= 0 && polys >= vars, ErrorCode::kHypothesis,
          "zero-pattern bound needs M >= s >= 0");
  Require(degree >= 1, ErrorCode::kHypothesis, "degree must be >= 1");
  return Binomial(polys * degree, vars);
}

BigInt ZeroPatternBoundLinear(long long polys, long long vars) {
  Require(vars >= 0 && polys >= vars, ErrorCode::kHypothesis,
          "zero-pattern bound needs M >= s >= 0");
  BigInt sum = 0;
  for (long long j = 0; j <= vars; ++j) sum += Binomial(polys, j);
  return sum;
}

}  // namespace qmat
