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

#include "repr_codes.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>
#include <thread>
#include <utility>

#include "error.hpp"

namespace qmat {
namespace {

// rank of G Y^T, G is k x n, Y is d x n (both row-major).
int ProductRank(const Field& f, const Elem* g, int k, int n, const Elem* y,
                int d, std::vector<Elem>& scratch) {
  if (k == 0 || d == 0) return 0;
  scratch.assign(static_cast<size_t>(k) * d, 0);
  for (int i = 0; i < k; ++i) {
    const Elem* grow = g + i * n;
    for (int j = 0; j < d; ++j) {
      const Elem* yrow = y + j * n;
      Elem acc = 0;
      for (int c = 0; c < n; ++c) {
        if (yrow[c] != 0 && grow[c] != 0)
          acc = f.add(acc, f.mul(grow[c], yrow[c]));
      }
      scratch[i * d + j] = acc;
    }
  }
  return EliminateInPlace(f, scratch, k, d, false);
}

void RequirePrimeGround(int q) {
  Require(IsPrime(q), ErrorCode::kInvalidArgument,
          "representability needs a prime ground field, got q = " +
              std::to_string(q));
}

RankTable TableOfRows(const Matrix& g) {
  const Field& f = g.field();
  RequirePrimeGround(f.characteristic());
  LatticePtr lat = LatticeIndex::Get(f.characteristic(), g.cols());
  std::vector<int> ranks(lat->size());
  std::vector<Elem> scratch;
  for (int v = 0; v < lat->size(); ++v) {
    const Matrix& y = lat->at(v).basis();
    ranks[v] = ProductRank(f, g.data().data(), g.rows(), g.cols(),
                           y.data().data(), y.rows(), scratch);
  }
  return RankTable::Validated(std::move(lat), std::move(ranks));
}

}  // namespace

GeneratorMatrix::GeneratorMatrix(Matrix m) : m_(std::move(m)) {
  Require(m_.rows() >= 1 && m_.rows() <= m_.cols(),
          ErrorCode::kInvalidArgument, "generator needs 1 <= k <= n");
  Require(Rank(m_) == m_.rows(), ErrorCode::kInvalidArgument,
          "generator matrix is rank deficient");
}

RankMetricCode::RankMetricCode(const Matrix& spanning_rows) {
  std::vector<Elem> data = spanning_rows.data();
  const int rank =
      EliminateInPlace(spanning_rows.field(), data, spanning_rows.rows(),
                       spanning_rows.cols(), true);
  data.resize(static_cast<size_t>(rank) * spanning_rows.cols());
  generator_ = Matrix(spanning_rows.field_ptr(), rank, spanning_rows.cols(),
                      std::move(data));
}

RankTable QMatroidFromGenerator(const GeneratorMatrix& g) {
  return TableOfRows(g.matrix());
}

RankTable QMatroidOfCode(const RankMetricCode& c) {
  return TableOfRows(c.generator());
}

int RankWeight(const Field& ext, std::span<const Elem> v) {
  const int p = ext.characteristic();
  const int m = ext.degree();
  const int n = static_cast<int>(v.size());
  // Column j holds the coefficients of v_j.
  std::vector<Elem> expanded(static_cast<size_t>(m) * n);
  for (int j = 0; j < n; ++j) {
    const std::vector<int> d = ext.digits(v[j]);
    for (int i = 0; i < m; ++i) expanded[i * n + j] = static_cast<Elem>(d[i]);
  }
  return EliminateInPlace(*Field::Make(p), expanded, m, n, false);
}

int MinRankDistance(const RankMetricCode& c) {
  Require(c.k() >= 1, ErrorCode::kUndefinedDistance,
          "the zero code has no minimum distance");
  const Field& f = c.generator().field();
  const int k = c.k(), n = c.n();
  double count = 1;
  for (int i = 0; i < k; ++i) count *= f.size();
  Require(count <= 1e7, ErrorCode::kCeiling,
          "code has more than 10^7 codewords");

  int best = std::numeric_limits<int>::max();
  std::vector<Elem> coeffs(k, 0);
  std::vector<Elem> word(n);
  while (true) {
    // Advance first so the zero codeword is skipped.
    int i = 0;
    for (; i < k; ++i) {
      if (++coeffs[i] < f.size()) break;
      coeffs[i] = 0;
    }
    if (i == k) break;
    std::fill(word.begin(), word.end(), 0);
    for (int r = 0; r < k; ++r) {
      if (coeffs[r] == 0) continue;
      for (int j = 0; j < n; ++j)
        word[j] = f.add(word[j], f.mul(coeffs[r], c.generator()(r, j)));
    }
    best = std::min(best, RankWeight(f, word));
  }
  return best;
}

bool IsMrd(const RankMetricCode& c) {
  return c.k() == c.n() - MinRankDistance(c) + 1;
}

RankMetricCode DualCode(const RankMetricCode& c) {
  return RankMetricCode(KernelBasis(c.generator()));
}

GeneratorMatrix RandomGenerator(int q, int m, int n, int k,
                                std::mt19937_64& rng) {
  RequirePrimeGround(q);
  Require(k >= 1 && k <= n, ErrorCode::kInvalidArgument, "need 1 <= k <= n");
  FieldPtr f = Field::Make(q, m);
  std::uniform_int_distribution<int> pick(0, f->size() - 1);
  while (true) {
    Matrix g(f, k, n);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = static_cast<Elem>(pick(rng));
    if (Rank(g) == k) return GeneratorMatrix(std::move(g));
  }
}

RepresentationSearch SearchRepresentation(const RankTable& t, int m_max,
                                          int threads) {
  const int q = t.q(), n = t.n(), k = t.rank();
  RequirePrimeGround(q);
  Require(m_max >= 1, ErrorCode::kInvalidArgument, "need m_max >= 1");
  RepresentationSearch result;
  if (k == 0) {
    result.found = true;
    result.m = 1;
    result.generator = Matrix(Field::Make(q), 0, n);
    return result;
  }
  for (int m = 1; m <= m_max; ++m) {
    double order = 1;
    for (int i = 0; i < m; ++i) order *= q;
    Require(order <= kMaxFieldSize, ErrorCode::kCeiling,
            "F_{q^m} too large for m = " + std::to_string(m));
    Require(GaussianBinomial(n, k, static_cast<long long>(order)) <= 10000000,
            ErrorCode::kCeiling,
            "Grassmannian over F_{q^" + std::to_string(m) +
                "} exceeds 10^7 members");
  }

  const LatticeIndex& lat = t.lattice();
  std::vector<int> tests;
  for (int v = lat.begin_of_dim(k); v < lat.begin_of_dim(k + 1); ++v)
    if (t[v] < k) tests.push_back(v);
  for (int v = lat.begin_of_dim(k); v < lat.begin_of_dim(k + 1); ++v)
    if (t[v] == k) tests.push_back(v);
  for (int v = 0; v < lat.size(); ++v)
    if (lat.dim(v) != k) tests.push_back(v);

  threads = std::max(1, threads);
  for (int m = 1; m <= m_max; ++m) {
    FieldPtr ext = Field::Make(q, m);
    const std::vector<Elem> flat = GrassmannianFlat(*ext, n, k);
    const size_t width = static_cast<size_t>(k) * n;
    const size_t count = flat.size() / width;

    auto matches = [&](size_t idx, std::vector<Elem>& scratch) {
      const Elem* g = flat.data() + idx * width;
      for (int v : tests) {
        const Matrix& y = lat.at(v).basis();
        if (ProductRank(*ext, g, k, n, y.data().data(), y.rows(), scratch) !=
            t[v])
          return false;
      }
      return true;
    };

    // Workers take interleaved candidates; the smallest matching index wins.
    std::atomic<size_t> best{count};
    auto work = [&](int worker) {
      std::vector<Elem> scratch;
      for (size_t idx = worker; idx < count; idx += threads) {
        if (idx >= best.load()) return;
        if (matches(idx, scratch)) {
          size_t cur = best.load();
          while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
          }
          return;
        }
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
      for (auto& th : pool) th.join();
    }
    if (best.load() < count) {
      const size_t idx = best.load();
      result.found = true;
      result.m = m;
      result.generator =
          Matrix(ext, k, n,
                 std::vector<Elem>(flat.begin() + idx * width,
                                   flat.begin() + (idx + 1) * width));
      return result;
    }
  }
  return result;
}

}  // namespace qmat
