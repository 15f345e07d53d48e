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

#include "cdc.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_set>
#include <utility>

#include "error.hpp"

namespace qmat {
namespace {

struct EntriesHash {
  size_t operator()(const std::vector<Elem>& v) const {
    size_t h = v.size();
    for (Elem e : v) h = h * 1000003u ^ e;
    return h;
  }
};

}  // namespace

ConstantDimensionCode::ConstantDimensionCode(int q, int n, int k,
                                             std::vector<Subspace> codewords)
    : q_(q), n_(n), k_(k), codewords_(std::move(codewords)) {
  Require(k >= 0 && k <= n, ErrorCode::kInvalidArgument, "need 0 <= k <= n");
  std::unordered_set<std::vector<Elem>, EntriesHash> seen;
  for (size_t i = 0; i < codewords_.size(); ++i) {
    const Subspace& s = codewords_[i];
    Require(s.q() == q && s.ambient_dim() == n, ErrorCode::kAmbientMismatch,
            "codeword " + std::to_string(i) + " is not in F_" +
                std::to_string(q) + "^" + std::to_string(n));
    Require(s.dim() == k, ErrorCode::kInvalidCollection,
            "codeword " + std::to_string(i) + " has dimension " +
                std::to_string(s.dim()));
    Require(seen.insert(s.basis().data()).second,
            ErrorCode::kInvalidCollection,
            "codeword " + std::to_string(i) + " is a duplicate");
  }
}

int MinSubspaceDistance(const ConstantDimensionCode& c) {
  Require(c.size() >= 2, ErrorCode::kUndefinedDistance,
          "minimum distance needs at least two codewords");
  int best = std::numeric_limits<int>::max();
  const auto& words = c.codewords();
  for (size_t i = 0; i < words.size(); ++i)
    for (size_t j = i + 1; j < words.size(); ++j)
      best = std::min(best, SubspaceDistance(words[i], words[j]));
  return best;
}

std::optional<int> MinSubspaceDistanceLinearLift(
    const ConstantDimensionCode& c) {
  Require(c.size() >= 2, ErrorCode::kUndefinedDistance,
          "minimum distance needs at least two codewords");
  const int k = c.k(), n = c.n(), w = k * (n - k);
  if (k == 0 || w == 0) return std::nullopt;
  const Field& f = c.codewords().front().field();
  std::vector<std::vector<Elem>> blocks;
  blocks.reserve(c.size());
  for (const Subspace& s : c.codewords()) {
    const Matrix& b = s.basis();
    std::vector<Elem> block;
    block.reserve(w);
    for (int r = 0; r < k; ++r) {
      for (int j = 0; j < k; ++j)
        if (b(r, j) != (r == j ? 1 : 0)) return std::nullopt;
      for (int j = k; j < n; ++j) block.push_back(b(r, j));
    }
    blocks.push_back(std::move(block));
  }

  // The blocks form a linear space iff their span has exactly |C| elements.
  std::vector<Elem> echelon;
  int dim = 0;
  std::vector<Elem> buf;
  for (const auto& block : blocks) {
    buf = echelon;
    buf.insert(buf.end(), block.begin(), block.end());
    const int r = EliminateInPlace(f, buf, dim + 1, w, false);
    if (r > dim) {
      buf.resize(static_cast<size_t>(r) * w);
      echelon = buf;
      dim = r;
    }
  }
  BigInt span_size = 1;
  for (int i = 0; i < dim; ++i) span_size *= c.q();
  if (span_size != c.size()) return std::nullopt;

  const FieldPtr& fp = c.codewords().front().field_ptr();
  Matrix zero_lift(fp, k, n);
  for (int r = 0; r < k; ++r) zero_lift(r, r) = 1;
  const Subspace origin = Subspace::FromRows(zero_lift);
  int best = std::numeric_limits<int>::max();
  for (const Subspace& s : c.codewords())
    if (!(s == origin)) best = std::min(best, SubspaceDistance(origin, s));
  return best;
}

GeneratorMatrix GabidulinCode(int q, int m, int n, int k) {
  Require(IsPrime(q), ErrorCode::kInvalidArgument, "q must be prime");
  Require(1 <= k && k <= n && n <= m, ErrorCode::kInvalidArgument,
          "Gabidulin code needs 1 <= k <= n <= m");
  FieldPtr f = Field::Make(q, m);
  Matrix g(f, k, n);
  for (int j = 0; j < n; ++j) {
    Elem point = f->pow(f->primitive(), j);
    for (int i = 0; i < k; ++i) {
      g(i, j) = point;
      point = f->frobenius(point, q);
    }
  }
  return GeneratorMatrix(std::move(g));
}

ConstantDimensionCode LiftedMrd(int q, int n, int k, int d) {
  Require(IsPrime(q), ErrorCode::kInvalidArgument, "q must be prime");
  Require(k >= 1 && 2 * k <= n, ErrorCode::kInvalidArgument,
          "lifted MRD code needs 2k <= n");
  Require(d % 2 == 0 && d >= 4 && d <= 2 * k, ErrorCode::kInvalidArgument,
          "lifted MRD code needs even d with 4 <= d <= 2k");
  const int m = n - k;
  const int dim = k - d / 2 + 1;
  const GeneratorMatrix gab = GabidulinCode(q, m, k, dim);
  const Field& ext = gab.matrix().field();
  double count = 1;
  for (int i = 0; i < dim; ++i) count *= ext.size();
  Require(count <= 2e6, ErrorCode::kCeiling,
          "lifted code would exceed 2 * 10^6 codewords");

  // Coordinates of every element in the power basis 1, a, ..., a^(m-1).
  std::vector<std::vector<Elem>> coords(ext.size());
  {
    std::vector<Elem> c(m, 0);
    while (true) {
      Elem x = 0;
      for (int i = 0; i < m; ++i)
        if (c[i] != 0)
          x = ext.add(x, ext.mul(static_cast<Elem>(c[i]),
                                 ext.pow(ext.primitive(), i)));
      coords[x] = c;
      int i = 0;
      for (; i < m; ++i) {
        if (++c[i] < q) break;
        c[i] = 0;
      }
      if (i == m) break;
    }
  }

  FieldPtr ground = Field::Make(q);
  std::vector<Subspace> words;
  words.reserve(static_cast<size_t>(count));
  std::vector<Elem> u(dim, 0);
  std::vector<Elem> word(k);
  while (true) {
    std::fill(word.begin(), word.end(), 0);
    for (int r = 0; r < dim; ++r) {
      if (u[r] == 0) continue;
      for (int j = 0; j < k; ++j)
        word[j] = ext.add(word[j], ext.mul(u[r], gab.matrix()(r, j)));
    }
    Matrix lifted(ground, k, n);
    for (int j = 0; j < k; ++j) {
      lifted(j, j) = 1;
      const std::vector<Elem>& c = coords[word[j]];
      for (int i = 0; i < m; ++i) lifted(j, k + i) = c[i];
    }
    words.push_back(Subspace::FromCanonical(std::move(lifted)));

    int i = 0;
    for (; i < dim; ++i) {
      if (++u[i] < ext.size()) break;
      u[i] = 0;
    }
    if (i == dim) break;
  }
  std::sort(words.begin(), words.end(), CanonicalLess);
  return ConstantDimensionCode(q, n, k, std::move(words));
}

RankTable CdcToPaving(const ConstantDimensionCode& c) {
  if (c.size() >= 2) {
    const int d = MinSubspaceDistance(c);
    Require(d >= 4, ErrorCode::kInvalidCollection,
            "code has minimum distance " + std::to_string(d) + " < 4");
  }
  return PavingFromCollection(c.q(), c.n(), c.k(), c.codewords());
}

bool GrassmannIndependent(std::span<const Subspace> s, int k) {
  for (const Subspace& v : s)
    Require(v.dim() == k, ErrorCode::kInvalidArgument,
            "collection mixes dimensions");
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (SubspaceDistance(s[i], s[j]) < 4) return false;
  return true;
}

std::vector<Subspace> GreedySpread(int q, int n, int k) {
  std::vector<Subspace> kept;
  for (Subspace& v : EnumerateGrassmannian(q, n, k)) {
    const bool disjoint = std::all_of(
        kept.begin(), kept.end(),
        [&](const Subspace& w) { return SubspaceDistance(v, w) == 2 * k; });
    if (disjoint) kept.push_back(std::move(v));
  }
  return kept;
}

}  // namespace qmat
