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

#include "lattice.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>

#include "error.hpp"

namespace qmat {

Subspace Subspace::FromRows(const Matrix& rows) {
  std::vector<Elem> data = rows.data();
  const int rank = EliminateInPlace(rows.field(), data, rows.rows(),
                                    rows.cols(), true);
  data.resize(static_cast<size_t>(rank) * rows.cols());
  return Subspace(Matrix(rows.field_ptr(), rank, rows.cols(), std::move(data)));
}

Subspace Subspace::Zero(FieldPtr field, int n) {
  return Subspace(Matrix(std::move(field), 0, n));
}

Subspace Subspace::Full(FieldPtr field, int n) {
  return Subspace(Matrix::Identity(std::move(field), n));
}

Subspace Subspace::FromCanonical(Matrix basis) {
  return Subspace(std::move(basis));
}

bool Subspace::Contains(const Subspace& other) const {
  if (other.dim() > dim()) return false;
  if (other.dim() == 0) return true;
  return Rank(StackRows(basis_, other.basis_)) == dim();
}

bool CanonicalLess(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.basis().data() < b.basis().data();
}

namespace {

void RequireSameAmbient(const Subspace& a, const Subspace& b) {
  Require(a.ambient_dim() == b.ambient_dim() && a.field() == b.field(),
          ErrorCode::kAmbientMismatch, "subspaces live in different spaces");
}

}  // namespace

Subspace Sum(const Subspace& a, const Subspace& b) {
  RequireSameAmbient(a, b);
  return Subspace::FromRows(StackRows(a.basis(), b.basis()));
}

Subspace Intersect(const Subspace& a, const Subspace& b) {
  RequireSameAmbient(a, b);
  const Matrix ca = KernelBasis(a.basis());
  const Matrix cb = KernelBasis(b.basis());
  return Subspace::FromCanonical(KernelBasis(StackRows(ca, cb)));
}

Subspace OrthoComplement(const Subspace& v) {
  return Subspace::FromCanonical(KernelBasis(v.basis()));
}

int SubspaceDistance(const Subspace& a, const Subspace& b) {
  RequireSameAmbient(a, b);
  // dim(V) + dim(W) - 2 dim(V ∩ W) = 2 dim(V + W) - dim(V) - dim(W)
  thread_local std::vector<Elem> buf;
  buf.assign(a.basis().data().begin(), a.basis().data().end());
  buf.insert(buf.end(), b.basis().data().begin(), b.basis().data().end());
  const int join = EliminateInPlace(a.field(), buf, a.dim() + b.dim(),
                                    a.ambient_dim(), false);
  return 2 * join - a.dim() - b.dim();
}

std::vector<Elem> GrassmannianFlat(const Field& field, int n, int k) {
  Require(n >= 0 && k >= 0 && k <= n, ErrorCode::kInvalidArgument,
          "need 0 <= k <= n");
  const int q = field.size();
  const BigInt expected = GaussianBinomial(n, k, q);
  Require(expected <= 10000000, ErrorCode::kCeiling,
          "Grassmannian has more than 10^7 members");
  const size_t width = static_cast<size_t>(k) * n;
  std::vector<Elem> records;
  records.reserve(static_cast<size_t>(expected) * width);

  std::vector<int> pivots(k);
  std::iota(pivots.begin(), pivots.end(), 0);
  std::vector<Elem> rec(width);
  while (true) {
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<size_t> free_slots;
    std::fill(rec.begin(), rec.end(), 0);
    for (int i = 0; i < k; ++i) {
      rec[i * n + pivots[i]] = 1;
      for (int c = pivots[i] + 1; c < n; ++c)
        if (!is_pivot[c]) free_slots.push_back(static_cast<size_t>(i) * n + c);
    }
    // Odometer over the free entries.
    while (true) {
      records.insert(records.end(), rec.begin(), rec.end());
      size_t s = 0;
      for (; s < free_slots.size(); ++s) {
        Elem& v = rec[free_slots[s]];
        if (++v < q) break;
        v = 0;
      }
      if (s == free_slots.size()) break;
    }
    // Next k-subset of columns.
    int i = k - 1;
    while (i >= 0 && pivots[i] == n - k + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }

  if (width == 0) return records;
  const size_t count = records.size() / width;
  std::vector<size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    return std::lexicographical_compare(
        records.begin() + x * width, records.begin() + (x + 1) * width,
        records.begin() + y * width, records.begin() + (y + 1) * width);
  });
  std::vector<Elem> sorted;
  sorted.reserve(records.size());
  for (size_t idx : order)
    sorted.insert(sorted.end(), records.begin() + idx * width,
                  records.begin() + (idx + 1) * width);
  return sorted;
}

std::vector<Subspace> EnumerateGrassmannian(FieldPtr field, int n, int k) {
  std::vector<Elem> flat = GrassmannianFlat(*field, n, k);
  std::vector<Subspace> out;
  if (k == 0) {
    out.push_back(Subspace::Zero(field, n));
    return out;
  }
  const size_t width = static_cast<size_t>(k) * n;
  for (size_t off = 0; off < flat.size(); off += width) {
    out.push_back(Subspace::FromCanonical(
        Matrix(field, k, n,
               std::vector<Elem>(flat.begin() + off, flat.begin() + off + width))));
  }
  return out;
}

std::vector<Subspace> EnumerateGrassmannian(int q, int n, int k) {
  return EnumerateGrassmannian(Field::OfOrder(q), n, k);
}

BigInt GaussianBinomial(int n, int k, long long q) {
  Require(n >= 0 && k >= 0 && k <= n, ErrorCode::kInvalidArgument,
          "need 0 <= k <= n");
  Require(q >= 2, ErrorCode::kInvalidArgument, "need q >= 2");
  BigInt num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= boost::multiprecision::pow(BigInt(q), n - i) - 1;
    den *= boost::multiprecision::pow(BigInt(q), i + 1) - 1;
  }
  return num / den;
}

size_t LatticeIndex::KeyHash::operator()(const std::vector<Elem>& v) const {
  size_t h = v.size();
  for (Elem e : v) h = h * 1000003u ^ e;
  return h;
}

std::shared_ptr<const LatticeIndex> LatticeIndex::Get(int q, int n) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "need n >= 1");
  Field::OfOrder(q);
  BigInt total = 0;
  for (int k = 0; k <= n; ++k) total += GaussianBinomial(n, k, q);
  Require(total <= kMaxSize, ErrorCode::kCeiling,
          "L(F_" + std::to_string(q) + "^" + std::to_string(n) + ") has " +
              total.str() + " subspaces, above the 10^5 ceiling");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const LatticeIndex>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{q, n}];
  if (!slot) slot = std::make_shared<const LatticeIndex>(q, n);
  return slot;
}

LatticeIndex::LatticeIndex(int q, int n)
    : q_(q), n_(n), field_(Field::OfOrder(q)) {
  for (int k = 0; k <= n; ++k) {
    dim_begin_.push_back(size());
    for (Subspace& s : EnumerateGrassmannian(field_, n, k)) {
      ids_.emplace(s.basis().data(), size());
      subspaces_.push_back(std::move(s));
    }
  }
  dim_begin_.push_back(size());

  long long npoints = 1;
  for (int i = 0; i < n && npoints <= kMaxPoints; ++i) npoints *= q;
  if (npoints <= kMaxPoints) {
    words_ = static_cast<int>((npoints + 63) / 64);
    points_.assign(static_cast<size_t>(size()) * words_, 0);
    std::vector<int> place(n);
    for (int i = 0, w = 1; i < n; ++i, w *= q) place[i] = w;
    std::vector<std::vector<Elem>> span;
    for (int id = 0; id < size(); ++id) {
      const Matrix& basis = subspaces_[id].basis();
      span.assign(1, std::vector<Elem>(n, 0));
      for (int r = 0; r < basis.rows(); ++r) {
        const size_t before = span.size();
        for (Elem c = 1; c < q; ++c) {
          for (size_t i = 0; i < before; ++i) {
            std::vector<Elem> v = span[i];
            for (int j = 0; j < n; ++j)
              v[j] = field_->add(v[j], field_->mul(c, basis(r, j)));
            span.push_back(std::move(v));
          }
        }
      }
      uint64_t* set = points_.data() + static_cast<size_t>(id) * words_;
      for (const auto& v : span) {
        int index = 0;
        for (int j = 0; j < n; ++j) index += v[j] * place[j];
        set[index / 64] |= uint64_t{1} << (index % 64);
      }
    }
    size_t slots = 1;
    while (slots < 2 * static_cast<size_t>(size())) slots <<= 1;
    point_slots_.assign(slots, -1);
    for (int id = 0; id < size(); ++id) {
      size_t h = PointHash(points(id)) & (slots - 1);
      while (point_slots_[h] >= 0) h = (h + 1) & (slots - 1);
      point_slots_[h] = id;
    }
  }

  complement_.resize(size());
  for (int id = 0; id < size(); ++id)
    complement_[id] = IdOf(OrthoComplement(subspaces_[id]));

  hyper_begin_.push_back(0);
  for (int id = 0; id < size(); ++id) {
    const Subspace& v = subspaces_[id];
    const int d = v.dim();
    if (d > 0) {
      // Each (d-1)-subspace of F^d, mapped through v's basis.
      for (const Subspace& c : EnumerateGrassmannian(field_, d, d - 1)) {
        const Matrix rows =
            d == 1 ? Matrix(field_, 0, n) : Multiply(c.basis(), v.basis());
        hyperplanes_.push_back(IdOf(Subspace::FromRows(rows)));
      }
      std::sort(hyperplanes_.begin() + hyper_begin_.back(), hyperplanes_.end());
    }
    hyper_begin_.push_back(static_cast<int>(hyperplanes_.size()));
  }

  if (size() <= kTableLimit) {
    const size_t s = size();
    std::vector<int> join(s * s), meet(s * s);
    for (size_t a = 0; a < s; ++a) {
      for (size_t b = a; b < s; ++b) {
        int j, m;
        const int ia = static_cast<int>(a), ib = static_cast<int>(b);
        if (Leq(ia, ib)) {
          j = ib;
          m = ia;
        } else {
          j = Join(ia, ib);
          m = Meet(ia, ib);
        }
        join[a * s + b] = join[b * s + a] = j;
        meet[a * s + b] = meet[b * s + a] = m;
      }
    }
    join_ = std::move(join);
    meet_ = std::move(meet);
  }
}

int LatticeIndex::IdOf(const Subspace& s) const {
  Require(s.ambient_dim() == n_ && s.q() == q_, ErrorCode::kAmbientMismatch,
          "subspace is not in F_" + std::to_string(q_) + "^" +
              std::to_string(n_));
  auto it = ids_.find(s.basis().data());
  Require(it != ids_.end(), ErrorCode::kInvalidArgument,
          "basis is not in canonical form");
  return it->second;
}

std::optional<int> LatticeIndex::Find(
    std::span<const Elem> canonical_entries) const {
  auto it = ids_.find(
      std::vector<Elem>(canonical_entries.begin(), canonical_entries.end()));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

size_t LatticeIndex::PointHash(const uint64_t* set) const {
  uint64_t h = 0x9e3779b97f4a7c15ull;
  for (int w = 0; w < words_; ++w) {
    h ^= set[w];
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 32;
  }
  return static_cast<size_t>(h);
}

int LatticeIndex::IdOfPoints(const uint64_t* set) const {
  const size_t mask = point_slots_.size() - 1;
  for (size_t h = PointHash(set) & mask;; h = (h + 1) & mask) {
    const int id = point_slots_[h];
    if (id < 0) break;
    if (std::equal(set, set + words_, points(id))) return id;
  }
  throw Error(ErrorCode::kInvalidArgument, "point set is not a subspace");
}

int LatticeIndex::Join(int a, int b) const {
  if (!join_.empty()) return join_[static_cast<size_t>(a) * size() + b];
  // (A + B)^perp = A^perp ∩ B^perp.
  if (words_ > 0 && !complement_.empty())
    return complement_[Meet(complement_[a], complement_[b])];
  return IdOf(Sum(subspaces_[a], subspaces_[b]));
}

bool LatticeIndex::Leq(int a, int b) const {
  if (a == b) return true;
  if (dim(a) >= dim(b)) return false;
  if (!join_.empty()) return join_[static_cast<size_t>(a) * size() + b] == b;
  if (words_ > 0) {
    const uint64_t* pa = points(a);
    const uint64_t* pb = points(b);
    for (int w = 0; w < words_; ++w)
      if (pa[w] & ~pb[w]) return false;
    return true;
  }
  return subspaces_[b].Contains(subspaces_[a]);
}

int LatticeIndex::Meet(int a, int b) const {
  if (!meet_.empty()) return meet_[static_cast<size_t>(a) * size() + b];
  if (words_ > 0) {
    uint64_t buf[kMaxPoints / 64];
    const uint64_t* pa = points(a);
    const uint64_t* pb = points(b);
    for (int w = 0; w < words_; ++w) buf[w] = pa[w] & pb[w];
    return IdOfPoints(buf);
  }
  return IdOf(Intersect(subspaces_[a], subspaces_[b]));
}

}  // namespace qmat
