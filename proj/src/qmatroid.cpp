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

#include "qmatroid.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "error.hpp"

namespace qmat {

RankTable::RankTable(LatticePtr lattice, std::vector<int> ranks)
    : lattice_(std::move(lattice)), ranks_(std::move(ranks)) {
  Require(static_cast<int>(ranks_.size()) == lattice_->size(),
          ErrorCode::kInvalidTable,
          "rank table has " + std::to_string(ranks_.size()) +
              " entries, lattice has " + std::to_string(lattice_->size()));
}

RankTable RankTable::Validated(LatticePtr lattice, std::vector<int> ranks) {
  RankTable t(std::move(lattice), std::move(ranks));
  const AxiomReport report = CheckAxioms(t);
  Require(report.pass, ErrorCode::kInvalidTable, report.Describe());
  return t;
}

std::string AxiomReport::Describe() const {
  if (pass) return "all rank axioms hold";
  std::string s = "axiom " + std::to_string(axiom) + " fails at subspace " +
                  std::to_string(first);
  if (second >= 0) s += " and " + std::to_string(second);
  return s;
}

AxiomReport CheckAxioms(const RankTable& t) {
  const LatticeIndex& lat = t.lattice();
  const int size = lat.size();
  for (int v = 0; v < size; ++v) {
    if (t[v] < 0 || t[v] > lat.dim(v)) return {false, 1, v, -1};
  }
  for (int a = 0; a < size; ++a) {
    for (int b = a + 1; b < size; ++b) {
      if (lat.Leq(a, b)) {
        if (t[a] > t[b]) return {false, 2, a, b};
      } else {
        // Ids are dimension-ordered, so b <= a cannot happen for a < b.
        const int meet = lat.Meet(a, b);
        const int join = lat.Join(a, b);
        if (t[meet] + t[join] > t[a] + t[b]) return {false, 3, a, b};
      }
    }
  }
  return {};
}

RankTable Uniform(int q, int n, int k) {
  Require(k >= 0 && k <= n, ErrorCode::kInvalidArgument, "need 0 <= k <= n");
  LatticePtr lat = LatticeIndex::Get(q, n);
  std::vector<int> ranks(lat->size());
  for (int v = 0; v < lat->size(); ++v) ranks[v] = std::min(k, lat->dim(v));
  return RankTable::Validated(std::move(lat), std::move(ranks));
}

RankTable PavingFromCollection(int q, int n, int k,
                               std::span<const Subspace> s) {
  Require(k >= 1 && k <= n - 1, ErrorCode::kInvalidCollection,
          "paving construction needs 1 <= k <= n - 1");
  LatticePtr lat = LatticeIndex::Get(q, n);
  std::vector<int> ids;
  for (size_t i = 0; i < s.size(); ++i) {
    Require(s[i].dim() == k, ErrorCode::kInvalidCollection,
            "member " + std::to_string(i) + " has dimension " +
                std::to_string(s[i].dim()) + ", expected " + std::to_string(k));
    ids.push_back(lat->IdOf(s[i]));
  }
  for (size_t i = 0; i < ids.size(); ++i) {
    for (size_t j = i + 1; j < ids.size(); ++j) {
      const int meet_dim = lat->dim(lat->Meet(ids[i], ids[j]));
      Require(meet_dim <= k - 2, ErrorCode::kInvalidCollection,
              "members " + std::to_string(i) + " and " + std::to_string(j) +
                  " meet in dimension " + std::to_string(meet_dim) +
                  " > k - 2");
    }
  }
  std::vector<int> ranks(lat->size());
  for (int v = 0; v < lat->size(); ++v) ranks[v] = std::min(k, lat->dim(v));
  for (int id : ids) ranks[id] = k - 1;
  return RankTable::Validated(std::move(lat), std::move(ranks));
}

RankTable Dualize(const RankTable& t) {
  const AxiomReport report = CheckAxioms(t);
  Require(report.pass, ErrorCode::kInvalidTable,
          "cannot dualize: " + report.Describe());
  const LatticeIndex& lat = t.lattice();
  std::vector<int> ranks(lat.size());
  for (int v = 0; v < lat.size(); ++v)
    ranks[v] = lat.dim(v) + t[lat.Complement(v)] - t.rank();
  return RankTable::Validated(t.lattice_ptr(), std::move(ranks));
}

DerivedStructure Derive(const RankTable& t) {
  const LatticeIndex& lat = t.lattice();
  DerivedStructure out;
  out.rank = t.rank();
  auto independent = [&](int v) { return t[v] == lat.dim(v); };
  for (int v = 0; v < lat.size(); ++v) {
    if (independent(v)) {
      out.independents.push_back(v);
      if (t[v] == out.rank) out.bases.push_back(v);
      continue;
    }
    const auto hyper = lat.Hyperplanes(v);
    if (std::all_of(hyper.begin(), hyper.end(), independent))
      out.circuits.push_back(v);
    if (lat.dim(v) == 1) {
      out.loops.push_back(v);
      out.loop_space = lat.Join(out.loop_space, v);
    }
  }
  out.is_paving = std::all_of(
      out.circuits.begin(), out.circuits.end(),
      [&](int c) { return lat.dim(c) >= out.rank; });
  return out;
}

std::vector<RankTable> EnumerateQMatroids(int q, int n, int k_max) {
  constexpr size_t kMaxResults = 1000000;
  LatticePtr lat = LatticeIndex::Get(q, n);
  Require(lat->size() <= LatticeIndex::kTableLimit, ErrorCode::kCeiling,
          "enumeration needs a lattice of at most 1024 subspaces");
  Require(k_max >= 0, ErrorCode::kInvalidArgument, "need k_max >= 0");
  const int size = lat->size();

  // Incomparable pairs grouped by their join, the last of the four ids
  // involved in the submodular inequality to be assigned.
  std::vector<std::vector<std::pair<int, int>>> closing(size);
  for (int a = 0; a < size; ++a)
    for (int b = a + 1; b < size; ++b)
      if (!lat->Leq(a, b)) closing[lat->Join(a, b)].emplace_back(a, b);

  std::vector<int> ranks(size, 0);
  std::vector<RankTable> out;
  std::function<void(int)> assign = [&](int v) {
    if (v == size) {
      Require(out.size() < kMaxResults, ErrorCode::kCeiling,
              "more than 10^6 q-matroids");
      out.emplace_back(lat, ranks);
      return;
    }
    int lo = 0;
    int hi = std::min(lat->dim(v), k_max);
    for (int h : lat->Hyperplanes(v)) {
      lo = std::max(lo, ranks[h]);
      hi = std::min(hi, ranks[h] + 1);
    }
    for (int r = lo; r <= hi; ++r) {
      ranks[v] = r;
      bool ok = true;
      for (const auto& [a, b] : closing[v]) {
        if (ranks[lat->Meet(a, b)] + r > ranks[a] + ranks[b]) {
          ok = false;
          break;
        }
      }
      if (ok) assign(v + 1);
    }
  };
  assign(0);
  return out;
}

}  // namespace qmat
