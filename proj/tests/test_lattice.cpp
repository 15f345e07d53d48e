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

#include <random>
#include <utility>
#include <vector>

#include "doctest.h"
#include "lattice.hpp"
#include "bounds.hpp"
#include "test_util.hpp"

namespace qmat {
namespace {

using testing::CodeOf;
using testing::Mat;
using testing::Span;

TEST_CASE("subspace_from_rows canonicalizes") {
  auto f = Field::Make(2);
  Subspace v = Span(f, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(v.dim() == 2);
  CHECK(Span(f, {{1, 1, 0, 0}, {0, 1, 0, 0}}) == v);
  CHECK(Span(f, {{0, 0, 0}, {0, 0, 0}}) == Subspace::Zero(f, 3));
  CHECK(Span(f, {{1, 1, 0}, {0, 1, 1}, {1, 1, 1}}) == Subspace::Full(f, 3));
  CHECK(v.Contains(Span(f, {{1, 1, 0, 0}})));
  CHECK(!v.Contains(Span(f, {{0, 0, 1, 0}})));
}

TEST_CASE("sum and intersection on the example pair") {
  auto f = Field::Make(2);
  Subspace v = Span(f, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  Subspace w = Span(f, {{0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(Intersect(v, w) == Subspace::Zero(f, 4));
  CHECK(Sum(v, w) == Subspace::Full(f, 4));
  CHECK(Sum(v, v) == v);
  CHECK(Intersect(v, v) == v);
  CHECK(SubspaceDistance(v, w) == 4);
  CHECK(SubspaceDistance(v, v) == 0);
  CHECK(SubspaceDistance(Subspace::Zero(f, 4), Subspace::Full(f, 4)) == 4);
  CHECK(OrthoComplement(v) == w);
  CHECK(OrthoComplement(Subspace::Full(f, 4)) == Subspace::Zero(f, 4));
  CHECK(OrthoComplement(Subspace::Zero(f, 4)) == Subspace::Full(f, 4));
}

TEST_CASE("ambient mismatches are rejected") {
  auto f = Field::Make(2);
  Subspace a = Span(f, {{1, 0, 0}});
  Subspace b = Span(f, {{1, 0, 0, 0}});
  CHECK(CodeOf([&] { Sum(a, b); }) == ErrorCode::kAmbientMismatch);
  CHECK(CodeOf([&] { Intersect(a, b); }) == ErrorCode::kAmbientMismatch);
  CHECK(CodeOf([&] { SubspaceDistance(a, b); }) ==
        ErrorCode::kAmbientMismatch);
  Subspace c = Span(Field::Make(3), {{1, 0, 0}});
  CHECK(CodeOf([&] { Sum(a, c); }) == ErrorCode::kAmbientMismatch);
}

TEST_CASE("gaussian binomial examples") {
  CHECK(GaussianBinomial(4, 2, 2) == 35);
  CHECK(GaussianBinomial(7, 0, 3) == 1);
  CHECK(GaussianBinomial(2, 1, 2) == 3);
  CHECK(GaussianBinomial(5, 2, 3) == 1210);
  CHECK(CodeOf([] { GaussianBinomial(3, 5, 2); }).has_value());
  CHECK(CodeOf([] { GaussianBinomial(3, 1, 1); }).has_value());
}

TEST_CASE("grassmannian examples") {
  CHECK(EnumerateGrassmannian(2, 4, 2).size() == 35);
  auto zero = EnumerateGrassmannian(3, 4, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].dim() == 0);
  size_t total = 0;
  for (int k = 0; k <= 4; ++k) total += EnumerateGrassmannian(2, 4, k).size();
  CHECK(total == 67);
  CHECK(CodeOf([] { EnumerateGrassmannian(2, 4, 5); }).has_value());
  CHECK(CodeOf([] { EnumerateGrassmannian(2, 4, -1); }).has_value());
}

TEST_CASE("grassmannian counts match the q-binomial and are canonical") {
  for (int q : {2, 3, 4}) {
    for (int n = 0; n <= 6; ++n) {
      if (GaussianBinomial(n, n / 2, q) > 200000) continue;
      for (int k = 0; k <= n; ++k) {
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(k);
        auto list = EnumerateGrassmannian(q, n, k);
        REQUIRE(BigInt(list.size()) == GaussianBinomial(n, k, q));
        bool ordered = true, canonical = true;
        for (size_t i = 0; i < list.size(); ++i) {
          if (i > 0 && !CanonicalLess(list[i - 1], list[i])) ordered = false;
          if (!(Subspace::FromRows(list[i].basis()) == list[i]))
            canonical = false;
          if (list[i].dim() != k) canonical = false;
        }
        CHECK(ordered);
        CHECK(canonical);
      }
    }
  }
}

TEST_CASE("lattice index orders by dimension then entries") {
  auto lat = LatticeIndex::Get(2, 4);
  REQUIRE(lat->size() == 67);
  CHECK(lat->dim(lat->zero_id()) == 0);
  CHECK(lat->dim(lat->full_id()) == 4);
  for (int i = 1; i < lat->size(); ++i) {
    CHECK(CanonicalLess(lat->at(i - 1), lat->at(i)));
    CHECK(lat->IdOf(lat->at(i)) == i);
  }
  CHECK(lat->begin_of_dim(2) == 16);
  CHECK(LatticeIndex::Get(2, 4) == lat);
  CHECK(LatticeIndex::Get(3, 3)->size() == 28);
  CHECK(CodeOf([] { LatticeIndex::Get(2, 9); }) == ErrorCode::kCeiling);
}

TEST_CASE("modular law, join and meet on L(F_2^4)") {
  auto lat = LatticeIndex::Get(2, 4);
  int bad = 0;
  for (int a = 0; a < lat->size(); ++a) {
    for (int b = 0; b < lat->size(); ++b) {
      const Subspace& v = lat->at(a);
      const Subspace& w = lat->at(b);
      const Subspace s = Sum(v, w), i = Intersect(v, w);
      if (v.dim() + w.dim() != s.dim() + i.dim()) ++bad;
      if (lat->Join(a, b) != lat->IdOf(s)) ++bad;
      if (lat->Meet(a, b) != lat->IdOf(i)) ++bad;
      if (lat->Leq(a, b) != w.Contains(v)) ++bad;
      if (!s.Contains(v) || !v.Contains(i)) ++bad;
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("double complement on L(F_2^5) and L(F_3^3)") {
  for (auto [q, n] : {std::pair{2, 5}, {3, 3}, {4, 3}}) {
    auto lat = LatticeIndex::Get(q, n);
    int bad = 0;
    for (int id = 0; id < lat->size(); ++id) {
      const Subspace& v = lat->at(id);
      Subspace perp = OrthoComplement(v);
      if (perp.dim() != n - v.dim()) ++bad;
      if (!(OrthoComplement(perp) == v)) ++bad;
      if (lat->Complement(id) != lat->IdOf(perp)) ++bad;
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("subspace distance is a metric on L(F_2^4)") {
  auto lat = LatticeIndex::Get(2, 4);
  const int s = lat->size();
  std::vector<int> d(static_cast<size_t>(s) * s);
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b)
      d[a * s + b] = SubspaceDistance(lat->at(a), lat->at(b));
  int bad = 0;
  for (int a = 0; a < s; ++a) {
    for (int b = 0; b < s; ++b) {
      if (d[a * s + b] != d[b * s + a]) ++bad;
      if ((d[a * s + b] == 0) != (a == b)) ++bad;
      const int expected = lat->dim(a) + lat->dim(b) - 2 * lat->dim(lat->Meet(a, b));
      if (d[a * s + b] != expected) ++bad;
      for (int c = 0; c < s; ++c)
        if (d[a * s + c] > d[a * s + b] + d[b * s + c]) ++bad;
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("hyperplanes are the codimension-one subspaces") {
  auto lat = LatticeIndex::Get(3, 3);
  for (int id = 0; id < lat->size(); ++id) {
    const int d = lat->dim(id);
    auto hyper = lat->Hyperplanes(id);
    CHECK(BigInt(hyper.size()) == (d == 0 ? BigInt(0) : GaussianBinomial(d, d - 1, 3)));
    for (int h : hyper) {
      CHECK(lat->dim(h) == d - 1);
      CHECK(lat->Leq(h, id));
    }
  }
}

TEST_CASE("q-binomial sandwich with exact rationals") {
  for (int q : {2, 3, 4, 5}) {
    for (int n = 0; n <= 12; ++n) {
      for (int k = 0; k <= n; ++k) {
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(QBinomSandwichOf(n, k, q).Holds());
      }
    }
  }
}

TEST_CASE("nk is at most the q-binomial") {
  for (int q : {2, 3, 4, 5})
    for (int n = 2; n <= 50; ++n)
      for (int k = 1; k <= n / 2; ++k)
        CHECK(BigInt(n * k) <= GaussianBinomial(n, k, q));
}

TEST_CASE("bitset lookups agree with elimination beyond the table limit") {
  for (auto [q, n] : {std::pair{2, 6}, std::pair{3, 5}, std::pair{2, 7}}) {
    LatticePtr lat = LatticeIndex::Get(q, n);
    REQUIRE(lat->size() > LatticeIndex::kTableLimit);
    std::mt19937_64 rng(q * 100 + n);
    std::uniform_int_distribution<int> pick(0, lat->size() - 1);
    for (int trial = 0; trial < 3000; ++trial) {
      const int a = pick(rng), b = pick(rng);
      CAPTURE(q);
      CAPTURE(a);
      CAPTURE(b);
      CHECK(lat->Join(a, b) == lat->IdOf(Sum(lat->at(a), lat->at(b))));
      CHECK(lat->Meet(a, b) == lat->IdOf(Intersect(lat->at(a), lat->at(b))));
      CHECK(lat->Leq(a, b) == lat->at(b).Contains(lat->at(a)));
    }
  }
}

}  // namespace
}  // namespace qmat
