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
#include <vector>

#include "doctest.h"
#include "field.hpp"
#include "matrix.hpp"
#include "test_util.hpp"

namespace qmat {
namespace {

using testing::CodeOf;
using testing::Mat;

TEST_CASE("field_make picks the smallest irreducible modulus") {
  struct Case {
    int p, e;
    std::vector<int> modulus;
  };
  // Frozen from an independent sieve over all monic polynomials.
  const std::vector<Case> cases = {
      {2, 2, {1, 1, 1}},          {2, 3, {1, 1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}},    {2, 5, {1, 0, 1, 0, 0, 1}},
      {2, 6, {1, 1, 0, 0, 0, 0, 1}}, {3, 2, {1, 0, 1}},
      {3, 3, {1, 2, 0, 1}},       {3, 4, {2, 1, 0, 0, 1}},
      {3, 5, {1, 2, 0, 0, 0, 1}}, {3, 6, {2, 1, 0, 0, 0, 0, 1}},
      {5, 2, {2, 0, 1}},          {7, 2, {1, 0, 1}},
  };
  for (const Case& c : cases) {
    CAPTURE(c.p);
    CAPTURE(c.e);
    CHECK(Field::Make(c.p, c.e)->modulus() == c.modulus);
  }
  CHECK(Field::Make(2)->modulus().empty());
  CHECK(Field::Make(2)->size() == 2);
  CHECK(Field::Make(2, 4) == Field::Make(2, 4));
}

TEST_CASE("field_make rejects a composite characteristic") {
  CHECK(CodeOf([] { Field::Make(4); }) == ErrorCode::kInvalidCharacteristic);
  CHECK(CodeOf([] { Field::Make(1); }) == ErrorCode::kInvalidCharacteristic);
  CHECK(CodeOf([] { Field::Make(9, 2); }) ==
        ErrorCode::kInvalidCharacteristic);
}

TEST_CASE("OfOrder splits prime powers") {
  CHECK(Field::OfOrder(16)->degree() == 4);
  CHECK(Field::OfOrder(9)->characteristic() == 3);
  CHECK(CodeOf([] { Field::OfOrder(6); }).has_value());
}

TEST_CASE("primitive elements") {
  CHECK(Field::Make(2)->primitive() == 1);
  CHECK(Field::Make(3)->primitive() == 2);
  CHECK(Field::Make(2, 2)->primitive() == 2);  // the class of x
  CHECK(Field::Make(7)->primitive() == 3);
  // x has order 4 in F_3[x]/(x^2+1); the smallest generator is x + 1.
  CHECK(Field::Make(3, 2)->primitive() == 4);
  for (auto [p, e] : {std::pair{2, 4}, {3, 3}, {5, 2}, {2, 8}, {13, 1}}) {
    auto f = Field::Make(p, e);
    const Elem g = f->primitive();
    Elem x = 1;
    for (int i = 1; i < f->size() - 1; ++i) {
      x = f->mul(x, g);
      REQUIRE(x != 1);
    }
    CHECK(f->mul(x, g) == 1);
    for (Elem smaller = 1; smaller < g; ++smaller) {
      Elem y = smaller;
      int order = 1;
      while (y != 1) {
        y = f->mul(y, smaller);
        ++order;
      }
      CHECK(order < f->size() - 1);
    }
  }
}

TEST_CASE("inverse of alpha in F_4 is alpha squared") {
  auto f = Field::Make(2, 2);
  const Elem a = f->primitive();
  CHECK(f->inv(a) == f->mul(a, a));
  CHECK(CodeOf([&] { f->inv(0); }) == ErrorCode::kDivisionByZero);
}

TEST_CASE("field axioms hold exhaustively for fields of order at most 64") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64}) {
    CAPTURE(q);
    auto f = Field::OfOrder(q);
    int bad = 0;
    for (int a = 0; a < q; ++a) {
      if (f->add(a, f->neg(a)) != 0) ++bad;
      if (a != 0 && f->mul(a, f->inv(a)) != 1) ++bad;
      if (f->add(a, 0) != a || f->mul(a, 1) != a) ++bad;
      for (int b = 0; b < q; ++b) {
        if (f->add(a, b) != f->add(b, a) || f->mul(a, b) != f->mul(b, a)) ++bad;
        if (f->sub(f->add(a, b), b) != a) ++bad;
        for (int c = 0; c < q; ++c) {
          if (f->add(f->add(a, b), c) != f->add(a, f->add(b, c))) ++bad;
          if (f->mul(f->mul(a, b), c) != f->mul(a, f->mul(b, c))) ++bad;
          if (f->mul(a, f->add(b, c)) != f->add(f->mul(a, b), f->mul(a, c)))
            ++bad;
        }
      }
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("frobenius is an automorphism fixing the subfield") {
  for (auto [q, sub] : {std::pair{4, 2}, {8, 2}, {16, 2}, {16, 4}, {9, 3},
                        {27, 3}, {64, 2}, {64, 4}, {64, 8}, {25, 5}}) {
    CAPTURE(q);
    CAPTURE(sub);
    auto f = Field::OfOrder(q);
    int fixed = 0;
    for (int a = 0; a < q; ++a) {
      if (f->frobenius(a, sub) == a) ++fixed;
      CHECK(f->frobenius(a, sub) == f->pow(a, sub));
      for (int b = 0; b < q; ++b) {
        CHECK(f->frobenius(f->add(a, b), sub) ==
              f->add(f->frobenius(a, sub), f->frobenius(b, sub)));
        CHECK(f->frobenius(f->mul(a, b), sub) ==
              f->mul(f->frobenius(a, sub), f->frobenius(b, sub)));
      }
    }
    CHECK(fixed == sub);
  }
  auto f16 = Field::Make(2, 4);
  CHECK(f16->frobenius(0, 2) == 0);
  CHECK(f16->frobenius(1, 2) == 1);
}

TEST_CASE("element strings are low-degree-first digits") {
  auto f = Field::Make(2, 4);
  CHECK(f->Format(f->primitive()) == "0100");
  CHECK(f->Parse("0100") == f->primitive());
  CHECK(f->Format(1) == "1000");
  for (int a = 0; a < 16; ++a) CHECK(f->Parse(f->Format(a)) == a);
  CHECK(Field::Make(7)->Format(5) == "5");
  CHECK(CodeOf([&] { f->Parse("012"); }) == ErrorCode::kParse);
  CHECK(CodeOf([&] { f->Parse("0200"); }) == ErrorCode::kParse);
  CHECK(CodeOf([] { Field::Make(7)->Parse("7"); }) == ErrorCode::kParse);
}

TEST_CASE("rref examples") {
  auto f2 = Field::Make(2);
  Echelon id = Rref(Matrix::Identity(f2, 3));
  CHECK(id.reduced == Matrix::Identity(f2, 3));
  CHECK(id.pivots == std::vector<int>{0, 1, 2});

  Echelon zero = Rref(Matrix(f2, 2, 3));
  CHECK(zero.reduced == Matrix(f2, 2, 3));
  CHECK(zero.pivots.empty());

  auto f4 = Field::Make(2, 2);
  const Elem a = f4->primitive();
  const Elem a2 = f4->mul(a, a);
  Echelon e = Rref(Mat(f4, {{1, a}, {a, a2}}));
  CHECK(e.reduced == Mat(f4, {{1, a}, {0, 0}}));
  CHECK(e.pivots == std::vector<int>{0});
}

TEST_CASE("rank, kernel and det examples") {
  auto f2 = Field::Make(2);
  CHECK(Rank(Matrix::Identity(f2, 5)) == 5);
  CHECK(Det(Mat(f2, {{1, 1}, {1, 1}})) == 0);
  auto f5 = Field::Make(5);
  CHECK(Det(Mat(f5, {{1, 2, 3}, {4, 0, 1}, {1, 2, 3}})) == 0);
  CHECK(KernelBasis(Mat(f2, {{1, 1}})) == Mat(f2, {{1, 1}}));
  CHECK(CodeOf([&] { Det(Matrix(f2, 2, 3)); }) == ErrorCode::kShape);
  CHECK(CodeOf([&] { Multiply(Matrix(f2, 2, 3), Matrix(f2, 2, 3)); }) ==
        ErrorCode::kShape);
  CHECK(Transpose(Mat(f5, {{1, 2, 3}})) == Mat(f5, {{1}, {2}, {3}}));
}

Matrix RandomMatrix(const FieldPtr& f, int r, int c, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, f->size() - 1);
  std::vector<Elem> data(static_cast<size_t>(r) * c);
  for (Elem& x : data) x = static_cast<Elem>(d(rng));
  return Matrix(f, r, c, std::move(data));
}

bool SameRowSpace(const Matrix& a, const Matrix& b) {
  const int ra = Rank(a), rb = Rank(b);
  return ra == rb && Rank(StackRows(a, b)) == ra;
}

TEST_CASE("rref is idempotent and preserves the row space") {
  std::mt19937_64 rng(7);
  for (int q : {2, 3, 4, 9, 16}) {
    auto f = Field::OfOrder(q);
    for (int t = 0; t < 200; ++t) {
      Matrix m = RandomMatrix(f, 1 + t % 5, 1 + (t / 5) % 6, rng);
      Echelon e = Rref(m);
      CHECK(Rref(e.reduced).reduced == e.reduced);
      CHECK(SameRowSpace(m, e.reduced));
      CHECK(static_cast<int>(e.pivots.size()) == Rank(m));
    }
  }
}

TEST_CASE("rank and kernel are consistent") {
  std::mt19937_64 rng(11);
  for (int q : {2, 3, 8, 25}) {
    auto f = Field::OfOrder(q);
    for (int t = 0; t < 150; ++t) {
      Matrix m = RandomMatrix(f, 1 + t % 4, 1 + (t / 4) % 6, rng);
      Matrix k = KernelBasis(m);
      CHECK(k.rows() == m.cols() - Rank(m));
      if (k.rows() > 0) {
        Matrix prod = Multiply(m, Transpose(k));
        CHECK(Rank(prod) == 0);
      }
      CHECK(Rank(m) == m.rows() - KernelBasis(Transpose(m)).rows());
    }
  }
}

TEST_CASE("rank and det are multiplicative bounds") {
  // Exhaustive over 2x2 matrices on F_2 and F_3.
  for (int q : {2, 3}) {
    auto f = Field::OfOrder(q);
    const int total = q * q * q * q;
    std::vector<Matrix> all;
    for (int code = 0; code < total; ++code) {
      std::vector<Elem> data(4);
      int c = code;
      for (Elem& x : data) {
        x = static_cast<Elem>(c % q);
        c /= q;
      }
      all.emplace_back(f, 2, 2, std::move(data));
    }
    int bad = 0;
    for (const Matrix& a : all) {
      for (const Matrix& b : all) {
        Matrix ab = Multiply(a, b);
        if (Det(ab) != f->mul(Det(a), Det(b))) ++bad;
        if (Rank(ab) > std::min(Rank(a), Rank(b))) ++bad;
        if ((Det(a) != 0) != (Rank(a) == 2)) ++bad;
      }
    }
    CHECK(bad == 0);
  }
  std::mt19937_64 rng(3);
  for (int q : {4, 5, 16}) {
    auto f = Field::OfOrder(q);
    for (int t = 0; t < 100; ++t) {
      const int n = 1 + t % 4;
      Matrix a = RandomMatrix(f, n, n, rng), b = RandomMatrix(f, n, n, rng);
      CHECK(Det(Multiply(a, b)) == f->mul(Det(a), Det(b)));
      Matrix c = RandomMatrix(f, n, 3, rng);
      CHECK(Rank(Multiply(a, c)) <= std::min(Rank(a), Rank(c)));
    }
  }
}

TEST_CASE("matrix entries must lie in the field") {
  auto f = Field::Make(3);
  CHECK(CodeOf([&] { Matrix(f, 1, 1, {3}); }).has_value());
  CHECK(CodeOf([&] { Matrix(f, 1, 2, {1}); }) == ErrorCode::kShape);
}

}  // namespace
}  // namespace qmat
