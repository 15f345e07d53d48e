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

#ifndef QMAT_FIELD_HPP_
#define QMAT_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace qmat {

// A field element is its coefficient vector read as a base-p number with the
// constant coefficient least significant. This is also the element order used
// for every canonical form in the library.
using Elem = std::uint16_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Largest supported field order.
inline constexpr int kMaxFieldSize = 1 << 16;

bool IsPrime(long long v);

// Splits a prime power q = p^e. Returns false if q is not a prime power.
bool SplitPrimePower(long long q, int* p, int* e);

// Finite field F_{p^e} in polynomial representation modulo a monic
// irreducible polynomial of degree e. Construction picks the smallest monic
// irreducible in element order, so equal (p, e) always give the same modulus.
// Instances are immutable and shared through Field::Make.
class Field {
 public:
  // Throws kInvalidCharacteristic for non-prime p.
  static FieldPtr Make(int p, int e = 1);
  // Field of order q (a prime power).
  static FieldPtr OfOrder(int q);

  int characteristic() const { return p_; }
  int degree() const { return e_; }
  int size() const { return size_; }
  // Low-degree-first coefficients of the modulus including the leading 1;
  // empty for prime fields.
  const std::vector<int>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return static_cast<Elem>(a ^ b);
    if (!add_table_.empty()) return add_table_[a * size_ + b];
    return AddSlow(a, b);
  }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  // Throws kDivisionByZero on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, unsigned long long k) const;
  // a^q for a subfield order q dividing the field order.
  Elem frobenius(Elem a, int q) const;

  // Smallest element of multiplicative order size() - 1.
  Elem primitive() const { return primitive_; }
  // Discrete log base primitive(); a must be nonzero.
  int log(Elem a) const { return log_[a]; }
  Elem exp(int k) const;

  std::vector<int> digits(Elem a) const;
  Elem FromDigits(std::span<const int> digits) const;
  // Base-p digit string, constant coefficient first ("0100" is x in F_16).
  std::string Format(Elem a) const;
  Elem Parse(const std::string& s) const;

  bool operator==(const Field& o) const { return p_ == o.p_ && e_ == o.e_; }

  Field(int p, int e);  // use Make

 private:
  Elem AddSlow(Elem a, Elem b) const;
  Elem MulSlow(Elem a, Elem b) const;

  int p_;
  int e_;
  int size_;
  std::vector<int> modulus_;
  std::vector<Elem> add_table_;
  std::vector<Elem> neg_;
  std::vector<Elem> exp_;  // doubled so exp_[i + j] needs no reduction
  std::vector<int> log_;
  Elem primitive_ = 1;
};

}  // namespace qmat

#endif  // QMAT_FIELD_HPP_
