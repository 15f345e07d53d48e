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

#include "field.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "error.hpp"

namespace qmat {
namespace {

using Poly = std::vector<int>;  // low-degree-first, coefficients mod p

// Remainder of a modulo the monic polynomial b.
Poly PolyMod(Poly a, const Poly& b, int p) {
  const int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    int c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
    }
  }
  a.resize(std::min<size_t>(a.size(), db));
  return a;
}

bool IsZeroPoly(const Poly& a) {
  for (int c : a)
    if (c != 0) return false;
  return true;
}

// Trial division by every monic polynomial of degree 1..e/2.
bool IsIrreducible(const Poly& f, int p) {
  const int e = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= e / 2; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long v = 0; v < count; ++v) {
      Poly g(d + 1, 0);
      long long t = v;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(t % p);
        t /= p;
      }
      g[d] = 1;
      if (IsZeroPoly(PolyMod(f, g, p))) return false;
    }
  }
  return true;
}

std::vector<long long> PrimeFactors(long long v) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

bool IsPrime(long long v) {
  if (v < 2) return false;
  for (long long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

bool SplitPrimePower(long long q, int* p, int* e) {
  if (q < 2) return false;
  long long base = 0;
  for (long long d = 2; d <= q; ++d) {
    if (q % d == 0) {
      base = d;
      break;
    }
  }
  int exponent = 0;
  while (q % base == 0) {
    q /= base;
    ++exponent;
  }
  if (q != 1) return false;
  *p = static_cast<int>(base);
  *e = exponent;
  return true;
}

FieldPtr Field::Make(int p, int e) {
  Require(IsPrime(p), ErrorCode::kInvalidCharacteristic,
          "characteristic " + std::to_string(p) + " is not prime");
  Require(e >= 1, ErrorCode::kInvalidArgument, "field degree must be >= 1");
  long long size = 1;
  for (int i = 0; i < e; ++i) {
    size *= p;
    Require(size <= kMaxFieldSize, ErrorCode::kCeiling,
            "field order exceeds 65536");
  }
  static std::mutex mu;
  static std::map<std::pair<int, int>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, e}];
  if (!slot) slot = std::make_shared<const Field>(p, e);
  return slot;
}

FieldPtr Field::OfOrder(int q) {
  int p = 0, e = 0;
  Require(SplitPrimePower(q, &p, &e), ErrorCode::kInvalidCharacteristic,
          std::to_string(q) + " is not a prime power");
  return Make(p, e);
}

Field::Field(int p, int e) : p_(p), e_(e), size_(1) {
  for (int i = 0; i < e; ++i) size_ *= p;

  if (e > 1) {
    for (int v = 0; v < size_; ++v) {
      Poly f(e + 1, 0);
      int t = v;
      for (int i = 0; i < e; ++i) {
        f[i] = t % p;
        t /= p;
      }
      f[e] = 1;
      if (IsIrreducible(f, p)) {
        modulus_ = f;
        break;
      }
    }
  }

  neg_.resize(size_);
  for (int a = 0; a < size_; ++a) {
    std::vector<int> d = digits(static_cast<Elem>(a));
    for (int& c : d) c = (p_ - c) % p_;
    neg_[a] = FromDigits(d);
  }
  if (p_ != 2 && size_ <= 1024) {
    add_table_.resize(static_cast<size_t>(size_) * size_);
    for (int a = 0; a < size_; ++a)
      for (int b = 0; b < size_; ++b)
        add_table_[a * size_ + b] =
            AddSlow(static_cast<Elem>(a), static_cast<Elem>(b));
  }

  // Primitive element: smallest a with a^((s-1)/r) != 1 for all primes r.
  const long long order = size_ - 1;
  const std::vector<long long> factors = PrimeFactors(order);
  auto slow_pow = [&](Elem a, long long k) {
    Elem r = 1;
    while (k > 0) {
      if (k & 1) r = MulSlow(r, a);
      a = MulSlow(a, a);
      k >>= 1;
    }
    return r;
  };
  for (int a = 1; a < size_; ++a) {
    bool ok = true;
    for (long long r : factors) {
      if (slow_pow(static_cast<Elem>(a), order / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      primitive_ = static_cast<Elem>(a);
      break;
    }
  }

  exp_.resize(2 * order + 1);
  log_.assign(size_, 0);
  Elem x = 1;
  for (long long i = 0; i < order; ++i) {
    exp_[i] = x;
    log_[x] = static_cast<int>(i);
    x = MulSlow(x, primitive_);
  }
  for (long long i = order; i < 2 * order + 1; ++i) exp_[i] = exp_[i - order];
}

Elem Field::AddSlow(Elem a, Elem b) const {
  int result = 0;
  int place = 1;
  for (int i = 0; i < e_; ++i) {
    result += ((a % p_ + b % p_) % p_) * place;
    a = static_cast<Elem>(a / p_);
    b = static_cast<Elem>(b / p_);
    place *= p_;
  }
  return static_cast<Elem>(result);
}

Elem Field::MulSlow(Elem a, Elem b) const {
  if (e_ == 1) return static_cast<Elem>((a * b) % p_);
  std::vector<int> da = digits(a), db = digits(b);
  Poly prod(2 * e_ - 1, 0);
  for (int i = 0; i < e_; ++i)
    for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  Poly r = PolyMod(prod, modulus_, p_);
  r.resize(e_, 0);
  return FromDigits(r);
}

Elem Field::inv(Elem a) const {
  Require(a != 0, ErrorCode::kDivisionByZero, "inverse of zero");
  const int order = size_ - 1;
  return exp_[(order - log_[a]) % order];
}

Elem Field::pow(Elem a, unsigned long long k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  const unsigned long long order = size_ - 1;
  return exp_[(static_cast<unsigned long long>(log_[a]) * (k % order)) % order];
}

Elem Field::exp(int k) const {
  const int order = size_ - 1;
  return exp_[((k % order) + order) % order];
}

Elem Field::frobenius(Elem a, int q) const {
  int sp = 0, se = 0;
  Require(SplitPrimePower(q, &sp, &se) && sp == p_ && e_ % se == 0,
          ErrorCode::kInvalidArgument,
          std::to_string(q) + " is not a subfield order of this field");
  return pow(a, static_cast<unsigned long long>(q));
}

std::vector<int> Field::digits(Elem a) const {
  std::vector<int> out(e_);
  for (int i = 0; i < e_; ++i) {
    out[i] = a % p_;
    a = static_cast<Elem>(a / p_);
  }
  return out;
}

Elem Field::FromDigits(std::span<const int> d) const {
  int v = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p_ + d[i];
  return static_cast<Elem>(v);
}

std::string Field::Format(Elem a) const {
  if (e_ == 1) return std::to_string(a);
  std::string out;
  for (int c : digits(a)) {
    // Digits above 9 use letters; only reachable for p > 10.
    out.push_back(c < 10 ? static_cast<char>('0' + c)
                         : static_cast<char>('a' + c - 10));
  }
  return out;
}

Elem Field::Parse(const std::string& s) const {
  if (e_ == 1) {
    Require(!s.empty() && s.size() <= 5 &&
                s.find_first_not_of("0123456789") == std::string::npos,
            ErrorCode::kParse, "bad prime-field element '" + s + "'");
    const int v = std::stoi(s);
    Require(v < p_, ErrorCode::kParse, "element '" + s + "' out of range");
    return static_cast<Elem>(v);
  }
  Require(static_cast<int>(s.size()) == e_, ErrorCode::kParse,
          "element '" + s + "' must have " + std::to_string(e_) + " digits");
  std::vector<int> d;
  for (char ch : s) {
    int c = -1;
    if (ch >= '0' && ch <= '9') c = ch - '0';
    if (ch >= 'a' && ch <= 'z') c = ch - 'a' + 10;
    Require(c >= 0 && c < p_, ErrorCode::kParse,
            "bad digit in element '" + s + "'");
    d.push_back(c);
  }
  return FromDigits(d);
}

}  // namespace qmat
