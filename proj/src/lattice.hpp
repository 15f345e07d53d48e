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

#ifndef QMAT_LATTICE_HPP_
#define QMAT_LATTICE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "matrix.hpp"

namespace qmat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A subspace of F_q^n held by its canonical basis: the RREF of any spanning
// matrix with zero rows dropped. Two subspaces are equal iff their canonical
// bases are equal.
class Subspace {
 public:
  Subspace() = default;

  static Subspace FromRows(const Matrix& rows);
  static Subspace Zero(FieldPtr field, int n);
  static Subspace Full(FieldPtr field, int n);
  // `basis` must already be in RREF without zero rows.
  static Subspace FromCanonical(Matrix basis);

  int dim() const { return basis_.rows(); }
  int ambient_dim() const { return basis_.cols(); }
  int q() const { return basis_.field().size(); }
  const Field& field() const { return basis_.field(); }
  const FieldPtr& field_ptr() const { return basis_.field_ptr(); }
  const Matrix& basis() const { return basis_; }

  // True if `other` is a subspace of *this.
  bool Contains(const Subspace& other) const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

// Dimension ascending, then lexicographic on the canonical basis entries.
bool CanonicalLess(const Subspace& a, const Subspace& b);

Subspace Sum(const Subspace& a, const Subspace& b);
// Kernel method: V ∩ W is the common null space of the complements' bases.
Subspace Intersect(const Subspace& a, const Subspace& b);
// Orthogonal complement under the standard dot product.
Subspace OrthoComplement(const Subspace& v);
int SubspaceDistance(const Subspace& a, const Subspace& b);

// All k-subspaces of field^n as a flat buffer of canonical k x n bases in
// canonical order. Built from RREF pivot profiles and free-entry assignments.
std::vector<Elem> GrassmannianFlat(const Field& field, int n, int k);
std::vector<Subspace> EnumerateGrassmannian(FieldPtr field, int n, int k);
std::vector<Subspace> EnumerateGrassmannian(int q, int n, int k);

// Exact Gaussian binomial [n choose k]_q.
BigInt GaussianBinomial(int n, int k, long long q);

// The full subspace lattice of F_q^n in canonical order, with join, meet,
// complement and hyperplane (lower cover) lookups. Build once, then shared
// read-only.
class LatticeIndex {
 public:
  static constexpr long long kMaxSize = 100000;
  // Join/meet tables are precomputed up to this many subspaces.
  static constexpr int kTableLimit = 1024;
  // Subspaces are also held as bitsets over the q^n vectors up to this size.
  static constexpr long long kMaxPoints = 4096;

  // Cached per (q, n). Throws kCeiling above kMaxSize subspaces.
  static std::shared_ptr<const LatticeIndex> Get(int q, int n);

  LatticeIndex(int q, int n);  // use Get

  int q() const { return q_; }
  int n() const { return n_; }
  const FieldPtr& field_ptr() const { return field_; }
  int size() const { return static_cast<int>(subspaces_.size()); }
  int zero_id() const { return 0; }
  int full_id() const { return size() - 1; }

  const Subspace& at(int id) const { return subspaces_[id]; }
  int dim(int id) const { return subspaces_[id].dim(); }
  // Ids of dimension d occupy [begin_of_dim(d), begin_of_dim(d + 1)).
  int begin_of_dim(int d) const { return dim_begin_[d]; }

  // Throws kAmbientMismatch if `s` is not a subspace of this F_q^n.
  int IdOf(const Subspace& s) const;
  std::optional<int> Find(std::span<const Elem> canonical_entries) const;

  int Join(int a, int b) const;
  int Meet(int a, int b) const;
  bool Leq(int a, int b) const;
  int Complement(int id) const { return complement_[id]; }
  std::span<const int> Hyperplanes(int id) const {
    return {hyperplanes_.data() + hyper_begin_[id],
            static_cast<size_t>(hyper_begin_[id + 1] - hyper_begin_[id])};
  }

 private:
  const uint64_t* points(int id) const {
    return points_.data() + static_cast<size_t>(id) * words_;
  }
  int IdOfPoints(const uint64_t* set) const;
  size_t PointHash(const uint64_t* set) const;

  struct KeyHash {
    size_t operator()(const std::vector<Elem>& v) const;
  };

  int q_;
  int n_;
  FieldPtr field_;
  std::vector<Subspace> subspaces_;
  std::vector<int> dim_begin_;
  std::unordered_map<std::vector<Elem>, int, KeyHash> ids_;
  std::vector<int> complement_;
  std::vector<int> hyperplanes_;
  std::vector<int> hyper_begin_;
  std::vector<int> join_;  // row-major size x size, empty above kTableLimit
  std::vector<int> meet_;
  int words_ = 0;  // 0 when q^n exceeds kMaxPoints
  std::vector<uint64_t> points_;
  std::vector<int> point_slots_;  // open addressing, -1 marks empty
};

using LatticePtr = std::shared_ptr<const LatticeIndex>;

}  // namespace qmat

#endif  // QMAT_LATTICE_HPP_
