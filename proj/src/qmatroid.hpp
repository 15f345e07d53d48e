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

#ifndef QMAT_QMATROID_HPP_
#define QMAT_QMATROID_HPP_

#include <span>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace qmat {

// A q-matroid on F_q^n as one rank value per subspace id of the lattice.
class RankTable {
 public:
  // Checks only the table size; the rank axioms are left to CheckAxioms.
  RankTable(LatticePtr lattice, std::vector<int> ranks);
  // As above, then throws kInvalidTable unless all three axioms hold.
  static RankTable Validated(LatticePtr lattice, std::vector<int> ranks);

  const LatticeIndex& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  int q() const { return lattice_->q(); }
  int n() const { return lattice_->n(); }
  int size() const { return static_cast<int>(ranks_.size()); }

  int operator[](int id) const { return ranks_[id]; }
  int RankOf(const Subspace& v) const { return ranks_[lattice_->IdOf(v)]; }
  // Rank of the q-matroid, i.e. of the full space.
  int rank() const { return ranks_.back(); }
  const std::vector<int>& ranks() const { return ranks_; }

  bool operator==(const RankTable& o) const {
    return q() == o.q() && n() == o.n() && ranks_ == o.ranks_;
  }

 private:
  LatticePtr lattice_;
  std::vector<int> ranks_;
};

// Result of checking the rank axioms. On failure `axiom` is 1, 2 or 3 and
// the witness ids reproduce the violation (second is -1 for axiom 1).
struct AxiomReport {
  bool pass = true;
  int axiom = 0;
  int first = -1;
  int second = -1;

  std::string Describe() const;
};

// Axiom 1 over all subspaces, then every pair (i < j) in canonical order:
// axiom 2 for comparable pairs, axiom 3 for incomparable ones.
AxiomReport CheckAxioms(const RankTable& t);

// U_{k,n}: rank min(k, dim V).
RankTable Uniform(int q, int n, int k);

// Paving q-matroid of rank k whose rank-(k-1) circuits are exactly `s`.
// Members must be k-dimensional and pairwise meet in dimension <= k - 2;
// otherwise throws kInvalidCollection naming the offending pair.
RankTable PavingFromCollection(int q, int n, int k,
                               std::span<const Subspace> s);

// rho*(V) = dim V + rho(V^perp) - rho(E).
RankTable Dualize(const RankTable& t);

struct DerivedStructure {
  int rank = 0;
  std::vector<int> independents;
  std::vector<int> bases;
  std::vector<int> circuits;
  std::vector<int> loops;
  int loop_space = 0;
  bool is_paving = false;
};

// Circuits are found as dependent spaces whose hyperplanes are all
// independent, which suffices because independence is closed downwards.
DerivedStructure Derive(const RankTable& t);

// Every rank table on F_q^n satisfying the axioms with rho(E) <= k_max, in
// lexicographic order of the rank vectors. Backtracks over the canonical
// lattice order; bounded by the lattice table limit and 10^6 results.
std::vector<RankTable> EnumerateQMatroids(int q, int n, int k_max);

}  // namespace qmat

#endif  // QMAT_QMATROID_HPP_
