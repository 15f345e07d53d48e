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

#ifndef QMAT_CDC_HPP_
#define QMAT_CDC_HPP_

#include <optional>
#include <span>
#include <vector>

#include "qmatroid.hpp"
#include "repr_codes.hpp"

namespace qmat {

// Distinct k-dimensional subspaces of F_q^n under the subspace distance.
class ConstantDimensionCode {
 public:
  // Throws kInvalidCollection on duplicates or wrong dimensions and
  // kAmbientMismatch on codewords from another space.
  ConstantDimensionCode(int q, int n, int k, std::vector<Subspace> codewords);

  int q() const { return q_; }
  int n() const { return n_; }
  int k() const { return k_; }
  int size() const { return static_cast<int>(codewords_.size()); }
  const std::vector<Subspace>& codewords() const { return codewords_; }

 private:
  int q_;
  int n_;
  int k_;
  std::vector<Subspace> codewords_;
};

// Pairwise minimum of d_S; kUndefinedDistance for fewer than two codewords.
int MinSubspaceDistance(const ConstantDimensionCode& c);

// Same value as MinSubspaceDistance for codes whose codewords are all
// rowspan[I_k | M] with the matrices M forming an F_q-linear space, in linear
// rather than quadratic time. The shear (u, w) -> (u, w - uA) is a linear
// automorphism carrying the pair (U_A, U_B) to (U_0, U_{B-A}), so only
// distances from U_0 are computed. Returns nullopt when the code does not
// have that shape.
std::optional<int> MinSubspaceDistanceLinearLift(const ConstantDimensionCode& c);

// Gabidulin code over F_{q^m}: row i is (g_j^{q^i})_j for the evaluation
// points g_j = a^j, j < n, with a the primitive element. Needs
// 1 <= k <= n <= m and q prime. Minimum rank distance is n - k + 1.
GeneratorMatrix GabidulinCode(int q, int m, int n, int k);

// Lifted Gabidulin code: each codeword of the [k, k - d/2 + 1] Gabidulin code
// over F_{q^(n-k)} is expanded over the power basis of the primitive element
// into a k x (n-k) matrix M and lifted to rowspan [I_k | M]. The result has
// q^((n-k)(k-d/2+1)) codewords in canonical order and distance >= d.
// Needs q prime, 2k <= n, d even, 4 <= d <= 2k.
ConstantDimensionCode LiftedMrd(int q, int n, int k, int d);

// Paving q-matroid of a CDC with distance >= 4 (or at most one codeword);
// throws kInvalidCollection otherwise.
RankTable CdcToPaving(const ConstantDimensionCode& c);

// True iff no two members meet in dimension k - 1 (an independent set of the
// Grassmann graph). Throws kInvalidArgument on mixed dimensions.
bool GrassmannIndependent(std::span<const Subspace> s, int k);

// Greedy pass over the k-subspaces in canonical order, keeping each one that
// meets all kept ones trivially.
std::vector<Subspace> GreedySpread(int q, int n, int k);

}  // namespace qmat

#endif  // QMAT_CDC_HPP_
