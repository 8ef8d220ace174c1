/*
   Copyright 2026 The ffkernel authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FFK_LIEALG_HPP
#define FFK_LIEALG_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rat.hpp"
#include "smallmat.hpp"

namespace ffk {

/// Canonical basis label.  E[i,j] for gl/sl, F[i,j] for the sp/so
/// realisations w.r.t. the antidiagonal form, Fo[i,j] for plain
/// skew-symmetric matrices, and the fourteen G2 letters.
struct BasisLabel {
  enum Kind { kE, kF, kFo, kH, kG2 } kind;
  int i = 0;  // row, or G2 letter id for kG2
  int j = 0;  // column

  std::string str() const;
  static BasisLabel parse(const std::string& s);
  friend bool operator==(const BasisLabel& a, const BasisLabel& b) {
    return a.kind == b.kind && a.i == b.i && a.j == b.j;
  }
};

/// Names of the G2 letters in basis order.
extern const char* const kG2Letters[14];

/// Sparse element of the algebra: list of (basis index, coefficient).
using SparseVec = std::vector<std::pair<int, Rat>>;

SparseVec sparse_normalize(SparseVec v);
SparseVec sparse_add(const SparseVec& a, const SparseVec& b);
SparseVec sparse_scale(const SparseVec& a, const Rat& c);

/// A finite-dimensional Lie algebra with exact rational structure
/// constants, a non-degenerate invariant symmetric form B and dual bases.
/// Instances are immutable after construction and safe to share.
class LieAlgebra {
 public:
  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  int rank() const { return rank_; }
  const std::vector<BasisLabel>& basis() const { return basis_; }
  const std::vector<int>& cartan() const { return cartan_; }

  /// [x_i, x_j] as a sparse vector in the basis.
  const SparseVec& bracket(int i, int j) const {
    return bracket_[size_t(i) * dim_ + j];
  }
  SparseVec bracket_vec(const SparseVec& x, const SparseVec& y) const;

  const RatMat& form() const { return form_; }
  const RatMat& form_inv() const { return form_inv_; }
  Rat form_at(const SparseVec& x, const SparseVec& y) const;

  /// Dual basis vector x^a with B(x_b, x^a) = delta_ab, as a sparse vector.
  const SparseVec& dual_basis_vector(int a) const { return dual_[size_t(a)]; }

  /// dim x dim matrix of ad(x): column j is [x, x_j].
  RatMat ad_matrix(const SparseVec& x) const;
  RatMat ad_matrix(int i) const;

  int index_of(const BasisLabel& l) const;

  /// Label of placed basis vectors in serialized form ("F[1,2]", "g2:a", ...).
  std::string label_str(int i) const { return basis_[size_t(i)].str(); }

  // -- constructors ---------------------------------------------------------

  static std::shared_ptr<const LieAlgebra> gl(int n);
  static std::shared_ptr<const LieAlgebra> sl(int n);
  static std::shared_ptr<const LieAlgebra> sp(int two_n);
  static std::shared_ptr<const LieAlgebra> so(int n);
  static std::shared_ptr<const LieAlgebra> so_skew(int two_n);
  static std::shared_ptr<const LieAlgebra> g2();

  /// Parses "gl3", "sl4", "sp6", "so7", "so_skew8", "g2".
  static std::shared_ptr<const LieAlgebra> by_name(const std::string& name);

  // -- helpers for gl-type labels ------------------------------------------

  /// gl/sl/sp/so builders keep a dense lookup (i,j) -> basis index for their
  /// matrix labels; -1 where the label is not canonical.
  int matrix_index(int i, int j) const {
    if (matrix_lookup_.empty()) return -1;
    return matrix_lookup_[size_t(i - 1) * matrix_n_ + (j - 1)];
  }
  int matrix_n() const { return matrix_n_; }

  /// Expansion of the non-canonical generic-matrix entry (i,j) in the basis
  /// (used by the sp/so invariant builders): entry = coeff * basis[idx], or
  /// zero.  For gl both i,j arbitrary; see each builder for conventions.
  std::pair<int, Rat> matrix_entry(int i, int j) const;

  /// The defining-representation matrices of the basis (absent for g2,
  /// whose 7x7 realisation lives over Q(sqrt 2); see g2_rep()).
  const std::vector<RatMat>& rep() const { return rep_; }

  /// 7x7 matrices over Q(sqrt2) for the G2 basis.
  const std::vector<Matrix<QSqrt2>>& g2_rep() const { return g2_rep_; }

 private:
  friend class LieAlgebraBuilder;
  std::string name_;
  int dim_ = 0;
  int rank_ = 0;
  std::vector<BasisLabel> basis_;
  std::vector<int> cartan_;
  std::vector<SparseVec> bracket_;  // dim*dim table
  RatMat form_, form_inv_;
  std::vector<SparseVec> dual_;
  std::vector<int> matrix_lookup_;
  int matrix_n_ = 0;
  std::vector<RatMat> rep_;
  std::vector<Matrix<QSqrt2>> g2_rep_;
};

using AlgPtr = std::shared_ptr<const LieAlgebra>;

/// The Weyl involution of gl_n: E_ij -> -E_ji, as a (signed) basis map.
/// Returns, per basis index i, the pair (image index, sign).
std::vector<std::pair<int, Rat>> weyl_involution_gl(const LieAlgebra& gl);

/// A bracket-preserving change of basis between so_skew(2n) and so(2n).
/// No such map exists over Q (rational skew matrices have no non-zero
/// nilpotents, the antidiagonal realisation has plenty), so the map lives
/// over Q(i): column a holds the image of the a-th Fo basis vector in the
/// F basis.  Verified on all basis pairs by the tests.
Matrix<QGauss> so_skew_to_so(const LieAlgebra& skew, const LieAlgebra& so);

}  // namespace ffk

#endif
