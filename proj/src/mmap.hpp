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

#ifndef FFK_MMAP_HPP
#define FFK_MMAP_HPP

#include <optional>
#include <string>

#include "invariants.hpp"
#include "sympoly.hpp"

namespace ffk {

/// Small sparse rational matrix keyed by (row, col).
struct SparseMat {
  int dim = 0;
  std::unordered_map<long, Rat> e;

  void add(int i, int j, const Rat& c) {
    if (is_zero(c)) return;
    long key = long(i) * dim + j;
    auto it = e.find(key);
    if (it == e.end()) e.emplace(key, c);
    else {
      it->second += c;
      if (is_zero(it->second)) e.erase(it);
    }
  }
  Rat at(int i, int j) const {
    auto it = e.find(long(i) * dim + j);
    return it == e.end() ? Rat(0) : it->second;
  }
  bool empty() const { return e.empty(); }

  std::vector<Rat> apply(const std::vector<Rat>& v) const {
    std::vector<Rat> out(size_t(dim), Rat(0));
    for (const auto& [key, c] : e) out[size_t(key / dim)] += c * v[size_t(key % dim)];
    return out;
  }
};

/// Element of gl(g) (x) S(g): per-monomial coefficient matrices.  For
/// images of the map m, every coefficient matrix is B-skew.
struct MatPoly {
  int dim = 0;
  int input_degree = 0;  // the k of the source S^k(g)
  std::unordered_map<Word, SparseMat, WordHash> by_monomial;

  bool empty() const { return by_monomial.empty(); }
  /// The (i,j) entry as a polynomial (the spec's sparse-entry view).
  Poly entry(int i, int j) const;
};

/// The degree-lowering map m = m_3: S^k(g) -> Lambda^2 g (x) S^{k-3}(g),
/// computed monomial-by-monomial through the six-term ad average with the
/// 3!(k-3)!/k! normalisation; zero for k <= 2.
MatPoly m3(const LieAlgebra& g, const Poly& f);

/// Exact inverse of ad on its image, with a least-squares certificate
/// w.r.t. the trace pairing when the matrix is not in ad(g).
struct PullbackResult {
  std::vector<Rat> element;  // coordinates of xi with ad(xi) ~ m
  SparseMat residual;        // m - ad(xi); empty iff the pullback is exact
  bool exact = false;
};
PullbackResult ad_pullback(const LieAlgebra& g, const SparseMat& m);

/// Result of lifting m(F) back into the symmetric algebra.
struct LiftResult {
  enum Status { kLifted, kPullbackFailed, kAsymmetric } status = kLifted;
  Poly value;  // defined when status == kLifted
  std::string detail;
  bool ok() const { return status == kLifted; }
};

/// Lift of a MatPoly with matrices in ad(g) to an element of S^{k-2}(g):
/// pulls back every coefficient matrix, forms the candidate sum and
/// verifies the canonical first-slot embedding (Euler identity).
LiftResult lift_to_sym(const LieAlgebra& g, const MatPoly& m);

/// m_{2r+1} as the r-fold iterate of lift . m3.
LiftResult m_power(const LieAlgebra& g, const Poly& f, int r);

/// Exact scalar c with p = c q; nullopt on failure (q = 0 with p != 0
/// included).
std::optional<Rat> identify_scalar(const Poly& p, const Poly& q);

/// One line of the G2 probe report.
struct ProbeLine {
  std::string name;
  std::string expected;
  bool pass = false;
};

/// Extracts the tensor coefficients of m(Delta_2^3) and m(Delta_6) named in
/// the G2 lemmas and compares them with the recorded constants.
std::vector<ProbeLine> g2_probe_suite();

/// Direct 5-factor m_5 on S^k (desk-scale cross-check oracle): averages
/// ad(y_{s(1)})...ad(y_{s(5)}) over all arrangements of each position
/// 5-subset, with the 5!(k-5)!/k! normalisation.
MatPoly m5_direct(const LieAlgebra& g, const Poly& f);

}  // namespace ffk

#endif
