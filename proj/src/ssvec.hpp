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

#ifndef FFK_SSVEC_HPP
#define FFK_SSVEC_HPP

#include <map>

#include "mmap.hpp"
#include "uea.hpp"

namespace ffk {

/// One assembled term of a Segal-Sugawara candidate: coefficient times
/// varpi(tau^{2r} INV[-1]) . 1 (r = 0 is the plain symmetrised head).
struct SSTerm {
  Rat coeff;
  std::string invariant;
  int k = 0;  // the index of the invariant in its family
  int r = 0;
};

/// A constructed Segal-Sugawara vector with its defining metadata.
struct SSCandidate {
  AlgPtr alg;
  std::string family;  // A | C | BD | Pf | G2 | generic
  int n = 0;           // rank datum of the family
  int k = 0;           // which generator
  NCPoly value;
  std::vector<SSTerm> meta;
};

SSCandidate ss_typeA(UEnv& env, int n, int k);
SSCandidate ss_typeC(UEnv& env, int two_n, int k);
SSCandidate ss_typeBD(UEnv& env, int n, int k);
SSCandidate ss_pfaffian(UEnv& env, int two_n);
SSCandidate ss_g2(UEnv& env);

/// Formula (universal form): varpi(H[-1]) + sum_r binom(k,2r)
/// varpi(tau^{2r} m^r(H)[-1]) . 1, valid when every iterate of m lifts.
/// Throws LiftResult-carrying failure through the returned status.
struct SSGenericResult {
  bool ok = false;
  std::string detail;
  SSCandidate candidate;
};
SSGenericResult ss_generic(UEnv& env, const Poly& h);

/// [H[-1], S]; the candidate is central iff this is exactly zero.
NCPoly verify_central(UEnv& env, const SSCandidate& s);

/// Symbols generate S(g)^g: extracts gr, strips the grading and runs the
/// Jacobian independence check.
bool verify_complete_set(UEnv& env, const std::vector<SSCandidate>& set);

/// X_{F[abar]} = [H[bbar], varpi(F[abar])] - varpi({H[bbar], F[abar]}).
NCPoly x_decomposition(UEnv& env, const Poly& f, const std::vector<int>& abar,
                       int b1, int b2);

/// The symbol of H[b1,b2] as a commutative polynomial.
Poly casimir_sym_poly(const LieAlgebra& g, int b1, int b2);

/// The structural constants c_{2,3}(j,p), c_{3,2}(j,p) of the first
/// commutator approximation, obtained by an exact over-determined fit of
/// X_Y against the four-shape ansatz for a generic monomial Y.
struct CConstants {
  int m = 0;
  std::map<std::pair<int, int>, Rat> c23, c32;  // keys (j,p), 1 <= j < p <= m-1
  Rat c23_at(int j, int p) const {
    auto it = c23.find({j, p});
    return it == c23.end() ? Rat(0) : it->second;
  }
  Rat c32_at(int j, int p) const {
    auto it = c32.find({j, p});
    return it == c32.end() ? Rat(0) : it->second;
  }
};
CConstants c_constants_probe(int m);

/// Multiset of t-degrees: list of (value, multiplicity), values distinct.
using DegMultiset = std::vector<std::pair<int, int>>;

/// W[F, alpha, (i,j)] per the scalar-product formula; i, j index the
/// distinct values of alpha in the order given.
Poly w_element(UEnv& env, const Poly& f, const DegMultiset& alpha, int i, int j);

/// The universal relations sum_{j != i} W[alpha, (i,j)] = 0 for every i.
bool universal_check(UEnv& env, const Poly& f, const DegMultiset& alpha);

/// Poisson half-bracket P_{Yhat}(b1, b2) = sum_{j,a} [x_a[b2], yhat_j]
/// x^a[b1] Yhat/yhat_j.
Poly half_bracket(UEnv& env, const Poly& yhat, int b1, int b2);

/// Checks Prop P-fs: |S_m abar| P_{Y[abar]}(b1,b2) equals the sum of the
/// admissible W elements.  Returns true when the decomposition matches.
bool half_bracket_w_check(UEnv& env, const Poly& y, const std::vector<int>& abar,
                          int b1, int b2);

}  // namespace ffk

#endif
