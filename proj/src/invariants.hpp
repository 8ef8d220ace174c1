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

#ifndef FFK_INVARIANTS_HPP
#define FFK_INVARIANTS_HPP

#include "sympoly.hpp"

namespace ffk {

/// Coefficients of the characteristic polynomial of gl_n: the sum of the
/// principal k x k minors of the generic matrix (E_ij).
Poly delta_gl(const LieAlgebra& gl, int k);

/// Restriction of Delta_k to sl_n, expressed in the sl basis.
Poly delta_sl(const LieAlgebra& sl, int k);

/// Sum of principal 2k x 2k minors of the generic sp_2n matrix (F_ij).
Poly delta_sp(const LieAlgebra& sp, int k);

/// Sum of principal j x j minors of the generic matrix of a gl/sp/so/
/// so_skew algebra (exposed for the Phi series identity and the vanishing
/// of odd restrictions).
Poly minor_sum_generic(const LieAlgebra& alg, int j);

/// Coefficient of q^{2k} in det(I - qF)^{-1} for the generic so_n matrix.
Poly phi_so(const LieAlgebra& so, int k);

/// Pfaffian of the generic skew matrix over so_skew(2n); the sign is fixed
/// by Pf = +1 on the standard block pairing (1,2)(3,4)...
Poly pfaffian(const LieAlgebra& skew);

/// The G2 invariants: the displayed quadratic Delta_2 and the degree-6
/// invariant obtained by the gl_7 -> so_7 -> g2 substitution chain.
Poly g2_delta2(const LieAlgebra& g2);
Poly g2_delta6(const LieAlgebra& g2);

/// Delta_6 - (25/108) Delta_2^3.
Poly g2_Htilde(const LieAlgebra& g2);

/// The orthogonal projection so_7 -> g2 of the so_7 basis element F_ij
/// (w.r.t. the trace form), as a linear combination of the 14 letters.
std::vector<std::pair<int, QSqrt2>> g2_projection(const LieAlgebra& g2, int i, int j);

/// Jacobian-rank test for algebraic independence of rank-many homogeneous
/// invariants, at deterministic seed points (with a fixed retry schedule).
bool independence_check(const LieAlgebra& alg, const std::vector<Poly>& polys);

/// Named invariant lookup used by the CLI: "Delta" (gl), "DeltaTilde" (sl),
/// "DeltaSp", "Phi", "Pf", "G2Delta2", "G2Delta6", "G2Htilde".
Poly invariant_by_name(const LieAlgebra& alg, const std::string& name, int k);

}  // namespace ffk

#endif
