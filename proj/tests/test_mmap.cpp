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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mmap.hpp"
#include "testutil.hpp"

using namespace ffk;

namespace {

Gen L0(int i) { return Gen::make(0, i, 0); }

Poly casimir_poly(const LieAlgebra& g) {
  Poly p;
  for (int a = 0; a < g.dim(); ++a)
    for (const auto& [b, c] : g.dual_basis_vector(a)) {
      Word m;
      m.insert_sorted(L0(a));
      m.insert_sorted(L0(b));
      p.add_term(m, c);
    }
  return p;
}

Poly random_invariant_free(TestRng& rng, const LieAlgebra& g, int deg) {
  Poly p;
  for (int t = 0; t < 4; ++t) {
    Word m;
    for (int i = 0; i < deg; ++i) m.insert_sorted(L0(rng.uniform(g.dim())));
    p.add_term(m, rng.small_rat_nonzero());
  }
  return p;
}

bool matpoly_is_b_skew(const MatPoly& m, const LieAlgebra& g) {
  // B-skewness: M^T B = -B M for every monomial coefficient matrix
  for (const auto& [mono, mat] : m.by_monomial) {
    RatMat dense(g.dim(), g.dim());
    for (const auto& [k, c] : mat.e) dense(int(k / g.dim()), int(k % g.dim())) = c;
    RatMat b(g.dim(), g.dim());
    for (int i = 0; i < g.dim(); ++i)
      for (int j = 0; j < g.dim(); ++j) b(i, j) = g.form()(i, j);
    RatMat lhs = dense.transpose() * b;
    RatMat rhs = b * dense;
    if (!(lhs + rhs).is_zero_matrix()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("m3 vanishes in low degree and on cubic invariants") {
  auto sl2 = LieAlgebra::sl(2);
  auto sl3 = LieAlgebra::sl(3);
  CHECK(m3(*sl2, casimir_poly(*sl2)).empty());
  Poly d3 = delta_sl(*sl3, 3);
  CHECK(m3(*sl3, d3).empty());
}

TEST_CASE("m3 images are B-skew") {
  auto sl2 = LieAlgebra::sl(2);
  TestRng rng(61);
  for (int trial = 0; trial < 6; ++trial) {
    Poly f = random_invariant_free(rng, *sl2, 3 + rng.uniform(2));
    CHECK(matpoly_is_b_skew(m3(*sl2, f), *sl2));
  }
  auto sp4 = LieAlgebra::sp(4);
  CHECK(matpoly_is_b_skew(m3(*sp4, delta_sp(*sp4, 2)), *sp4));
}

TEST_CASE("m3 is equivariant") {
  auto sl2 = LieAlgebra::sl(2);
  TestRng rng(67);
  for (int trial = 0; trial < 5; ++trial) {
    Poly f = random_invariant_free(rng, *sl2, 4);
    int x = rng.uniform(sl2->dim());
    // lhs: m3({x, F})
    MatPoly lhs = m3(*sl2, ad_action(f, x, *sl2));
    // rhs: commutator action on the matrix part plus ad action on cofactors
    MatPoly mf = m3(*sl2, f);
    RatMat adx = sl2->ad_matrix(x);
    MatPoly rhs;
    rhs.dim = sl2->dim();
    rhs.input_degree = mf.input_degree;
    for (const auto& [mono, mat] : mf.by_monomial) {
      // [ad_x, mat] (x) mono
      SparseMat com;
      com.dim = sl2->dim();
      for (const auto& [k, c] : mat.e) {
        int i = int(k / sl2->dim()), j = int(k % sl2->dim());
        for (int r = 0; r < sl2->dim(); ++r) {
          if (!is_zero(adx(r, i))) com.add(r, j, adx(r, i) * c);
          if (!is_zero(adx(j, r))) com.add(i, r, -c * adx(j, r));
        }
      }
      auto slot = rhs.by_monomial.try_emplace(mono);
      SparseMat& acc = slot.first->second;
      if (acc.dim == 0) acc.dim = sl2->dim();
      for (const auto& [k, c] : com.e)
        acc.add(int(k / sl2->dim()), int(k % sl2->dim()), c);
      // mat (x) {x, mono}
      Poly mono_poly;
      mono_poly.add_term(mono, Rat(1));
      Poly moved = ad_action(mono_poly, x, *sl2);
      for (const auto& [m2, c2] : moved.terms()) {
        auto slot2 = rhs.by_monomial.try_emplace(m2);
        SparseMat& acc2 = slot2.first->second;
        if (acc2.dim == 0) acc2.dim = sl2->dim();
        for (const auto& [k, c] : mat.e)
          acc2.add(int(k / sl2->dim()), int(k % sl2->dim()), c * c2);
      }
    }
    // compare lhs and rhs per monomial
    auto entries_equal = [&](const MatPoly& a, const MatPoly& b) {
      for (int i = 0; i < sl2->dim(); ++i)
        for (int j = 0; j < sl2->dim(); ++j)
          if (!(a.entry(i, j) == b.entry(i, j))) return false;
      return true;
    };
    CHECK(entries_equal(lhs, rhs));
  }
}

TEST_CASE("ad_pullback") {
  for (const char* name : {"sl2", "sp4", "g2"}) {
    auto g = LieAlgebra::by_name(name);
    TestRng rng(71);
    for (int trial = 0; trial < 10; ++trial) {
      SparseVec x;
      for (int i = 0; i < g->dim(); ++i) x.emplace_back(i, rng.small_rat());
      x = sparse_normalize(std::move(x));
      RatMat ad = g->ad_matrix(x);
      SparseMat m;
      m.dim = g->dim();
      for (int i = 0; i < g->dim(); ++i)
        for (int j = 0; j < g->dim(); ++j)
          if (!is_zero(ad(i, j))) m.add(i, j, ad(i, j));
      PullbackResult pb = ad_pullback(*g, m);
      CHECK(pb.exact);
      SparseVec got;
      for (int i = 0; i < g->dim(); ++i)
        if (!is_zero(pb.element[size_t(i)])) got.emplace_back(i, pb.element[size_t(i)]);
      CHECK(got == x);
    }
  }
  // every skew matrix pulls back for sl2 (Lambda^2 sl2 = sl2)
  {
    auto g = LieAlgebra::sl(2);
    TestRng rng(73);
    RatMat b(g->dim(), g->dim());
    for (int i = 0; i < g->dim(); ++i)
      for (int j = 0; j < g->dim(); ++j) b(i, j) = g->form()(i, j);
    for (int trial = 0; trial < 5; ++trial) {
      // random B-skew matrix: M = S B with S skew-symmetric
      RatMat s(g->dim(), g->dim());
      for (int i = 0; i < g->dim(); ++i)
        for (int j = i + 1; j < g->dim(); ++j) {
          s(i, j) = rng.small_rat();
          s(j, i) = -s(i, j);
        }
      RatMat m = s * b;
      SparseMat sm;
      sm.dim = g->dim();
      for (int i = 0; i < g->dim(); ++i)
        for (int j = 0; j < g->dim(); ++j)
          if (!is_zero(m(i, j))) sm.add(i, j, m(i, j));
      CHECK(ad_pullback(*g, sm).exact);
    }
  }
}

TEST_CASE("type A scalar chain (Prop. on DeltaTilde)") {
  // m_{2r+1}(DeltaTilde_k) = (2r)!(k-2r)!/k! binom(n-k+2r, 2r) DeltaTilde_{k-2r}
  for (int n = 2; n <= 5; ++n) {
    auto sl = LieAlgebra::sl(n);
    for (int k = 3; k <= n; ++k) {
      Poly dk = delta_sl(*sl, k);
      for (int r = 1; 2 * r < k; ++r) {
        LiftResult lift = m_power(*sl, dk, r);
        REQUIRE(lift.ok());
        Rat scalar = factorial(2 * r) * factorial(k - 2 * r) / factorial(k) *
                     binomial(n - k + 2 * r, 2 * r);
        if (k - 2 * r == 1) {
          CHECK(lift.value.is_zero_poly());  // DeltaTilde_1 = 0
        } else {
          Poly target = delta_sl(*sl, k - 2 * r);
          auto c = identify_scalar(lift.value, target);
          REQUIRE(c.has_value());
          CHECK(*c == scalar);
        }
      }
    }
  }
}

TEST_CASE("lift examples from the module contract") {
  // lift(m3(DeltaTilde_4)) for sl_4 = (1/6) DeltaTilde_2
  auto sl4 = LieAlgebra::sl(4);
  LiftResult l1 = m_power(*sl4, delta_sl(*sl4, 4), 1);
  REQUIRE(l1.ok());
  auto c1 = identify_scalar(l1.value, delta_sl(*sl4, 2));
  REQUIRE(c1.has_value());
  CHECK(*c1 == Rat(1, 6));

  // lift(m3(Delta_4)) for sp_4 = (1/2) Delta_2
  auto sp4 = LieAlgebra::sp(4);
  LiftResult l2 = m_power(*sp4, delta_sp(*sp4, 2), 1);
  REQUIRE(l2.ok());
  auto c2 = identify_scalar(l2.value, delta_sp(*sp4, 1));
  REQUIRE(c2.has_value());
  CHECK(*c2 == Rat(1, 2));

  // lift(m3(Phi_4)) for so_7 = 6 Phi_2 (R(2) = (21+14+1)/6)
  auto so7 = LieAlgebra::so(7);
  LiftResult l3 = m_power(*so7, phi_so(*so7, 2), 1);
  REQUIRE(l3.ok());
  auto c3 = identify_scalar(l3.value, phi_so(*so7, 1));
  REQUIRE(c3.has_value());
  CHECK(*c3 == Rat(6));
}

TEST_CASE("type C scalar chain and Lemma sp-k6") {
  // m_{2r+1}(Delta_2k) = (2k-2r)!(2r)!/(2k)! binom(2n-2k+2r+1, 2r) Delta_{2k-2r}
  for (int n = 2; n <= 3; ++n) {
    auto sp = LieAlgebra::sp(2 * n);
    for (int k = 2; k <= n; ++k) {
      Poly d2k = delta_sp(*sp, k);
      for (int r = 1; r < k; ++r) {
        LiftResult lift = m_power(*sp, d2k, r);
        REQUIRE(lift.ok());
        Poly target = delta_sp(*sp, k - r);
        auto c = identify_scalar(lift.value, target);
        REQUIRE(c.has_value());
        CHECK(*c == factorial(2 * k - 2 * r) * factorial(2 * r) / factorial(2 * k) *
                        binomial(2 * n - 2 * k + 2 * r + 1, 2 * r));
      }
    }
  }
  // Lemma sp-k6(i) at sp6: m(Delta_6) = (n-2)(2n-3)/15 Delta_4 = (1/5) Delta_4
  auto sp6 = LieAlgebra::sp(6);
  LiftResult l = m_power(*sp6, delta_sp(*sp6, 3), 1);
  REQUIRE(l.ok());
  auto c = identify_scalar(l.value, delta_sp(*sp6, 2));
  REQUIRE(c.has_value());
  CHECK(*c == Rat(1, 5));

  // Lemma sp-k6(ii): m(d/dF_11 Delta_4) = -(1/3)(2n-1)(2n-2) F_11
  for (int n : {2, 3}) {
    auto sp = LieAlgebra::sp(2 * n);
    Poly d4 = delta_sp(*sp, 2);
    int f11 = sp->matrix_index(1, 1);
    Poly dd = d4.derivative(L0(f11));
    MatPoly m = m3(*sp, dd);
    REQUIRE(m.by_monomial.size() == 1);  // single scalar matrix (empty cofactor)
    PullbackResult pb = ad_pullback(*sp, m.by_monomial.begin()->second);
    REQUIRE(pb.exact);
    SparseVec got;
    for (int i = 0; i < sp->dim(); ++i)
      if (!is_zero(pb.element[size_t(i)])) got.emplace_back(i, pb.element[size_t(i)]);
    Rat expect = Rat(-1, 3) * Rat(2 * n - 1) * Rat(2 * n - 2);
    CHECK(got == SparseVec{{f11, expect}});
  }
}

TEST_CASE("orthogonal scalar chain (prop-D)") {
  for (int n : {7, 8}) {
    auto so = LieAlgebra::so(n);
    for (int k = 2; k <= 3; ++k) {
      LiftResult lift = m_power(*so, phi_so(*so, k), 1);
      REQUIRE(lift.ok());
      auto c = identify_scalar(lift.value, phi_so(*so, k - 1));
      REQUIRE(c.has_value());
      Rat rk = frac(1, k * (2 * k - 1)) *
               (binomial(n, 2) + Rat(2 * n * (k - 1)) + Rat((k - 1) * (2 * k - 3)));
      CHECK(*c == rk);
    }
  }
}

TEST_CASE("Pfaffian is in the kernel of m") {
  auto sk8 = LieAlgebra::so_skew(8);
  LiftResult l = m_power(*sk8, pfaffian(*sk8), 1);
  REQUIRE(l.ok());
  CHECK(l.value.is_zero_poly());
  CHECK(m3(*sk8, pfaffian(*sk8)).empty());
}

TEST_CASE("g2 chain: b = 25/108 is the unique lift-restoring constant") {
  auto g2 = LieAlgebra::g2();
  Poly d2 = g2_delta2(*g2);
  Poly d2cube = d2 * d2 * d2;

  // m(Delta_2^3) fails the pullback (Lemma: not in g (x) S^3)
  LiftResult bad = lift_to_sym(*g2, m3(*g2, d2cube));
  CHECK(bad.status == LiftResult::kPullbackFailed);

  // m(Delta_2^2) = (20/3) Delta_2
  LiftResult l2 = m_power(*g2, d2 * d2, 1);
  REQUIRE(l2.ok());
  auto c2 = identify_scalar(l2.value, d2);
  REQUIRE(c2.has_value());
  CHECK(*c2 == Rat(20, 3));

  // unique b: solve the pullback-residual linear condition from one
  // failing monomial, verify it equals 25/108, then check the lift of
  // Delta_6 - b Delta_2^3 works and identifies with -13/12 Delta_2^2
  Poly d6 = g2_delta6(*g2);
  MatPoly m6 = m3(*g2, d6);
  MatPoly mc = m3(*g2, d2cube);
  std::optional<Rat> b_found;
  for (const auto& [mono, mat] : mc.by_monomial) {
    PullbackResult pc = ad_pullback(*g2, mat);
    if (pc.exact) continue;
    auto it = m6.by_monomial.find(mono);
    REQUIRE(it != m6.by_monomial.end());
    PullbackResult p6 = ad_pullback(*g2, it->second);
    // residual(m6) - b residual(mc) = 0 required: read b off one entry
    REQUIRE(!p6.residual.empty());
    const auto& [key, cval] = *pc.residual.e.begin();
    Rat r6 = Rat(0);
    auto f = p6.residual.e.find(key);
    if (f != p6.residual.e.end()) r6 = f->second;
    Rat b = r6 / cval;
    if (!b_found) b_found = b;
    else CHECK(*b_found == b);
  }
  REQUIRE(b_found.has_value());
  CHECK(*b_found == Rat(25, 108));

  Poly htilde = d6 - Rat(25, 108) * d2cube;
  LiftResult lh = m_power(*g2, htilde, 1);
  REQUIRE(lh.ok());
  auto ch = identify_scalar(lh.value, d2 * d2);
  REQUIRE(ch.has_value());
  CHECK(*ch == Rat(-13, 12));

  // a perturbed b fails
  Poly wrong = d6 - Rat(1, 4) * d2cube;
  CHECK(lift_to_sym(*g2, m3(*g2, wrong)).status == LiftResult::kPullbackFailed);

  // full chain for the iterate: m^2(Htilde) = (-13/12)(20/3) Delta_2
  LiftResult lh2 = m_power(*g2, htilde, 2);
  REQUIRE(lh2.ok());
  auto ch2 = identify_scalar(lh2.value, d2);
  REQUIRE(ch2.has_value());
  CHECK(*ch2 == Rat(-13, 12) * Rat(20, 3));
}

TEST_CASE("g2 probe suite") {
  auto report = g2_probe_suite();
  CHECK(report.size() >= 7);
  for (const auto& line : report) {
    INFO(line.name);
    CHECK(line.pass);
  }
}

TEST_CASE("m5 direct agrees with the iterate on degree-5 inputs") {
  auto sl3 = LieAlgebra::sl(3);
  // C^2-style input: Casimir * DeltaTilde_3 (degree 5 invariant)
  Poly f = casimir_poly(*sl3) * delta_sl(*sl3, 3);
  LiftResult it2 = m_power(*sl3, f, 2);
  LiftResult direct = lift_to_sym(*sl3, m5_direct(*sl3, f));
  REQUIRE(it2.ok());
  REQUIRE(direct.ok());
  CHECK(it2.value == direct.value);
  // also on sl2 with a random quintic invariant combination H^2 * x-free:
  auto sl2 = LieAlgebra::sl(2);
  Poly h = casimir_poly(*sl2);
  // no degree-5 invariant in sl2 beyond 0; use the free (non-invariant)
  // comparison instead: both routes evaluated on H^2 * linear
  Poly f2 = h * h * Poly::variable(L0(0));
  LiftResult a = m_power(*sl2, f2, 2);
  LiftResult b = lift_to_sym(*sl2, m5_direct(*sl2, f2));
  if (a.ok() && b.ok()) CHECK(a.value == b.value);
}

TEST_CASE("identify_scalar corner cases") {
  auto sl2 = LieAlgebra::sl(2);
  Poly h = casimir_poly(*sl2);
  CHECK(identify_scalar(Poly(), h) == Rat(0));
  CHECK(!identify_scalar(h, Poly()).has_value());
  CHECK(!identify_scalar(h, h * h).has_value());
  CHECK(identify_scalar(Rat(7) * Poly(h), h) == Rat(7));
}

TEST_CASE("m3 of invariants has weight zero (Cartan action annihilates)") {
  auto sp4 = LieAlgebra::sp(4);
  MatPoly m = m3(*sp4, delta_sp(*sp4, 2));
  for (int h : sp4->cartan()) {
    RatMat adh = sp4->ad_matrix(h);
    // total action: [ad_h, mat] + mat (x) {h, mono} must vanish
    for (const auto& [mono, mat] : m.by_monomial) {
      SparseMat total;
      total.dim = sp4->dim();
      for (const auto& [k, c] : mat.e) {
        int i = int(k / sp4->dim()), j = int(k % sp4->dim());
        for (int r = 0; r < sp4->dim(); ++r) {
          if (!is_zero(adh(r, i))) total.add(r, j, adh(r, i) * c);
          if (!is_zero(adh(j, r))) total.add(i, r, -c * adh(j, r));
        }
      }
      Poly mono_poly;
      mono_poly.add_term(mono, Rat(1));
      Poly moved = ad_action(mono_poly, h, *sp4);
      // mono is an h-weight vector; moved = weight * mono
      Rat wt(0);
      if (!moved.is_zero_poly()) {
        REQUIRE(moved.term_count() == 1);
        REQUIRE(moved.terms().begin()->first == mono);
        wt = moved.terms().begin()->second;
      }
      for (const auto& [k, c] : mat.e)
        total.add(int(k / sp4->dim()), int(k % sp4->dim()), c * wt);
      CHECK(total.empty());
    }
  }
}
