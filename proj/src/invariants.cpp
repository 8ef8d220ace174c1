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

#include "invariants.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ffk {

namespace {

Gen L0(int index) { return Gen::make(0, index, 0); }

/// Sum over the principal k-minors of the generic matrix of the algebra,
/// entries resolved through LieAlgebra::matrix_entry.
Poly principal_minor_sum(const LieAlgebra& alg, int n, int k) {
  Poly out;
  std::vector<int> subset(size_t(k), 0);
  std::iota(subset.begin(), subset.end(), 1);
  auto advance = [&]() {
    int i = k - 1;
    while (i >= 0 && subset[size_t(i)] == n - (k - 1 - i)) --i;
    if (i < 0) return false;
    ++subset[size_t(i)];
    for (int j = i + 1; j < k; ++j) subset[size_t(j)] = subset[size_t(j - 1)] + 1;
    return true;
  };
  do {
    std::vector<int> perm(size_t(k), 0);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int sgn = 1;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (perm[size_t(i)] > perm[size_t(j)]) sgn = -sgn;
      Word m;
      Rat coeff(sgn);
      bool dead = false;
      for (int i = 0; i < k; ++i) {
        auto [idx, c2] =
            alg.matrix_entry(subset[size_t(i)], subset[size_t(perm[size_t(i)])]);
        if (idx < 0 || is_zero(c2)) { dead = true; break; }
        coeff *= c2;
        m.insert_sorted(L0(idx));
      }
      if (!dead) out.add_term(m, coeff);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (advance());
  return out;
}

}  // namespace

Poly delta_gl(const LieAlgebra& gl, int k) {
  if (k < 1 || k > gl.matrix_n())
    throw std::invalid_argument("delta_gl: k out of range");
  return principal_minor_sum(gl, gl.matrix_n(), k);
}

Poly delta_sl(const LieAlgebra& sl, int k) {
  int n = 0;
  while ((n + 1) * (n + 1) - 1 <= sl.dim()) ++n;
  if (n * n - 1 != sl.dim())
    throw std::invalid_argument("delta_sl: not an sl algebra");
  if (k < 2 || k > n) throw std::invalid_argument("delta_sl: k out of range");
  auto gl = LieAlgebra::gl(n);
  Poly dk = delta_gl(*gl, k);
  // substitute E_ii -> sum_j ([j >= i] - j/n) H_j and keep E_ij (i != j):
  // restriction to the traceless complement of the centre.
  return dk.substitute([&](Gen g) {
    std::vector<std::pair<Gen, Rat>> img;
    const BasisLabel& l = gl->basis()[size_t(g.index())];
    if (l.i != l.j) {
      img.emplace_back(L0(sl.index_of({BasisLabel::kE, l.i, l.j})), Rat(1));
    } else {
      for (int j = 1; j < n; ++j) {
        Rat c = Rat(j >= l.i ? 1 : 0) - frac(j, n);
        if (!is_zero(c))
          img.emplace_back(L0(sl.index_of({BasisLabel::kH, j, 0})), c);
      }
    }
    return img;
  });
}

Poly delta_sp(const LieAlgebra& sp, int k) {
  int N = sp.matrix_n();
  if (k < 1 || 2 * k > N) throw std::invalid_argument("delta_sp: k out of range");
  return principal_minor_sum(sp, N, 2 * k);
}

Poly minor_sum_generic(const LieAlgebra& alg, int j) {
  return principal_minor_sum(alg, alg.matrix_n(), j);
}

Poly phi_so(const LieAlgebra& so, int k) {
  if (k < 1) throw std::invalid_argument("phi_so: k out of range");
  // det(I - qF) = sum_j (-1)^j Delta_j q^j; inverting the series gives
  // Phi_m = sum_{j>=1} (-1)^{j+1} Delta_j Phi_{m-j} with Phi_0 = 1.
  int order = 2 * k;
  std::vector<Poly> delta(size_t(order) + 1), phi(size_t(order) + 1);
  for (int j = 1; j <= order; ++j)
    delta[size_t(j)] = j <= so.matrix_n() ? minor_sum_generic(so, j) : Poly();
  phi[0] = Poly::scalar(Rat(1));
  for (int m = 1; m <= order; ++m) {
    Poly acc;
    for (int j = 1; j <= m; ++j) {
      if (delta[size_t(j)].is_zero_poly()) continue;
      Poly t = delta[size_t(j)] * phi[size_t(m - j)];
      if (j % 2 == 0) acc -= t;
      else acc += t;
    }
    phi[size_t(m)] = acc;
  }
  return phi[size_t(order)];
}

Poly pfaffian(const LieAlgebra& skew) {
  int N = skew.matrix_n();
  if (N < 4) throw std::invalid_argument("pfaffian: need 2n >= 4");
  std::function<Poly(const std::vector<int>&)> rec =
      [&](const std::vector<int>& live) -> Poly {
    if (live.empty()) return Poly::scalar(Rat(1));
    Poly out;
    int i0 = live[0];
    for (size_t p = 1; p < live.size(); ++p) {
      int j = live[p];
      int sign = (p % 2 == 1) ? 1 : -1;
      std::vector<int> rest;
      for (size_t t = 1; t < live.size(); ++t)
        if (t != p) rest.push_back(live[t]);
      Poly sub = rec(rest);
      Poly entry = Poly::variable(L0(skew.matrix_index(i0, j)), Rat(sign));
      out += entry * sub;
    }
    return out;
  };
  std::vector<int> all(size_t(N), 0);
  std::iota(all.begin(), all.end(), 1);
  return rec(all);
}

std::vector<std::pair<int, QSqrt2>> g2_projection(const LieAlgebra& g2, int i, int j) {
  using QM = Matrix<QSqrt2>;
  const auto& rep = g2.g2_rep();
  // F_ij = E_ij - E_{j* i*} with x* = 7-x for x <= 6 and 7* = 7
  auto star = [](int x) { return x == 7 ? 7 : 7 - x; };
  QM f(7, 7);
  f(i - 1, j - 1) += QSqrt2(Rat(1));
  f(star(j) - 1, star(i) - 1) -= QSqrt2(Rat(1));
  static thread_local Matrix<QSqrt2> gram_inv;
  static thread_local const LieAlgebra* cached = nullptr;
  if (cached != &g2) {
    Matrix<QSqrt2> gram(14, 14);
    for (int a = 0; a < 14; ++a)
      for (int b = 0; b < 14; ++b) {
        QM p = rep[size_t(a)] * rep[size_t(b)];
        QSqrt2 t;
        for (int d = 0; d < 7; ++d) t += p(d, d);
        gram(a, b) = t;
      }
    gram_inv = gram.inverse();
    cached = &g2;
  }
  std::vector<QSqrt2> pair(14);
  for (int b = 0; b < 14; ++b) {
    QM p = f * rep[size_t(b)];
    QSqrt2 t;
    for (int d = 0; d < 7; ++d) t += p(d, d);
    pair[size_t(b)] = t;
  }
  std::vector<std::pair<int, QSqrt2>> out;
  for (int a = 0; a < 14; ++a) {
    QSqrt2 c;
    for (int b = 0; b < 14; ++b) c += gram_inv(a, b) * pair[size_t(b)];
    if (!c.is_zero()) out.emplace_back(a, c);
  }
  return out;
}

Poly g2_delta2(const LieAlgebra& g2) {
  auto idx = [&](const char* s) {
    return g2.index_of(BasisLabel::parse(std::string("g2:") + s));
  };
  Poly p;
  auto add2 = [&](const char* x, const char* y, const Rat& c) {
    Word m;
    m.insert_sorted(L0(idx(x)));
    m.insert_sorted(L0(idx(y)));
    p.add_term(m, c);
  };
  add2("e1", "f1", Rat(2));
  add2("e2", "f2", Rat(2));
  add2("e3", "f3", Rat(2));
  add2("h1", "h1", Rat(1, 2));
  add2("h2", "h2", Rat(1, 6));
  add2("a", "alpha", Rat(-2, 3));
  add2("b", "beta", Rat(-2, 3));
  add2("c", "gamma", Rat(-2, 3));
  return p;
}

Poly g2_delta6(const LieAlgebra& g2) {
  // Delta_6 of gl_7 with E_ij replaced by pr(F_ij); expanded over Q(sqrt2)
  // and demoted (the sqrt2 parts cancel in this even invariant).
  std::vector<std::vector<std::pair<int, QSqrt2>>> images(49);
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j)
      images[size_t((i - 1) * 7 + (j - 1))] = g2_projection(g2, i, j);

  PolyT<QSqrt2> out;
  for (int omit = 1; omit <= 7; ++omit) {
    std::vector<int> rows;
    for (int i = 1; i <= 7; ++i)
      if (i != omit) rows.push_back(i);
    std::vector<int> perm = {0, 1, 2, 3, 4, 5};
    do {
      int sgn = 1;
      for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
          if (perm[size_t(i)] > perm[size_t(j)]) sgn = -sgn;
      PolyT<QSqrt2> prod = PolyT<QSqrt2>::scalar(QSqrt2(Rat(sgn)));
      for (int i = 0; i < 6 && !prod.is_zero_poly(); ++i) {
        const auto& img =
            images[size_t((rows[size_t(i)] - 1) * 7 + (rows[size_t(perm[size_t(i)])] - 1))];
        PolyT<QSqrt2> lin;
        for (const auto& [a, c] : img) lin.add_term(Poly::wordOf(L0(a)), c);
        prod = prod * lin;
      }
      out += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return demote_sqrt2(out);
}

Poly g2_Htilde(const LieAlgebra& g2) {
  Poly d2 = g2_delta2(g2);
  return g2_delta6(g2) - Rat(25, 108) * (d2 * d2 * d2);
}

bool independence_check(const LieAlgebra& alg, const std::vector<Poly>& polys) {
  auto rank_at = [&](uint64_t seed) {
    uint64_t s = seed * 2654435761u + 1;
    auto next = [&]() {
      s ^= s << 13;
      s ^= s >> 7;
      s ^= s << 17;
      return s;
    };
    std::vector<Rat> pt;
    for (int i = 0; i < alg.dim(); ++i) {
      long num = long(next() % 19) - 9;
      long den = 1 + long(next() % 4);
      pt.push_back(frac(num, den));
    }
    RatMat jac(int(polys.size()), alg.dim());
    for (size_t r = 0; r < polys.size(); ++r)
      for (int c = 0; c < alg.dim(); ++c) {
        Poly d = polys[r].derivative(L0(c));
        jac(int(r), c) =
            d.eval([&](Gen g) -> Rat { return pt[size_t(g.index())]; });
      }
    return jac.rank();
  };
  for (uint64_t seed : {1u, 2u, 3u, 4u})
    if (rank_at(seed) == int(polys.size())) return true;
  return false;
}

Poly invariant_by_name(const LieAlgebra& alg, const std::string& name, int k) {
  if (name == "Delta") return delta_gl(alg, k);
  if (name == "DeltaTilde") return delta_sl(alg, k);
  if (name == "DeltaSp") return delta_sp(alg, k);
  if (name == "Phi") return phi_so(alg, k);
  if (name == "Pf") return pfaffian(alg);
  if (name == "G2Delta2") return g2_delta2(alg);
  if (name == "G2Delta6") return g2_delta6(alg);
  if (name == "G2Htilde") return g2_Htilde(alg);
  throw std::invalid_argument("unknown invariant: " + name);
}

}  // namespace ffk
