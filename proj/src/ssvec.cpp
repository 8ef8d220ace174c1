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

#include "ssvec.hpp"

#include <algorithm>
#include <numeric>

namespace ffk {

namespace {

Gen L0(int i) { return Gen::make(0, i, 0); }

NCPoly assemble(UEnv& env, const Poly& head, const std::vector<std::tuple<Rat, Poly, int>>& tails) {
  NCPoly value = symmetrize(env, shift_all(head, -1));
  for (const auto& [coeff, inv, r] : tails) {
    if (inv.is_zero_poly() || is_zero(coeff)) continue;
    NCPoly t = sym_tau_apply(env, inv, r);
    t.scale(coeff);
    value += t;
  }
  return value;
}

}  // namespace

Poly casimir_sym_poly(const LieAlgebra& g, int b1, int b2) {
  Poly p;
  for (int a = 0; a < g.dim(); ++a)
    for (const auto& [b, c] : g.dual_basis_vector(a)) {
      Word m;
      m.insert_sorted(Gen::make(0, a, b1));
      m.insert_sorted(Gen::make(0, b, b2));
      p.add_term(m, c);
    }
  return p;
}

SSCandidate ss_typeA(UEnv& env, int n, int k) {
  const LieAlgebra& g = env.alg();
  if (g.name() != "sl" + std::to_string(n))
    throw std::invalid_argument("ss_typeA: env must be over sl(n)");
  if (k < 2 || k > n) throw std::invalid_argument("ss_typeA: need 2 <= k <= n");
  SSCandidate s;
  s.alg = env.alg_ptr();
  s.family = "A";
  s.n = n;
  s.k = k;
  std::vector<std::tuple<Rat, Poly, int>> tails;
  s.meta.push_back({Rat(1), "DeltaTilde", k, 0});
  for (int r = 1; 2 * r < k; ++r) {
    if (k - 2 * r < 2) continue;  // DeltaTilde_1 = 0
    Rat c = binomial(n - k + 2 * r, 2 * r);
    tails.emplace_back(c, delta_sl(g, k - 2 * r), 2 * r);
    s.meta.push_back({c, "DeltaTilde", k - 2 * r, 2 * r});
  }
  s.value = assemble(env, delta_sl(g, k), tails);
  return s;
}

SSCandidate ss_typeC(UEnv& env, int two_n, int k) {
  const LieAlgebra& g = env.alg();
  if (g.name() != "sp" + std::to_string(two_n))
    throw std::invalid_argument("ss_typeC: env must be over sp(2n)");
  int n = two_n / 2;
  if (k < 1 || k > n) throw std::invalid_argument("ss_typeC: need 1 <= k <= n");
  SSCandidate s;
  s.alg = env.alg_ptr();
  s.family = "C";
  s.n = two_n;
  s.k = k;
  std::vector<std::tuple<Rat, Poly, int>> tails;
  s.meta.push_back({Rat(1), "DeltaSp", k, 0});
  for (int r = 1; r < k; ++r) {
    Rat c = binomial(2 * n - 2 * k + 2 * r + 1, 2 * r);
    tails.emplace_back(c, delta_sp(g, k - r), 2 * r);
    s.meta.push_back({c, "DeltaSp", k - r, 2 * r});
  }
  s.value = assemble(env, delta_sp(g, k), tails);
  return s;
}

SSCandidate ss_typeBD(UEnv& env, int n, int k) {
  const LieAlgebra& g = env.alg();
  if (g.name() != "so" + std::to_string(n))
    throw std::invalid_argument("ss_typeBD: env must be over so(n)");
  if (k < 1) throw std::invalid_argument("ss_typeBD: need k >= 1");
  if (n % 2 == 0 && k >= n / 2)
    throw std::invalid_argument("ss_typeBD: for so_2l need k < l (Pfaffian tops the set)");
  SSCandidate s;
  s.alg = env.alg_ptr();
  s.family = "BD";
  s.n = n;
  s.k = k;
  std::vector<std::tuple<Rat, Poly, int>> tails;
  s.meta.push_back({Rat(1), "Phi", k, 0});
  for (int r = 1; r < k; ++r) {
    // R(k,r) = 2^r/(2r)! prod_{u=1}^r (binom(n,2) + 2n(k-u) + (k-u)(2k-2u-1))
    Rat c = rat_pow(Rat(2), r) / factorial(2 * r);
    for (int u = 1; u <= r; ++u)
      c *= binomial(n, 2) + Rat(2 * n * (k - u)) + Rat((k - u) * (2 * k - 2 * u - 1));
    tails.emplace_back(c, phi_so(g, k - r), 2 * r);
    s.meta.push_back({c, "Phi", k - r, 2 * r});
  }
  s.value = assemble(env, phi_so(g, k), tails);
  return s;
}

SSCandidate ss_pfaffian(UEnv& env, int two_n) {
  const LieAlgebra& g = env.alg();
  if (g.name() != "so_skew" + std::to_string(two_n))
    throw std::invalid_argument("ss_pfaffian: env must be over so_skew(2n)");
  SSCandidate s;
  s.alg = env.alg_ptr();
  s.family = "Pf";
  s.n = two_n;
  s.k = two_n / 2;
  s.meta.push_back({Rat(1), "Pf", two_n / 2, 0});
  s.value = assemble(env, pfaffian(g), {});
  return s;
}

SSCandidate ss_g2(UEnv& env) {
  const LieAlgebra& g = env.alg();
  if (g.name() != "g2") throw std::invalid_argument("ss_g2: env must be over g2");
  SSCandidate s;
  s.alg = env.alg_ptr();
  s.family = "G2";
  s.n = 14;
  s.k = 2;
  Poly d2 = g2_delta2(g);
  std::vector<std::tuple<Rat, Poly, int>> tails;
  tails.emplace_back(Rat(-65, 4), d2 * d2, 2);
  tails.emplace_back(Rat(-325, 3), d2, 4);
  s.meta.push_back({Rat(1), "G2Htilde", 6, 0});
  s.meta.push_back({Rat(-65, 4), "G2Delta2^2", 4, 2});
  s.meta.push_back({Rat(-325, 3), "G2Delta2", 2, 4});
  s.value = assemble(env, g2_Htilde(g), tails);
  return s;
}

SSGenericResult ss_generic(UEnv& env, const Poly& h) {
  SSGenericResult out;
  const LieAlgebra& g = env.alg();
  int k = h.homogeneous_degree();
  if (k < 0) {
    out.detail = "non-homogeneous input";
    return out;
  }
  std::vector<std::tuple<Rat, Poly, int>> tails;
  Poly cur = h;
  for (int r = 1; 2 * r <= k - 2; ++r) {
    LiftResult step = m_power(g, cur, 1);
    if (!step.ok()) {
      out.detail = step.detail;
      return out;
    }
    cur = step.value;
    if (cur.is_zero_poly()) break;
    tails.emplace_back(binomial(k, 2 * r), cur, 2 * r);
  }
  out.ok = true;
  out.candidate.alg = env.alg_ptr();
  out.candidate.family = "generic";
  out.candidate.k = k;
  out.candidate.meta.push_back({Rat(1), "H", k, 0});
  for (const auto& [c, inv, r] : tails)
    out.candidate.meta.push_back({c, "m^" + std::to_string(r / 2) + "(H)", k - r, r});
  out.candidate.value = assemble(env, h, tails);
  return out;
}

NCPoly verify_central(UEnv& env, const SSCandidate& s) {
  return env.commutator(casimir_loop(env, -1, -1), s.value);
}

bool verify_complete_set(UEnv& env, const std::vector<SSCandidate>& set) {
  if (int(set.size()) != env.alg().rank()) return false;
  std::vector<Poly> symbols;
  for (const auto& s : set) {
    if (s.value.is_zero_poly()) return false;
    symbols.push_back(forget_tdeg(gr(s.value)));
  }
  return independence_check(env.alg(), symbols);
}

NCPoly x_decomposition(UEnv& env, const Poly& f, const std::vector<int>& abar,
                       int b1, int b2) {
  const LieAlgebra& g = env.alg();
  Poly ya = polarize(f, abar);
  NCPoly lhs = env.commutator(casimir_loop(env, b1, b2), symmetrize(env, ya));
  Poly hb = casimir_sym_poly(g, b1, b2);
  NCPoly rhs = symmetrize(env, poisson_bracket(hb, ya, g));
  return lhs - rhs;
}

namespace {

/// The first-approximation weights and the bracket-moving derivation of
/// the c constants: every pair (j,l) with weight w = j+l-m-1 != 0 moves
/// its inner bracket towards the mirror of the outer one and deposits one
/// double-bracket shape per passed slot.
CConstants c_constants_tables(int m) {
  CConstants out;
  out.m = m;
  Rat norm = Rat(1) / factorial(m + 1);
  for (int j = 1; j <= m; ++j)
    for (int l = j + 1; l <= m; ++l) {
      int w = j + l - m - 1;
      if (w == 0) continue;
      if (w < 0) {
        // the bracket at l moves right to m+1-j; deposits at slots l..m-j
        for (int s = l; s <= m - j; ++s) {
          auto key = std::make_pair(j, s);
          out.c23[key] += Rat(w) * norm;
          if (is_zero(out.c23[key])) out.c23.erase(key);
        }
      } else {
        // the bracket at j moves left to m+1-l; doubles land at
        // m+1-l .. j-1, the kept single shifts from l to l-1
        for (int d = m + 1 - l; d <= j - 1; ++d) {
          auto key = std::make_pair(d, l - 1);
          out.c32[key] -= Rat(w) * norm;
          if (is_zero(out.c32[key])) out.c32.erase(key);
        }
      }
    }
  return out;
}

/// Builds the four-shape right-hand side of the first-approximation lemma
/// for the monomial Y with letters `letters` (basis indices) and t-degrees
/// abar, given the constant tables; used to verify the derivation exactly.
NCPoly c_shapes_value(UEnv& env, const CConstants& t, const std::vector<int>& letters,
                      const std::vector<int>& abar, int b1, int b2) {
  const LieAlgebra& g = env.alg();
  const int m = int(letters.size());
  const int dim = g.dim();
  NCPoly total;
  std::vector<int> others;
  for (int l = 1; l <= m; ++l) {
    others.clear();
    for (int v = 1; v <= m; ++v)
      if (v != l) others.push_back(v);
    std::sort(others.begin(), others.end());
    do {
      for (int j = 1; j < m; ++j)
        for (int p = j + 1; p < m; ++p) {
          Rat c23 = t.c23_at(j, p), c32 = t.c32_at(j, p);
          if (is_zero(c23) && is_zero(c32)) continue;
          int sj = others[size_t(j - 1)], sp = others[size_t(p - 1)];
          RatMat mmat = g.ad_matrix(letters[size_t(sp - 1)]) *
                        g.ad_matrix(letters[size_t(l - 1)]) *
                        g.ad_matrix(letters[size_t(sj - 1)]);
          int aj = abar[size_t(sj - 1)], ap = abar[size_t(sp - 1)],
              al = abar[size_t(l - 1)];
          for (int a = 0; a < dim; ++a) {
            for (const auto& [bidx, bc] : g.dual_basis_vector(a)) {
              for (int d = 0; d < dim; ++d) {
                const Rat& mv = mmat(d, a);
                if (is_zero(mv)) continue;
                Rat w = bc * mv;
                auto emit = [&](int deg_j, int deg_p, const Rat& cc) {
                  if (is_zero(cc)) return;
                  std::vector<Gen> word;
                  for (int slot = 1; slot < m; ++slot) {
                    if (slot == j) word.push_back(Gen::make(0, bidx, deg_j));
                    else if (slot == p) word.push_back(Gen::make(0, d, deg_p));
                    else {
                      int sv = others[size_t(slot - 1)];
                      word.push_back(Gen::make(0, letters[size_t(sv - 1)],
                                               abar[size_t(sv - 1)]));
                    }
                  }
                  NCPoly nf = env.normal_order(word);
                  nf.scale(cc);
                  total += nf;
                };
                emit(b1 + aj, b2 + al + ap, w * c23);
                emit(b2 + aj, b1 + al + ap, w * c23);
                // in the c32 shapes the double bracket sits at slot j
                auto emit32 = [&](int deg_j, int deg_p, const Rat& cc) {
                  if (is_zero(cc)) return;
                  std::vector<Gen> word;
                  for (int slot = 1; slot < m; ++slot) {
                    if (slot == j) word.push_back(Gen::make(0, bidx, deg_j));
                    else if (slot == p) word.push_back(Gen::make(0, d, deg_p));
                    else {
                      int sv = others[size_t(slot - 1)];
                      word.push_back(Gen::make(0, letters[size_t(sv - 1)],
                                               abar[size_t(sv - 1)]));
                    }
                  }
                  NCPoly nf = env.normal_order(word);
                  nf.scale(cc);
                  total += nf;
                };
                emit32(b1 + aj + al, b2 + ap, -w * c32);
                emit32(b2 + aj + al, b1 + ap, -w * c32);
              }
            }
          }
        }
    } while (std::next_permutation(others.begin(), others.end()));
  }
  return total;
}

/// The first-approximation identity: X_Y = 1/(m+1)! sum over sigma, the
/// invariant pairing index, both (b1,b2)-assignments and j < l of
/// (j+l-m-1) X(sigma, .; j, l) with single brackets at slots j and l.
NCPoly first_approximation_value(UEnv& env, const std::vector<int>& letters,
                                 const std::vector<int>& abar, int b1, int b2) {
  const LieAlgebra& g = env.alg();
  const int m = int(letters.size());
  NCPoly total;
  std::vector<int> sigma;
  for (int v = 1; v <= m; ++v) sigma.push_back(v);
  do {
    for (int j = 1; j <= m; ++j)
      for (int l = j + 1; l <= m; ++l) {
        int w = j + l - m - 1;
        if (w == 0) continue;
        int yj = letters[size_t(sigma[size_t(j - 1)] - 1)];
        int yl = letters[size_t(sigma[size_t(l - 1)] - 1)];
        int aj = abar[size_t(sigma[size_t(j - 1)] - 1)];
        int al = abar[size_t(sigma[size_t(l - 1)] - 1)];
        for (auto [bu, bv] : {std::pair(b1, b2), std::pair(b2, b1)}) {
          // sum_a [x_a[bu], yj[aj]] ... [x^a[bv], yl[al]]
          for (int a = 0; a < g.dim(); ++a) {
            const SparseVec& br1 = g.bracket(a, yj);
            if (br1.empty()) continue;
            for (const auto& [da, dc] : g.dual_basis_vector(a)) {
              const SparseVec& br2 = g.bracket(da, yl);
              for (const auto& [z1, c1] : br1)
                for (const auto& [z2, c2] : br2) {
                  std::vector<Gen> word;
                  for (int slot = 1; slot <= m; ++slot) {
                    if (slot == j) word.push_back(Gen::make(0, z1, bu + aj));
                    else if (slot == l) word.push_back(Gen::make(0, z2, bv + al));
                    else {
                      int sv = sigma[size_t(slot - 1)];
                      word.push_back(Gen::make(0, letters[size_t(sv - 1)],
                                               abar[size_t(sv - 1)]));
                    }
                  }
                  NCPoly nf = env.normal_order(word);
                  nf.scale(Rat(w) * dc * c1 * c2);
                  total += nf;
                }
            }
          }
        }
      }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  total.scale(Rat(1) / factorial(m + 1));
  return total;
}

NCPoly x_of_monomial(UEnv& env, const std::vector<int>& letters,
                     const std::vector<int>& abar, int b1, int b2) {
  const LieAlgebra& g = env.alg();
  Poly y;
  Word mono;
  for (size_t i = 0; i < letters.size(); ++i)
    mono.insert_sorted(Gen::make(0, letters[i], abar[i]));
  y.add_term(mono, Rat(1));
  NCPoly lhs = env.commutator(casimir_loop(env, b1, b2), symmetrize(env, y));
  NCPoly rhs = symmetrize(env, poisson_bracket(casimir_sym_poly(g, b1, b2), y, g));
  return lhs - rhs;
}

}  // namespace

CConstants c_constants_probe(int m) {
  if (m < 4 || m > 6) throw std::invalid_argument("c_constants_probe: 4 <= m <= 6");
  CConstants tables = c_constants_tables(m);

  auto alg = LieAlgebra::sl(m);
  UEnv env(alg);
  const LieAlgebra& g = *alg;

  // distinct t-degrees keep every shape separate
  std::vector<int> abar(size_t(m), 0);
  for (int i = 0; i < m; ++i) abar[size_t(i)] = -(1 << i);
  const int b1 = -(1 << m), b2 = -(1 << (m + 1));

  auto verify_with = [&](const std::vector<int>& letters) {
    NCPoly target = x_of_monomial(env, letters, abar, b1, b2);
    // (V1) the first-approximation identity
    if (!(first_approximation_value(env, letters, abar, b1, b2) == target))
      throw std::domain_error("c_constants_probe: first approximation mismatch");
    // (V2) the four-shape decomposition with the derived tables
    if (!(c_shapes_value(env, tables, letters, abar, b1, b2) == target))
      throw std::domain_error("c_constants_probe: shape decomposition mismatch");
  };

  // two generic letter choices: Y-independence of the constants
  std::vector<int> first, second;
  for (int i = 1; i <= m; ++i) {
    first.push_back(g.index_of({BasisLabel::kE, i, (i % m) + 1}));
    int j2 = (i + 1) % m + 1;
    second.push_back(g.index_of({BasisLabel::kE, i, j2 == i ? (i % m) + 1 : j2}));
  }
  verify_with(first);
  verify_with(second);
  return tables;
}

Poly w_element(UEnv& env, const Poly& f, const DegMultiset& alpha, int i, int j) {
  const LieAlgebra& g = env.alg();
  const int dim = g.dim();
  int M = 0;
  for (const auto& [v, r] : alpha) M += r;
  if (f.homogeneous_degree() + 1 != M)
    throw std::invalid_argument("w_element: need sum r_j = deg F + 1");

  // enumerate the monomial basis B(alpha): per block, multisets of size r
  std::vector<std::vector<std::vector<int>>> block_monos;
  for (const auto& [val, r] : alpha) {
    std::vector<std::vector<int>> monos;
    std::vector<int> cur(size_t(r), 0);
    for (;;) {
      monos.push_back(cur);
      int t = r - 1;
      while (t >= 0 && cur[size_t(t)] == dim - 1) --t;
      if (t < 0) break;
      ++cur[size_t(t)];
      for (int u = t + 1; u < r; ++u) cur[size_t(u)] = cur[size_t(t)];
    }
    block_monos.push_back(std::move(monos));
  }

  // W is the element of S^alpha whose pairing with every basis monomial V
  // equals sum_{l in block i, p in block j} (F, [v_l,v_p] prod v_u).  In an
  // orthonormal basis this reduces to the (V,V)^{-1}-weighted expansion;
  // with dual bases it is a Gram-matrix solve on the (small) block.
  std::vector<Word> basis_words;
  std::vector<Rat> rhs;
  std::vector<size_t> pick(alpha.size(), 0);
  for (;;) {
    Word v;
    std::vector<std::vector<int>> letters(alpha.size());
    for (size_t b = 0; b < alpha.size(); ++b) {
      for (int idx : block_monos[b][pick[b]]) {
        letters[b].push_back(idx);
        v.insert_sorted(Gen::make(0, idx, alpha[b].first));
      }
    }
    Rat acc(0);
    for (size_t li = 0; li < letters[size_t(i)].size(); ++li) {
      for (size_t pj = 0; pj < letters[size_t(j)].size(); ++pj) {
        const SparseVec& br = g.bracket(letters[size_t(i)][li], letters[size_t(j)][pj]);
        if (br.empty()) continue;
        Word rest;
        for (size_t b = 0; b < alpha.size(); ++b)
          for (size_t t = 0; t < letters[b].size(); ++t) {
            if (b == size_t(i) && t == li) continue;
            if (b == size_t(j) && t == pj) continue;
            rest.insert_sorted(L0(letters[b][t]));
          }
        for (const auto& [bk, bc] : br) {
          Word mono = rest;
          mono.insert_sorted(L0(bk));
          Poly prod;
          prod.add_term(mono, bc);
          acc += graded_scalar_product(f, prod, g);
        }
      }
    }
    basis_words.push_back(v);
    rhs.push_back(acc);
    size_t b = 0;
    for (; b < alpha.size(); ++b) {
      if (++pick[b] < block_monos[b].size()) break;
      pick[b] = 0;
    }
    if (b == alpha.size()) break;
  }
  // the enumeration above can list a monomial twice when a block contains
  // repeated values; dedupe keeping the first pairing value
  {
    std::vector<Word> uw;
    std::vector<Rat> ur;
    for (size_t t = 0; t < basis_words.size(); ++t) {
      bool seen = false;
      for (size_t u = 0; u < uw.size(); ++u)
        if (uw[u] == basis_words[t]) { seen = true; break; }
      if (!seen) {
        uw.push_back(basis_words[t]);
        ur.push_back(rhs[t]);
      }
    }
    basis_words = std::move(uw);
    rhs = std::move(ur);
  }
  const int nb = int(basis_words.size());
  RatMat gram(nb, nb);
  for (int r = 0; r < nb; ++r)
    for (int c = 0; c <= r; ++c) {
      Poly a, b;
      a.add_term(basis_words[size_t(r)], Rat(1));
      b.add_term(basis_words[size_t(c)], Rat(1));
      gram(r, c) = gram(c, r) = graded_scalar_product(a, b, g);
    }
  std::vector<Rat> coeffs = gram.solve(rhs);
  Poly out;
  for (int r = 0; r < nb; ++r) out.add_term(basis_words[size_t(r)], coeffs[size_t(r)]);
  return out;
}

bool universal_check(UEnv& env, const Poly& f, const DegMultiset& alpha) {
  for (size_t i = 0; i < alpha.size(); ++i) {
    Poly sum;
    for (size_t j = 0; j < alpha.size(); ++j) {
      if (j == i) continue;
      sum += w_element(env, f, alpha, int(i), int(j));
    }
    if (!sum.is_zero_poly()) return false;
  }
  return true;
}

Poly half_bracket(UEnv& env, const Poly& yhat, int b1, int b2) {
  const LieAlgebra& g = env.alg();
  Poly out;
  for (const auto& [mono, c] : yhat.terms()) {
    for (int t = 0; t < mono.size(); ++t) {
      if (t > 0 && mono[t] == mono[t - 1]) continue;
      int mult = 0;
      for (int u = 0; u < mono.size(); ++u)
        if (mono[u] == mono[t]) ++mult;
      Word rest = mono.erased(t);
      // sum_a [x_a[b2], yhat_t] x^a[b1]
      for (int a = 0; a < g.dim(); ++a) {
        const SparseVec& br = g.bracket(a, mono[t].index());
        if (br.empty()) continue;
        for (const auto& [bidx, bc] : g.dual_basis_vector(a)) {
          for (const auto& [k, kc] : br) {
            Word m = rest;
            m.insert_sorted(Gen::make(0, k, b2 + mono[t].tdeg()));
            m.insert_sorted(Gen::make(0, bidx, b1));
            out.add_term(m, c * Rat(mult) * bc * kc);
          }
        }
      }
    }
  }
  return out;
}

bool half_bracket_w_check(UEnv& env, const Poly& y, const std::vector<int>& abar,
                          int b1, int b2) {
  const LieAlgebra& g = env.alg();
  Poly ya = polarize(y, abar);
  // |S_m abar| = number of distinct arrangements of abar
  std::vector<int> sorted = abar;
  std::sort(sorted.begin(), sorted.end());
  long orbit = 0;
  do {
    ++orbit;
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  Poly lhs = half_bracket(env, ya, b1, b2);
  lhs.scale(Rat(orbit));

  // admissible alpha: replace one a_l with a_l + b2, append b1
  Poly rhs;
  std::vector<DegMultiset> seen;
  for (size_t l = 0; l < abar.size(); ++l) {
    std::vector<int> vals = abar;
    vals[l] += b2;
    vals.push_back(b1);
    // build the multiset of distinct values, descending
    std::map<int, int, std::greater<int>> counts;
    for (int v : vals) counts[v]++;
    DegMultiset alpha(counts.begin(), counts.end());
    if (std::find(seen.begin(), seen.end(), alpha) != seen.end()) continue;
    seen.push_back(alpha);
    // locate the blocks of the replaced value and of b1
    int i = -1, j = -1;
    for (size_t b = 0; b < alpha.size(); ++b) {
      if (alpha[b].first == abar[l] + b2) i = int(b);
      if (alpha[b].first == b1) j = int(b);
    }
    if (i < 0 || j < 0 || i == j) continue;
    rhs += w_element(env, y, alpha, i, j);
  }
  return lhs == rhs;
}

}  // namespace ffk
