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

#include "mmap.hpp"

#include <algorithm>

namespace ffk {

namespace {

Gen L0(int index) { return Gen::make(0, index, 0); }

/// Columns of ad(x_i) as sparse vectors, shared by all m-computations.
struct AdTable {
  std::vector<std::vector<SparseVec>> cols;  // cols[i][j] = [x_i, x_j]
  explicit AdTable(const LieAlgebra& g) {
    cols.resize(size_t(g.dim()));
    for (int i = 0; i < g.dim(); ++i) {
      cols[size_t(i)].resize(size_t(g.dim()));
      for (int j = 0; j < g.dim(); ++j) cols[size_t(i)][size_t(j)] = g.bracket(i, j);
    }
  }
  SparseVec apply(int i, const SparseVec& v) const {
    SparseVec acc;
    for (const auto& [j, c] : v)
      for (const auto& [k, bc] : cols[size_t(i)][size_t(j)])
        acc.emplace_back(k, c * bc);
    return sparse_normalize(std::move(acc));
  }
};

/// Matrix of the average of ad-products over all arrangements of the
/// letters (multiset given sorted).
SparseMat sym_ad_product(const LieAlgebra& g, const AdTable& ad,
                         std::vector<int> letters) {
  const int dim = g.dim();
  SparseMat m;
  m.dim = dim;
  std::sort(letters.begin(), letters.end());
  long count = 0;
  do {
    for (int j = 0; j < dim; ++j) {
      SparseVec v = {{j, Rat(1)}};
      for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        v = ad.apply(*it, v);
      for (const auto& [i, c] : v) m.add(i, j, c);
    }
    ++count;
  } while (std::next_permutation(letters.begin(), letters.end()));
  Rat inv = Rat(1) / Rat(count);
  for (auto& [k, c] : m.e) c *= inv;
  return m;
}

MatPoly m_factor(const LieAlgebra& g, const Poly& f, int factors) {
  MatPoly out;
  out.dim = g.dim();
  out.input_degree = std::max(f.homogeneous_degree(), 0);
  const int k = f.homogeneous_degree();
  if (k < 0) throw std::invalid_argument("m: non-homogeneous input");
  if (k < factors) return out;  // m vanishes below the factor count

  AdTable ad(g);
  std::unordered_map<Word, SparseMat, WordHash> sym_cache;

  // 1 / binom(k, factors) = factors!(k-factors)!/k!
  Rat norm = Rat(1) / binomial(k, factors);

  for (const auto& [mono, c] : f.terms()) {
    // iterate over position subsets of size `factors`
    std::vector<int> pos(size_t(factors), 0);
    for (int i = 0; i < factors; ++i) pos[size_t(i)] = i;
    for (;;) {
      Word key;
      std::vector<int> letters;
      for (int i = 0; i < factors; ++i) {
        letters.push_back(mono[pos[size_t(i)]].index());
        key.push_back(mono[pos[size_t(i)]]);
      }
      auto it = sym_cache.find(key);
      if (it == sym_cache.end())
        it = sym_cache.emplace(key, sym_ad_product(g, ad, letters)).first;
      const SparseMat& mat = it->second;
      if (!mat.empty()) {
        Word cof;
        {
          std::vector<bool> used(size_t(mono.size()), false);
          for (int i = 0; i < factors; ++i) used[size_t(pos[size_t(i)])] = true;
          for (int i = 0; i < mono.size(); ++i)
            if (!used[size_t(i)]) cof.push_back(mono[i]);
        }
        auto [slot, inserted] = out.by_monomial.try_emplace(cof);
        SparseMat& acc = slot->second;
        if (acc.dim == 0) acc.dim = g.dim();
        Rat w = c * norm;
        for (const auto& [kk, cc] : mat.e) acc.add(int(kk / g.dim()), int(kk % g.dim()), w * cc);
      }
      // advance the position subset (0-based)
      int i = factors - 1;
      while (i >= 0 && pos[size_t(i)] == mono.size() - factors + i) --i;
      if (i < 0) break;
      ++pos[size_t(i)];
      for (int j = i + 1; j < factors; ++j) pos[size_t(j)] = pos[size_t(j - 1)] + 1;
    }
  }
  // prune exact zero matrices
  for (auto it = out.by_monomial.begin(); it != out.by_monomial.end();)
    it = it->second.empty() ? out.by_monomial.erase(it) : std::next(it);
  return out;
}

}  // namespace

Poly MatPoly::entry(int i, int j) const {
  Poly p;
  for (const auto& [mono, mat] : by_monomial) {
    Rat c = mat.at(i, j);
    if (!is_zero(c)) p.add_term(mono, c);
  }
  return p;
}

MatPoly m3(const LieAlgebra& g, const Poly& f) { return m_factor(g, f, 3); }

MatPoly m5_direct(const LieAlgebra& g, const Poly& f) { return m_factor(g, f, 5); }

PullbackResult ad_pullback(const LieAlgebra& g, const SparseMat& m) {
  const int n = g.dim();
  // normal equations w.r.t. the trace pairing: K c = v with
  // K_{ab} = tr(ad_a ad_b), v_a = tr(ad_a m)
  static thread_local const LieAlgebra* cached = nullptr;
  static thread_local RatMat kmat;
  static thread_local std::vector<RatMat> ads;
  if (cached != &g) {
    ads.clear();
    for (int i = 0; i < n; ++i) ads.push_back(g.ad_matrix(i));
    kmat = RatMat(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b <= a; ++b) {
        Rat t(0);
        RatMat p = ads[size_t(a)] * ads[size_t(b)];
        for (int d = 0; d < n; ++d) t += p(d, d);
        kmat(a, b) = kmat(b, a) = t;
      }
    cached = &g;
  }
  std::vector<Rat> v(size_t(n), Rat(0));
  for (const auto& [key, c] : m.e) {
    int i = int(key / n), j = int(key % n);
    // tr(ad_a m) contribution: (ad_a)_{j i} * m_{i j}
    for (int a = 0; a < n; ++a) {
      const Rat& x = ads[size_t(a)](j, i);
      if (!is_zero(x)) v[size_t(a)] += x * c;
    }
  }
  PullbackResult res;
  auto sol = kmat.solve_any(v);
  if (!sol)
    throw std::logic_error("ad_pullback: inconsistent normal equations");
  res.element = std::move(*sol);
  res.residual.dim = n;
  for (const auto& [key, c] : m.e) res.residual.add(int(key / n), int(key % n), c);
  for (int a = 0; a < n; ++a) {
    if (is_zero(res.element[size_t(a)])) continue;
    const RatMat& ad = ads[size_t(a)];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!is_zero(ad(i, j)))
          res.residual.add(i, j, -res.element[size_t(a)] * ad(i, j));
  }
  res.exact = res.residual.empty();
  return res;
}

LiftResult lift_to_sym(const LieAlgebra& g, const MatPoly& m) {
  LiftResult out;
  if (m.empty()) {
    out.status = LiftResult::kLifted;
    return out;
  }
  int cof_deg = m.by_monomial.begin()->first.size();
  // T = sum_b x_b (x) T_b from the pullbacks
  std::vector<Poly> tb(size_t(g.dim()));
  for (const auto& [mono, mat] : m.by_monomial) {
    PullbackResult pb = ad_pullback(g, mat);
    if (!pb.exact) {
      out.status = LiftResult::kPullbackFailed;
      out.detail = "coefficient matrix outside ad(g)";
      return out;
    }
    for (int b = 0; b < g.dim(); ++b)
      if (!is_zero(pb.element[size_t(b)]))
        tb[size_t(b)].add_term(mono, pb.element[size_t(b)]);
  }
  // candidate H' = sum_b x_b T_b
  Poly cand;
  for (int b = 0; b < g.dim(); ++b) {
    if (tb[size_t(b)].is_zero_poly()) continue;
    cand += Poly::variable(L0(b)) * tb[size_t(b)];
  }
  // Euler-identity verification: T_b = (1/(cof_deg+1)) dH'/dx_b for all b
  for (int b = 0; b < g.dim(); ++b) {
    Poly d = cand.derivative(L0(b));
    d.scale(frac(1, cof_deg + 1));
    if (!(d == tb[size_t(b)])) {
      out.status = LiftResult::kAsymmetric;
      out.detail = "in g (x) S but not in the image of S^{k-2}";
      return out;
    }
  }
  out.status = LiftResult::kLifted;
  out.value = std::move(cand);
  return out;
}

LiftResult m_power(const LieAlgebra& g, const Poly& f, int r) {
  LiftResult cur;
  cur.value = f;
  for (int step = 0; step < r; ++step) {
    MatPoly m = m3(g, cur.value);
    cur = lift_to_sym(g, m);
    if (!cur.ok()) return cur;
  }
  return cur;
}

std::optional<Rat> identify_scalar(const Poly& p, const Poly& q) {
  if (q.is_zero_poly()) {
    if (p.is_zero_poly()) return Rat(0);
    return std::nullopt;
  }
  if (p.is_zero_poly()) return Rat(0);
  const auto& [m0, c0] = *q.terms().begin();
  Rat c = p.coeff(m0) / c0;
  Poly diff = p;
  Poly scaled = q;
  scaled.scale(c);
  diff -= scaled;
  if (!diff.is_zero_poly()) return std::nullopt;
  return c;
}

std::vector<ProbeLine> g2_probe_suite() {
  auto g2p = LieAlgebra::g2();
  const LieAlgebra& g = *g2p;
  auto idx = [&](const char* s) {
    return g.index_of(BasisLabel::parse(std::string("g2:") + s));
  };
  int e3 = idx("e3"), f1 = idx("f1"), f2 = idx("f2"), f3 = idx("f3"), a = idx("a");

  Poly d2 = g2_delta2(g);
  Poly d2cube = d2 * d2 * d2;
  MatPoly m_d2c = m3(g, d2cube);
  MatPoly m_d6 = m3(g, g2_delta6(g));

  auto mono = [&](std::initializer_list<int> letters) {
    Word m;
    for (int l : letters) m.insert_sorted(L0(l));
    return m;
  };
  auto coord = [&](int i) {
    std::vector<Rat> v(size_t(g.dim()), Rat(0));
    v[size_t(i)] = Rat(1);
    return v;
  };
  auto sparse_to_vec = [&](const SparseVec& s) {
    std::vector<Rat> v(size_t(g.dim()), Rat(0));
    for (const auto& [i, c] : s) v[size_t(i)] = c;
    return v;
  };
  auto scaled = [&](const std::vector<Rat>& v, const Rat& c) {
    std::vector<Rat> out = v;
    for (auto& x : out) x *= c;
    return out;
  };

  std::vector<ProbeLine> report;
  auto get = [&](const MatPoly& mp, const Word& w) {
    auto it = mp.by_monomial.find(w);
    SparseMat zero;
    zero.dim = g.dim();
    return it == mp.by_monomial.end() ? zero : it->second;
  };
  SparseMat xi = get(m_d2c, mono({e3, e3, f1}));
  SparseMat eta = get(m_d2c, mono({e3, e3, f3}));
  SparseMat xit = get(m_d6, mono({e3, e3, f1}));
  SparseMat etat = get(m_d6, mono({e3, e3, f3}));

  // h3 = [e3, f3]
  std::vector<Rat> h3 = sparse_to_vec(g.bracket(e3, f3));
  std::vector<Rat> adf3_a = sparse_to_vec(g.bracket(f3, a));
  std::vector<Rat> adf3_h3;
  {
    SparseVec h3s = g.bracket(e3, f3);
    adf3_h3 = sparse_to_vec(g.bracket_vec(SparseVec{{f3, Rat(1)}}, h3s));
  }

  report.push_back({"m(Delta2^3)|e3^2 f1 on e3 = (6/5) f2", "6/5",
                    xi.apply(coord(e3)) == scaled(coord(f2), Rat(6, 5))});
  report.push_back({"m(Delta6)|e3^2 f1 on e3 = (5/18) f2", "5/18",
                    xit.apply(coord(e3)) == scaled(coord(f2), Rat(5, 18))});
  report.push_back({"m(Delta2^3)|e3^2 f3 on h3 = (48/5) ad(f3) h3", "48/5",
                    eta.apply(h3) == scaled(adf3_h3, Rat(48, 5))});
  report.push_back({"m(Delta2^3)|e3^2 f3 on a = (42/5) ad(f3) a", "42/5",
                    eta.apply(coord(a)) == scaled(adf3_a, Rat(42, 5))});
  report.push_back({"m(Delta6)|e3^2 f3 on a = (-2/9) ad(f3) a", "-2/9",
                    etat.apply(coord(a)) == scaled(adf3_a, Rat(-2, 9))});
  report.push_back({"m(Delta6)|e3^2 f3 on h3 = (1/18) ad(f3) h3", "1/18",
                    etat.apply(h3) == scaled(adf3_h3, Rat(1, 18))});
  // (etat - (25/108) eta) acts as (-13/6) ad(f3) on both a and h3
  {
    SparseMat comb;
    comb.dim = g.dim();
    for (const auto& [k, c] : etat.e) comb.add(int(k / g.dim()), int(k % g.dim()), c);
    for (const auto& [k, c] : eta.e)
      comb.add(int(k / g.dim()), int(k % g.dim()), Rat(-25, 108) * c);
    bool ok_a = comb.apply(coord(a)) == scaled(adf3_a, Rat(-13, 6));
    bool ok_h = comb.apply(h3) == scaled(adf3_h3, Rat(-13, 6));
    report.push_back({"(m(Delta6) - 25/108 m(Delta2^3))|e3^2 f3 = (-13/6) ad(f3)",
                      "-13/6", ok_a && ok_h});
  }
  return report;
}

}  // namespace ffk
