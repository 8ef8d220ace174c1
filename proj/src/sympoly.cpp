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

#include "sympoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffk {

Poly demote_sqrt2(const PolyT<QSqrt2>& p) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    if (!c.is_rational())
      throw std::domain_error("demote_sqrt2: irrational coefficient survived");
    out.add_term(m, c.p);
  }
  return out;
}

Poly poisson_bracket(const Poly& f, const Poly& g, const LieAlgebra& alg) {
  Poly out;
  for (const auto& [mf, cf] : f.terms()) {
    for (int i = 0; i < mf.size(); ++i) {
      if (i > 0 && mf[i] == mf[i - 1]) continue;  // letters handled once
      int mult_f = 0;
      for (int t = 0; t < mf.size(); ++t)
        if (mf[t] == mf[i]) ++mult_f;
      Word rest_f = mf.erased(i);
      for (const auto& [mg, cg] : g.terms()) {
        for (int j = 0; j < mg.size(); ++j) {
          if (j > 0 && mg[j] == mg[j - 1]) continue;
          if (mg[j].site() != mf[i].site()) continue;
          int mult_g = 0;
          for (int t = 0; t < mg.size(); ++t)
            if (mg[t] == mg[j]) ++mult_g;
          const SparseVec& br = alg.bracket(mf[i].index(), mg[j].index());
          if (br.empty()) continue;
          Word rest = rest_f;
          Word rest_g = mg.erased(j);
          for (int t = 0; t < rest_g.size(); ++t) rest.insert_sorted(rest_g[t]);
          int tdeg = mf[i].tdeg() + mg[j].tdeg();
          Rat c = cf * cg * Rat(mult_f) * Rat(mult_g);
          for (const auto& [k, bc] : br) {
            Word m = rest;
            m.insert_sorted(Gen::make(mf[i].site(), k, tdeg));
            out.add_term(m, c * bc);
          }
        }
      }
    }
  }
  return out;
}

Poly polarize(const Poly& f, const std::vector<int>& abar) {
  const int m = int(abar.size());
  Poly out;
  std::vector<int> a = abar;
  std::sort(a.begin(), a.end());
  for (const auto& [mono, c] : f.terms()) {
    if (mono.size() != m)
      throw std::invalid_argument("polarize: degree mismatch");
    // average over distinct arrangements of abar against the fixed letters
    std::vector<int> arr = a;
    long count = 0;
    Poly acc;
    do {
      Word w;
      for (int i = 0; i < m; ++i) {
        Gen g = mono[i];
        w.insert_sorted(Gen::make(g.site(), g.index(), arr[size_t(i)]));
      }
      acc.add_term(w, Rat(1));
      ++count;
    } while (std::next_permutation(arr.begin(), arr.end()));
    acc.scale(c / Rat(long(count)));
    out += acc;
  }
  return out;
}

Poly shift_all(const Poly& f, int a) {
  Poly out;
  for (const auto& [mono, c] : f.terms()) {
    Word w;
    for (int i = 0; i < mono.size(); ++i) {
      Gen g = mono[i];
      w.insert_sorted(Gen::make(g.site(), g.index(), g.tdeg() + a));
    }
    out.add_term(w, c);
  }
  return out;
}

Poly forget_tdeg(const Poly& f) {
  Poly out;
  for (const auto& [mono, c] : f.terms()) {
    Word w;
    for (int i = 0; i < mono.size(); ++i) {
      Gen g = mono[i];
      w.insert_sorted(Gen::make(g.site(), g.index(), 0));
    }
    out.add_term(w, c);
  }
  return out;
}

namespace {

/// Permanent of the k x k pairing matrix, with early row pruning.
Rat permanent(const std::vector<std::vector<Rat>>& m) {
  const int k = int(m.size());
  std::vector<bool> used(size_t(k), false);
  std::function<Rat(int)> rec = [&](int row) -> Rat {
    if (row == k) return Rat(1);
    Rat s(0);
    for (int j = 0; j < k; ++j) {
      if (used[size_t(j)] || is_zero(m[size_t(row)][size_t(j)])) continue;
      used[size_t(j)] = true;
      s += m[size_t(row)][size_t(j)] * rec(row + 1);
      used[size_t(j)] = false;
    }
    return s;
  };
  return rec(0);
}

}  // namespace

Rat graded_scalar_product(const Poly& f, const Poly& g, const LieAlgebra& alg) {
  Rat total(0);
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      if (mf.size() != mg.size()) continue;
      const int k = mf.size();
      std::vector<std::vector<Rat>> m(size_t(k), std::vector<Rat>(size_t(k), Rat(0)));
      bool any = false;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          if (mf[i].tdeg() != mg[j].tdeg() || mf[i].site() != mg[j].site())
            continue;
          m[size_t(i)][size_t(j)] = alg.form()(mf[i].index(), mg[j].index());
          if (!is_zero(m[size_t(i)][size_t(j)])) any = true;
        }
      if (!any && k > 0) continue;
      total += cf * cg * permanent(m);
    }
  }
  return total;
}

Poly directional_derivative(const Poly& f, const std::vector<Rat>& mu) {
  Poly out;
  for (const auto& [mono, c] : f.terms()) {
    for (int i = 0; i < mono.size(); ++i) {
      if (i > 0 && mono[i] == mono[i - 1]) continue;
      int mult = 0;
      for (int t = 0; t < mono.size(); ++t)
        if (mono[t] == mono[i]) ++mult;
      const Rat& coord = mu[size_t(mono[i].index())];
      if (is_zero(coord)) continue;
      out.add_term(mono.erased(i), c * Rat(mult) * coord);
    }
  }
  return out;
}

Poly directional_derivative(const Poly& f, const std::vector<Rat>& mu, int m) {
  Poly p = f;
  for (int i = 0; i < m; ++i) p = directional_derivative(p, mu);
  return p;
}

std::vector<Poly> bi_degree_components(const Poly& h, BiDegreeMode mode) {
  int d = h.homogeneous_degree();
  if (d < 0) throw std::invalid_argument("bi_degree_components: non-homogeneous");
  std::vector<Poly> comp(size_t(d) + 1);
  if (mode == BiDegreeMode::kEvaluation) {
    // x -> x^(1) + c x^(2); collect powers of c.
    for (const auto& [mono, c] : h.terms()) {
      // iterate over subsets of positions sent to site 2
      const int m = mono.size();
      for (unsigned mask = 0; mask < (1u << m); ++mask) {
        Word w;
        int j = 0;
        for (int i = 0; i < m; ++i) {
          Gen g = mono[i];
          bool two = (mask >> i) & 1;
          if (two) ++j;
          w.insert_sorted(Gen::make(two ? 2 : 1, g.index(), g.tdeg()));
        }
        comp[size_t(j)].add_term(w, c);
      }
    }
  } else {
    // substitute x^(1) -> u + v, x^(2) -> u - v (u diagonal, v antidiagonal;
    // site 1 <-> u, site 2 <-> v while splitting), collect v-degrees, then
    // map u -> (x1+x2)/2, v -> (x1-x2)/2 back to site coordinates.
    std::vector<PolyT<Rat>> by_vdeg(size_t(d) + 1);
    for (const auto& [mono, c] : h.terms()) {
      const int m = mono.size();
      for (unsigned mask = 0; mask < (1u << m); ++mask) {
        Word w;
        int j = 0;
        for (int i = 0; i < m; ++i) {
          Gen g = mono[i];
          bool v = (mask >> i) & 1;
          if (v) ++j;
          w.insert_sorted(Gen::make(v ? 2 : 1, g.index(), g.tdeg()));
        }
        by_vdeg[size_t(j)].add_term(w, c);
      }
    }
    for (int j = 0; j <= d; ++j) {
      comp[size_t(j)] = by_vdeg[size_t(j)].substitute([](Gen g) {
        std::vector<std::pair<Gen, Rat>> img;
        Rat half(1, 2);
        if (g.site() == 1) {  // u
          img.emplace_back(Gen::make(1, g.index(), g.tdeg()), half);
          img.emplace_back(Gen::make(2, g.index(), g.tdeg()), half);
        } else {  // v
          img.emplace_back(Gen::make(1, g.index(), g.tdeg()), half);
          img.emplace_back(Gen::make(2, g.index(), g.tdeg()), -half);
        }
        return img;
      });
    }
  }
  return comp;
}

Poly ad_action(const Poly& f, int basis_index, const LieAlgebra& alg) {
  Poly out;
  for (const auto& [mono, c] : f.terms()) {
    for (int i = 0; i < mono.size(); ++i) {
      if (i > 0 && mono[i] == mono[i - 1]) continue;
      int mult = 0;
      for (int t = 0; t < mono.size(); ++t)
        if (mono[t] == mono[i]) ++mult;
      const SparseVec& br = alg.bracket(basis_index, mono[i].index());
      if (br.empty()) continue;
      Word rest = mono.erased(i);
      for (const auto& [k, bc] : br) {
        Word m = rest;
        m.insert_sorted(Gen::make(mono[i].site(), k, mono[i].tdeg()));
        out.add_term(m, c * Rat(mult) * bc);
      }
    }
  }
  return out;
}

Poly retag_site(const Poly& f, int site) {
  Poly out;
  for (const auto& [mono, c] : f.terms()) {
    Word w;
    for (int i = 0; i < mono.size(); ++i)
      w.insert_sorted(Gen::make(site, mono[i].index(), mono[i].tdeg()));
    out.add_term(w, c);
  }
  return out;
}

}  // namespace ffk
