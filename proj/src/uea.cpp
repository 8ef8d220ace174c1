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

#include "uea.hpp"

#include <algorithm>
#include <thread>

#include "parallel.hpp"

namespace ffk {

void NCPoly::add_term(const Word& w, const Rat& c) {
  if (is_zero(c)) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly p = *this;
  for (auto& [w, c] : p.terms_) c = -c;
  return p;
}

NCPoly& NCPoly::scale(const Rat& c) {
  if (is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

bool NCPoly::operator==(const NCPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (const auto& [w, c] : terms_) {
    auto it = o.terms_.find(w);
    if (it == o.terms_.end() || it->second != c) return false;
  }
  return true;
}

int NCPoly::filtration_degree() const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return d;
}

bool NCPoly::contains_tau() const {
  for (const auto& [w, c] : terms_)
    if (w.contains_tau()) return true;
  return false;
}

NCPoly NCPoly::drop_tau() const {
  NCPoly p;
  for (const auto& [w, c] : terms_)
    if (!w.contains_tau()) p.add_term(w, c);
  return p;
}

// -- UEnv ---------------------------------------------------------------------

UEnv::UEnv(AlgPtr alg, int sites, int jobs)
    : alg_(std::move(alg)), sites_(sites), jobs_(jobs > 0 ? jobs : default_jobs()) {
  for (auto& m : memo_) m = std::make_unique<Shard[]>(kShards);
}

std::vector<std::pair<Gen, Rat>> UEnv::gen_bracket(Gen g1, Gen g2) const {
  std::vector<std::pair<Gen, Rat>> out;
  if (g1.is_tau() && g2.is_tau()) return out;
  if (g1.is_tau()) {
    // [tau, x[a]] = -a x[a-1]
    int a = g2.tdeg();
    if (a != 0) out.emplace_back(g2.shifted(-1), Rat(-a));
    return out;
  }
  if (g2.is_tau()) {
    int a = g1.tdeg();
    if (a != 0) out.emplace_back(g1.shifted(-1), Rat(a));
    return out;
  }
  if (g1.site() != g2.site()) return out;
  const SparseVec& br = alg_->bracket(g1.index(), g2.index());
  int t = g1.tdeg() + g2.tdeg();
  out.reserve(br.size());
  for (const auto& [k, c] : br) out.emplace_back(Gen::make(g1.site(), k, t), c);
  return out;
}

template <class F>
std::shared_ptr<const NCPoly> UEnv::memo_lookup(int which, const Word& key, F&& compute) {
  Shard& sh = memo_[which][WordHash{}(key) % kShards];
  {
    std::lock_guard<std::mutex> lk(sh.mu);
    auto it = sh.map.find(key);
    if (it != sh.map.end()) return it->second;
  }
  auto value = std::make_shared<const NCPoly>(compute());
  {
    std::lock_guard<std::mutex> lk(sh.mu);
    auto [it, inserted] = sh.map.emplace(key, value);
    return it->second;
  }
}

NCPoly UEnv::word_times_gen(const Word& w, Gen g) {
  if (w.empty() || w.back() <= g) {
    NCPoly p;
    p.add_term(w.with_appended(g), Rat(1));
    return p;
  }
  Word key = w.with_appended(g);
  bool memoize = key.size() <= kMemoMaxLen;
  auto compute = [&]() {
    Gen y = w.back();
    Word u = w.prefix(w.size() - 1);
    NCPoly res;
    // (u g) y
    NCPoly ug = word_times_gen(u, g);
    for (const auto& [v, c] : ug.terms()) {
      if (v.size() == u.size() + 1) {
        // full-length terms are the sorted multiset; all letters <= y
        res.add_term(v.with_appended(y), c);
      } else {
        NCPoly vy = word_times_gen(v, y);
        vy.scale(c);
        res += vy;
      }
    }
    // u [y, g]
    for (const auto& [z, c] : gen_bracket(y, g)) {
      NCPoly uz = word_times_gen(u, z);
      uz.scale(c);
      res += uz;
    }
    return res;
  };
  if (!memoize) return compute();
  return *memo_lookup(0, key, compute);
}

NCPoly UEnv::gen_times_word(Gen g, const Word& w) {
  if (w.empty() || g <= w[0]) {
    NCPoly p;
    Word r;
    r.push_back(g);
    for (int i = 0; i < w.size(); ++i) r.push_back(w[i]);
    p.add_term(r, Rat(1));
    return p;
  }
  Word key;
  key.push_back(g);
  for (int i = 0; i < w.size(); ++i) key.push_back(w[i]);
  bool memoize = key.size() <= kMemoMaxLen;
  auto compute = [&]() {
    Gen y = w[0];
    Word u = w.suffix_from(1);
    NCPoly res;
    // y (g u)
    NCPoly gu = gen_times_word(g, u);
    for (const auto& [v, c] : gu.terms()) {
      if (v.size() == u.size() + 1) {
        Word r;
        r.push_back(y);
        for (int i = 0; i < v.size(); ++i) r.push_back(v[i]);
        res.add_term(r, c);
      } else {
        NCPoly yv = gen_times_word(y, v);
        yv.scale(c);
        res += yv;
      }
    }
    // [g, y] u
    for (const auto& [z, c] : gen_bracket(g, y)) {
      NCPoly zu = gen_times_word(z, u);
      zu.scale(c);
      res += zu;
    }
    return res;
  };
  if (!memoize) return compute();
  return *memo_lookup(1, key, compute);
}

NCPoly UEnv::normal_order(const Word& w) {
  NCPoly p = NCPoly::one();
  for (int i = 0; i < w.size(); ++i) {
    NCPoly next;
    for (const auto& [v, c] : p.terms()) {
      NCPoly vg = word_times_gen(v, w[i]);
      vg.scale(c);
      next += vg;
    }
    p = std::move(next);
  }
  return p;
}

NCPoly UEnv::normal_order(const std::vector<Gen>& letters) {
  Word w;
  for (Gen g : letters) w.push_back(g);
  return normal_order(w);
}

NCPoly UEnv::mul_word(const NCPoly& a, const Word& w) {
  NCPoly p = a;
  for (int i = 0; i < w.size(); ++i) {
    NCPoly next;
    for (const auto& [v, c] : p.terms()) {
      NCPoly vg = word_times_gen(v, w[i]);
      vg.scale(c);
      next += vg;
    }
    p = std::move(next);
  }
  return p;
}

NCPoly UEnv::mul(const NCPoly& a, const NCPoly& b) {
  // partition by left term when large
  std::vector<const std::pair<const Word, Rat>*> terms;
  terms.reserve(a.terms().size());
  for (const auto& t : a.terms()) terms.push_back(&t);
  auto work = [&](size_t lo, size_t hi) {
    NCPoly acc;
    for (size_t i = lo; i < hi; ++i) {
      const Word& wa = terms[i]->first;
      const Rat& ca = terms[i]->second;
      for (const auto& [wb, cb] : b.terms()) {
        NCPoly p;
        p.add_term(wa, ca * cb);
        p = mul_word(p, wb);
        acc += p;
      }
    }
    return acc;
  };
  return parallel_reduce<NCPoly>(terms.size(), jobs_, work,
                                 [](NCPoly& x, NCPoly&& y) { x += y; });
}

NCPoly UEnv::commutator(const NCPoly& a, const NCPoly& b) {
  std::vector<const std::pair<const Word, Rat>*> terms;
  terms.reserve(a.terms().size());
  for (const auto& t : a.terms()) terms.push_back(&t);
  auto work = [&](size_t lo, size_t hi) {
    NCPoly acc;
    for (size_t i = lo; i < hi; ++i) {
      const Word& wa = terms[i]->first;
      const Rat& ca = terms[i]->second;
      for (const auto& [wb, cb] : b.terms()) {
        // [wa, wb] = sum_{i,j} wa_pre (wb with wb_j -> [wa_i, wb_j]) wa_post
        Rat c = ca * cb;
        for (int p = 0; p < wa.size(); ++p) {
          for (int q = 0; q < wb.size(); ++q) {
            for (const auto& [z, bc] : gen_bracket(wa[p], wb[q])) {
              Word seq;
              for (int t = 0; t < p; ++t) seq.push_back(wa[t]);
              for (int t = 0; t < q; ++t) seq.push_back(wb[t]);
              seq.push_back(z);
              for (int t = q + 1; t < wb.size(); ++t) seq.push_back(wb[t]);
              for (int t = p + 1; t < wa.size(); ++t) seq.push_back(wa[t]);
              NCPoly term = normal_order(seq);
              term.scale(c * bc);
              acc += term;
            }
          }
        }
      }
    }
    return acc;
  };
  return parallel_reduce<NCPoly>(terms.size(), jobs_, work,
                                 [](NCPoly& x, NCPoly&& y) { x += y; });
}

namespace {
using LocalMemo =
    std::unordered_map<Word, std::shared_ptr<const NCPoly>, WordHash>;
}

std::shared_ptr<const NCPoly> UEnv::symmetrize_multiset_rec(const Word& m,
                                                            void* local_memo) {
  LocalMemo& local = *static_cast<LocalMemo*>(local_memo);
  const bool use_global = m.size() <= 4;
  if (!use_global) {
    auto it = local.find(m);
    if (it != local.end()) return it->second;
  }
  auto compute = [&]() {
    NCPoly res;
    if (m.empty()) {
      res = NCPoly::one();
      return res;
    }
    const int n = m.size();
    for (int i = 0; i < n; ++i) {
      if (i > 0 && m[i] == m[i - 1]) continue;
      int mult = 0;
      for (int t = 0; t < n; ++t)
        if (m[t] == m[i]) ++mult;
      auto rest = symmetrize_multiset_rec(m.erased(i), local_memo);
      NCPoly part;
      for (const auto& [v, c] : rest->terms()) {
        NCPoly gv = gen_times_word(m[i], v);
        gv.scale(c);
        part += gv;
      }
      part.scale(frac(mult, n));
      res += part;
    }
    return res;
  };
  if (use_global) return memo_lookup(2, m, compute);
  auto value = std::make_shared<const NCPoly>(compute());
  local.emplace(m, value);
  return value;
}

std::shared_ptr<const NCPoly> UEnv::symmetrize_multiset(const Word& m) {
  LocalMemo local;
  return symmetrize_multiset_rec(m, &local);
}

// -- free operations ----------------------------------------------------------

NCPoly casimir_loop(UEnv& env, int b1, int b2) {
  const LieAlgebra& g = env.alg();
  NCPoly res;
  for (int a = 0; a < g.dim(); ++a) {
    Word w;
    w.push_back(Gen::make(0, a, b1));
    for (const auto& [b, c] : g.dual_basis_vector(a)) {
      NCPoly t = env.word_times_gen(w, Gen::make(0, b, b2));
      t.scale(c);
      res += t;
    }
  }
  return res;
}

NCPoly symmetrize(UEnv& env, const Poly& f) {
  std::vector<const std::pair<const Word, Rat>*> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) terms.push_back(&t);
  auto work = [&](size_t lo, size_t hi) {
    NCPoly acc;
    for (size_t i = lo; i < hi; ++i) {
      NCPoly s = *env.symmetrize_multiset(terms[i]->first);
      s.scale(terms[i]->second);
      acc += s;
    }
    return acc;
  };
  return parallel_reduce<NCPoly>(terms.size(), env.jobs(), work,
                                 [](NCPoly& x, NCPoly&& y) { x += y; });
}

NCPoly sym_at(UEnv& env, const Poly& f, const std::vector<int>& abar) {
  // direct definition: average normal orders over all m! sequences
  const int m = int(abar.size());
  NCPoly res;
  for (const auto& [mono, c] : f.terms()) {
    if (mono.size() != m) throw std::invalid_argument("sym_at: degree mismatch");
    std::vector<int> perm(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i) perm[size_t(i)] = i;
    NCPoly acc;
    long count = 0;
    do {
      Word w;
      for (int i = 0; i < m; ++i) {
        Gen g = mono[perm[size_t(i)]];
        w.push_back(Gen::make(g.site(), g.index(), abar[size_t(i)]));
      }
      acc += env.normal_order(w);
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    acc.scale(c / Rat(count));
    res += acc;
  }
  return res;
}

NCPoly sym_tau_apply(UEnv& env, const Poly& f, int r) {
  std::vector<const std::pair<const Word, Rat>*> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) terms.push_back(&t);
  auto work = [&](size_t lo, size_t hi) {
    NCPoly acc;
    for (size_t i = lo; i < hi; ++i) {
      const Word& mono = terms[i]->first;
      Word multiset;
      for (int t = 0; t < mono.size(); ++t) {
        Gen g = mono[t];
        multiset.push_back(Gen::make(g.site(), g.index(), -1));
      }
      for (int t = 0; t < r; ++t) multiset.push_back(Gen::tau());
      NCPoly s = *env.symmetrize_multiset(multiset);
      s.scale(terms[i]->second);
      acc += s;
    }
    return acc;
  };
  NCPoly res = parallel_reduce<NCPoly>(terms.size(), env.jobs(), work,
                                       [](NCPoly& x, NCPoly&& y) { x += y; });
  return res.drop_tau();
}

NCPoly antipode(UEnv& env, const NCPoly& a) {
  NCPoly res;
  for (const auto& [w, c] : a.terms()) {
    NCPoly t = env.normal_order(w.reversed());
    t.scale((w.size() % 2 == 0) ? c : -c);
    res += t;
  }
  return res;
}

Poly gr(const NCPoly& a) {
  if (a.is_zero_poly())
    throw std::domain_error("gr: the zero element has no symbol");
  int top = a.filtration_degree();
  Poly p;
  for (const auto& [w, c] : a.terms())
    if (w.size() == top) p.add_term(w, c);
  return p;
}

NCPoly tau_derivation(UEnv& env, const NCPoly& a) {
  NCPoly res;
  for (const auto& [w, c] : a.terms()) {
    for (int i = 0; i < w.size(); ++i) {
      int t = w[i].tdeg();
      Word v = w;
      v[i] = w[i].shifted(-1);
      // the shifted letter may break the sort order; restraighten
      NCPoly n = env.normal_order(v);
      n.scale(c * Rat(-t));
      res += n;
    }
  }
  return res;
}

NCPoly ad_gen(UEnv& env, Gen x, const NCPoly& a) {
  NCPoly res;
  for (const auto& [w, c] : a.terms()) {
    for (int i = 0; i < w.size(); ++i) {
      for (const auto& [z, bc] : env.gen_bracket(x, w[i])) {
        Word v;
        for (int t = 0; t < i; ++t) v.push_back(w[t]);
        v.push_back(z);
        for (int t = i + 1; t < w.size(); ++t) v.push_back(w[t]);
        NCPoly n = env.normal_order(v);
        n.scale(c * bc);
        res += n;
      }
    }
  }
  return res;
}

}  // namespace ffk
