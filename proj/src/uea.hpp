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

#ifndef FFK_UEA_HPP
#define FFK_UEA_HPP

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "sympoly.hpp"

namespace ffk {

/// PBW-normal-ordered element of an enveloping algebra: sparse map from
/// weakly increasing words to rationals.  The generator order is tdeg
/// ascending, then site, then basis index, with tau greatest; tau is legal
/// only in intermediate values (public results are tau-free).
class NCPoly {
 public:
  using TermMap = std::unordered_map<Word, Rat, WordHash>;

  NCPoly() = default;
  static NCPoly one() { return scalar(Rat(1)); }
  static NCPoly scalar(const Rat& c) {
    NCPoly p;
    if (!is_zero(c)) p.terms_[Word{}] = c;
    return p;
  }
  static NCPoly generator(Gen g, const Rat& c = Rat(1)) {
    NCPoly p;
    Word w;
    w.push_back(g);
    if (!is_zero(c)) p.terms_[w] = c;
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero_poly() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  void add_term(const Word& w, const Rat& c);
  Rat coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { a += b; return a; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { a -= b; return a; }
  NCPoly operator-() const;
  NCPoly& scale(const Rat& c);
  friend NCPoly operator*(const Rat& c, NCPoly p) { p.scale(c); return p; }

  bool operator==(const NCPoly& o) const;

  /// Highest word length present (0 for the zero polynomial).
  int filtration_degree() const;

  bool contains_tau() const;
  /// Drops every word containing tau (the final ".1" of tau calculus).
  NCPoly drop_tau() const;

 private:
  TermMap terms_;
};

/// Straightening context: the algebra, the number of sites, and the memo
/// tables.  Operations are pure; the memos are idempotent caches shared by
/// all workers.
class UEnv {
 public:
  explicit UEnv(AlgPtr alg, int sites = 1, int jobs = 0);

  const LieAlgebra& alg() const { return *alg_; }
  AlgPtr alg_ptr() const { return alg_; }
  int sites() const { return sites_; }
  int jobs() const { return jobs_; }
  void set_jobs(int j) { jobs_ = j; }

  /// [g1, g2] as a sparse list of (generator, coefficient).
  std::vector<std::pair<Gen, Rat>> gen_bracket(Gen g1, Gen g2) const;

  /// Normal form of (sorted word) * g.
  NCPoly word_times_gen(const Word& w, Gen g);
  /// Normal form of g * (sorted word).
  NCPoly gen_times_word(Gen g, const Word& w);

  /// Straightens an arbitrary word (left-to-right fold).
  NCPoly normal_order(const Word& w);
  NCPoly normal_order(const std::vector<Gen>& letters);

  NCPoly mul(const NCPoly& a, const NCPoly& b);
  NCPoly mul_word(const NCPoly& a, const Word& w);
  NCPoly commutator(const NCPoly& a, const NCPoly& b);

  /// Symmetrisation of the multiset of letters given by a sorted word.
  std::shared_ptr<const NCPoly> symmetrize_multiset(const Word& m);

  static constexpr int kMemoMaxLen = 9;

 private:
  template <class F>
  std::shared_ptr<const NCPoly> memo_lookup(int which, const Word& key, F&& compute);
  std::shared_ptr<const NCPoly> symmetrize_multiset_rec(const Word& m, void* local_memo);

  AlgPtr alg_;
  int sites_;
  int jobs_;

  static constexpr int kShards = 64;
  struct Shard {
    std::mutex mu;
    std::unordered_map<Word, std::shared_ptr<const NCPoly>, WordHash> map;
  };
  // 0: word*gen, 1: gen*word, 2: multiset symmetrisation
  std::unique_ptr<Shard[]> memo_[3];
};

// -- the operations of the module --------------------------------------------

/// Casimir-type loop element: sum_a x_a[b1] x^a[b2], normal ordered.
NCPoly casimir_loop(UEnv& env, int b1, int b2);

/// Canonical symmetrisation of a polynomial in loop letters.
NCPoly symmetrize(UEnv& env, const Poly& f);

/// varpi(F)[abar]: the fully symmetrised polarisation of F in S^m(g)
/// (letters of F carry t-degree 0; abar has m negative entries).
NCPoly sym_at(UEnv& env, const Poly& f, const std::vector<int>& abar);

/// varpi(tau^r F[-1]) . 1 for F in S^m(g).
NCPoly sym_tau_apply(UEnv& env, const Poly& f, int r);

/// The antipode omega.
NCPoly antipode(UEnv& env, const NCPoly& a);

/// Symbol: top-filtration part as a commutative polynomial.
Poly gr(const NCPoly& a);

/// The derivation tau = -d/dt on U(t^-1 g[t^-1]): x[a] -> -a x[a-1].
NCPoly tau_derivation(UEnv& env, const NCPoly& a);

/// Commutator with the algebra element x[0] at the given site (the adjoint
/// action of g on U), used by equivariance checks.
NCPoly ad_gen(UEnv& env, Gen x, const NCPoly& a);

}  // namespace ffk

#endif
