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

#ifndef FFK_SYMPOLY_HPP
#define FFK_SYMPOLY_HPP

#include <unordered_map>
#include <vector>

#include "gens.hpp"
#include "liealg.hpp"
#include "rat.hpp"

namespace ffk {

/// Sparse commutative polynomial with exact coefficients in loop variables
/// (site, basis index, t-degree).  Monomial keys are kept sorted; the term
/// map never stores a zero coefficient.  Houses S(g), S(t^-1 g[t^-1]) and
/// S(g + ... + g), depending on the letters used.
template <class K>
class PolyT {
 public:
  using TermMap = std::unordered_map<Word, K, WordHash>;

  PolyT() = default;
  static PolyT scalar(const K& c) {
    PolyT p;
    if (!is_zero(c)) p.terms_[Word{}] = c;
    return p;
  }
  static PolyT variable(Gen g, const K& c = K(1)) {
    PolyT p;
    Word w;
    w.push_back(g);
    if (!is_zero(c)) p.terms_[w] = c;
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero_poly() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  void add_term(const Word& m, const K& c) {
    if (is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  K coeff(const Word& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }

  PolyT& operator+=(const PolyT& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  PolyT& operator-=(const PolyT& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend PolyT operator+(PolyT a, const PolyT& b) { a += b; return a; }
  friend PolyT operator-(PolyT a, const PolyT& b) { a -= b; return a; }
  PolyT operator-() const {
    PolyT p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
  }
  PolyT& scale(const K& c) {
    if (is_zero(c)) { terms_.clear(); return *this; }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }
  friend PolyT operator*(const K& c, PolyT p) { p.scale(c); return p; }

  friend PolyT operator*(const PolyT& a, const PolyT& b) {
    PolyT p;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Word m = ma;
        for (int i = 0; i < mb.size(); ++i) m.insert_sorted(mb[i]);
        p.add_term(m, ca * cb);
      }
    return p;
  }

  PolyT pow(int e) const {
    PolyT r = scalar(K(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  bool operator==(const PolyT& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [m, c] : terms_) {
      auto it = o.terms_.find(m);
      if (it == o.terms_.end() || !(it->second == c)) return false;
    }
    return true;
  }

  /// Is the polynomial homogeneous?  Returns the degree (0 for the zero
  /// polynomial), or -1 if mixed.
  int homogeneous_degree() const {
    int d = -2;
    for (const auto& [m, c] : terms_) {
      if (d == -2) d = m.size();
      else if (d != m.size()) return -1;
    }
    return d == -2 ? 0 : d;
  }

  /// Partial derivative w.r.t. the variable g.
  PolyT derivative(Gen g) const {
    PolyT p;
    for (const auto& [m, c] : terms_) {
      for (int i = 0; i < m.size(); ++i) {
        if (m[i] == g) {
          int mult = 0;
          for (int j = 0; j < m.size(); ++j)
            if (m[j] == g) ++mult;
          p.add_term(m.erased(i), K(mult) * c);
          break;
        }
      }
    }
    return p;
  }

  /// Substitutes every variable by a linear combination of variables:
  /// images[var index keyed externally].  The callback maps a letter to a
  /// list of (letter, coefficient) pairs.
  template <class F>
  PolyT substitute(F&& images) const {
    PolyT out;
    for (const auto& [m, c] : terms_) {
      PolyT prod = scalar(c);
      for (int i = 0; i < m.size(); ++i) {
        PolyT lin;
        for (const auto& [g, cc] : images(m[i])) lin.add_term(wordOf(g), cc);
        prod = prod * lin;
      }
      out += prod;
    }
    return out;
  }

  /// Evaluates at a point, letter -> value.
  template <class F>
  K eval(F&& point) const {
    K total(0);
    for (const auto& [m, c] : terms_) {
      K v = c;
      for (int i = 0; i < m.size(); ++i) v *= point(m[i]);
      total += v;
    }
    return total;
  }

  static Word wordOf(Gen g) {
    Word w;
    w.push_back(g);
    return w;
  }

 private:
  TermMap terms_;
};

using Poly = PolyT<Rat>;

/// Converts a Q(sqrt2) polynomial whose coefficients are all rational.
/// Throws if any sqrt2 part survives.
Poly demote_sqrt2(const PolyT<QSqrt2>& p);

// -- operations on S(t^-1 g[t^-1]) and friends -------------------------------

/// Poisson bracket by the Leibniz extension of {x[a], y[b]} = [x,y][a+b].
/// Letters must share a site.
Poly poisson_bracket(const Poly& f, const Poly& g, const LieAlgebra& alg);

/// The abar-polarisation of a homogeneous F in S^m(g): distributes the
/// t-degrees abar over the factors of each monomial and averages over the
/// S_m-orbit.  Entries of abar are negative; |abar| = deg F.
Poly polarize(const Poly& f, const std::vector<int>& abar);

/// F[a]: every letter shifted to t-degree a (plain shift, no averaging).
Poly shift_all(const Poly& f, int a);

/// Drops the t-grading: every letter x[a] becomes x[0].
Poly forget_tdeg(const Poly& f);

/// The graded scalar product of S(t^-1 g[t^-1]): (x[a], y[d]) =
/// delta_{a,d} B(x,y), extended by the permanent formula on monomials.
Rat graded_scalar_product(const Poly& f, const Poly& g, const LieAlgebra& alg);

/// Directional derivative along mu (a coefficient vector in the basis).
Poly directional_derivative(const Poly& f, const std::vector<Rat>& mu);

/// Iterated mu-shift.
Poly directional_derivative(const Poly& f, const std::vector<Rat>& mu, int m);

/// Decomposition of a homogeneous H in S^d(g) over S(g + g).
/// evaluation: H_{d-j,j} collects the c^j coefficient of the substitution
/// x -> x^(1) + c x^(2);  symmetric: components w.r.t. the diagonal /
/// antidiagonal splitting, re-expressed in the site coordinates.
enum class BiDegreeMode { kEvaluation, kSymmetric };
std::vector<Poly> bi_degree_components(const Poly& h, BiDegreeMode mode);

/// Action of a basis element by the Poisson/coadjoint derivation:
/// {x, -} with {x, y[a]} = [x,y][a].  (Exact ad-invariance checks.)
Poly ad_action(const Poly& f, int basis_index, const LieAlgebra& alg);

/// Moves a single-site polynomial to the given site id.
Poly retag_site(const Poly& f, int site);

}  // namespace ffk

#endif
