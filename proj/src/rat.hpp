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

#ifndef FFK_RAT_HPP
#define FFK_RAT_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ffk {

/// Exact rational scalar. All kernel arithmetic is over Q; there is no
/// floating point anywhere in the library.
using Rat = mpq_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

/// Canonicalized fraction (mpq_class(n, d) alone does not reduce).
inline Rat frac(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rat(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rat(b);
}

inline Rat factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(f);
}

/// u^d for a non-zero rational u and (possibly negative) integer d.
inline Rat rat_pow(const Rat& u, long d) {
  if (d == 0) return Rat(1);
  bool inv = d < 0;
  unsigned long e = static_cast<unsigned long>(inv ? -d : d);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), u.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), u.get_den().get_mpz_t(), e);
  Rat r(num, den);
  r.canonicalize();
  if (inv) {
    if (is_zero(r)) throw std::domain_error("rat_pow: 0 to negative power");
    r = 1 / r;
  }
  return r;
}

/// Quadratic extension Q(sqrt(D)) for a fixed non-square integer D.
/// Used for the 7x7 realisation of G2 (D = 2) and for the change of
/// basis between the two orthogonal realisations (D = -1).
template <long D>
struct QuadExt {
  Rat p;  // rational part
  Rat q;  // coefficient of sqrt(D)

  QuadExt() : p(0), q(0) {}
  QuadExt(const Rat& p_) : p(p_), q(0) {}
  QuadExt(long p_) : p(p_), q(0) {}
  QuadExt(const Rat& p_, const Rat& q_) : p(p_), q(q_) {}

  static QuadExt sqrt_d() { return QuadExt(Rat(0), Rat(1)); }

  bool is_zero() const { return ffk::is_zero(p) && ffk::is_zero(q); }
  bool is_rational() const { return ffk::is_zero(q); }

  QuadExt operator-() const { return QuadExt(-p, -q); }
  QuadExt& operator+=(const QuadExt& o) { p += o.p; q += o.q; return *this; }
  QuadExt& operator-=(const QuadExt& o) { p -= o.p; q -= o.q; return *this; }
  friend QuadExt operator+(QuadExt a, const QuadExt& b) { a += b; return a; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { a -= b; return a; }
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    return QuadExt(a.p * b.p + Rat(D) * a.q * b.q, a.p * b.q + a.q * b.p);
  }
  QuadExt& operator*=(const QuadExt& o) { *this = *this * o; return *this; }
  QuadExt inverse() const {
    Rat n = p * p - Rat(D) * q * q;  // field norm; zero only at zero
    if (ffk::is_zero(n)) throw std::domain_error("QuadExt: division by zero");
    return QuadExt(p / n, -q / n);
  }
  friend QuadExt operator/(const QuadExt& a, const QuadExt& b) {
    return a * b.inverse();
  }
  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.p == b.p && a.q == b.q;
  }
};

using QSqrt2 = QuadExt<2>;
using QGauss = QuadExt<-1>;

template <long D>
inline bool is_zero(const QuadExt<D>& x) { return x.is_zero(); }

}  // namespace ffk

#endif
