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

#ifndef FFK_GENS_HPP
#define FFK_GENS_HPP

#include <array>
#include <cassert>
#include <cstdint>
#include <cstring>
#include <functional>
#include <vector>

namespace ffk {

/// One loop-algebra letter x[tdeg] living at a site of g + ... + g, or the
/// formal letter tau.  Packed into 32 bits so that the natural unsigned
/// order is exactly the PBW order: tdeg ascending, then site, then basis
/// index, with tau greatest.
///
/// Layout (most significant first): tau flag (1) | tdeg+1024 (11) |
/// site (4) | index (16).
class Gen {
 public:
  Gen() : v_(0) {}
  static Gen make(int site, int index, int tdeg) {
    assert(tdeg <= 0 && tdeg > -1024);
    assert(site >= 0 && site < 16);
    assert(index >= 0 && index < 65536);
    Gen g;
    g.v_ = (uint32_t(tdeg + 1024) << 20) | (uint32_t(site) << 16) |
           uint32_t(index);
    return g;
  }
  static Gen tau() {
    Gen g;
    g.v_ = 0x80000000u;
    return g;
  }

  bool is_tau() const { return v_ & 0x80000000u; }
  int tdeg() const { return int((v_ >> 20) & 0x7FF) - 1024; }
  int site() const { return int((v_ >> 16) & 0xF); }
  int index() const { return int(v_ & 0xFFFF); }

  Gen shifted(int dt) const { return make(site(), index(), tdeg() + dt); }

  uint32_t raw() const { return v_; }
  friend bool operator==(Gen a, Gen b) { return a.v_ == b.v_; }
  friend bool operator!=(Gen a, Gen b) { return a.v_ != b.v_; }
  friend bool operator<(Gen a, Gen b) { return a.v_ < b.v_; }
  friend bool operator<=(Gen a, Gen b) { return a.v_ <= b.v_; }

 private:
  uint32_t v_;
};

/// A short sequence of letters, stored inline.  Serves both as the PBW word
/// of a noncommutative term (weakly increasing sequence) and as the
/// canonical monomial key of a commutative term (letters sorted with
/// repetition).
struct Word {
  static constexpr int kMaxLen = 12;

  uint32_t len = 0;
  std::array<Gen, kMaxLen> a{};

  Word() = default;

  int size() const { return int(len); }
  bool empty() const { return len == 0; }
  Gen operator[](int i) const { return a[size_t(i)]; }
  Gen& operator[](int i) { return a[size_t(i)]; }
  Gen back() const { return a[len - 1]; }

  void push_back(Gen g) {
    assert(len < kMaxLen);
    a[len++] = g;
  }
  void pop_back() { --len; }

  bool sorted() const {
    for (uint32_t i = 1; i < len; ++i)
      if (a[i] < a[i - 1]) return false;
    return true;
  }

  void sort() { std::sort(a.begin(), a.begin() + len); }

  /// Sorted insertion (commutative-monomial use).
  void insert_sorted(Gen g) {
    assert(len < kMaxLen);
    uint32_t i = len;
    while (i > 0 && g < a[i - 1]) {
      a[i] = a[i - 1];
      --i;
    }
    a[i] = g;
    ++len;
  }

  Word with_appended(Gen g) const {
    Word w = *this;
    w.push_back(g);
    return w;
  }

  Word prefix(int n) const {
    Word w;
    for (int i = 0; i < n; ++i) w.push_back(a[size_t(i)]);
    return w;
  }

  Word suffix_from(int n) const {
    Word w;
    for (int i = n; i < size(); ++i) w.push_back(a[size_t(i)]);
    return w;
  }

  /// Copy with position i removed.
  Word erased(int i) const {
    Word w;
    for (int j = 0; j < size(); ++j)
      if (j != i) w.push_back(a[size_t(j)]);
    return w;
  }

  Word reversed() const {
    Word w;
    for (int i = size() - 1; i >= 0; --i) w.push_back(a[size_t(i)]);
    return w;
  }

  int total_tdeg() const {
    int t = 0;
    for (uint32_t i = 0; i < len; ++i)
      if (!a[i].is_tau()) t += a[i].tdeg();
    return t;
  }

  bool contains_tau() const {
    for (uint32_t i = 0; i < len; ++i)
      if (a[i].is_tau()) return true;
    return false;
  }

  friend bool operator==(const Word& x, const Word& y) {
    if (x.len != y.len) return false;
    return std::memcmp(x.a.data(), y.a.data(), x.len * sizeof(Gen)) == 0;
  }

  friend bool operator<(const Word& x, const Word& y) {
    uint32_t n = x.len < y.len ? x.len : y.len;
    for (uint32_t i = 0; i < n; ++i) {
      if (x.a[i] < y.a[i]) return true;
      if (y.a[i] < x.a[i]) return false;
    }
    return x.len < y.len;
  }
};

struct WordHash {
  size_t operator()(const Word& w) const {
    uint64_t h = 1469598103934665603ull;
    h = (h ^ w.len) * 1099511628211ull;
    for (uint32_t i = 0; i < w.len; ++i)
      h = (h ^ w.a[i].raw()) * 1099511628211ull;
    return size_t(h);
  }
};

}  // namespace ffk

#endif
