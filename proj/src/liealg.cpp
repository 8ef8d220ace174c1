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

#include "liealg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace ffk {

const char* const kG2Letters[14] = {"e1", "e2", "e3", "f1",    "f2",   "f3",
                                    "h1", "h2", "a",  "b",     "c",    "alpha",
                                    "beta", "gamma"};

std::string BasisLabel::str() const {
  std::ostringstream os;
  switch (kind) {
    case kE: os << "E[" << i << "," << j << "]"; break;
    case kF: os << "F[" << i << "," << j << "]"; break;
    case kFo: os << "Fo[" << i << "," << j << "]"; break;
    case kH: os << "H[" << i << "]"; break;
    case kG2: os << "g2:" << kG2Letters[i]; break;
  }
  return os.str();
}

BasisLabel BasisLabel::parse(const std::string& s) {
  BasisLabel l;
  if (s.rfind("g2:", 0) == 0) {
    l.kind = kG2;
    for (int k = 0; k < 14; ++k)
      if (s.substr(3) == kG2Letters[k]) { l.i = k; return l; }
    throw std::invalid_argument("bad g2 label: " + s);
  }
  size_t br = s.find('[');
  if (br == std::string::npos || s.back() != ']')
    throw std::invalid_argument("bad basis label: " + s);
  std::string fam = s.substr(0, br);
  std::string body = s.substr(br + 1, s.size() - br - 2);
  if (fam == "H") {
    l.kind = kH;
    l.i = std::stoi(body);
    return l;
  }
  size_t comma = body.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("bad basis label: " + s);
  l.i = std::stoi(body.substr(0, comma));
  l.j = std::stoi(body.substr(comma + 1));
  if (fam == "E") l.kind = kE;
  else if (fam == "F") l.kind = kF;
  else if (fam == "Fo") l.kind = kFo;
  else throw std::invalid_argument("bad basis label: " + s);
  return l;
}

SparseVec sparse_normalize(SparseVec v) {
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [i, c] : v) {
    if (!out.empty() && out.back().first == i) {
      out.back().second += c;
      if (is_zero(out.back().second)) out.pop_back();
    } else if (!is_zero(c)) {
      out.emplace_back(i, c);
    }
  }
  return out;
}

SparseVec sparse_add(const SparseVec& a, const SparseVec& b) {
  SparseVec v = a;
  v.insert(v.end(), b.begin(), b.end());
  return sparse_normalize(std::move(v));
}

SparseVec sparse_scale(const SparseVec& a, const Rat& c) {
  if (is_zero(c)) return {};
  SparseVec v = a;
  for (auto& [i, x] : v) x *= c;
  return v;
}

SparseVec LieAlgebra::bracket_vec(const SparseVec& x, const SparseVec& y) const {
  SparseVec acc;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y)
      for (const auto& [k, c] : bracket(i, j)) acc.emplace_back(k, a * b * c);
  return sparse_normalize(std::move(acc));
}

Rat LieAlgebra::form_at(const SparseVec& x, const SparseVec& y) const {
  Rat s(0);
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) s += a * b * form_(i, j);
  return s;
}

RatMat LieAlgebra::ad_matrix(const SparseVec& x) const {
  RatMat m(dim_, dim_);
  for (const auto& [i, a] : x)
    for (int j = 0; j < dim_; ++j)
      for (const auto& [k, c] : bracket(i, j)) m(k, j) += a * c;
  return m;
}

RatMat LieAlgebra::ad_matrix(int i) const {
  return ad_matrix(SparseVec{{i, Rat(1)}});
}

int LieAlgebra::index_of(const BasisLabel& l) const {
  for (int i = 0; i < dim_; ++i)
    if (basis_[size_t(i)] == l) return i;
  throw std::invalid_argument("label not in basis: " + l.str());
}

std::pair<int, Rat> LieAlgebra::matrix_entry(int i, int j) const {
  const int n = matrix_n_;
  if (name_.rfind("gl", 0) == 0) return {matrix_index(i, j), Rat(1)};
  if (name_.rfind("sp", 0) == 0) {
    int ip = n - i + 1, jp = n - j + 1;
    if (i + j <= n + 1) return {matrix_index(i, j), Rat(1)};
    Rat eps((i <= n / 2 ? 1 : -1) * (j <= n / 2 ? 1 : -1));
    return {matrix_index(jp, ip), -eps};
  }
  if (name_.rfind("so_skew", 0) == 0) {
    if (i == j) return {-1, Rat(0)};
    if (i < j) return {matrix_index(i, j), Rat(1)};
    return {matrix_index(j, i), Rat(-1)};
  }
  if (name_.rfind("so", 0) == 0) {
    int ip = n - i + 1, jp = n - j + 1;
    if (i + j == n + 1) return {-1, Rat(0)};
    if (i + j < n + 1) return {matrix_index(i, j), Rat(1)};
    return {matrix_index(jp, ip), Rat(-1)};
  }
  throw std::logic_error("matrix_entry: unsupported algebra " + name_);
}

/// Shared assembly: given the defining matrices, computes brackets through
/// the representation and an extraction callback.
class LieAlgebraBuilder {
 public:
  std::string name;
  int rank = 0;
  std::vector<BasisLabel> basis;
  std::vector<int> cartan;
  std::vector<RatMat> rep;
  std::vector<int> lookup;
  int lookup_n = 0;
  // extract(X) must return the coordinates of X in the basis
  std::function<std::vector<Rat>(const RatMat&)> extract;

  std::shared_ptr<const LieAlgebra> build() const {
    auto alg = std::make_shared<LieAlgebra>();
    LieAlgebra& g = const_cast<LieAlgebra&>(*alg);
    int dim = int(basis.size());
    g.name_ = name;
    g.dim_ = dim;
    g.rank_ = rank;
    g.basis_ = basis;
    g.cartan_ = cartan;
    g.rep_ = rep;
    g.matrix_lookup_ = lookup;
    g.matrix_n_ = lookup_n;
    g.bracket_.assign(size_t(dim) * dim, {});
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < i; ++j) {
        RatMat c = rep[size_t(i)] * rep[size_t(j)] - rep[size_t(j)] * rep[size_t(i)];
        std::vector<Rat> coords = extract(c);
        SparseVec v;
        for (int k = 0; k < dim; ++k)
          if (!is_zero(coords[size_t(k)])) v.emplace_back(k, coords[size_t(k)]);
        g.bracket_[size_t(i) * dim + j] = v;
        g.bracket_[size_t(j) * dim + i] = sparse_scale(v, Rat(-1));
      }
    g.form_ = RatMat(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j <= i; ++j) {
        RatMat p = rep[size_t(i)] * rep[size_t(j)];
        Rat t(0);
        for (int d = 0; d < p.rows(); ++d) t += p(d, d);
        g.form_(i, j) = g.form_(j, i) = t;
      }
    g.form_inv_ = g.form_.inverse();
    g.dual_.resize(size_t(dim));
    for (int a = 0; a < dim; ++a) {
      SparseVec v;
      for (int b = 0; b < dim; ++b)
        if (!is_zero(g.form_inv_(a, b))) v.emplace_back(b, g.form_inv_(a, b));
      g.dual_[size_t(a)] = v;
    }
    return alg;
  }
};

namespace {
RatMat unit_matrix(int n, int i, int j, const Rat& c) {
  RatMat m(n, n);
  m(i - 1, j - 1) = c;
  return m;
}

/// Built algebras are process-wide singletons: dependants key caches on the
/// instance address, and rebuilding the structure constants is wasted work.
std::shared_ptr<const LieAlgebra> intern(
    const std::string& key, const std::function<std::shared_ptr<const LieAlgebra>()>& make) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const LieAlgebra>> registry;
  std::lock_guard<std::mutex> lk(mu);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  auto alg = make();
  registry.emplace(key, alg);
  return alg;
}
}  // namespace

std::shared_ptr<const LieAlgebra> LieAlgebra::gl(int n) {
  if (n < 1) throw std::invalid_argument("gl: need n >= 1");
  return intern("gl" + std::to_string(n), [n]() {
  LieAlgebraBuilder b;
  b.name = "gl" + std::to_string(n);
  b.rank = n;
  b.lookup_n = n;
  b.lookup.assign(size_t(n) * n, -1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      b.lookup[size_t(i - 1) * n + (j - 1)] = int(b.basis.size());
      if (i == j) b.cartan.push_back(int(b.basis.size()));
      b.basis.push_back({BasisLabel::kE, i, j});
      b.rep.push_back(unit_matrix(n, i, j, Rat(1)));
    }
  b.extract = [n](const RatMat& x) {
    std::vector<Rat> c;
    c.reserve(size_t(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c.push_back(x(i, j));
    return c;
  };
  return b.build();
  });
}

std::shared_ptr<const LieAlgebra> LieAlgebra::sl(int n) {
  if (n < 2) throw std::invalid_argument("sl: need n >= 2");
  return intern("sl" + std::to_string(n), [n]() {
  LieAlgebraBuilder b;
  b.name = "sl" + std::to_string(n);
  b.rank = n - 1;
  std::map<std::pair<int, int>, int> off;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      off[{i, j}] = int(b.basis.size());
      b.basis.push_back({BasisLabel::kE, i, j});
      b.rep.push_back(unit_matrix(n, i, j, Rat(1)));
    }
  int h0 = int(b.basis.size());
  for (int i = 1; i < n; ++i) {
    b.cartan.push_back(int(b.basis.size()));
    b.basis.push_back({BasisLabel::kH, i, 0});
    RatMat h(n, n);
    h(i - 1, i - 1) = Rat(1);
    h(i, i) = Rat(-1);
    b.rep.push_back(h);
  }
  b.extract = [n, off, h0](const RatMat& x) {
    std::vector<Rat> c(size_t(n) * n - 1, Rat(0));
    for (const auto& [ij, idx] : off) c[size_t(idx)] = x(ij.first - 1, ij.second - 1);
    // diagonal part: partial sums give the H-coordinates
    Rat s(0);
    for (int i = 1; i < n; ++i) {
      s += x(i - 1, i - 1);
      c[size_t(h0 + i - 1)] = s;
    }
    return c;
  };
  return b.build();
  });
}

std::shared_ptr<const LieAlgebra> LieAlgebra::sp(int two_n) {
  if (two_n < 2 || two_n % 2 != 0)
    throw std::invalid_argument("sp: need even two_n >= 2");
  return intern("sp" + std::to_string(two_n), [two_n]() {
  const int N = two_n, n = two_n / 2;
  LieAlgebraBuilder b;
  b.name = "sp" + std::to_string(N);
  b.rank = n;
  b.lookup_n = N;
  b.lookup.assign(size_t(N) * N, -1);
  auto eps = [n](int i) { return i <= n ? 1 : -1; };
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (i + j > N + 1) continue;  // canonical: j <= i'
      b.lookup[size_t(i - 1) * N + (j - 1)] = int(b.basis.size());
      if (i == j && i <= n) b.cartan.push_back(int(b.basis.size()));
      b.basis.push_back({BasisLabel::kF, i, j});
      RatMat m = unit_matrix(N, i, j, Rat(1));
      m(N - j, N - i) -= Rat(eps(i) * eps(j));
      b.rep.push_back(m);
    }
  b.extract = [N](const RatMat& x) {
    std::vector<Rat> c;
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j) {
        if (i + j > N + 1) continue;
        c.push_back(i + j == N + 1 ? Rat(x(i - 1, j - 1) / 2) : x(i - 1, j - 1));
      }
    return c;
  };
  return b.build();
  });
}

std::shared_ptr<const LieAlgebra> LieAlgebra::so(int n) {
  if (n < 3) throw std::invalid_argument("so: need n >= 3");
  return intern("so" + std::to_string(n), [n]() {
  LieAlgebraBuilder b;
  b.name = "so" + std::to_string(n);
  b.rank = n / 2;
  b.lookup_n = n;
  b.lookup.assign(size_t(n) * n, -1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i + j >= n + 1) continue;  // canonical: i + j < n + 1
      b.lookup[size_t(i - 1) * n + (j - 1)] = int(b.basis.size());
      if (i == j) b.cartan.push_back(int(b.basis.size()));
      b.basis.push_back({BasisLabel::kF, i, j});
      RatMat m = unit_matrix(n, i, j, Rat(1));
      m(n - j, n - i) -= Rat(1);
      b.rep.push_back(m);
    }
  b.extract = [n](const RatMat& x) {
    std::vector<Rat> c;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i + j < n + 1) c.push_back(x(i - 1, j - 1));
    return c;
  };
  return b.build();
  });
}

std::shared_ptr<const LieAlgebra> LieAlgebra::so_skew(int two_n) {
  if (two_n < 2 || two_n % 2 != 0)
    throw std::invalid_argument("so_skew: need even two_n >= 2");
  return intern("so_skew" + std::to_string(two_n), [two_n]() {
  const int N = two_n;
  LieAlgebraBuilder b;
  b.name = "so_skew" + std::to_string(N);
  b.rank = N / 2;
  b.lookup_n = N;
  b.lookup.assign(size_t(N) * N, -1);
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      b.lookup[size_t(i - 1) * N + (j - 1)] = int(b.basis.size());
      b.basis.push_back({BasisLabel::kFo, i, j});
      RatMat m = unit_matrix(N, i, j, Rat(1));
      m(j - 1, i - 1) = Rat(-1);
      b.rep.push_back(m);
    }
  for (int i = 1; i <= N / 2; ++i)
    b.cartan.push_back(b.lookup[size_t(2 * i - 2) * N + (2 * i - 1)]);
  b.extract = [N](const RatMat& x) {
    std::vector<Rat> c;
    for (int i = 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j) c.push_back(x(i - 1, j - 1));
    return c;
  };
  return b.build();
  });
}

std::shared_ptr<const LieAlgebra> LieAlgebra::g2() {
  return intern("g2", []() {
  using QM = Matrix<QSqrt2>;
  const QSqrt2 one(Rat(1)), s2 = QSqrt2::sqrt_d();
  auto E = [](int i, int j, const QSqrt2& c) {
    QM m(7, 7);
    m(i - 1, j - 1) = c;
    return m;
  };
  // embedding of sl3: iota(E_ij) = E_ij - E_{(7-j)(7-i)}
  auto iota = [&](int i, int j) { return E(i, j, one) - E(7 - j, 7 - i, one); };

  std::vector<QM> rep;
  rep.push_back(iota(1, 2));            // e1
  rep.push_back(iota(2, 3));            // e2
  rep.push_back(iota(1, 3));            // e3
  rep.push_back(iota(2, 1));            // f1
  rep.push_back(iota(3, 2));            // f2
  rep.push_back(iota(3, 1));            // f3
  rep.push_back(iota(1, 1) - iota(2, 2));                 // h1 = diag(1,-1,0)
  rep.push_back(iota(1, 1) + iota(2, 2) - iota(3, 3) - iota(3, 3));  // h2
  rep.push_back(E(1, 7, s2) - E(4, 2, one) + E(5, 3, one) - E(7, 6, s2));   // a
  rep.push_back(E(2, 7, s2) + E(4, 1, one) - E(6, 3, one) - E(7, 5, s2));   // b
  rep.push_back(E(3, 7, s2) - E(5, 1, one) + E(6, 2, one) - E(7, 4, s2));   // c
  rep.push_back(E(2, 4, one) - E(3, 5, one) + E(6, 7, s2) - E(7, 1, s2));   // alpha
  rep.push_back(E(1, 4, -one) + E(3, 6, one) + E(5, 7, s2) - E(7, 2, s2));  // beta
  rep.push_back(E(1, 5, one) - E(2, 6, one) + E(4, 7, s2) - E(7, 3, s2));   // gamma

  // Coordinate extraction over Q(sqrt2): row-reduce the 49 x 14 coordinate
  // matrix once, remembering the elimination steps on an identity tail.
  const int dim = 14;
  Matrix<QSqrt2> coords(49, dim);
  for (int k = 0; k < dim; ++k)
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) coords(i * 7 + j, k) = rep[size_t(k)](i, j);

  auto extract_qs2 = [&](const QM& x) {
    // solve coords * c = vec(x) by elimination (small, done per bracket)
    Matrix<QSqrt2> m(49, dim + 1);
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        for (int k = 0; k < dim; ++k) m(i * 7 + j, k) = coords(i * 7 + j, k);
        m(i * 7 + j, dim) = x(i, j);
      }
    // forward elimination
    int r = 0;
    std::vector<int> lead(static_cast<size_t>(dim), -1);
    for (int c = 0; c < dim && r < 49; ++c) {
      int piv = -1;
      for (int i = r; i < 49; ++i)
        if (!m(i, c).is_zero()) { piv = i; break; }
      if (piv < 0) throw std::logic_error("g2: dependent basis");
      for (int j = 0; j <= dim; ++j) std::swap(m(piv, j), m(r, j));
      QSqrt2 d = m(r, c);
      for (int j = 0; j <= dim; ++j) m(r, j) = m(r, j) / d;
      for (int i = 0; i < 49; ++i) {
        if (i == r || m(i, c).is_zero()) continue;
        QSqrt2 f = m(i, c);
        for (int j = c; j <= dim; ++j) m(i, j) -= f * m(r, j);
      }
      lead[size_t(c)] = r;
      ++r;
    }
    for (int i = r; i < 49; ++i)
      if (!m(i, dim).is_zero())
        throw std::domain_error("g2: element outside span of the basis");
    std::vector<Rat> out(static_cast<size_t>(dim), Rat(0));
    for (int c = 0; c < dim; ++c) {
      QSqrt2 v = m(lead[size_t(c)], dim);
      if (!v.is_rational())
        throw std::domain_error("g2: non-rational structure constant");
      out[size_t(c)] = v.p;
    }
    return out;
  };

  auto alg = std::make_shared<LieAlgebra>();
  LieAlgebra& g = const_cast<LieAlgebra&>(*alg);
  g.name_ = "g2";
  g.dim_ = dim;
  g.rank_ = 2;
  for (int k = 0; k < dim; ++k) g.basis_.push_back({BasisLabel::kG2, k, 0});
  g.cartan_ = {6, 7};
  g.g2_rep_ = rep;
  g.bracket_.assign(size_t(dim) * dim, {});
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < i; ++j) {
      QM c = rep[size_t(i)] * rep[size_t(j)] - rep[size_t(j)] * rep[size_t(i)];
      std::vector<Rat> co = extract_qs2(c);
      SparseVec v;
      for (int k = 0; k < dim; ++k)
        if (!is_zero(co[size_t(k)])) v.emplace_back(k, co[size_t(k)]);
      g.bracket_[size_t(i) * dim + j] = v;
      g.bracket_[size_t(j) * dim + i] = sparse_scale(v, Rat(-1));
    }

  // B is normalised so that the Casimir element equals the displayed
  // quadratic invariant Delta_2; that is, B is the inverse of the matrix of
  // Delta_2 as a quadratic form.
  RatMat q(dim, dim);
  auto set_pair = [&](int u, int v, const Rat& c) { q(u, v) = q(v, u) = c; };
  set_pair(0, 3, Rat(1));   // 2 e1 f1
  set_pair(1, 4, Rat(1));
  set_pair(2, 5, Rat(1));
  q(6, 6) = Rat(1, 2);      // (1/2) h1^2
  q(7, 7) = Rat(1, 6);      // (1/6) h2^2
  set_pair(8, 11, Rat(-1, 3));   // -(2/3) a alpha
  set_pair(9, 12, Rat(-1, 3));
  set_pair(10, 13, Rat(-1, 3));
  g.form_ = q.inverse();
  g.form_inv_ = q;
  g.dual_.resize(size_t(dim));
  for (int a = 0; a < dim; ++a) {
    SparseVec v;
    for (int b2 = 0; b2 < dim; ++b2)
      if (!is_zero(g.form_inv_(a, b2))) v.emplace_back(b2, g.form_inv_(a, b2));
    g.dual_[size_t(a)] = v;
  }
  return alg;
  });
}

std::shared_ptr<const LieAlgebra> LieAlgebra::by_name(const std::string& name) {
  auto num = [&](size_t at) { return std::stoi(name.substr(at)); };
  if (name == "g2") return g2();
  if (name.rfind("so_skew", 0) == 0) return so_skew(num(7));
  if (name.rfind("gl", 0) == 0) return gl(num(2));
  if (name.rfind("sl", 0) == 0) return sl(num(2));
  if (name.rfind("sp", 0) == 0) return sp(num(2));
  if (name.rfind("so", 0) == 0) return so(num(2));
  throw std::invalid_argument("unknown algebra: " + name);
}

std::vector<std::pair<int, Rat>> weyl_involution_gl(const LieAlgebra& gl) {
  std::vector<std::pair<int, Rat>> out(size_t(gl.dim()));
  for (int idx = 0; idx < gl.dim(); ++idx) {
    const BasisLabel& l = gl.basis()[size_t(idx)];
    if (l.kind != BasisLabel::kE)
      throw std::invalid_argument("weyl_involution_gl: gl basis expected");
    out[size_t(idx)] = {gl.index_of({BasisLabel::kE, l.j, l.i}), Rat(-1)};
  }
  return out;
}

Matrix<QGauss> so_skew_to_so(const LieAlgebra& skew, const LieAlgebra& so) {
  const int N = skew.matrix_n();
  if (so.matrix_n() != N || N % 2 != 0)
    throw std::invalid_argument("so_skew_to_so: mismatched ranks");
  using QM = Matrix<QGauss>;
  const QGauss one(Rat(1)), im = QGauss::sqrt_d();
  // P with P^T J P = 2I for the antidiagonal J; phi(X) = P X P^{-1}.
  QM p(N, N);
  for (int i = 1; i <= N / 2; ++i) {
    int ip = N + 1 - i;
    p(i - 1, i - 1) = one;
    p(ip - 1, i - 1) = one;
    p(i - 1, ip - 1) = im;
    p(ip - 1, ip - 1) = -im;
  }
  QM pinv = p.inverse();
  QM out(so.dim(), skew.dim());
  for (int a = 0; a < skew.dim(); ++a) {
    const RatMat& x = skew.rep()[size_t(a)];
    QM xc(N, N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (!is_zero(x(i, j))) xc(i, j) = QGauss(x(i, j));
    QM y = p * xc * pinv;
    // extract in the F basis of so: canonical entries i + j < N + 1
    int row = 0;
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j) {
        if (i + j >= N + 1) continue;
        out(row, a) = y(i - 1, j - 1);
        ++row;
      }
  }
  return out;
}

}  // namespace ffk
