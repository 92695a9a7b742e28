// Independent reference computations for the test suites. Nothing here calls
// into the library's algorithms; only plain containers and GMP are used.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "blockcenter/fdalgebra.hpp"
#include "blockcenter/matrix.hpp"

namespace oracle {

using blockcenter::Int;
using blockcenter::IntMatrix;
using blockcenter::Rat;
using LMat = std::vector<std::vector<long>>;
using LVec = std::vector<long>;

inline IntMatrix to_int_matrix(const LMat& m) {
  IntMatrix out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out(i, j) = m[i][j];
  return out;
}

inline LMat to_lmat(const IntMatrix& m) {
  LMat out(m.rows(), LVec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  return out;
}

inline LMat transpose(const LMat& a) {
  if (a.empty()) return {};
  LMat t(a[0].size(), LVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline LMat mul(const LMat& a, const LMat& b) {
  LMat c(a.size(), LVec(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// ---- determinants and elementary divisors by minors -------------------------

/// Laplace expansion; fine for the 1..6 sized matrices used here.
inline Int det_laplace(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Int>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    Int term = m[0][j] * det_laplace(minor);
    total += (j % 2 == 0) ? term : Int(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

/// Elementary divisors via determinantal divisors D_k = gcd of k x k minors.
inline std::vector<Int> eldiv_by_minors(const IntMatrix& a) {
  std::vector<Int> out;
  Int prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(a.rows(), k, rs);
    subsets(a.cols(), k, cs);
    Int g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a(r[i], c[j]);
        Int d = det_laplace(m);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// ---- Gram matrices ------------------------------------------------------------

/// r C^-1 r^T via the adjugate, for small C.
inline Rat quadratic_form_inverse(const LMat& c, const LVec& r) {
  const std::size_t n = c.size();
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = c[i][j];
  const Int det = det_laplace(m);
  Int num = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // adj(C)_ij = (-1)^(i+j) det(C without row j, column i)
      std::vector<std::vector<Int>> minor;
      for (std::size_t a = 0; a < n; ++a) {
        if (a == j) continue;
        std::vector<Int> row;
        for (std::size_t b = 0; b < n; ++b)
          if (b != i) row.push_back(m[a][b]);
        minor.push_back(row);
      }
      Int cof = det_laplace(minor);
      if ((i + j) % 2) cof = -cof;
      num += Int(r[i]) * cof * Int(r[j]);
    }
  Rat q(num, det);
  q.canonicalize();
  return q;
}

inline LVec sign_normalize(LVec r) {
  for (long v : r) {
    if (v == 0) continue;
    if (v < 0)
      for (auto& x : r) x = -x;
    break;
  }
  return r;
}

/// All sign-normalized r in the box |r_i| <= bound with r C^-1 r^T <= 1; with
/// `odd_scale` > 0, only those whose odd_scale * contribution is an odd integer.
inline std::vector<LVec> rows_by_box(const LMat& c, long bound, long odd_scale) {
  const std::size_t n = c.size();
  std::set<LVec> out;
  LVec r(n, -bound);
  while (true) {
    const LVec s = sign_normalize(r);
    const Rat q = quadratic_form_inverse(c, s);
    bool keep = q <= 1;
    if (keep && odd_scale > 0) {
      const Rat scaled = q * odd_scale;
      keep = scaled.get_den() == 1 && mpz_odd_p(scaled.get_num_mpz_t());
    }
    if (keep) out.insert(s);
    std::size_t i = 0;
    while (i < n && r[i] == bound) r[i++] = -bound;
    if (i == n) break;
    ++r[i];
  }
  return {out.begin(), out.end()};
}

/// {S : S^T C S = C} with entries in [-bound, bound].
inline std::vector<LMat> aut_by_box(const LMat& c, long bound) {
  const std::size_t n = c.size();
  std::vector<LMat> out;
  LVec e(n * n, -bound);
  while (true) {
    LMat s(n, LVec(n));
    for (std::size_t i = 0; i < n * n; ++i) s[i / n][i % n] = e[i];
    if (mul(mul(transpose(s), c), s) == c) out.push_back(s);
    std::size_t i = 0;
    while (i < n * n && e[i] == bound) e[i++] = -bound;
    if (i == n * n) break;
    ++e[i];
  }
  return out;
}

/// Minimum over S in `aut` of (rows of X S sign-normalized, sorted).
inline LMat orbit_min(const LMat& x, const std::vector<LMat>& aut) {
  LMat best;
  for (const auto& s : aut) {
    LMat y = mul(x, s);
    for (auto& r : y) r = sign_normalize(r);
    std::sort(y.begin(), y.end());
    if (best.empty() || y < best) best = y;
  }
  return best;
}

/// Every multiset of k rows from `rows` (nondecreasing indices) with
/// X^T X = C, by exhaustive enumeration with only a diagonal bound.
inline std::vector<LMat> solutions_by_multisets(const LMat& c, std::size_t k, const std::vector<LVec>& rows) {
  const std::size_t n = c.size();
  std::vector<LMat> out;
  std::vector<std::size_t> idx;
  LMat gram(n, LVec(n, 0));
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    for (std::size_t i = 0; i < n; ++i)
      if (gram[i][i] > c[i][i]) return;
    if (idx.size() == k) {
      if (gram == c) {
        LMat x;
        for (auto t : idx) x.push_back(rows[t]);
        out.push_back(x);
      }
      return;
    }
    for (std::size_t t = start; t < rows.size(); ++t) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) gram[a][b] += rows[t][a] * rows[t][b];
      idx.push_back(t);
      rec(t);
      idx.pop_back();
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) gram[a][b] -= rows[t][a] * rows[t][b];
    }
  };
  rec(0);
  return out;
}

// ---- random integer matrices --------------------------------------------------

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

/// Product of random elementary operations: unimodular by construction.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int ops = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n == 0) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<long> coef(-2, 2);
  std::uniform_int_distribution<int> kind(0, 2);
  for (int t = 0; t < ops; ++t) {
    const std::size_t a = pick(rng), b = pick(rng);
    switch (kind(rng)) {
      case 0:
        if (a != b) {
          const long f = coef(rng);
          for (std::size_t j = 0; j < n; ++j) u(a, j) += f * u(b, j);
        }
        break;
      case 1: u.swap_rows(a, b); break;
      default:
        for (std::size_t j = 0; j < n; ++j) u(a, j) = -u(a, j);
    }
  }
  return u;
}

// ---- dense GF(p) elimination --------------------------------------------------

using PVec = std::vector<long>;

inline long modp(long v, long p) { return ((v % p) + p) % p; }

inline long inv_modp(long a, long p) {
  for (long x = 1; x < p; ++x)
    if (modp(a * x, p) == 1) return x;
  return 0;
}

/// Row echelon form in place; returns rank.
inline std::size_t echelon(std::vector<PVec>& m, long p) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && modp(m[piv][c], p) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const long inv = inv_modp(modp(m[rank][c], p), p);
    for (auto& x : m[rank]) x = modp(x * inv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || modp(m[i][c], p) == 0) continue;
      const long f = modp(m[i][c], p);
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = modp(m[i][j] - f * m[rank][j], p);
    }
    ++rank;
  }
  m.resize(rank);
  return rank;
}

inline std::size_t rank_modp(std::vector<PVec> m, long p) { return echelon(m, p); }

inline bool in_span(const std::vector<PVec>& gens, const PVec& v, long p) {
  std::vector<PVec> a = gens;
  const std::size_t r = rank_modp(a, p);
  a.push_back(v);
  return rank_modp(a, p) == r;
}

/// Basis of {x : x M = 0} (row dependencies), by elimination on [M | I].
inline std::vector<PVec> left_kernel(const std::vector<PVec>& m, std::size_t cols, long p) {
  const std::size_t n = m.size();
  std::vector<PVec> aug(n, PVec(cols + n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = modp(m[i][j], p);
    aug[i][cols + i] = 1;
  }
  echelon(aug, p);
  std::vector<PVec> out;
  for (const auto& row : aug) {
    bool zero = true;
    for (std::size_t j = 0; j < cols; ++j) zero = zero && row[j] == 0;
    if (zero) out.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(cols), row.end());
  }
  return out;
}

// ---- algebras -------------------------------------------------------------------

using blockcenter::fd::FinDimAlgebra;

inline PVec alg_mul(const FinDimAlgebra& a, const PVec& x, const PVec& y) {
  const long p = a.p();
  PVec out(a.dim(), 0);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (x[i] == 0 || y[j] == 0) continue;
      for (std::size_t k = 0; k < a.dim(); ++k) out[k] = modp(out[k] + x[i] * y[j] * long(a.sc(i, j, k)), p);
    }
  return out;
}

inline PVec to_pvec(const blockcenter::gf::Vec& v) { return PVec(v.begin(), v.end()); }

/// Every element of GF(p)^dim, in counting order.
inline std::vector<PVec> all_elements(std::size_t dim, long p) {
  std::vector<PVec> out;
  PVec v(dim, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < dim && v[i] == p - 1) v[i++] = 0;
    if (i == dim) break;
    ++v[i];
  }
  return out;
}

/// Elements spanned by a library subspace basis, as a sorted set.
inline std::set<PVec> elements_of(const std::vector<blockcenter::gf::Vec>& basis, std::size_t dim, long p) {
  std::set<PVec> out;
  for (const auto& coeffs : all_elements(basis.size(), p)) {
    PVec v(dim, 0);
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t t = 0; t < dim; ++t) v[t] = modp(v[t] + coeffs[k] * long(basis[k][t]), p);
    out.insert(v);
  }
  return out;
}

/// Minimal resolution dimensions of the simple module over a local algebra
/// given its radical basis, with its own elimination. Right modules inside
/// free modules A^m; generators chosen as a complement of K J in K.
inline std::vector<std::size_t> resolution_dims(const FinDimAlgebra& a, const std::vector<PVec>& radical,
                                                std::size_t steps) {
  const long p = a.p();
  const std::size_t d = a.dim();
  auto act = [&](const PVec& v, const PVec& x) {
    PVec out(v.size(), 0);
    for (std::size_t c = 0; c * d < v.size(); ++c) {
      PVec block(v.begin() + static_cast<std::ptrdiff_t>(c * d), v.begin() + static_cast<std::ptrdiff_t>((c + 1) * d));
      PVec prod = alg_mul(a, block, x);
      std::copy(prod.begin(), prod.end(), out.begin() + static_cast<std::ptrdiff_t>(c * d));
    }
    return out;
  };
  std::vector<std::size_t> n{1};
  std::vector<PVec> kernel = radical;
  std::size_t rank = 1;
  for (std::size_t step = 1; step <= steps; ++step) {
    if (kernel.empty()) {
      n.push_back(0);
      break;
    }
    std::vector<PVec> kj;
    for (const auto& v : kernel)
      for (const auto& x : radical) kj.push_back(act(v, x));
    std::vector<PVec> basis = kj;
    std::size_t r = rank_modp(basis, p);
    std::vector<PVec> gens;
    for (const auto& v : kernel) {
      std::vector<PVec> trial = basis;
      trial.push_back(v);
      if (rank_modp(trial, p) > r) {
        basis = trial;
        ++r;
        gens.push_back(v);
      }
    }
    n.push_back(gens.size());
    if (step == steps) break;
    std::vector<PVec> cover;
    for (const auto& g : gens)
      for (std::size_t t = 0; t < d; ++t) {
        PVec e(d, 0);
        e[t] = 1;
        cover.push_back(act(g, e));
      }
    kernel = left_kernel(cover, rank * d, p);
    rank = gens.size();
  }
  return n;
}

}  // namespace oracle
